#include "dslab/hiprec.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace dslab {

DirectedReal::DirectedReal() {
  mpfr_init2(lo_, kPrecision);
  mpfr_init2(hi_, kPrecision);
  mpfr_set_zero(lo_, 0);
  mpfr_set_zero(hi_, 0);
}

DirectedReal::DirectedReal(const Rat& exact) : DirectedReal() {
  mpfr_set_q(lo_, exact.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, exact.get_mpq_t(), MPFR_RNDU);
}

DirectedReal::DirectedReal(long exact) : DirectedReal() {
  mpfr_set_si(lo_, exact, MPFR_RNDD);
  mpfr_set_si(hi_, exact, MPFR_RNDU);
}

DirectedReal::DirectedReal(const DirectedReal& other) : DirectedReal() {
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

DirectedReal::DirectedReal(DirectedReal&& other) noexcept : DirectedReal() {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

DirectedReal& DirectedReal::operator=(DirectedReal other) {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  return *this;
}

DirectedReal::~DirectedReal() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

DirectedReal DirectedReal::operator+(const DirectedReal& o) const {
  DirectedReal out;
  mpfr_add(out.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_add(out.hi_, hi_, o.hi_, MPFR_RNDU);
  return out;
}

DirectedReal DirectedReal::operator-(const DirectedReal& o) const {
  DirectedReal out;
  mpfr_sub(out.lo_, lo_, o.hi_, MPFR_RNDD);
  mpfr_sub(out.hi_, hi_, o.lo_, MPFR_RNDU);
  return out;
}

DirectedReal DirectedReal::operator*(const DirectedReal& o) const {
  // Four end-point products rounded both ways; min/max encloses all cases.
  DirectedReal out;
  mpfr_t t;
  mpfr_init2(t, kPrecision);
  const mpfr_srcptr a[2] = {lo_, hi_};
  const mpfr_srcptr b[2] = {o.lo_, o.hi_};
  bool first = true;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      mpfr_mul(t, a[i], b[j], MPFR_RNDD);
      if (first || mpfr_cmp(t, out.lo_) < 0) mpfr_set(out.lo_, t, MPFR_RNDD);
      mpfr_mul(t, a[i], b[j], MPFR_RNDU);
      if (first || mpfr_cmp(t, out.hi_) > 0) mpfr_set(out.hi_, t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
  return out;
}

DirectedReal DirectedReal::operator/(const DirectedReal& o) const {
  if (is_exact_zero()) return DirectedReal();
  if (o.straddles_zero() || mpfr_zero_p(o.lo_) || mpfr_zero_p(o.hi_))
    throw std::domain_error("DirectedReal: division by interval containing zero");
  DirectedReal out;
  mpfr_t t;
  mpfr_init2(t, kPrecision);
  const mpfr_srcptr a[2] = {lo_, hi_};
  const mpfr_srcptr b[2] = {o.lo_, o.hi_};
  bool first = true;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      mpfr_div(t, a[i], b[j], MPFR_RNDD);
      if (first || mpfr_cmp(t, out.lo_) < 0) mpfr_set(out.lo_, t, MPFR_RNDD);
      mpfr_div(t, a[i], b[j], MPFR_RNDU);
      if (first || mpfr_cmp(t, out.hi_) > 0) mpfr_set(out.hi_, t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
  return out;
}

DirectedReal& DirectedReal::operator+=(const DirectedReal& o) {
  mpfr_add(lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_add(hi_, hi_, o.hi_, MPFR_RNDU);
  return *this;
}

DirectedReal DirectedReal::negated() const {
  DirectedReal out;
  mpfr_neg(out.lo_, hi_, MPFR_RNDD);
  mpfr_neg(out.hi_, lo_, MPFR_RNDU);
  return out;
}

bool DirectedReal::is_exact_zero() const {
  return mpfr_zero_p(lo_) && mpfr_zero_p(hi_);
}

bool DirectedReal::straddles_zero() const {
  return mpfr_sgn(lo_) < 0 && mpfr_sgn(hi_) > 0;
}

DirectedReal::Cmp DirectedReal::compare(const Rat& x) const {
  if (mpfr_cmp_q(hi_, x.get_mpq_t()) < 0) return Cmp::Below;
  if (mpfr_cmp_q(lo_, x.get_mpq_t()) > 0) return Cmp::Above;
  return Cmp::Straddle;
}

bool DirectedReal::definitely_le(const Rat& x) const {
  return mpfr_cmp_q(hi_, x.get_mpq_t()) <= 0;
}

bool DirectedReal::definitely_ge(const Rat& x) const {
  return mpfr_cmp_q(lo_, x.get_mpq_t()) >= 0;
}

bool DirectedReal::definitely_lt(const Rat& x) const {
  return mpfr_cmp_q(hi_, x.get_mpq_t()) < 0;
}

bool DirectedReal::definitely_gt(const Rat& x) const {
  return mpfr_cmp_q(lo_, x.get_mpq_t()) > 0;
}

bool DirectedReal::definitely_ge_scaled(const DirectedReal& other, const Rat& factor) const {
  mpfr_t t;
  mpfr_init2(t, kPrecision);
  mpfr_mul_q(t, other.hi_, factor.get_mpq_t(), MPFR_RNDU);
  bool ok = mpfr_cmp(lo_, t) >= 0;
  mpfr_clear(t);
  return ok;
}

bool DirectedReal::definitely_le_scaled(const DirectedReal& other, const Rat& factor) const {
  mpfr_t t;
  mpfr_init2(t, kPrecision);
  mpfr_mul_q(t, other.lo_, factor.get_mpq_t(), MPFR_RNDD);
  bool ok = mpfr_cmp(hi_, t) <= 0;
  mpfr_clear(t);
  return ok;
}

bool DirectedReal::lo_below(const DirectedReal& other) const {
  return mpfr_cmp(lo_, other.lo_) < 0;
}

static std::string format_one(mpfr_srcptr x, int digits, mpfr_rnd_t rnd) {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*R*e", digits - 1, rnd, x);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

std::string DirectedReal::dec_mid(int digits) const {
  mpfr_t m;
  mpfr_init2(m, kPrecision);
  mpfr_add(m, lo_, hi_, MPFR_RNDN);
  mpfr_div_ui(m, m, 2, MPFR_RNDN);
  std::string out = format_one(m, digits, MPFR_RNDN);
  mpfr_clear(m);
  return out;
}

std::string DirectedReal::dec_lo(int digits) const { return format_one(lo_, digits, MPFR_RNDD); }
std::string DirectedReal::dec_hi(int digits) const { return format_one(hi_, digits, MPFR_RNDU); }

double DirectedReal::mid_double() const {
  mpfr_t m;
  mpfr_init2(m, kPrecision);
  mpfr_add(m, lo_, hi_, MPFR_RNDN);
  mpfr_div_ui(m, m, 2, MPFR_RNDN);
  double d = mpfr_get_d(m, MPFR_RNDN);
  mpfr_clear(m);
  return d;
}

DirectedReal dmax(const DirectedReal& a, const DirectedReal& b) {
  DirectedReal out;
  mpfr_max(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return out;
}

DirectedReal dexp(const DirectedReal& x) {
  DirectedReal out;
  mpfr_exp(out.lo_, x.lo_, MPFR_RNDD);
  mpfr_exp(out.hi_, x.hi_, MPFR_RNDU);
  return out;
}

DirectedReal dlog(const DirectedReal& x) {
  if (mpfr_sgn(x.lo_) <= 0) throw std::domain_error("DirectedReal: log of nonpositive interval");
  DirectedReal out;
  mpfr_log(out.lo_, x.lo_, MPFR_RNDD);
  mpfr_log(out.hi_, x.hi_, MPFR_RNDU);
  return out;
}

DirectedReal dpow(const DirectedReal& base, const DirectedReal& e) {
  if (base.is_exact_zero()) {
    if (mpfr_sgn(e.lo_) <= 0) throw std::domain_error("DirectedReal: 0^e needs e > 0");
    return DirectedReal();
  }
  DirectedReal prod = e * dlog(base);
  return dexp(prod);
}

DirectedReal DirectedReal::exp_of(const Rat& x) { return dexp(DirectedReal(x)); }

DirectedReal DirectedReal::log_of(const Rat& x) {
  if (x <= 0) throw std::domain_error("DirectedReal: log of nonpositive rational");
  return dlog(DirectedReal(x));
}

DirectedReal DirectedReal::pow_of(const Rat& base, const Rat& exponent) {
  if (base == 0) {
    if (exponent <= 0) throw std::domain_error("DirectedReal: 0^e needs e > 0");
    return DirectedReal();
  }
  return dpow(DirectedReal(base), DirectedReal(exponent));
}

}  // namespace dslab
