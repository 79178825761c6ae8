#include "dslab/rational.hpp"

#include <mpfr.h>

#include <numeric>
#include <stdexcept>

namespace dslab {

Rat frac(long n, unsigned long d) {
  if (d == 0) throw std::invalid_argument("frac: zero denominator");
  Rat r(n, d);
  r.canonicalize();
  return r;
}

Rat frac(const Int& n, const Int& d) {
  if (d == 0) throw std::invalid_argument("frac: zero denominator");
  Rat r(n, d);
  r.canonicalize();
  return r;
}

Int floor_rat(const Rat& x) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Int ceil_rat(const Rat& x) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Rat pow_rat(const Rat& x, unsigned k) {
  Rat out(1);
  Int num, den;
  mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), k);
  out = frac(num, den);
  return out;
}

std::string rat_str(const Rat& x) {
  std::string s = x.get_str();
  if (s.find('/') == std::string::npos) s += "/1";
  return s;
}

Rat parse_rat(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("parse_rat: empty string");
  size_t i = 0;
  if (text[i] == '-' || text[i] == '+') ++i;
  size_t digits = 0;
  while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i, ++digits;
  if (digits == 0) throw std::invalid_argument("parse_rat: expected integer numerator");
  if (i < text.size()) {
    if (text[i] != '/') throw std::invalid_argument("parse_rat: expected 'p' or 'p/q'");
    ++i;
    size_t den_digits = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i, ++den_digits;
    if (den_digits == 0 || i != text.size())
      throw std::invalid_argument("parse_rat: malformed denominator");
  }
  Rat r;
  if (mpq_set_str(r.get_mpq_t(), std::string(text).c_str(), 10) != 0)
    throw std::invalid_argument("parse_rat: not a rational: " + std::string(text));
  if (r.get_den() == 0) throw std::invalid_argument("parse_rat: zero denominator");
  r.canonicalize();
  return r;
}

std::string rat_decimal(const Rat& x, int digits) {
  mpfr_t t;
  mpfr_init2(t, 192);
  mpfr_set_q(t, x.get_mpq_t(), MPFR_RNDN);
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Re", digits - 1, t);
  std::string out(s);
  mpfr_free_str(s);
  mpfr_clear(t);
  return out;
}

Int int_from_i128(__int128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? -(unsigned __int128)v : (unsigned __int128)v;
  Int hi(static_cast<unsigned long>(u >> 64));
  Int lo(static_cast<unsigned long>(u & 0xffffffffffffffffULL));
  Int out = hi;
  out <<= 64;
  out += lo;
  if (neg) out = -out;
  return out;
}

Rat rat_from_i128(__int128 num, __int128 den) {
  return frac(int_from_i128(num), int_from_i128(den));
}

uint64_t gcd_u64(uint64_t a, uint64_t b) { return std::gcd(a, b); }

uint64_t lcm_u64(uint64_t a, uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / std::gcd(a, b) * b;
}

}  // namespace dslab
