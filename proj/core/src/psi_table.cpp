#include "dslab/psi_table.hpp"

#include <mpfr.h>

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace dslab {

namespace {
const Rat kZero(0);
const Rat kHalf = frac(1, 2);
}  // namespace

WeightTable::WeightTable(uint32_t support_bound) : bound_(support_bound) {
  if (support_bound == 0) throw std::invalid_argument("WeightTable: support bound must be >= 1");
  vals_.assign(static_cast<size_t>(support_bound) + 1, Rat(0));
}

const Rat& WeightTable::value(uint32_t q) const {
  if (q == 0) throw std::invalid_argument("WeightTable: q must be >= 1");
  if (q > bound_) return kZero;
  return vals_[q];
}

void WeightTable::set(uint32_t q, Rat v) {
  if (q == 0 || q > bound_) throw std::invalid_argument("WeightTable: q outside support bound");
  if (v < 0) throw std::invalid_argument("WeightTable: negative weight");
  vals_[q] = std::move(v);
}

std::vector<uint32_t> WeightTable::support() const {
  std::vector<uint32_t> out;
  for (uint32_t q = 1; q <= bound_; ++q)
    if (vals_[q] != 0) out.push_back(q);
  return out;
}

PsiParseError::PsiParseError(size_t line, const std::string& what)
    : std::invalid_argument("psi table line " + std::to_string(line) + ": " + what),
      line_(line) {}

PsiTable::PsiTable(uint32_t Q) : w_(Q) {}

void PsiTable::set(uint32_t q, Rat v) {
  if (v < 0 || v > kHalf)
    throw std::invalid_argument("PsiTable: value outside [0, 1/2] at q=" + std::to_string(q));
  w_.set(q, std::move(v));
}

PsiTable PsiTable::constant(uint32_t Q, const Rat& c) {
  PsiTable t(Q);
  for (uint32_t q = 1; q <= Q; ++q) t.set(q, c);
  return t;
}

PsiTable PsiTable::power_law(uint32_t Q, const Rat& exponent) {
  if (exponent <= 0) throw std::invalid_argument("PsiTable: power-law exponent must be positive");
  PsiTable t(Q);
  Rat neg_inv = Rat(-1) / exponent;
  mpfr_t e, x;
  mpfr_init2(e, 192);
  mpfr_init2(x, 53);
  mpfr_set_q(e, neg_inv.get_mpq_t(), MPFR_RNDN);
  for (uint32_t q = 1; q <= Q; ++q) {
    if (q == 1) {
      t.set(1, kHalf);
      continue;
    }
    mpfr_ui_pow(x, q, e, MPFR_RNDN);  // 53-bit dyadic value of q^(-1/exponent)
    mpfr_exp_t ord;
    Int mant;
    ord = mpfr_get_z_2exp(mant.get_mpz_t(), x);
    Rat v(mant);
    if (ord >= 0) {
      Int sc(1);
      sc <<= static_cast<unsigned>(ord);
      v *= Rat(sc);
    } else {
      Int sc(1);
      sc <<= static_cast<unsigned>(-ord);
      v /= Rat(sc);
    }
    if (v > kHalf) v = kHalf;
    if (v < 0) v = 0;
    t.set(q, v);
  }
  mpfr_clear(e);
  mpfr_clear(x);
  return t;
}

PsiTable PsiTable::primes_only(uint32_t Q, const Rat& c, const FactorSieve& sieve) {
  if (Q > sieve.limit()) throw std::invalid_argument("PsiTable: Q exceeds sieve limit");
  PsiTable t(Q);
  for (uint32_t q = 2; q <= Q; ++q)
    if (sieve.is_prime(q)) t.set(q, c);
  return t;
}

PsiTable PsiTable::cluster(uint32_t Q, const Rat& c, uint32_t modulus) {
  if (modulus == 0) throw std::invalid_argument("PsiTable: cluster modulus must be >= 1");
  PsiTable t(Q);
  for (uint32_t q = modulus; q <= Q; q += modulus) t.set(q, c);
  return t;
}

PsiTable PsiTable::read(std::istream& in) {
  std::string line;
  size_t lineno = 0;
  uint32_t Q = 0;
  bool have_header = false;
  PsiTable table(1);
  std::vector<bool> seen;
  auto trim = [](std::string s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return std::string();
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = trim(line);
    if (s.empty()) continue;
    if (!have_header) {
      if (s.rfind("Q=", 0) != 0) throw PsiParseError(lineno, "expected header 'Q=<int>'");
      try {
        size_t pos = 0;
        unsigned long v = std::stoul(s.substr(2), &pos);
        if (pos != s.size() - 2 || v == 0 || v > 0xffffffffUL)
          throw std::invalid_argument("range");
        Q = static_cast<uint32_t>(v);
      } catch (const std::exception&) {
        throw PsiParseError(lineno, "malformed support bound in header");
      }
      table = PsiTable(Q);
      seen.assign(static_cast<size_t>(Q) + 1, false);
      have_header = true;
      continue;
    }
    std::istringstream ls(s);
    std::string qtok, vtok, extra;
    if (!(ls >> qtok >> vtok) || (ls >> extra))
      throw PsiParseError(lineno, "expected '<q> <p>/<q>'");
    uint32_t q = 0;
    try {
      size_t pos = 0;
      unsigned long v = std::stoul(qtok, &pos);
      if (pos != qtok.size() || v == 0) throw std::invalid_argument("range");
      q = static_cast<uint32_t>(v);
    } catch (const std::exception&) {
      throw PsiParseError(lineno, "malformed index '" + qtok + "'");
    }
    if (q > Q) throw PsiParseError(lineno, "index exceeds support bound");
    if (seen[q]) throw PsiParseError(lineno, "duplicate index " + std::to_string(q));
    seen[q] = true;
    Rat v;
    try {
      v = parse_rat(vtok);
    } catch (const std::exception& e) {
      throw PsiParseError(lineno, e.what());
    }
    try {
      table.set(q, v);
    } catch (const std::exception& e) {
      throw PsiParseError(lineno, e.what());
    }
  }
  if (!have_header) throw PsiParseError(lineno == 0 ? 1 : lineno, "missing 'Q=<int>' header");
  return table;
}

PsiTable PsiTable::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open psi table file: " + path);
  return read(in);
}

void PsiTable::write(std::ostream& out) const {
  out << "Q=" << Q() << "\n";
  for (uint32_t q = 1; q <= Q(); ++q) {
    const Rat& v = value(q);
    if (v != 0) out << q << " " << rat_str(v) << "\n";
  }
}

}  // namespace dslab
