#pragma once
// Core number types: exact integers/rationals (GMP), arbitrary-precision
// reals (MPFR), a minimal complex wrapper, and interval-style certified
// complex values used by every numeric routine in the library.

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace heegner {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                            boost::multiprecision::et_off>;

struct domain_error : std::runtime_error {
  explicit domain_error(const std::string& m) : std::runtime_error(m) {}
};
struct logic_failure : std::logic_error {
  explicit logic_failure(const std::string& m) : std::logic_error(m) {}
};
struct precision_error : std::runtime_error {
  explicit precision_error(const std::string& m) : std::runtime_error(m) {}
};

#define HG_DOMAIN_CHECK(cond, msg) \
  do { if (!(cond)) throw ::heegner::domain_error(msg); } while (0)
#define HG_LOGIC_CHECK(cond, msg) \
  do { if (!(cond)) throw ::heegner::logic_failure(msg); } while (0)

// Scoped MPFR working precision, in bits.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits)
      : saved_(Real::default_precision()) {
    HG_DOMAIN_CHECK(bits >= 16 && bits <= 1u << 22, "precision bits out of range");
    // default_precision is counted in decimal digits.
    Real::default_precision(static_cast<unsigned>(bits * 0.30103) + 3);
  }
  ~PrecisionScope() { Real::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

inline Int num(const Rat& x) { return Int(boost::multiprecision::numerator(x)); }
inline Int den(const Rat& x) { return Int(boost::multiprecision::denominator(x)); }

// Floor of a rational as an integer.
inline Int floor_rat(const Rat& x) {
  Int n = num(x), d = den(x);
  Int q = n / d;
  if (n % d != 0 && n < 0) --q;
  return q;
}
inline Int ceil_rat(const Rat& x) { return -floor_rat(-x); }
// Nearest integer (ties toward +infinity).
inline Int round_rat(const Rat& x) { return floor_rat(x + Rat(1, 2)); }
inline bool is_integer(const Rat& x) { return den(x) == 1; }

// x mod m in [0, m) for m > 0.
inline Int mod_pos(const Int& x, const Int& m) {
  HG_DOMAIN_CHECK(m > 0, "mod_pos: modulus must be positive");
  Int r = x % m;
  if (r < 0) r += m;
  return r;
}
inline long mod_pos(long x, long m) {
  HG_DOMAIN_CHECK(m > 0, "mod_pos: modulus must be positive");
  long r = x % m;
  if (r < 0) r += m;
  return r;
}
// Fractional part of a rational in [0, 1).
inline Rat frac_part(const Rat& x) { return x - Rat(floor_rat(x)); }

inline Real to_real(const Int& x) { return Real(x.str()); }
inline Real to_real(const Rat& x) { return to_real(num(x)) / to_real(den(x)); }

inline long to_long(const Int& x) {
  HG_DOMAIN_CHECK(x >= std::numeric_limits<long>::min() &&
                      x <= std::numeric_limits<long>::max(),
                  "integer too large for machine word");
  return static_cast<long>(x);
}

// Minimal complex type over Real (std::complex is unreliable for
// multiprecision backends).
struct Cplx {
  Real re{0};
  Real im{0};
  Cplx() = default;
  Cplx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  explicit Cplx(Real r) : re(std::move(r)), im(0) {}
};

inline Cplx operator+(const Cplx& a, const Cplx& b) { return {a.re + b.re, a.im + b.im}; }
inline Cplx operator-(const Cplx& a, const Cplx& b) { return {a.re - b.re, a.im - b.im}; }
inline Cplx operator-(const Cplx& a) { return {-a.re, -a.im}; }
inline Cplx operator*(const Cplx& a, const Cplx& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline Cplx operator*(const Real& s, const Cplx& a) { return {s * a.re, s * a.im}; }
inline Cplx conj(const Cplx& a) { return {a.re, -a.im}; }
inline Real abs2(const Cplx& a) { return a.re * a.re + a.im * a.im; }
inline Real abs(const Cplx& a) { return sqrt(abs2(a)); }
inline Cplx operator/(const Cplx& a, const Cplx& b) {
  Real n = abs2(b);
  HG_DOMAIN_CHECK(n != 0, "complex division by zero");
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}
inline Cplx operator/(const Cplx& a, const Real& s) { return {a.re / s, a.im / s}; }

// exp(z) for complex z.
inline Cplx cexp(const Cplx& z) {
  Real m = exp(z.re);
  return {m * cos(z.im), m * sin(z.im)};
}
// Principal square root.
inline Cplx csqrt(const Cplx& z) {
  Real r = abs(z);
  if (r == 0) return Cplx(Real(0), Real(0));
  Real a = atan2(z.im, z.re) / 2;
  Real s = sqrt(r);
  return {s * cos(a), s * sin(a)};
}
// e(x) = exp(2 pi i x) for real x.
inline Cplx unit_e(const Real& x) {
  Real t = 2 * boost::math::constants::pi<Real>() * x;
  return {cos(t), sin(t)};
}

inline Real pow_int(Real base, long e) {
  HG_DOMAIN_CHECK(e >= 0, "pow_int: negative exponent");
  Real acc(1);
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

// A complex value together with a rigorous absolute error bound.
// Propagation is conservative; `ulp` terms cover the rounding of each
// arithmetic operation at the current working precision.
struct CertifiedComplex {
  Cplx value;
  Real err{0};

  CertifiedComplex() = default;
  explicit CertifiedComplex(Cplx v, Real e = Real(0)) : value(std::move(v)), err(std::move(e)) {}
  explicit CertifiedComplex(const Real& v) : value(Cplx(v)), err(0) {}
};

inline Real hg_ulp(const Cplx& v) {
  // 2^(4 - working_bits) * |v|, a generous per-operation rounding envelope.
  unsigned digits10 = Real::default_precision();
  long bits = static_cast<long>(digits10 * 3.3219280948873623);
  Real scale = ldexp(Real(1), static_cast<int>(-(bits - 4)));
  return scale * (fabs(v.re) + fabs(v.im) + 1);
}

inline CertifiedComplex operator+(const CertifiedComplex& a, const CertifiedComplex& b) {
  Cplx v = a.value + b.value;
  return CertifiedComplex(v, a.err + b.err + hg_ulp(v));
}
inline CertifiedComplex operator-(const CertifiedComplex& a, const CertifiedComplex& b) {
  Cplx v = a.value - b.value;
  return CertifiedComplex(v, a.err + b.err + hg_ulp(v));
}
inline CertifiedComplex operator-(const CertifiedComplex& a) {
  return CertifiedComplex(-a.value, a.err);
}
inline CertifiedComplex operator*(const CertifiedComplex& a, const CertifiedComplex& b) {
  Cplx v = a.value * b.value;
  Real e = abs(a.value) * b.err + abs(b.value) * a.err + a.err * b.err + hg_ulp(v);
  return CertifiedComplex(v, e);
}
inline CertifiedComplex operator/(const CertifiedComplex& a, const CertifiedComplex& b) {
  Real bn = abs(b.value);
  HG_DOMAIN_CHECK(bn > 2 * b.err, "certified division: divisor not bounded away from zero");
  Cplx v = a.value / b.value;
  // |a/b - a^/b^| <= (|a^| eb + |b^| ea) / (|b^| (|b^| - eb))
  Real e = (abs(a.value) * b.err + bn * a.err) / (bn * (bn - b.err)) + hg_ulp(v);
  return CertifiedComplex(v, e);
}
inline CertifiedComplex conj(const CertifiedComplex& a) {
  return CertifiedComplex(conj(a.value), a.err);
}

}  // namespace heegner
