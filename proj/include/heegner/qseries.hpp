#pragma once
// Truncated formal Laurent series in one variable q, classical q-expansions
// (Euler product, Eisenstein series, discriminant, j), Faber polynomials of
// j, and symmetric Laurent polynomials in a second variable zeta.

#include <map>
#include <vector>

#include "heegner/arith.hpp"
#include "heegner/base.hpp"

namespace heegner {

// Coefficients are valid on exponents [lo, trunc); everything below lo is
// zero, everything at or above trunc is unknown.
template <class C>
struct FormalSeries {
  long lo = 0;
  long trunc = 0;
  std::vector<C> coeffs;  // size trunc - lo

  FormalSeries() = default;
  FormalSeries(long lo_, long trunc_) : lo(lo_), trunc(trunc_) {
    HG_DOMAIN_CHECK(trunc_ >= lo_, "series: trunc below lo");
    coeffs.assign(static_cast<size_t>(trunc - lo), C(0));
  }

  const C& coeff(long n) const {
    static const C zero(0);
    HG_DOMAIN_CHECK(n < trunc, "series: coefficient beyond truncation order");
    if (n < lo) return zero;
    return coeffs[static_cast<size_t>(n - lo)];
  }
  C& at(long n) {
    HG_DOMAIN_CHECK(n >= lo && n < trunc, "series: index outside window");
    return coeffs[static_cast<size_t>(n - lo)];
  }
  // First exponent with nonzero coefficient, or trunc if none stored.
  long valuation() const {
    for (long n = lo; n < trunc; ++n)
      if (!(coeff(n) == C(0))) return n;
    return trunc;
  }
  void normalize() {
    long v = valuation();
    if (v > lo) {
      coeffs.erase(coeffs.begin(), coeffs.begin() + (v - lo));
      lo = v;
    }
  }
  bool is_zero() const { return valuation() == trunc; }

  static FormalSeries monomial(const C& c, long n, long trunc_) {
    FormalSeries s(n, trunc_);
    if (n < trunc_) s.at(n) = c;
    return s;
  }
  static FormalSeries constant(const C& c, long trunc_) { return monomial(c, 0, trunc_); }

  FormalSeries truncated(long new_trunc) const {
    HG_DOMAIN_CHECK(new_trunc <= trunc, "series: cannot extend truncation");
    FormalSeries s(std::min(lo, new_trunc), new_trunc);
    for (long n = s.lo; n < new_trunc; ++n) s.at(n) = coeff(n);
    s.normalize();
    return s;
  }
};

template <class C>
FormalSeries<C> operator+(const FormalSeries<C>& a, const FormalSeries<C>& b) {
  long t = std::min(a.trunc, b.trunc);
  FormalSeries<C> s(std::min(std::min(a.lo, b.lo), t), t);
  for (long n = s.lo; n < t; ++n) {
    C va = (n < a.trunc) ? a.coeff(n) : C(0);
    C vb = (n < b.trunc) ? b.coeff(n) : C(0);
    s.at(n) = va + vb;
  }
  s.normalize();
  return s;
}

template <class C>
FormalSeries<C> operator-(const FormalSeries<C>& a) {
  FormalSeries<C> s = a;
  for (auto& c : s.coeffs) c = C(0) - c;
  return s;
}

template <class C>
FormalSeries<C> operator-(const FormalSeries<C>& a, const FormalSeries<C>& b) {
  return a + (-b);
}

template <class C>
FormalSeries<C> operator*(const FormalSeries<C>& a, const FormalSeries<C>& b) {
  // True valuations tighten the product's reliable window.
  long va = a.valuation(), vb = b.valuation();
  if (va == a.trunc || vb == b.trunc) {
    // One factor is (known to be) zero; product is zero with best window.
    long t = std::min(a.trunc + vb, b.trunc + va);
    FormalSeries<C> s(t, t);
    return s;
  }
  long t = std::min(a.trunc + vb, b.trunc + va);
  FormalSeries<C> s(va + vb, t);
  for (long i = va; i < std::min(a.trunc, t - vb); ++i) {
    if (a.coeff(i) == C(0)) continue;
    long jmax = std::min(b.trunc, t - i);
    for (long j = vb; j < jmax; ++j) {
      s.at(i + j) = s.at(i + j) + a.coeff(i) * b.coeff(j);
    }
  }
  s.normalize();
  return s;
}

template <class C>
FormalSeries<C> scalar_mul(const C& c, const FormalSeries<C>& a) {
  FormalSeries<C> s = a;
  for (auto& x : s.coeffs) x = c * x;
  s.normalize();
  return s;
}

// Multiplicative inverse; leading coefficient must be invertible in C.
template <class C>
FormalSeries<C> inverse(const FormalSeries<C>& a) {
  long v = a.valuation();
  HG_DOMAIN_CHECK(v < a.trunc, "series inverse: zero series");
  long len = a.trunc - v;  // number of known coefficients of the unit part
  std::vector<C> u(static_cast<size_t>(len));
  for (long i = 0; i < len; ++i) u[static_cast<size_t>(i)] = a.coeff(v + i);
  std::vector<C> inv(static_cast<size_t>(len), C(0));
  inv[0] = C(1) / u[0];
  for (long n = 1; n < len; ++n) {
    C acc(0);
    for (long k = 1; k <= n; ++k) acc = acc + u[static_cast<size_t>(k)] * inv[static_cast<size_t>(n - k)];
    inv[static_cast<size_t>(n)] = (C(0) - acc) / u[0];
  }
  FormalSeries<C> s(-v, -v + len);
  for (long i = 0; i < len; ++i) s.at(-v + i) = inv[static_cast<size_t>(i)];
  s.normalize();
  return s;
}

template <class C>
FormalSeries<C> operator/(const FormalSeries<C>& a, const FormalSeries<C>& b) {
  return a * inverse(b);
}

template <class C>
FormalSeries<C> pow(const FormalSeries<C>& a, long e) {
  HG_DOMAIN_CHECK(e >= 0, "series pow: negative exponent (use inverse)");
  if (e == 0) return FormalSeries<C>::constant(C(1), a.trunc);
  FormalSeries<C> result = a;
  for (long i = 1; i < e; ++i) result = result * a;
  return result;
}

template <class C>
bool operator==(const FormalSeries<C>& a, const FormalSeries<C>& b) {
  long t = std::min(a.trunc, b.trunc);
  for (long n = std::min(a.lo, b.lo); n < t; ++n) {
    C va = (n < a.trunc) ? a.coeff(n) : C(0);
    C vb = (n < b.trunc) ? b.coeff(n) : C(0);
    if (!(va == vb)) return false;
  }
  return true;
}

using QSeries = FormalSeries<Rat>;

// Euler product prod_{n>=1} (1 - q^n) via the pentagonal number theorem.
inline QSeries euler_product_qexp(long order) {
  HG_DOMAIN_CHECK(order >= 1, "euler_product_qexp: order must be positive");
  QSeries s(0, order);
  for (long k = 0;; ++k) {
    long e1 = k * (3 * k - 1) / 2;
    long e2 = k * (3 * k + 1) / 2;
    if (e1 >= order && e2 >= order) break;
    Rat sign = (k % 2 == 0) ? Rat(1) : Rat(-1);
    if (e1 < order) s.at(e1) = s.at(e1) + sign;
    if (e2 < order && k > 0) s.at(e2) = s.at(e2) + sign;
  }
  return s;
}

// Alias: the integer-exponent part of the eta function (without q^{1/24}).
inline QSeries eta_qexp(long order) { return euler_product_qexp(order); }

inline Int sigma_k(long n, int k) {
  HG_DOMAIN_CHECK(n >= 1, "sigma_k: n must be positive");
  Int acc = 0;
  for (Int d : divisors(Int(n))) {
    Int p = 1;
    for (int i = 0; i < k; ++i) p *= d;
    acc += p;
  }
  return acc;
}

// Normalized Eisenstein series E4 or E6.
inline QSeries eisenstein_qexp(int k, long order) {
  HG_DOMAIN_CHECK(k == 4 || k == 6, "eisenstein_qexp: only weights 4 and 6");
  QSeries s(0, order);
  s.at(0) = Rat(1);
  long mult = (k == 4) ? 240 : -504;
  for (long n = 1; n < order; ++n) s.at(n) = Rat(mult * sigma_k(n, k - 1));
  return s;
}

// Discriminant Delta = (E4^3 - E6^2)/1728 = q prod (1-q^n)^24.
inline QSeries delta_qexp(long order) {
  QSeries e4 = eisenstein_qexp(4, order);
  QSeries e6 = eisenstein_qexp(6, order);
  return scalar_mul(Rat(1, 1728), e4 * e4 * e4 - e6 * e6);
}

// j = E4^3 / Delta = q^{-1} + 744 + 196884 q + ...
inline QSeries j_qexp(long order) {
  QSeries e4 = eisenstein_qexp(4, order + 2);
  return (e4 * e4 * e4) / delta_qexp(order + 2);
}

// J = j - 744, the normalized Hauptmodul.
inline QSeries J_qexp(long order) {
  QSeries j = j_qexp(order);
  j.at(0) = j.at(0) - 744;
  return j;
}

// Faber polynomial atoms: J_m = q^{-m} + O(q), a monic degree-m polynomial
// in J.  J_0 = 1, J_1 = J.
inline QSeries faber_Jm(long m, long order) {
  HG_DOMAIN_CHECK(m >= 0, "faber_Jm: m must be nonnegative");
  long work = order + m + 1;
  QSeries J1 = J_qexp(work);
  std::vector<QSeries> J(static_cast<size_t>(m) + 1);
  J[0] = QSeries::constant(Rat(1), work);
  if (m >= 1) J[1] = J1;
  for (long t = 2; t <= m; ++t) {
    QSeries cur = J1 * J[static_cast<size_t>(t - 1)];
    // Clear coefficients at q^{-k} (k < t) and q^0 using lower atoms.
    for (long k = t - 1; k >= 1; --k)
      cur = cur - scalar_mul(cur.coeff(-k), J[static_cast<size_t>(k)]);
    cur = cur - QSeries::constant(cur.coeff(0), cur.trunc);
    J[static_cast<size_t>(t)] = cur;
  }
  QSeries out = J[static_cast<size_t>(m)];
  HG_LOGIC_CHECK(out.coeff(-m) == Rat(1), "faber_Jm: not monic");
  for (long k = -m + 1; k <= 0; ++k)
    HG_LOGIC_CHECK(out.coeff(k) == Rat(0), "faber_Jm: uncleared coefficient");
  return out.truncated(order);
}

// Symmetric-range Laurent polynomial in zeta with rational coefficients.
struct ZetaPoly {
  long rmin = 0;
  std::vector<Rat> c;  // coefficient of zeta^{rmin + i}

  ZetaPoly() = default;
  explicit ZetaPoly(long v) : rmin(0), c{Rat(v)} { normalize(); }
  explicit ZetaPoly(const Rat& v) : rmin(0), c{v} { normalize(); }

  static ZetaPoly monomial(const Rat& v, long r) {
    ZetaPoly p;
    p.rmin = r;
    p.c = {v};
    p.normalize();
    return p;
  }

  Rat coeff(long r) const {
    if (r < rmin || r >= rmin + static_cast<long>(c.size())) return Rat(0);
    return c[static_cast<size_t>(r - rmin)];
  }
  long rmax() const { return rmin + static_cast<long>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }

  void normalize() {
    size_t lead = 0;
    while (lead < c.size() && c[lead] == 0) ++lead;
    size_t tail = c.size();
    while (tail > lead && c[tail - 1] == 0) --tail;
    if (lead > 0 || tail < c.size()) {
      c = std::vector<Rat>(c.begin() + lead, c.begin() + tail);
      rmin += static_cast<long>(lead);
    }
    if (c.empty()) rmin = 0;
  }
};

inline ZetaPoly operator+(const ZetaPoly& a, const ZetaPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  long lo = std::min(a.rmin, b.rmin);
  long hi = std::max(a.rmax(), b.rmax());
  ZetaPoly s;
  s.rmin = lo;
  s.c.assign(static_cast<size_t>(hi - lo + 1), Rat(0));
  for (long r = lo; r <= hi; ++r) s.c[static_cast<size_t>(r - lo)] = a.coeff(r) + b.coeff(r);
  s.normalize();
  return s;
}

inline ZetaPoly operator-(const ZetaPoly& a) {
  ZetaPoly s = a;
  for (auto& x : s.c) x = -x;
  return s;
}
inline ZetaPoly operator-(const ZetaPoly& a, const ZetaPoly& b) { return a + (-b); }

inline ZetaPoly operator*(const ZetaPoly& a, const ZetaPoly& b) {
  if (a.is_zero() || b.is_zero()) return ZetaPoly();
  ZetaPoly s;
  s.rmin = a.rmin + b.rmin;
  s.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j) s.c[i + j] += a.c[i] * b.c[j];
  }
  s.normalize();
  return s;
}

inline bool operator==(const ZetaPoly& a, const ZetaPoly& b) {
  long lo = std::min(a.rmin, b.rmin);
  long hi = std::max(a.rmax(), b.rmax());
  if (a.is_zero() && b.is_zero()) return true;
  for (long r = lo; r <= hi; ++r)
    if (a.coeff(r) != b.coeff(r)) return false;
  return true;
}

// zeta -> 1/zeta mirror.
inline ZetaPoly zeta_flip(const ZetaPoly& a) {
  ZetaPoly s;
  if (a.is_zero()) return s;
  s.rmin = -a.rmax();
  s.c.assign(a.c.size(), Rat(0));
  for (long r = a.rmin; r <= a.rmax(); ++r) s.c[static_cast<size_t>(-r - s.rmin)] = a.coeff(r);
  return s;
}

}  // namespace heegner
