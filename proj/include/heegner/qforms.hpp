#pragma once
// Integral binary quadratic forms [a, b, c], the SL2 action, Gauss
// reduction, automorphs, level-N class enumeration for forms [a, b, c]
// with N | a and b fixed mod 2N (imprimitive forms included), and exact
// CM points in quadratic number fields.

#include <optional>
#include <vector>

#include "heegner/arith.hpp"
#include "heegner/base.hpp"

namespace heegner {

struct Mat2 {
  Int a{1}, b{0}, c{0}, d{1};  // row-major [[a, b], [c, d]]
  Int det() const { return a * d - b * c; }
};

inline Mat2 operator*(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
          x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}
inline Mat2 inverse_unimodular(const Mat2& m) {
  Int dt = m.det();
  HG_DOMAIN_CHECK(dt == 1 || dt == -1, "inverse_unimodular: determinant not a unit");
  return {dt * m.d, -dt * m.b, -dt * m.c, dt * m.a};
}
inline bool operator==(const Mat2& x, const Mat2& y) {
  return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
}
inline bool in_gamma0(const Mat2& m, const Int& N) {
  return m.det() == 1 && mod_pos(m.c, N) == 0;
}

struct QForm {
  Int a{0}, b{0}, c{0};
  Int disc() const { return b * b - 4 * a * c; }
  Int content() const { return gcd_int(gcd_int(a < 0 ? -a : a, b < 0 ? -b : b), c < 0 ? -c : c); }
  bool positive_definite() const { return disc() < 0 && a > 0; }
  bool negative_definite() const { return disc() < 0 && a < 0; }
};

inline bool operator==(const QForm& x, const QForm& y) {
  return x.a == y.a && x.b == y.b && x.c == y.c;
}
inline bool operator<(const QForm& x, const QForm& y) {
  if (x.a != y.a) return x.a < y.a;
  if (x.b != y.b) return x.b < y.b;
  return x.c < y.c;
}
inline QForm operator-(const QForm& q) { return {-q.a, -q.b, -q.c}; }

// Right translate Q o M: (Q o M)(x, y) = Q(m11 x + m12 y, m21 x + m22 y).
inline QForm compose(const QForm& q, const Mat2& m) {
  Int a2 = q.a * m.a * m.a + q.b * m.a * m.c + q.c * m.c * m.c;
  Int c2 = q.a * m.b * m.b + q.b * m.b * m.d + q.c * m.d * m.d;
  Int b2 = 2 * q.a * m.a * m.b + q.b * (m.a * m.d + m.b * m.c) + 2 * q.c * m.c * m.d;
  return {a2, b2, c2};
}

// Left group action: act(g, Q) = Q o g^{-1}, so that
// act(gh, Q) = act(g, act(h, Q)).
inline QForm act(const Mat2& g, const QForm& q) { return compose(q, inverse_unimodular(g)); }

// Gauss reduction of a positive definite form.  Returns the reduced form R
// (|b| <= a <= c with b >= 0 if |b| = a or a = c) and U in SL2(Z) with
// R = Q o U.
inline std::pair<QForm, Mat2> reduce_gauss(const QForm& q0) {
  HG_DOMAIN_CHECK(q0.positive_definite(), "reduce_gauss: form must be positive definite");
  QForm q = q0;
  Mat2 u;  // identity
  auto apply = [&](const Mat2& m) {
    q = compose(q, m);
    u = u * m;
  };
  for (int guard = 0; guard < 10000; ++guard) {
    // Translate b into (-a, a]: b -> b - 2ka.
    Int k = floor_rat(Rat(q.b + q.a, 2 * q.a));
    if (q.b + q.a <= 0 || q.b > q.a) {
      // ensure k shifts into range even at boundaries
    }
    if (k != 0) apply({1, -k, 0, 1});
    if (q.a > q.c) {
      apply({0, -1, 1, 0});  // [a,b,c] -> [c,-b,a]
      continue;
    }
    break;
  }
  HG_LOGIC_CHECK(-q.a < q.b && q.b <= q.a && q.a <= q.c, "reduce_gauss: loop failed");
  if (q.b < 0) {
    // Tie-break boundary cases to b >= 0.
    if (q.a == q.c) apply({0, -1, 1, 0});
  }
  HG_LOGIC_CHECK(compose(q0, u) == q, "reduce_gauss: transform mismatch");
  return {q, u};
}

// All SL2-reduced positive definite forms of discriminant D < 0,
// imprimitive forms included, sorted lexicographically.
inline std::vector<QForm> reduced_forms(const Int& D) {
  HG_DOMAIN_CHECK(D < 0 && (mod_pos(D, Int(4)) == 0 || mod_pos(D, Int(4)) == 1),
                  "reduced_forms: D must be a negative discriminant");
  std::vector<QForm> out;
  for (Int b = 0; b * b <= -D / 3 + 1; ++b) {
    if (mod_pos(b - D, Int(2)) != 0) continue;
    for (Int a = (b > 0 ? b : Int(1)); 4 * a * a <= b * b - D; ++a) {
      Int num = b * b - D;
      if (num % (4 * a) != 0) continue;
      Int c = num / (4 * a);
      if (c < a) continue;
      out.push_back({a, b, c});
      if (b > 0 && b != a && a != c) out.push_back({a, -b, c});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Automorphs of a positive definite form in SL2(Z) (including -I): the
// matrices U with Q o U = Q.  Sizes 6, 4, 2 for underlying discriminant
// -3, -4, otherwise.
inline std::vector<Mat2> automorphs(const QForm& q) {
  HG_DOMAIN_CHECK(q.positive_definite(), "automorphs: form must be positive definite");
  Int m = q.content();
  QForm p{q.a / m, q.b / m, q.c / m};
  Int D0 = p.disc();
  std::vector<Mat2> out;
  auto push_pm = [&](const Mat2& u) {
    out.push_back(u);
    out.push_back({-u.a, -u.b, -u.c, -u.d});
  };
  push_pm(Mat2{});
  auto from_pell = [&](const Int& t, const Int& u) -> Mat2 {
    // For t^2 - D0 u^2 = 4: U = [(t - b u)/2, -c u; a u, (t + b u)/2].
    return {(t - p.b * u) / 2, -p.c * u, p.a * u, (t + p.b * u) / 2};
  };
  if (D0 == -4) {
    push_pm(from_pell(Int(0), Int(1)));
  } else if (D0 == -3) {
    push_pm(from_pell(Int(1), Int(1)));
    push_pm(from_pell(Int(-1), Int(1)));
  }
  for (auto& u : out) HG_LOGIC_CHECK(compose(q, u) == q, "automorphs: matrix does not fix form");
  return out;
}

// Order of the stabilizer of Q in Gamma0(N) modulo +-1.
inline long stabilizer_order(const QForm& q, const Int& N) {
  QForm p = q.positive_definite() ? q : -q;
  long count = 0;
  for (auto& u : automorphs(p))
    if (in_gamma0(u, N)) ++count;
  HG_LOGIC_CHECK(count % 2 == 0 && count > 0, "stabilizer_order: parity");
  return count / 2;
}

// Representatives of the left cosets SL2(Z) / Gamma0(N), indexed by the
// projective line P^1(Z/N) through the first column mod N.
inline std::vector<Mat2> coset_reps_gamma0(const Int& N) {
  HG_DOMAIN_CHECK(N >= 1, "coset_reps_gamma0: N must be positive");
  std::vector<std::pair<Int, Int>> pts;
  std::vector<bool> seen(static_cast<size_t>(to_long(N) * to_long(N)), false);
  long n = to_long(N);
  auto idx = [&](long u, long v) { return static_cast<size_t>(u * n + v); };
  for (long u = 0; u < n; ++u) {
    for (long v = 0; v < n; ++v) {
      if (gcd_int(gcd_int(Int(u), Int(v)), N) != 1) continue;
      if (seen[idx(u, v)]) continue;
      pts.emplace_back(Int(u), Int(v));
      for (long w = 1; w < n; ++w) {
        if (gcd_int(Int(w), N) != 1) continue;
        seen[idx(mod_pos(w * u, n), mod_pos(w * v, n))] = true;
      }
    }
  }
  std::vector<Mat2> reps;
  for (auto& [u, v] : pts) {
    // Lift (u, v) to a coprime pair (a, c) = (u + sN, v + tN).
    Mat2 g;
    bool found = false;
    for (long s = 0; s < 40 && !found; ++s) {
      for (long t = 0; t < 40 && !found; ++t) {
        Int a = u + s * N, c = v + t * N;
        if (a == 0 && c == 0) continue;
        if (gcd_int(a, c) != 1) continue;
        // Solve a*d - b*c = 1.
        Int aa = a, cc = c, x0 = 1, x1 = 0, y0 = 0, y1 = 1;
        while (cc != 0) {
          Int qq = aa / cc;
          Int r = aa - qq * cc;
          aa = cc; cc = r;
          Int nx = x0 - qq * x1; x0 = x1; x1 = nx;
          Int ny = y0 - qq * y1; y0 = y1; y1 = ny;
        }
        // aa = gcd = +-1 = x0*a + y0*c
        Int sgn = aa;  // +-1
        Int d = sgn * x0, bneg = sgn * y0;
        g = {a, -bneg, c, d};
        HG_LOGIC_CHECK(g.det() == 1, "coset lift: determinant");
        found = true;
      }
    }
    HG_LOGIC_CHECK(found, "coset lift: no coprime lift found");
    reps.push_back(g);
  }
  // |P^1(Z/N)| = N prod (1 + 1/p).
  Int expect = N;
  for (auto& [pp, e] : factorize(N)) {
    (void)e;
    expect = expect / pp * (pp + 1);
  }
  if (N == 1) expect = 1;
  HG_LOGIC_CHECK(Int(reps.size()) == expect, "coset count mismatch");
  return reps;
}

// Gamma0(N)-equivalence of two forms of equal (negative) discriminant.
inline bool equivalent_gamma0(const QForm& q1, const QForm& q2, const Int& N) {
  HG_DOMAIN_CHECK(q1.disc() == q2.disc() && q1.disc() < 0,
                  "equivalent_gamma0: need equal negative discriminants");
  if (q1.positive_definite() != q2.positive_definite()) return false;
  QForm p1 = q1.positive_definite() ? q1 : -q1;
  QForm p2 = q2.positive_definite() ? q2 : -q2;
  auto [r1, u1] = reduce_gauss(p1);
  auto [r2, u2] = reduce_gauss(p2);
  if (!(r1 == r2)) return false;
  Mat2 u2inv = inverse_unimodular(u2);
  for (auto& s : automorphs(r1)) {
    Mat2 g = u1 * s * u2inv;  // p1 o g = p2
    if (in_gamma0(g, N)) return true;
  }
  return false;
}

// Gamma0(N)-classes of forms with discriminant D, N | a, b = beta mod 2N.
// Both definite signs are returned (positive definite classes first),
// imprimitive forms included.  Representatives are the lexicographically
// smallest candidates encountered.
inline std::vector<QForm> heegner_classes(const Int& N, const Int& D, const Int& beta) {
  HG_DOMAIN_CHECK(N >= 1, "heegner_classes: N must be positive");
  HG_DOMAIN_CHECK(D < 0, "heegner_classes: D must be negative");
  HG_DOMAIN_CHECK(mod_pos(beta * beta - D, 4 * N) == 0,
                  "heegner_classes: beta^2 must be D mod 4N");
  auto cosets = coset_reps_gamma0(N);

  auto positive_part = [&](const Int& bt) {
    std::vector<QForm> reps;          // canonical (lex-min) representative per class
    std::vector<std::pair<QForm, Mat2>> keys;  // (SL2-reduced form, U) per class
    for (const QForm& r : reduced_forms(D)) {
      for (const Mat2& h : cosets) {
        QForm q = compose(r, h);
        if (mod_pos(q.a, N) != 0) continue;
        if (mod_pos(q.b - bt, 2 * N) != 0) continue;
        // Identify the class of q among those found so far (same reduced
        // form r, transform h: q = r o h).
        bool known = false;
        for (size_t i = 0; i < reps.size(); ++i) {
          if (!(keys[i].first == r)) continue;
          // q' = r o h', q = r o h equivalent iff h'^{-1} s h in Gamma0(N).
          Mat2 hprev_inv = inverse_unimodular(keys[i].second);
          for (auto& s : automorphs(r)) {
            if (in_gamma0(hprev_inv * s * h, N)) {
              known = true;
              break;
            }
          }
          if (known) {
            if (q < reps[i]) reps[i] = q;
            break;
          }
        }
        if (!known) {
          reps.push_back(q);
          keys.emplace_back(r, h);
        }
      }
    }
    std::sort(reps.begin(), reps.end());
    return reps;
  };

  std::vector<QForm> out = positive_part(beta);
  std::vector<QForm> neg = positive_part(mod_pos(-beta, 2 * N));
  for (auto& q : neg) out.push_back(-q);
  return out;
}

// Exact element x + y sqrt(d) of an imaginary quadratic field (d < 0).
struct QuadPoint {
  Rat x{0};
  Rat y{0};
  Int d{-1};

  bool upper_half() const { return y > 0; }
};

inline QuadPoint qp_add(const QuadPoint& p, const Rat& t) { return {p.x + t, p.y, p.d}; }
inline QuadPoint qp_scale(const QuadPoint& p, const Rat& t) { return {p.x * t, p.y * t, p.d}; }
// |p|^2 = x^2 - d y^2 (real and positive for d < 0, p != 0).
inline Rat qp_norm(const QuadPoint& p) { return p.x * p.x - Rat(p.d) * p.y * p.y; }

// Moebius transform (a p + b) / (c p + d) by an integer matrix of
// nonzero determinant.
inline QuadPoint qp_moebius(const Mat2& m, const QuadPoint& p) {
  // numerator n = a p + b, denominator q = c p + d
  Rat nx = Rat(m.a) * p.x + Rat(m.b), ny = Rat(m.a) * p.y;
  Rat qx = Rat(m.c) * p.x + Rat(m.d), qy = Rat(m.c) * p.y;
  Rat qn = qx * qx - Rat(p.d) * qy * qy;
  HG_DOMAIN_CHECK(qn != 0, "qp_moebius: singular denominator");
  // (n / q) = n * conj(q) / |q|^2 with conj(x + y sqrt d) = x - y sqrt d.
  Rat rx = (nx * qx - Rat(p.d) * ny * qy) / qn;
  Rat ry = (ny * qx - nx * qy) / qn;
  return {rx, ry, p.d};
}

// CM point of a positive definite form: (-b + sqrt(D)) / (2a).
inline QuadPoint cm_point(const QForm& q) {
  HG_DOMAIN_CHECK(q.positive_definite(), "cm_point: form must be positive definite");
  return {Rat(-q.b, 2 * q.a), Rat(1, 2 * q.a), q.disc()};
}

// Reduce a point of the upper half plane into the standard fundamental
// domain |Re| <= 1/2, |tau| >= 1.  Returns (w, g) with w = g tau.
inline std::pair<QuadPoint, Mat2> reduce_point(const QuadPoint& tau) {
  HG_DOMAIN_CHECK(tau.upper_half(), "reduce_point: point must be in upper half plane");
  QuadPoint p = tau;
  Mat2 g;
  for (int guard = 0; guard < 100000; ++guard) {
    Int k = round_rat(p.x);
    if (k != 0) {
      Mat2 t{1, -k, 0, 1};
      p = qp_moebius(t, p);
      g = t * g;
    }
    if (qp_norm(p) < 1) {
      Mat2 s{0, -1, 1, 0};
      p = qp_moebius(s, p);
      g = s * g;
      continue;
    }
    return {p, g};
  }
  throw logic_failure("reduce_point: did not terminate");
}

}  // namespace heegner
