#pragma once

// Root systems of types A_{n-1}, B_n, C_n in the epsilon basis: positive
// roots, rho, coroots for the trace form, the product-of-coroots polynomial
// and its evaluations, exponents, Weyl orders, and Weyl discriminants.
//
// Conventions. RootDatum{A, n} means the system A_{n-1} realized inside n
// coordinates. The trace form pairs the eta basis orthonormally, so every
// coroot has the same coordinate vector as its root.

#include "ellstab/rational.hpp"

#include <vector>

namespace ellstab {

enum class Family { A, B, C };

struct RootDatum {
  Family family;
  int rank;  // coordinate count; family A means A_{rank-1}

  RootDatum(Family f, int n) : family(f), rank(n) {
    if (n < 1) throw std::invalid_argument("root datum rank must be >= 1");
  }
};

struct Weight {
  std::vector<Rational> coords;  // epsilon basis (eta basis for coroots)

  bool operator==(const Weight& o) const { return coords == o.coords; }
};

// varpi = prod of coroots over positive roots, kept as a factor multiset.
struct SymElement {
  std::vector<std::vector<Rational>> factors;
};

// Pair roots (i<j, difference then sum) in lexicographic (i,j) order, then
// the single-coordinate roots (eps_i for B, 2 eps_i for C) ascending in i.
inline std::vector<Weight> positive_roots(const RootDatum& rd) {
  int n = rd.rank;
  std::vector<Weight> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Weight diff{std::vector<Rational>(n, 0)}, sum{std::vector<Rational>(n, 0)};
      diff.coords[i] = 1;
      diff.coords[j] = -1;
      out.push_back(diff);
      if (rd.family != Family::A) {
        sum.coords[i] = 1;
        sum.coords[j] = 1;
        out.push_back(sum);
      }
    }
  if (rd.family == Family::B)
    for (int i = 0; i < n; ++i) {
      Weight w{std::vector<Rational>(n, 0)};
      w.coords[i] = 1;
      out.push_back(w);
    }
  if (rd.family == Family::C)
    for (int i = 0; i < n; ++i) {
      Weight w{std::vector<Rational>(n, 0)};
      w.coords[i] = 2;
      out.push_back(w);
    }
  return out;
}

inline Weight rho(const RootDatum& rd) {
  Weight r{std::vector<Rational>(rd.rank, 0)};
  for (const Weight& a : positive_roots(rd))
    for (int i = 0; i < rd.rank; ++i) r.coords[i] += a.coords[i];
  for (auto& c : r.coords) c /= 2;
  return r;
}

// Under the trace form the coroot of every root in scope has the same
// coordinates as the root itself; only membership needs checking.
inline Weight coroot_btr(const Weight& alpha, const RootDatum& rd) {
  if (static_cast<int>(alpha.coords.size()) != rd.rank)
    throw std::invalid_argument("coroot_btr: rank mismatch");
  for (const Weight& r : positive_roots(rd)) {
    bool plus = true, minus = true;
    for (int i = 0; i < rd.rank; ++i) {
      if (alpha.coords[i] != r.coords[i]) plus = false;
      if (alpha.coords[i] != -r.coords[i]) minus = false;
    }
    if (plus || minus) return alpha;
  }
  throw std::invalid_argument("coroot_btr: not a root of this datum");
}

inline SymElement varpi_sym(const RootDatum& rd) {
  SymElement s;
  for (const Weight& a : positive_roots(rd)) s.factors.push_back(coroot_btr(a, rd).coords);
  return s;
}

inline Rational varpi_eval_sym(const SymElement& s, const Weight& lambda) {
  Rational prod = 1;
  for (const auto& h : s.factors) {
    if (h.size() != lambda.coords.size())
      throw std::invalid_argument("varpi_eval: rank mismatch");
    Rational pairing = 0;
    for (size_t i = 0; i < h.size(); ++i) pairing += lambda.coords[i] * h[i];
    prod *= pairing;
  }
  return prod;
}

inline Rational varpi_eval(const RootDatum& rd, const Weight& lambda) {
  if (static_cast<int>(lambda.coords.size()) != rd.rank)
    throw std::invalid_argument("varpi_eval: rank mismatch");
  return varpi_eval_sym(varpi_sym(rd), lambda);
}

// (varpi^{C_n}(rho^{B_n}) / varpi^{C_n}(rho^{C_n}),
//  varpi^{B_n}(rho^{B_n}) / varpi^{C_n}(rho^{C_n})); equals (2^-n, 2^-2n).
inline std::pair<Rational, Rational> lemma_2n_ratios(int n) {
  RootDatum c(Family::C, n), b(Family::B, n);
  Rational den = varpi_eval(c, rho(c));
  return {varpi_eval(c, rho(b)) / den, varpi_eval(b, rho(b)) / den};
}

inline std::vector<int> exponents(const RootDatum& rd) {
  std::vector<int> out;
  if (rd.family == Family::A) {
    for (int m = 1; m < rd.rank; ++m) out.push_back(m);
  } else {
    for (int m = 1; m <= 2 * rd.rank - 1; m += 2) out.push_back(m);
  }
  return out;
}

inline Int weyl_order(const RootDatum& rd) {
  Int f = 1;
  for (int i = 2; i <= rd.rank; ++i) f *= i;
  if (rd.family == Family::A) return f;
  return f * int_pow(Int(2), static_cast<unsigned long>(rd.rank));
}

// varpi(rho) by the closed formula
//   2^{-#positive roots} * prod_{m in exponents} m! * prod_{alpha>0} B(H_a,H_a).
inline Rational steinberg_rho_value(const RootDatum& rd) {
  if (rd.family == Family::A)
    throw std::invalid_argument("steinberg_rho_value: only families B and C are supported");
  auto pos = positive_roots(rd);
  Rational v = rat_pow(Rational(2), -static_cast<long>(pos.size()));
  for (int m : exponents(rd)) {
    Int f = 1;
    for (int i = 2; i <= m; ++i) f *= i;
    v *= Rational(f);
  }
  for (const Weight& a : pos) {
    Rational sq = 0;
    for (const auto& c : a.coords) sq += c * c;  // coroot coords = root coords
    v *= sq;
  }
  return v;
}

enum class AtomKind { Sp, SO_odd, GL, U };

enum class QContext { real_split, nonarch_split, compact };

// dim and the q invariant of the split form in the stated context. The size
// parameter is n for Sp(2n)/SO(2n+1) and m for GL(m)/U(m).
inline std::pair<Int, Rational> dim_and_q(AtomKind kind, int n_or_m, QContext ctx) {
  if (n_or_m < 0) throw std::invalid_argument("dim_and_q: negative size");
  Int n(n_or_m);
  Int dim = (kind == AtomKind::Sp || kind == AtomKind::SO_odd) ? Int(n * (2 * n + 1)) : Int(n * n);
  if (ctx == QContext::compact) return {dim, Rational(0)};
  if (kind == AtomKind::Sp || kind == AtomKind::SO_odd) {
    if (ctx == QContext::real_split) return {dim, Rational(n * (n + 1), 2)};
    return {dim, Rational(n)};
  }
  throw std::invalid_argument("dim_and_q: unsupported shape/context combination");
}

// prod over all roots of (1 - xi_alpha(t)) with xi_alpha(t) = prod t_i^{a_i}.
inline Rational weyl_discriminant(const RootDatum& rd, const std::vector<Rational>& t) {
  if (static_cast<int>(t.size()) != rd.rank)
    throw std::invalid_argument("weyl_discriminant: rank mismatch");
  for (const auto& ti : t)
    if (ti == 0) throw std::invalid_argument("weyl_discriminant: torus coordinates must be nonzero");
  Rational prod = 1;
  for (const Weight& a : positive_roots(rd)) {
    Rational xi = 1;
    for (int i = 0; i < rd.rank; ++i) {
      if (a.coords[i] == 0) continue;
      long e = to_long(rat_num(a.coords[i]));  // root coords are integers
      xi *= rat_pow(t[static_cast<size_t>(i)], e);
    }
    if (xi == 1) throw std::domain_error("weyl_discriminant: singular point (a root character is 1)");
    prod *= (Rational(1) - xi) * (Rational(1) - Rational(1) / xi);
  }
  return prod;
}

struct DiscriminantRatio {
  Rational value;
  bool is_limit;  // true when a discriminant vanishes and only the closed form is defined
};

// Closed form prod (1+t_i)(1+1/t_i) for the quotient of the C_n and B_n
// discriminants; at points regular for both systems it is asserted equal to
// the pointwise quotient, at singular points the closed form is the limit.
inline DiscriminantRatio discriminant_ratio(int n, const std::vector<Rational>& t) {
  if (static_cast<int>(t.size()) != n)
    throw std::invalid_argument("discriminant_ratio: rank mismatch");
  for (const auto& ti : t)
    if (ti == 0 || ti == -1)
      throw std::invalid_argument("discriminant_ratio: coordinates must avoid 0 and -1");
  Rational closed = 1;
  for (const auto& ti : t) closed *= (Rational(1) + ti) * (Rational(1) + Rational(1) / ti);
  bool regular = true;
  for (size_t i = 0; i < t.size() && regular; ++i) {
    if (t[i] == 1) regular = false;
    for (size_t j = i + 1; j < t.size() && regular; ++j)
      if (t[i] == t[j] || t[i] * t[j] == 1) regular = false;
  }
  if (!regular) return {closed, true};
  RootDatum c(Family::C, n), b(Family::B, n);
  Rational quotient = weyl_discriminant(c, t) / weyl_discriminant(b, t);
  if (quotient != closed)
    throw std::logic_error("discriminant_ratio: closed form disagrees with pointwise quotient");
  return {closed, false};
}

}  // namespace ellstab
