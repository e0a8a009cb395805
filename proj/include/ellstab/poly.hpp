#pragma once

// Dense univariate polynomials over Q. Coefficients are stored constant term
// first; the zero polynomial is the empty vector and degree() returns -1 there.

#include "ellstab/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ellstab {

struct PolyQ {
  std::vector<Rational> c;  // c[i] multiplies X^i, no trailing zeros

  PolyQ() = default;
  explicit PolyQ(std::vector<Rational> coeffs) : c(std::move(coeffs)) { normalize(); }

  void normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }

  long degree() const { return static_cast<long>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  bool is_monic() const { return !c.empty() && c.back() == 1; }

  Rational coeff(size_t i) const { return i < c.size() ? c[i] : Rational(0); }
  Rational constant_term() const { return coeff(0); }
  Rational leading() const { return c.empty() ? Rational(0) : c.back(); }

  bool operator==(const PolyQ& o) const { return c == o.c; }
  bool operator!=(const PolyQ& o) const { return !(*this == o); }
};

inline PolyQ poly_from_ints(std::initializer_list<long> coeffs) {
  std::vector<Rational> v;
  for (long x : coeffs) v.emplace_back(x);
  return PolyQ(std::move(v));
}

inline PolyQ poly_x_minus(const Rational& r) { return PolyQ({Rational(-r), Rational(1)}); }

inline PolyQ poly_add(const PolyQ& a, const PolyQ& b) {
  std::vector<Rational> v(std::max(a.c.size(), b.c.size()), Rational(0));
  for (size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
  return PolyQ(std::move(v));
}

inline PolyQ poly_sub(const PolyQ& a, const PolyQ& b) {
  std::vector<Rational> v(std::max(a.c.size(), b.c.size()), Rational(0));
  for (size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
  return PolyQ(std::move(v));
}

inline PolyQ poly_mul(const PolyQ& a, const PolyQ& b) {
  if (a.is_zero() || b.is_zero()) return PolyQ();
  std::vector<Rational> v(a.c.size() + b.c.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) v[i + j] += a.c[i] * b.c[j];
  return PolyQ(std::move(v));
}

inline PolyQ poly_scale(const PolyQ& a, const Rational& s) {
  std::vector<Rational> v = a.c;
  for (auto& x : v) x *= s;
  return PolyQ(std::move(v));
}

// Euclidean division, returns (quotient, remainder).
inline std::pair<PolyQ, PolyQ> poly_divmod(const PolyQ& a, const PolyQ& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  PolyQ r = a;
  std::vector<Rational> q(a.c.size() > b.c.size() ? a.c.size() - b.c.size() + 1 : 1, Rational(0));
  while (!r.is_zero() && r.degree() >= b.degree()) {
    long shift = r.degree() - b.degree();
    Rational f = r.leading() / b.leading();
    q[static_cast<size_t>(shift)] = f;
    for (size_t i = 0; i < b.c.size(); ++i)
      r.c[static_cast<size_t>(shift) + i] -= f * b.c[i];
    r.normalize();
  }
  return {PolyQ(std::move(q)), r};
}

inline bool poly_divides(const PolyQ& d, const PolyQ& a) {
  return poly_divmod(a, d).second.is_zero();
}

inline PolyQ poly_derivative(const PolyQ& a) {
  if (a.c.size() <= 1) return PolyQ();
  std::vector<Rational> v(a.c.size() - 1);
  for (size_t i = 1; i < a.c.size(); ++i) v[i - 1] = a.c[i] * Rational(static_cast<long>(i));
  return PolyQ(std::move(v));
}

// Horner evaluation; T is Rational or any ring type constructible from
// Rational with *, + defined (QuadElem qualifies).
template <class T>
T poly_eval(const PolyQ& p, const T& x) {
  T acc(Rational(0));
  for (size_t i = p.c.size(); i-- > 0;) acc = acc * x + T(p.c[i]);
  return acc;
}

inline Rational poly_eval(const PolyQ& p, const Rational& x) {
  Rational acc(0);
  for (size_t i = p.c.size(); i-- > 0;) acc = acc * x + p.c[i];
  return acc;
}

inline void require_monic_nonzero_const(const PolyQ& p, const char* who) {
  if (!p.is_monic()) throw std::invalid_argument(std::string(who) + ": polynomial must be monic");
  if (p.constant_term() == 0)
    throw std::invalid_argument(std::string(who) + ": constant term must be nonzero");
}

// Monic normalization of X^deg p(1/X): reverses the coefficients and divides
// by the old constant term. Involutive on monic polynomials with p(0) != 0.
inline PolyQ poly_reciprocal(const PolyQ& p) {
  require_monic_nonzero_const(p, "poly_reciprocal");
  std::vector<Rational> v(p.c.rbegin(), p.c.rend());
  Rational lead = v.back();  // = p(0)
  for (auto& x : v) x /= lead;
  return PolyQ(std::move(v));
}

inline bool is_self_reciprocal(const PolyQ& p) { return poly_reciprocal(p) == p; }

// Monic polynomial whose roots are the negatives of p's: (-1)^deg p(-X).
inline PolyQ poly_neg_arg(const PolyQ& p) {
  if (!p.is_monic()) throw std::invalid_argument("poly_neg_arg: polynomial must be monic");
  std::vector<Rational> v = p.c;
  long d = p.degree();
  for (long i = 0; i <= d; ++i)
    if ((d - i) % 2 != 0) v[static_cast<size_t>(i)] = -v[static_cast<size_t>(i)];
  return PolyQ(std::move(v));
}

// ---- irreducibility over Q, best effort with an explicit unknown verdict ----

enum class Verdict { yes, no, unknown };

namespace detail {

// Primitive integer scaling: returns integer coefficients of lcm-denominator * p.
inline std::vector<Int> integer_scaled(const PolyQ& p) {
  Int l = 1;
  for (const auto& q : p.c) l = boost::multiprecision::lcm(l, rat_den(q));
  std::vector<Int> v;
  v.reserve(p.c.size());
  for (const auto& q : p.c) v.push_back(rat_num(q) * (l / rat_den(q)));
  return v;
}

inline bool has_rational_root(const PolyQ& p) {
  auto v = integer_scaled(p);
  if (v.empty()) return true;
  if (v.front() == 0) return true;  // root 0
  // candidate roots r/s with r | v[0], s | v.back()
  for (const Int& r : divisors(v.front()))
    for (const Int& s : divisors(v.back())) {
      Rational cand(r, s);
      if (poly_eval(p, cand) == 0 || poly_eval(p, Rational(-cand)) == 0) return true;
    }
  return false;
}

// Bounded search for a monic quadratic factor with integer u, v; only applies
// when p itself has integer coefficients.
inline bool has_integer_quadratic_factor(const PolyQ& p) {
  for (const auto& q : p.c)
    if (!is_integer(q)) return false;
  Int a0 = rat_num(p.constant_term());
  Int bound = 1;
  for (const auto& q : p.c) {
    Int b = rat_abs(q) > 0 ? rat_num(rat_abs(q)) : Int(0);
    if (b > bound) bound = b;
  }
  bound = 2 * bound + 2;  // Cauchy root bound covers sums of two roots
  if (bound > 2000) bound = 2000;  // bounded effort
  for (const Int& vd : divisors(a0))
    for (int sign = -1; sign <= 1; sign += 2) {
      Int v = vd * sign;
      for (Int u = -bound; u <= bound; ++u) {
        PolyQ quad({Rational(v), Rational(u), Rational(1)});
        if (poly_divides(quad, p)) return true;
      }
    }
  return false;
}

// ---- arithmetic in F_p[X] with small p, dense uint64 coefficients ----

struct FpPoly {
  uint64_t p;
  std::vector<uint64_t> c;

  void normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  long degree() const { return static_cast<long>(c.size()) - 1; }
};

inline FpPoly fp_reduce(const std::vector<Int>& v, uint64_t p) {
  FpPoly f{p, {}};
  f.c.reserve(v.size());
  for (const Int& x : v) {
    Int m = x % Int(p);
    if (m < 0) m += p;
    f.c.push_back(static_cast<uint64_t>(m));
  }
  f.normalize();
  return f;
}

inline FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& mod) {
  uint64_t p = mod.p;
  std::vector<uint64_t> v(a.c.size() + b.c.size() ? a.c.size() + b.c.size() - 1 : 0, 0);
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (!a.c[i]) continue;
    for (size_t j = 0; j < b.c.size(); ++j) v[i + j] = (v[i + j] + a.c[i] * b.c[j]) % p;
  }
  // reduce by monic-scaled mod
  uint64_t lead = mod.c.back();
  uint64_t lead_inv = 1;
  for (uint64_t e = p - 2, base = lead; e; e >>= 1, base = base * base % p)
    if (e & 1) lead_inv = lead_inv * base % p;
  size_t dm = mod.c.size() - 1;
  for (size_t i = v.size(); i-- > dm;) {
    if (!v[i]) continue;
    uint64_t f = v[i] * lead_inv % p;
    for (size_t j = 0; j < mod.c.size(); ++j) {
      uint64_t sub = f * mod.c[j] % p;
      size_t k = i - dm + j;
      v[k] = (v[k] + p - sub) % p;
    }
  }
  FpPoly r{p, std::move(v)};
  r.normalize();
  return r;
}

inline FpPoly fp_powmod_x(const FpPoly& mod, const Int& e) {
  // X^e mod f over F_p
  FpPoly result{mod.p, {1}};
  FpPoly base{mod.p, {0, 1}};
  base = fp_mulmod(base, FpPoly{mod.p, {1}}, mod);
  Int k = e;
  while (k > 0) {
    if (k % 2 == 1) result = fp_mulmod(result, base, mod);
    base = fp_mulmod(base, base, mod);
    k /= 2;
  }
  return result;
}

inline FpPoly fp_gcd(FpPoly a, FpPoly b) {
  uint64_t p = a.p;
  while (!b.c.empty()) {
    // a mod b
    uint64_t lead = b.c.back();
    uint64_t lead_inv = 1;
    for (uint64_t e = p - 2, base = lead; e; e >>= 1, base = base * base % p)
      if (e & 1) lead_inv = lead_inv * base % p;
    while (a.degree() >= b.degree() && !a.c.empty()) {
      uint64_t f = a.c.back() * lead_inv % p;
      size_t shift = a.c.size() - b.c.size();
      for (size_t i = 0; i < b.c.size(); ++i) {
        uint64_t sub = f * b.c[i] % p;
        a.c[shift + i] = (a.c[shift + i] + p - sub) % p;
      }
      a.normalize();
    }
    std::swap(a, b);
  }
  return a;
}

inline bool fp_squarefree(const FpPoly& f) {
  if (f.degree() <= 0) return false;
  FpPoly d{f.p, {}};
  d.c.resize(f.c.size() - 1);
  for (size_t i = 1; i < f.c.size(); ++i) d.c[i - 1] = f.c[i] * (i % f.p) % f.p;
  d.normalize();
  if (d.c.empty()) return false;  // derivative 0: p-th power pattern
  return fp_gcd(f, d).degree() == 0;
}

// Rabin irreducibility test over F_p.
inline bool fp_irreducible(const FpPoly& f) {
  long d = f.degree();
  if (d <= 0) return false;
  if (d == 1) return true;
  Int p(f.p);
  FpPoly xq = fp_powmod_x(f, int_pow(p, static_cast<unsigned long>(d)));
  // X^{p^d} == X mod f ?
  FpPoly x{f.p, {0, 1}};
  FpPoly diff = xq;
  if (diff.c.size() < 2) diff.c.resize(2, 0);
  diff.c[1] = (diff.c[1] + f.p - 1) % f.p;
  diff.normalize();
  if (!diff.c.empty()) return false;
  // for each prime r | d: gcd(X^{p^{d/r}} - X, f) must be constant
  long dd = d;
  std::vector<long> rs;
  for (long r = 2; r * r <= dd; ++r)
    while (dd % r == 0) { if (rs.empty() || rs.back() != r) rs.push_back(r); dd /= r; }
  if (dd > 1) rs.push_back(dd);
  for (long r : rs) {
    FpPoly xe = fp_powmod_x(f, int_pow(p, static_cast<unsigned long>(d / r)));
    FpPoly g = xe;
    if (g.c.size() < 2) g.c.resize(2, 0);
    g.c[1] = (g.c[1] + f.p - 1) % f.p;
    g.normalize();
    if (fp_gcd(f, g).degree() != 0) return false;
  }
  return true;
}

}  // namespace detail

// Exact for deg <= 3 (rational-root test; quadratics via discriminant).
// For deg >= 4: yes when some small-prime reduction is irreducible (prime not
// dividing the leading coefficient, reduction squarefree), no when a rational
// root or an integer quadratic factor is found, otherwise unknown.
inline Verdict is_irreducible_q(const PolyQ& p) {
  if (!p.is_monic() || p.degree() < 1)
    throw std::invalid_argument("is_irreducible_q: need a monic polynomial of degree >= 1");
  long d = p.degree();
  if (d == 1) return Verdict::yes;
  thread_local std::map<std::vector<Rational>, Verdict> cache;
  if (auto it = cache.find(p.c); it != cache.end()) return it->second;
  auto remember = [&](Verdict v) {
    cache.emplace(p.c, v);
    return v;
  };
  if (d == 2) {
    auto v = detail::integer_scaled(p);
    Int disc = v[1] * v[1] - 4 * v[2] * v[0];
    return remember(is_perfect_square(disc) ? Verdict::no : Verdict::yes);
  }
  if (d == 3) return remember(detail::has_rational_root(p) ? Verdict::no : Verdict::yes);
  if (detail::has_rational_root(p)) return remember(Verdict::no);
  if (detail::has_integer_quadratic_factor(p)) return remember(Verdict::no);
  auto v = detail::integer_scaled(p);
  for (uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
    if (v.back() % Int(q) == 0) continue;
    auto f = detail::fp_reduce(v, q);
    if (f.degree() != d) continue;
    if (!detail::fp_squarefree(f)) continue;  // q divides the discriminant
    if (detail::fp_irreducible(f)) return remember(Verdict::yes);
  }
  return remember(Verdict::unknown);
}

// f mod p squarefree with p-unit leading coefficient; the prime-screening
// predicate used for good-reduction checks.
inline bool squarefree_mod_p(const PolyQ& p, const Int& q) {
  auto v = detail::integer_scaled(p);
  if (v.empty() || v.back() % q == 0) return false;
  auto f = detail::fp_reduce(v, static_cast<uint64_t>(to_long(q)));
  return detail::fp_squarefree(f);
}

inline std::string poly_to_string(const PolyQ& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (size_t i = p.c.size(); i-- > 0;) {
    if (p.c[i] == 0) continue;
    if (!s.empty()) s += (p.c[i] > 0 ? " + " : " - ");
    else if (p.c[i] < 0) s += "-";
    Rational a = rat_abs(p.c[i]);
    bool unit = (a == 1);
    if (i == 0 || !unit) s += rat_to_string(a);
    if (i > 0) {
      if (!unit) s += "*";
      s += "X";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

// Total order used for canonical representatives: degree, then coefficients
// from the constant term up.
inline bool poly_less(const PolyQ& a, const PolyQ& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
  }
  return false;
}

}  // namespace ellstab
