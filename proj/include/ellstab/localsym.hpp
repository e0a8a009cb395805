#pragma once

// Places of Q, normalized absolute values, Legendre and Hilbert symbols, the
// quadratic-extension sign characters, and the endoscopic sign factor built
// from them. Everything is exact; the p-adic cases go through unit residues.

#include "ellstab/classparam.hpp"
#include "ellstab/quadelem.hpp"

namespace ellstab {

struct PlaceQ {
  bool infinite = true;
  Int p = 0;  // meaningful when finite
};

inline PlaceQ place_infinite() { return {true, Int(0)}; }

inline PlaceQ place_finite(const Int& p) {
  if (!is_prime(p)) throw std::invalid_argument("place_finite: p must be prime");
  return {false, p};
}

inline Rational abs_norm(const Rational& x, const PlaceQ& v) {
  if (x == 0) throw std::invalid_argument("abs_norm: x must be nonzero");
  if (v.infinite) return rat_abs(x);
  return rat_pow(Rational(v.p), -val_p(x, v.p));
}

// prod over all places of |2|_v^{-t}; only the real place and p = 2
// contribute, and the two contributions cancel exactly.
inline Rational two_power_product(long t) {
  if (t < 0) throw std::invalid_argument("two_power_product: t must be nonnegative");
  return rat_pow(abs_norm(Rational(2), place_infinite()), -t) *
         rat_pow(abs_norm(Rational(2), place_finite(Int(2))), -t);
}

// The elementary-Weil-difference constant at the identity: |2|_F^{-n}.
inline Rational theta_minus_one(long n, const PlaceQ& v) {
  if (n < 0) throw std::invalid_argument("theta_minus_one: n must be nonnegative");
  return rat_pow(abs_norm(Rational(2), v), -n);
}

// Quadratic-residue symbol by Euler's criterion; 0 when p divides a.
inline int legendre(const Int& a, const Int& p) {
  if (p == 2 || !is_prime(p)) throw std::invalid_argument("legendre: p must be an odd prime");
  Int r = a % p;
  if (r < 0) r += p;
  if (r == 0) return 0;
  Int e = boost::multiprecision::powm(r, (p - 1) / 2, p);
  return e == 1 ? 1 : -1;
}

namespace detail {

// residue of a p-adic unit rational modulo m (m a power of the same p):
// numerator times denominator works because den^2 is a square unit and, for
// m = 8, den^{-1} = den on odd residues.
inline Int unit_residue(const Rational& u, const Int& m) {
  Int r = (rat_num(u) % m) * (rat_den(u) % m) % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace detail

// Hilbert symbol (a, b)_v: +1 iff z^2 = a x^2 + b y^2 has a nontrivial
// solution over the completion at v. Standard case analysis: sign test at the
// real place, valuation parity plus Legendre symbols at odd p, unit residues
// modulo 8 at p = 2.
inline int hilbert(const Rational& a, const Rational& b, const PlaceQ& v) {
  if (a == 0 || b == 0) throw std::invalid_argument("hilbert: arguments must be nonzero");
  if (v.infinite) return (a < 0 && b < 0) ? -1 : 1;
  const Int& p = v.p;
  long alpha = val_p(a, p), beta = val_p(b, p);
  Rational u = a / rat_pow(Rational(p), alpha);
  Rational w = b / rat_pow(Rational(p), beta);
  if (p != 2) {
    int sign = 1;
    if ((alpha % 2 != 0) && (beta % 2 != 0) && ((p - 1) / 2) % 2 != 0) sign = -sign;
    int lu = legendre(detail::unit_residue(u, p), p);
    int lw = legendre(detail::unit_residue(w, p), p);
    if (beta % 2 != 0) sign *= lu;
    if (alpha % 2 != 0) sign *= lw;
    return sign;
  }
  Int mu = detail::unit_residue(u, Int(8));
  Int mw = detail::unit_residue(w, Int(8));
  auto eps = [](const Int& m) { return m % 4 == 3 ? 1 : 0; };    // (m-1)/2 mod 2
  auto omega = [](const Int& m) { return (m == 3 || m == 5) ? 1 : 0; };  // (m^2-1)/8 mod 2
  long e = eps(mu) * eps(mw) + (alpha % 2) * omega(mw) + (beta % 2) * omega(mu);
  return e % 2 == 0 ? 1 : -1;
}

// Local character of Q(sqrt(d))/Q evaluated at x: the norm-class sign.
inline int sgn_quadext(const Int& d, const Rational& x, const PlaceQ& v) {
  if (d == 0 || d == 1 || !is_squarefree(d))
    throw std::invalid_argument("sgn_quadext: d must be a squarefree integer other than 0 and 1");
  if (x == 0) throw std::invalid_argument("sgn_quadext: x must be nonzero");
  return hilbert(Rational(d), x, v);
}

// ---- the endoscopic sign factor ----

struct SignFactorInput {
  bool split = false;  // split etale factors contribute +1
  Int d = 0;           // field factors: the quadratic label Q(sqrt(d))
  QuadElem a;          // norm-1 generator of the factor
};

inline QuadElem quad_pow(QuadElem base, unsigned long e) {
  QuadElem r(Rational(1));
  r.d = base.d;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

// Product over field-kind second-side factors of
//   sgn_{Q(sqrt d)/Q}( P(a) * (-a)^{-n'} * det ).
// The composite argument is fixed by the conjugation a -> 1/a, hence lands in
// Q; inputs violating norm(a) = 1 or the self-reciprocal shape of P are
// rejected because that rationality would fail.
inline int delta_zero(const PolyQ& gamma_prime_eigenpoly, const std::vector<SignFactorInput>& factors,
                      int nprime, const Rational& det_delta_prime_plus_one, const PlaceQ& v) {
  const PolyQ& P = gamma_prime_eigenpoly;
  if (nprime < 0) throw std::invalid_argument("delta_zero: nprime must be nonnegative");
  if (!P.is_monic() || P.degree() != 2L * nprime)
    throw std::invalid_argument("delta_zero: eigenvalue polynomial must be monic of degree 2*nprime");
  if (!is_self_reciprocal(P) || P.constant_term() != 1)
    throw std::invalid_argument("delta_zero: eigenvalue polynomial must be self-reciprocal with constant term 1");
  if (det_delta_prime_plus_one == 0)
    throw std::domain_error("delta_zero: degenerate input, det(delta' + 1) vanishes");
  int sign = 1;
  for (const auto& f : factors) {
    if (f.split) continue;
    if (f.d == 0 || f.d == 1 || !is_squarefree(f.d))
      throw std::invalid_argument("delta_zero: field factor needs a squarefree label other than 0 and 1");
    if (f.a.b == 0 || f.a.d != f.d)
      throw std::invalid_argument("delta_zero: factor value must generate Q(sqrt(d))");
    if (quad_norm(f.a) != 1)
      throw std::invalid_argument("delta_zero: factor value must have norm 1");
    QuadElem z = poly_eval(P, f.a);
    z = z * quad_pow(quad_inverse(-f.a), static_cast<unsigned long>(nprime));
    z = z * QuadElem(det_delta_prime_plus_one);
    if (!z.is_rational())
      throw std::logic_error("delta_zero: composite argument failed to be rational");
    if (z.a == 0) throw std::domain_error("delta_zero: degenerate input, zero argument");
    sign *= sgn_quadext(f.d, z.a, v);
  }
  return sign;
}

// (-1)^{q_1 - q_2} = e_1 / e_2 for externally supplied Kottwitz signs.
inline bool sign_ledger(const Rational& q1, const Rational& q2, int e1, int e2) {
  if ((e1 != 1 && e1 != -1) || (e2 != 1 && e2 != -1))
    throw std::invalid_argument("sign_ledger: signs must be +-1");
  Rational diff = q1 - q2;
  if (!is_integer(diff)) throw std::invalid_argument("sign_ledger: q1 - q2 must be integral");
  int lhs = rat_num(diff) % 2 == 0 ? 1 : -1;
  return lhs == e1 * e2;
}

// ---- derivation helpers for the sign factor ----

// Eigenvalue polynomial of the first component with one forced +1 removed:
// degree drops from 2n'+1 to 2n'.
inline PolyQ eigenpoly_without_forced_one(const SoClassParam& gp) {
  FactoredPoly fp = char_poly(gp);
  for (auto& [q, m] : fp)
    if (q == poly_x_minus(Rational(1))) {
      --m;
      break;
    }
  FactoredPoly kept;
  for (const auto& e : fp)
    if (e.second > 0) kept.push_back(e);
  return expand_factored(kept);
}

// det(delta' + 1) read off the characteristic polynomial at -1.
inline Rational det_plus_one(const SpClassParam& dp) {
  return poly_eval(expand_factored(char_poly(dp)), Rational(-1));
}

// Square-class data of a degree-2 self-reciprocal factor X^2 - 2sX + 1:
// the label d (squarefree part of s^2 - 1) and the norm-1 root s + t sqrt(d).
inline std::pair<Int, QuadElem> factor_to_quad(const PolyQ& f) {
  if (f.degree() != 2 || !f.is_monic() || !is_self_reciprocal(f))
    throw std::invalid_argument("factor_to_quad: need a monic self-reciprocal quadratic");
  Rational s = -f.coeff(1) / 2;
  Rational r = s * s - 1;
  if (r == 0) throw std::invalid_argument("factor_to_quad: factor vanishes at 1 or -1");
  Int nd = rat_num(r) * rat_den(r);  // square class of r
  Int d = 1;
  for (const auto& [q, e] : factorize(nd))
    if (e % 2 != 0) d *= q;
  if (nd < 0) d = -d;
  if (d == 1) throw std::invalid_argument("factor_to_quad: factor splits over Q");
  Rational tsq = r / Rational(d);
  Int tn = boost::multiprecision::sqrt(rat_num(tsq));
  Int td = boost::multiprecision::sqrt(rat_den(tsq));
  if (tn * tn != rat_num(tsq) || td * td != rat_den(tsq))
    throw std::logic_error("factor_to_quad: square-class reduction failed");
  return {d, QuadElem(s, Rational(tn, td), d)};
}

}  // namespace ellstab
