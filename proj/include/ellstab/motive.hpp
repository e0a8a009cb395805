#pragma once

// Tate-twist multisets attached to the groups in scope, their local L-values
// at good nonarchimedean places, and finite-field point counts that pin the
// nonramified-measure identity down exactly.

#include "ellstab/endoscopy.hpp"

namespace ellstab {

// Either an explicit twist Q(-e) with trivial Artin mark, or an opaque
// inner-form label for a GL/U atom. Labels are keyed by the kind-neutralized
// shape (the size) plus the presentation-canonicalized base polynomial, which
// is exactly the granularity the inner-form equality argument uses.
struct MotiveSummand {
  int exponent = 0;  // > 0 for explicit twists
  bool opaque = false;
  int label_size = 0;
  PolyQ label_base;

  bool operator==(const MotiveSummand& o) const {
    return exponent == o.exponent && opaque == o.opaque && label_size == o.label_size &&
           label_base == o.label_base;
  }
};

struct TateMotive {
  std::vector<MotiveSummand> summands;  // kept in canonical order
};

namespace detail {

inline bool summand_less(const MotiveSummand& a, const MotiveSummand& b) {
  if (a.opaque != b.opaque) return !a.opaque;
  if (a.exponent != b.exponent) return a.exponent < b.exponent;
  if (a.label_size != b.label_size) return a.label_size < b.label_size;
  return poly_less(a.label_base, b.label_base);
}

}  // namespace detail

inline void canonicalize(TateMotive& m) {
  std::sort(m.summands.begin(), m.summands.end(), detail::summand_less);
}

// Sp(2m) and SO(2m+1) contribute the twists {1, 3, ..., 2m-1}; GL/U atoms
// contribute one opaque label each.
inline TateMotive motive_of_shape(const GroupShape& s) {
  if (s.so_minus_caveat)
    throw std::invalid_argument("motive_of_shape: flagged orthogonal blocks are unsupported");
  TateMotive m;
  for (const auto& a : s.atoms) {
    if (a.kind == AtomKind::Sp || a.kind == AtomKind::SO_odd) {
      int half = a.kind == AtomKind::Sp ? a.size / 2 : (a.size - 1) / 2;
      for (int e = 1; e <= 2 * half - 1; e += 2) m.summands.push_back({e, false, 0, PolyQ()});
    } else {
      m.summands.push_back({0, true, a.size, atom_base_canonical(a.kind, a.base)});
    }
  }
  canonicalize(m);
  return m;
}

inline bool motive_equal(const TateMotive& a, const TateMotive& b) {
  TateMotive x = a, y = b;
  canonicalize(x);
  canonicalize(y);
  return x.summands == y.summands;
}

inline bool is_prime_power(const Int& q) {
  return q >= 2 && factorize(q).size() == 1;
}

// Local value of L(M^v(1)) at residue cardinality q: prod (1 - q^{-(e+1)})^{-1}.
inline Rational local_L_dual1(const TateMotive& m, const Int& q) {
  if (!is_prime_power(q)) throw std::invalid_argument("local_L_dual1: q must be a prime power");
  Rational prod = 1;
  for (const auto& s : m.summands) {
    if (s.opaque)
      throw std::invalid_argument("local_L_dual1: opaque summands have no explicit L-factor");
    Int qe = int_pow(q, static_cast<unsigned long>(s.exponent + 1));
    prod *= Rational(qe) / Rational(qe - 1);
  }
  return prod;
}

// |Sp(2n, F_q)| = |SO(2n+1, F_q)| = q^{n^2} prod_{i=1}^n (q^{2i} - 1).
inline Int point_count(AtomKind kind, int n, const Int& q) {
  if (kind != AtomKind::Sp && kind != AtomKind::SO_odd)
    throw std::invalid_argument("point_count: only Sp and SO_odd are supported");
  if (n < 0) throw std::invalid_argument("point_count: negative rank");
  if (q % 2 == 0 || !is_prime_power(q))
    throw std::invalid_argument("point_count: q must be an odd prime power");
  Int v = int_pow(q, static_cast<unsigned long>(n) * static_cast<unsigned long>(n));
  for (int i = 1; i <= n; ++i) v *= int_pow(q, 2 * static_cast<unsigned long>(i)) - 1;
  return v;
}

}  // namespace ellstab
