#pragma once

// Semisimple stable classes of Sp(2n) and SO(2k+1) given by factored
// eigenvalue data: a multiset of irreducible factors away from {+1, -1} plus
// the two eigenspace dimensions. Hermitian forms are deliberately not
// represented; this is exactly the stable-class granularity.

#include "ellstab/poly.hpp"
#include "ellstab/rootsys.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ellstab {

enum class FactorKind { field, split };

// kind=field: monic self-reciprocal irreducible of even degree.
// kind=split: the lex-smaller member of a reciprocal pair {p, p*}, p != p*.
struct UnitaryFactor {
  FactorKind kind;
  PolyQ poly;
  int rank;  // module rank over the etale factor

  bool operator==(const UnitaryFactor& o) const {
    return kind == o.kind && poly == o.poly && rank == o.rank;
  }
};

// Degree contributed to the characteristic polynomial: the split partner is
// implied, so split factors count twice.
inline long effective_degree(const UnitaryFactor& f) {
  return f.poly.degree() * (f.kind == FactorKind::split ? 2 : 1);
}

// Canonicalizes an eigenvalue factor: picks the reciprocal-pair representative
// and classifies field vs split. Does not merge multiplicities.
inline UnitaryFactor make_factor(const PolyQ& p, int rank) {
  if (!p.is_monic() || p.degree() < 1)
    throw std::invalid_argument("factor polynomial must be monic of degree >= 1");
  if (poly_eval(p, Rational(1)) == 0 || poly_eval(p, Rational(-1)) == 0)
    throw std::invalid_argument("factor polynomial must not vanish at 1 or -1");
  if (p.constant_term() == 0)
    throw std::invalid_argument("factor polynomial must have nonzero constant term");
  if (rank < 1) throw std::invalid_argument("factor rank must be >= 1");
  PolyQ rec = poly_reciprocal(p);
  if (rec == p) return {FactorKind::field, p, rank};
  return {FactorKind::split, poly_less(p, rec) ? p : rec, rank};
}

inline bool factor_less(const UnitaryFactor& a, const UnitaryFactor& b) {
  if (a.poly != b.poly) return poly_less(a.poly, b.poly);
  if (a.kind != b.kind) return a.kind == FactorKind::field;
  return a.rank < b.rank;
}

inline void sort_factors(std::vector<UnitaryFactor>& fs) {
  std::sort(fs.begin(), fs.end(), factor_less);
}

struct SpClassParam {
  int n = 0;
  std::vector<UnitaryFactor> factors;
  long dim_plus = 0;   // multiplicity of eigenvalue +1
  long dim_minus = 0;  // multiplicity of eigenvalue -1

  bool operator==(const SpClassParam& o) const {
    return n == o.n && factors == o.factors && dim_plus == o.dim_plus && dim_minus == o.dim_minus;
  }
};

struct SoClassParam {
  int size = 1;  // 2k+1
  std::vector<UnitaryFactor> factors;
  long dim_plus = 1;
  long dim_minus = 0;

  bool operator==(const SoClassParam& o) const {
    return size == o.size && factors == o.factors && dim_plus == o.dim_plus &&
           dim_minus == o.dim_minus;
  }
};

struct ValidationReport {
  bool valid = true;
  std::vector<std::string> violations;
  std::vector<std::string> warnings;

  void violation(std::string m) {
    valid = false;
    violations.push_back(std::move(m));
  }
};

namespace detail {

inline void check_factors(const std::vector<UnitaryFactor>& fs, ValidationReport& rep) {
  for (const auto& f : fs) {
    // tag is built lazily so the all-valid hot path stays allocation-free
    auto tag = [&f] { return "factor " + poly_to_string(f.poly); };
    if (!f.poly.is_monic() || f.poly.degree() < 1) {
      rep.violation(tag() + ": not monic of degree >= 1");
      continue;
    }
    if (f.poly.constant_term() == 0) {
      rep.violation(tag() + ": zero constant term");
      continue;
    }
    if (poly_eval(f.poly, Rational(1)) == 0 || poly_eval(f.poly, Rational(-1)) == 0)
      rep.violation(tag() + ": vanishes at 1 or -1");
    if (f.rank < 1) rep.violation(tag() + ": rank must be >= 1");
    bool selfrec = is_self_reciprocal(f.poly);
    if (f.kind == FactorKind::field) {
      if (!selfrec) rep.violation(tag() + ": field kind requires a self-reciprocal polynomial");
      if (f.poly.degree() % 2 != 0) rep.violation(tag() + ": field kind requires even degree");
    } else {
      if (selfrec) rep.violation(tag() + ": split kind requires p distinct from its reciprocal");
      else if (poly_less(poly_reciprocal(f.poly), f.poly))
        rep.violation(tag() + ": split factor must store the smaller reciprocal representative");
    }
    switch (is_irreducible_q(f.poly)) {
      case Verdict::yes: break;
      case Verdict::no: rep.violation(tag() + ": reducible over Q"); break;
      case Verdict::unknown:
        rep.warnings.push_back(tag() + ": irreducibility not decided, treating as caller-certified");
        break;
    }
  }
  for (size_t i = 0; i < fs.size(); ++i)
    for (size_t j = i + 1; j < fs.size(); ++j)
      if (fs[i].poly == fs[j].poly)
        rep.violation("factor " + poly_to_string(fs[i].poly) +
                      ": duplicate entry, multiplicity belongs in the rank");
}

}  // namespace detail

inline ValidationReport validate_sp(const SpClassParam& p) {
  ValidationReport rep;
  if (p.n < 0) rep.violation("n must be nonnegative");
  if (p.dim_plus < 0 || p.dim_plus % 2 != 0) rep.violation("dim_plus must be nonnegative even");
  if (p.dim_minus < 0 || p.dim_minus % 2 != 0) rep.violation("dim_minus must be nonnegative even");
  detail::check_factors(p.factors, rep);
  long total = p.dim_plus + p.dim_minus;
  for (const auto& f : p.factors) total += effective_degree(f) * f.rank;
  if (total != 2L * p.n)
    rep.violation("degrees sum to " + std::to_string(total) + ", expected " +
                  std::to_string(2L * p.n));
  return rep;
}

inline ValidationReport validate_so(const SoClassParam& p) {
  ValidationReport rep;
  if (p.size < 1 || p.size % 2 == 0) rep.violation("size must be odd and positive");
  if (p.dim_plus < 1 || p.dim_plus % 2 == 0) rep.violation("dim_plus must be odd and positive");
  if (p.dim_minus < 0 || p.dim_minus % 2 != 0) rep.violation("dim_minus must be nonnegative even");
  detail::check_factors(p.factors, rep);
  long total = p.dim_plus + p.dim_minus;
  for (const auto& f : p.factors) total += effective_degree(f) * f.rank;
  if (total != p.size)
    rep.violation("degrees sum to " + std::to_string(total) + ", expected " +
                  std::to_string(p.size));
  return rep;
}

inline void require_valid(const ValidationReport& rep, const char* who) {
  if (rep.valid) return;
  std::string msg = std::string(who) + ": invalid class parameter";
  for (const auto& v : rep.violations) msg += "; " + v;
  throw std::invalid_argument(msg);
}

// ---- characteristic polynomial as a factored multiset ----

using FactoredPoly = std::vector<std::pair<PolyQ, long>>;

namespace detail {

inline void push_factor(FactoredPoly& out, const PolyQ& p, long mult) {
  for (auto& [q, m] : out)
    if (q == p) {
      m += mult;
      return;
    }
  out.emplace_back(p, mult);
}

inline FactoredPoly char_poly_impl(const std::vector<UnitaryFactor>& fs, long plus, long minus) {
  FactoredPoly out;
  for (const auto& f : fs) {
    push_factor(out, f.poly, f.rank);
    if (f.kind == FactorKind::split) push_factor(out, poly_reciprocal(f.poly), f.rank);
  }
  if (plus > 0) push_factor(out, poly_x_minus(Rational(1)), plus);
  if (minus > 0) push_factor(out, poly_x_minus(Rational(-1)), minus);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
  return out;
}

}  // namespace detail

inline FactoredPoly char_poly(const SpClassParam& p) {
  require_valid(validate_sp(p), "char_poly");
  return detail::char_poly_impl(p.factors, p.dim_plus, p.dim_minus);
}

inline FactoredPoly char_poly(const SoClassParam& p) {
  require_valid(validate_so(p), "char_poly");
  return detail::char_poly_impl(p.factors, p.dim_plus, p.dim_minus);
}

inline PolyQ expand_factored(const FactoredPoly& fp) {
  PolyQ prod({Rational(1)});
  for (const auto& [p, m] : fp)
    for (long i = 0; i < m; ++i) prod = poly_mul(prod, p);
  return prod;
}

// Rebuilds class parameters from a factored characteristic polynomial by
// grouping reciprocal pairs and the powers of X -+ 1.

inline std::vector<UnitaryFactor> factors_from_char_poly(FactoredPoly fp, long& plus, long& minus) {
  plus = minus = 0;
  std::vector<UnitaryFactor> fs;
  std::vector<bool> used(fp.size(), false);
  for (size_t i = 0; i < fp.size(); ++i) {
    if (used[i]) continue;
    const auto& [p, m] = fp[i];
    if (p == poly_x_minus(Rational(1))) {
      plus += m;
      continue;
    }
    if (p == poly_x_minus(Rational(-1))) {
      minus += m;
      continue;
    }
    PolyQ rec = poly_reciprocal(p);
    if (rec == p) {
      fs.push_back(make_factor(p, static_cast<int>(m)));
      continue;
    }
    bool paired = false;
    for (size_t j = i + 1; j < fp.size(); ++j) {
      if (used[j] || fp[j].first != rec) continue;
      if (fp[j].second != m)
        throw std::invalid_argument("reciprocal pair with mismatched multiplicities");
      used[j] = true;
      paired = true;
      break;
    }
    if (!paired) throw std::invalid_argument("split factor without its reciprocal partner: " +
                                             poly_to_string(p));
    fs.push_back(make_factor(p, static_cast<int>(m)));
  }
  sort_factors(fs);
  return fs;
}

inline SpClassParam sp_from_char_poly(const FactoredPoly& fp) {
  SpClassParam out;
  out.factors = factors_from_char_poly(fp, out.dim_plus, out.dim_minus);
  long total = out.dim_plus + out.dim_minus;
  for (const auto& f : out.factors) total += effective_degree(f) * f.rank;
  if (total % 2 != 0) throw std::invalid_argument("characteristic polynomial of odd degree");
  out.n = static_cast<int>(total / 2);
  require_valid(validate_sp(out), "sp_from_char_poly");
  return out;
}

inline SoClassParam so_from_char_poly(const FactoredPoly& fp) {
  SoClassParam out;
  out.factors = factors_from_char_poly(fp, out.dim_plus, out.dim_minus);
  long total = out.dim_plus + out.dim_minus;
  for (const auto& f : out.factors) total += effective_degree(f) * f.rank;
  out.size = static_cast<int>(total);
  require_valid(validate_so(out), "so_from_char_poly");
  return out;
}

// ---- commutant shapes ----

struct Atom {
  AtomKind kind;
  int size;    // displayed size: 2a for Sp, 2k+1 for SO_odd, m for GL/U
  PolyQ base;  // defining polynomial of the base field for GL/U, empty for Sp/SO

  bool operator==(const Atom& o) const { return kind == o.kind && size == o.size && base == o.base; }
};

struct GroupShape {
  std::vector<Atom> atoms;
  bool so_minus_caveat = false;  // SO commutant with dim_minus > 0: identity
                                 // component bookkeeping is not exact
  long so_minus_dim = 0;         // dimension of the flagged orthogonal block

  bool operator==(const GroupShape& o) const {
    return atoms == o.atoms && so_minus_caveat == o.so_minus_caveat &&
           so_minus_dim == o.so_minus_dim;
  }
};

// Minimal polynomial of x + 1/x on a self-reciprocal factor of degree 2d,
// via the Chebyshev-style recurrence e_k(y) = x^k + x^{-k}.
inline PolyQ ksharp_minpoly(const PolyQ& p) {
  if (!is_self_reciprocal(p) || p.degree() % 2 != 0)
    throw std::invalid_argument("ksharp_minpoly: need a self-reciprocal polynomial of even degree");
  long d = p.degree() / 2;
  PolyQ e_prev({Rational(2)});            // e_0 = 2
  PolyQ e_cur({Rational(0), Rational(1)});  // e_1 = y
  PolyQ y = e_cur;
  PolyQ q({p.coeff(static_cast<size_t>(d))});
  for (long k = 1; k <= d; ++k) {
    q = poly_add(q, poly_scale(e_cur, p.coeff(static_cast<size_t>(d + k))));
    PolyQ e_next = poly_sub(poly_mul(y, e_cur), e_prev);
    e_prev = e_cur;
    e_cur = e_next;
  }
  return q;
}

inline std::vector<Atom> unitary_atoms(const std::vector<UnitaryFactor>& fs) {
  std::vector<Atom> out;
  for (const auto& f : fs) {
    if (f.kind == FactorKind::field)
      out.push_back({AtomKind::U, f.rank, ksharp_minpoly(f.poly)});
    else
      out.push_back({AtomKind::GL, f.rank, f.poly});
  }
  return out;
}

inline GroupShape commutant_shape_sp(const SpClassParam& p) {
  require_valid(validate_sp(p), "commutant_shape_sp");
  GroupShape shape;
  auto sorted = p.factors;
  sort_factors(sorted);
  shape.atoms = unitary_atoms(sorted);
  if (p.dim_plus > 0) shape.atoms.push_back({AtomKind::Sp, static_cast<int>(p.dim_plus), PolyQ()});
  if (p.dim_minus > 0) shape.atoms.push_back({AtomKind::Sp, static_cast<int>(p.dim_minus), PolyQ()});
  return shape;
}

inline GroupShape commutant_shape_so(const SoClassParam& p) {
  require_valid(validate_so(p), "commutant_shape_so");
  GroupShape shape;
  auto sorted = p.factors;
  sort_factors(sorted);
  shape.atoms = unitary_atoms(sorted);
  if (p.dim_plus > 1)
    shape.atoms.push_back({AtomKind::SO_odd, static_cast<int>(p.dim_plus), PolyQ()});
  if (p.dim_minus > 0) {
    shape.so_minus_caveat = true;
    shape.so_minus_dim = p.dim_minus;
  }
  return shape;
}

// Dimension of the shape as a group over Q: restriction of scalars multiplies
// GL/U atom dimensions by the base-field degree. The flagged orthogonal block
// contributes m(m-1)/2.
inline Int shape_dim(const GroupShape& s) {
  Int total = 0;
  for (const auto& a : s.atoms) {
    int param = a.size;
    if (a.kind == AtomKind::Sp) param = a.size / 2;
    if (a.kind == AtomKind::SO_odd) param = (a.size - 1) / 2;
    Int d = dim_and_q(a.kind, param, QContext::compact).first;
    Int basedeg = a.base.is_zero() ? Int(1) : Int(a.base.degree());
    total += basedeg * d;
  }
  total += Int(s.so_minus_dim) * Int(s.so_minus_dim - 1) / 2;
  return total;
}

// Independent centralizer-dimension count from eigenvalue multiplicities:
// each inverse-closed eigenvalue orbit away from +-1 contributes a general
// linear block per conjugate pair, the +-1 eigenspaces contribute their
// isometry groups.
inline Int centralizer_dim_from_multiplicities(const std::vector<UnitaryFactor>& fs, long plus,
                                               long minus, bool orthogonal) {
  Int total = 0;
  for (const auto& f : fs) {
    long pairs = f.kind == FactorKind::field ? f.poly.degree() / 2 : f.poly.degree();
    total += Int(pairs) * Int(f.rank) * Int(f.rank);
  }
  if (orthogonal) {
    total += Int(plus) * Int(plus - 1) / 2;
    total += Int(minus) * Int(minus - 1) / 2;
  } else {
    total += Int(plus) * Int(plus + 1) / 2;
    total += Int(minus) * Int(minus + 1) / 2;
  }
  return total;
}

enum class UnipotentClass { identity };

// dim G - dim G_u, the homogeneity degree of the germ at u; only the identity
// class is in scope, where the centralizer is everything.
inline int germ_exponent(const GroupShape&, UnipotentClass u) {
  if (u != UnipotentClass::identity)
    throw std::invalid_argument("germ_exponent: only the identity class is supported");
  return 0;
}

}  // namespace ellstab
