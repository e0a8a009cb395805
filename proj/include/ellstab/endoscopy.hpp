#pragma once

// Elliptic endoscopic data for Sp(2n): the class correspondence with fusion,
// equi-singularity, fibers, kappa characters, the (delta, kappa) <-> (n', n'',
// gamma) bijection, and the stabilization coefficients.
//
// Eigenvalue convention: gamma' contributes its eigenvalues unchanged, gamma''
// contributes them negated; the +1 eigenspaces of the two SO sides lose one
// dimension each when they land in the symplectic space.

#include "ellstab/classparam.hpp"

#include <set>
#include <string>
#include <vector>

namespace ellstab {

struct EndoDatum {
  int nprime = 0;
  int nsecond = 0;  // ordered pair: (n', n'') and (n'', n') are different data

  bool operator==(const EndoDatum& o) const {
    return nprime == o.nprime && nsecond == o.nsecond;
  }
};

inline std::vector<EndoDatum> enumerate_endo_data(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_endo_data: n must be nonnegative");
  std::vector<EndoDatum> out;
  for (int k = n; k >= 0; --k) out.push_back({k, n - k});
  return out;
}

// The endoscopic group SO(2n'+1) x SO(2n''+1) itself, trivial atoms included.
inline GroupShape endo_group_shape(const EndoDatum& d) {
  GroupShape s;
  s.atoms.push_back({AtomKind::SO_odd, 2 * d.nprime + 1, PolyQ()});
  s.atoms.push_back({AtomKind::SO_odd, 2 * d.nsecond + 1, PolyQ()});
  return s;
}

namespace detail {

// A field-kind factor keeps its kind under the sign flip: the flip permutes
// roots, fixes none (roots avoid +-1 is not enough, but inverse-closedness is
// carried to the negated root set), and preserves irreducibility.
inline UnitaryFactor flip_factor(const UnitaryFactor& f) {
  UnitaryFactor g = make_factor(poly_neg_arg(f.poly), f.rank);
  if (g.kind != f.kind)
    throw std::logic_error("sign flip changed the field/split kind of a factor");
  return g;
}

inline void merge_factor(std::vector<UnitaryFactor>& fs, const UnitaryFactor& f) {
  for (auto& g : fs)
    if (g.poly == f.poly) {
      g.rank += f.rank;
      return;
    }
  fs.push_back(f);
}

}  // namespace detail

// The Sp(2n)-side stable class matched with (gamma', gamma''): factors of
// gamma' joined with the sign-flipped factors of gamma'' (fusion merges equal
// ones), eigenspace dimensions per
//   dim W_+ = dim V'_+ + dim V''_- - 1,  dim W_- = dim V'_- + dim V''_+ - 1.
inline SpClassParam correspond(const SoClassParam& gp, const SoClassParam& gs) {
  require_valid(validate_so(gp), "correspond (first component)");
  require_valid(validate_so(gs), "correspond (second component)");
  SpClassParam delta;
  for (const auto& f : gp.factors) detail::merge_factor(delta.factors, make_factor(f.poly, f.rank));
  for (const auto& f : gs.factors) detail::merge_factor(delta.factors, detail::flip_factor(f));
  sort_factors(delta.factors);
  delta.dim_plus = gp.dim_plus + gs.dim_minus - 1;
  delta.dim_minus = gp.dim_minus + gs.dim_plus - 1;
  if (delta.dim_plus < 0 || delta.dim_minus < 0 || delta.dim_plus % 2 != 0 ||
      delta.dim_minus % 2 != 0)
    throw std::domain_error("correspond: no symplectic class matches these eigenspace dimensions");
  delta.n = (gp.size + gs.size - 2) / 2;
  require_valid(validate_sp(delta), "correspond (result)");
  return delta;
}

struct EquiSingCheck {
  bool value = true;
  std::vector<std::string> witnesses;  // colliding factors or nonzero minus parts
};

inline EquiSingCheck is_equi_singular(const SoClassParam& gp, const SoClassParam& gs) {
  require_valid(validate_so(gp), "is_equi_singular (first component)");
  require_valid(validate_so(gs), "is_equi_singular (second component)");
  EquiSingCheck out;
  if (gp.dim_minus != 0) {
    out.value = false;
    out.witnesses.push_back("first component has eigenvalue -1 (dim_minus = " +
                            std::to_string(gp.dim_minus) + ")");
  }
  if (gs.dim_minus != 0) {
    out.value = false;
    out.witnesses.push_back("second component has eigenvalue -1 (dim_minus = " +
                            std::to_string(gs.dim_minus) + ")");
  }
  for (const auto& f : gp.factors)
    for (const auto& g : gs.factors)
      if (make_factor(f.poly, 1).poly == detail::flip_factor({g.kind, g.poly, 1}).poly) {
        out.value = false;
        out.witnesses.push_back("fusion at factor " + poly_to_string(f.poly));
      }
  return out;
}

// A matched (gamma', gamma'', delta) triple with the factor split
// I = I' \sqcup I'' recorded as indices into delta.factors (canonical order).
struct EquiSingPair {
  EndoDatum datum;
  SoClassParam gamma_prime;
  SoClassParam gamma_second;
  SpClassParam delta;
  std::vector<size_t> iprime;
  std::vector<size_t> isecond;
};

inline EquiSingPair build_pair(const EndoDatum& d, const SoClassParam& gp,
                               const SoClassParam& gs) {
  if (gp.size != 2 * d.nprime + 1 || gs.size != 2 * d.nsecond + 1)
    throw std::invalid_argument("build_pair: component sizes do not match the datum");
  EquiSingCheck chk = is_equi_singular(gp, gs);
  if (!chk.value) {
    std::string msg = "build_pair: not equi-singular";
    for (const auto& w : chk.witnesses) msg += "; " + w;
    throw std::domain_error(msg);
  }
  EquiSingPair pair;
  pair.datum = d;
  pair.gamma_prime = gp;
  pair.gamma_second = gs;
  sort_factors(pair.gamma_prime.factors);
  sort_factors(pair.gamma_second.factors);
  pair.delta = correspond(gp, gs);
  for (size_t i = 0; i < pair.delta.factors.size(); ++i) {
    bool from_prime = false;
    for (const auto& f : pair.gamma_prime.factors)
      if (make_factor(f.poly, 1).poly == pair.delta.factors[i].poly) from_prime = true;
    if (from_prime)
      pair.iprime.push_back(i);
    else
      pair.isecond.push_back(i);
  }
  return pair;
}

inline ValidationReport validate_pair(const EquiSingPair& pair) {
  ValidationReport rep;
  auto sorted = [](const std::vector<UnitaryFactor>& fs) {
    return std::is_sorted(fs.begin(), fs.end(), factor_less);
  };
  if (!sorted(pair.delta.factors) || !sorted(pair.gamma_prime.factors) ||
      !sorted(pair.gamma_second.factors))
    rep.violation("factor lists must be in canonical order");
  if (pair.datum.nprime < 0 || pair.datum.nsecond < 0) rep.violation("negative datum entry");
  if (pair.gamma_prime.size != 2 * pair.datum.nprime + 1)
    rep.violation("first component size does not match the datum");
  if (pair.gamma_second.size != 2 * pair.datum.nsecond + 1)
    rep.violation("second component size does not match the datum");
  auto rp = validate_so(pair.gamma_prime);
  auto rs = validate_so(pair.gamma_second);
  for (const auto& v : rp.violations) rep.violation("first component: " + v);
  for (const auto& v : rs.violations) rep.violation("second component: " + v);
  if (!rep.valid) return rep;
  EquiSingCheck chk = is_equi_singular(pair.gamma_prime, pair.gamma_second);
  if (!chk.value)
    for (const auto& w : chk.witnesses) rep.violation(w);
  if (!rep.valid) return rep;
  EquiSingPair rebuilt = build_pair(pair.datum, pair.gamma_prime, pair.gamma_second);
  if (!(rebuilt.delta == pair.delta)) rep.violation("delta does not correspond to gamma");
  if (rebuilt.iprime != pair.iprime || rebuilt.isecond != pair.isecond)
    rep.violation("factor split does not match the correspondence");
  return rep;
}

// t = half the total multiplicity of the eigenvalues +-1 of delta; the two
// expressions must agree for every equi-singular pair.
inline long t_value(const EquiSingPair& pair) {
  require_valid(validate_pair(pair), "t_value");
  long from_gamma = (pair.gamma_prime.dim_plus + pair.gamma_second.dim_plus - 2) / 2;
  long from_delta = (pair.delta.dim_plus + pair.delta.dim_minus) / 2;
  if (from_gamma != from_delta)
    throw std::logic_error("t_value: the two defining expressions disagree");
  return from_delta;
}

// Character on {+-1}^{s'} x {+-1}^{s''}: trivial on the first block, product
// of all coordinates on the second.
struct KappaCharacter {
  int sprime = 0;
  int ssecond = 0;
};

inline KappaCharacter kappa_of(const EquiSingPair& pair) {
  require_valid(validate_pair(pair), "kappa_of");
  KappaCharacter k;
  for (size_t i : pair.iprime)
    if (pair.delta.factors[i].kind == FactorKind::field) ++k.sprime;
  for (size_t i : pair.isecond)
    if (pair.delta.factors[i].kind == FactorKind::field) ++k.ssecond;
  return k;
}

inline int kappa_eval(const KappaCharacter& k, const std::vector<int>& x,
                      const std::vector<int>& y) {
  if (static_cast<int>(x.size()) != k.sprime || static_cast<int>(y.size()) != k.ssecond)
    throw std::invalid_argument("kappa_eval: block sizes do not match the character");
  int v = 1;
  for (int c : x)
    if (c != 1 && c != -1) throw std::invalid_argument("kappa_eval: entries must be +-1");
  for (int c : y) {
    if (c != 1 && c != -1) throw std::invalid_argument("kappa_eval: entries must be +-1");
    v *= c;
  }
  return v;
}

inline bool is_elliptic(const SpClassParam& delta) {
  for (const auto& f : delta.factors)
    if (f.kind == FactorKind::split) return false;
  return true;
}

// ---- the bijection (delta, I'') <-> (n', n'', gamma) ----

struct BijectionInput {
  SpClassParam delta;                // factors interpreted in canonical order
  std::vector<size_t> isecond;       // field-kind factor indices sent to I''
  std::vector<size_t> gl_second;     // split-kind factor indices sent to I''
};

struct BijectionImage {
  EquiSingPair pair;
  bool elliptic;  // split factors present make delta non-elliptic
};

inline BijectionImage bijection_forward(const BijectionInput& in) {
  SpClassParam delta = in.delta;
  sort_factors(delta.factors);
  require_valid(validate_sp(delta), "bijection_forward");
  std::vector<bool> second(delta.factors.size(), false);
  for (size_t i : in.isecond) {
    if (i >= delta.factors.size() || delta.factors[i].kind != FactorKind::field)
      throw std::invalid_argument("bijection_forward: isecond must index field-kind factors");
    second[i] = true;
  }
  for (size_t i : in.gl_second) {
    if (i >= delta.factors.size() || delta.factors[i].kind != FactorKind::split)
      throw std::invalid_argument("bijection_forward: gl_second must index split-kind factors");
    second[i] = true;
  }
  long wk_prime = 0, wk_second = 0;
  SoClassParam gp, gs;
  for (size_t i = 0; i < delta.factors.size(); ++i) {
    const auto& f = delta.factors[i];
    if (second[i]) {
      wk_second += effective_degree(f) * f.rank;
      gs.factors.push_back(detail::flip_factor(f));
    } else {
      wk_prime += effective_degree(f) * f.rank;
      gp.factors.push_back(f);
    }
  }
  sort_factors(gs.factors);
  long nprime2 = wk_prime + delta.dim_plus;   // 2n'
  long nsecond2 = wk_second + delta.dim_minus;  // 2n''
  if (nprime2 % 2 != 0 || nsecond2 % 2 != 0)
    throw std::domain_error("bijection_forward: infeasible parity");
  gp.size = static_cast<int>(nprime2 + 1);
  gp.dim_plus = delta.dim_plus + 1;
  gp.dim_minus = 0;
  gs.size = static_cast<int>(nsecond2 + 1);
  gs.dim_plus = delta.dim_minus + 1;
  gs.dim_minus = 0;
  EndoDatum d{static_cast<int>(nprime2 / 2), static_cast<int>(nsecond2 / 2)};
  BijectionImage out{build_pair(d, gp, gs), is_elliptic(delta)};
  if (!(out.pair.delta == delta))
    throw std::logic_error("bijection_forward: image does not correspond back to delta");
  return out;
}

inline BijectionInput bijection_inverse(const EquiSingPair& pair) {
  require_valid(validate_pair(pair), "bijection_inverse");
  BijectionInput out;
  out.delta = pair.delta;
  for (size_t i : pair.isecond) {
    if (pair.delta.factors[i].kind == FactorKind::field)
      out.isecond.push_back(i);
    else
      out.gl_second.push_back(i);
  }
  return out;
}

// ---- fibers of the correspondence ----

namespace detail {

inline bool so_pair_less(const std::pair<SoClassParam, SoClassParam>& a,
                         const std::pair<SoClassParam, SoClassParam>& b) {
  auto key = [](const SoClassParam& p) {
    std::string s = std::to_string(p.size) + "|" + std::to_string(p.dim_plus) + "|" +
                    std::to_string(p.dim_minus);
    for (const auto& f : p.factors)
      s += "|" + poly_to_string(f.poly) + "^" + std::to_string(f.rank);
    return s;
  };
  std::string ka = key(a.first) + "#" + key(a.second);
  std::string kb = key(b.first) + "#" + key(b.second);
  return ka < kb;
}

}  // namespace detail

// All (gamma', gamma'') mapping to delta under the given datum: every split of
// each factor's rank across the two sides, against every parity-feasible split
// of the eigenspace dimensions.
inline std::vector<std::pair<SoClassParam, SoClassParam>> fiber(const SpClassParam& delta_in,
                                                                const EndoDatum& d) {
  SpClassParam delta = delta_in;
  sort_factors(delta.factors);
  require_valid(validate_sp(delta), "fiber");
  if (d.nprime < 0 || d.nsecond < 0 || d.nprime + d.nsecond != delta.n)
    throw std::invalid_argument("fiber: datum does not match the rank of delta");
  std::vector<std::pair<SoClassParam, SoClassParam>> out;
  size_t nf = delta.factors.size();
  std::vector<int> assign(nf, 0);  // rank sent to the gamma' side
  auto emit = [&]() {
    for (long vsm = 0; vsm <= delta.dim_plus; vsm += 2) {      // dim V''_-
      long vpp = delta.dim_plus + 1 - vsm;                     // dim V'_+
      for (long vpm = 0; vpm <= delta.dim_minus; vpm += 2) {   // dim V'_-
        long vsp = delta.dim_minus + 1 - vpm;                  // dim V''_+
        SoClassParam gp, gs;
        gp.dim_plus = vpp;
        gp.dim_minus = vpm;
        gs.dim_plus = vsp;
        gs.dim_minus = vsm;
        long szp = vpp + vpm, szs = vsp + vsm;
        for (size_t i = 0; i < nf; ++i) {
          const auto& f = delta.factors[i];
          if (assign[i] > 0) {
            gp.factors.push_back(make_factor(f.poly, assign[i]));
            szp += effective_degree(f) * assign[i];
          }
          if (assign[i] < f.rank) {
            gs.factors.push_back(detail::flip_factor({f.kind, f.poly, f.rank - assign[i]}));
            szs += effective_degree(f) * (f.rank - assign[i]);
          }
        }
        if (szp != 2L * d.nprime + 1 || szs != 2L * d.nsecond + 1) continue;
        gp.size = static_cast<int>(szp);
        gs.size = static_cast<int>(szs);
        sort_factors(gp.factors);
        sort_factors(gs.factors);
        if (!validate_so(gp).valid || !validate_so(gs).valid) continue;
        out.emplace_back(gp, gs);
      }
    }
  };
  // enumerate rank assignments
  size_t idx = 0;
  while (true) {
    emit();
    while (idx < nf && assign[idx] == delta.factors[idx].rank) {
      assign[idx] = 0;
      ++idx;
    }
    if (idx == nf) break;
    ++assign[idx];
    idx = 0;
  }
  std::sort(out.begin(), out.end(), detail::so_pair_less);
  out.erase(std::unique(out.begin(), out.end(),
                        [](const auto& a, const auto& b) {
                          return a.first == b.first && a.second == b.second;
                        }),
            out.end());
  return out;
}

// ---- commutant pairing across an equi-singular pair ----

// Presentation-independent base label. The delta side generates the same
// field from negated eigenvalues, so U bases agree up to the sign flip of the
// variable; GL bases additionally identify a polynomial with its reciprocal,
// since either member of the split pair presents the base field.
inline PolyQ atom_base_canonical(AtomKind kind, const PolyQ& base) {
  if (base.is_zero()) return base;
  PolyQ best = base;
  auto consider = [&](const PolyQ& q) {
    if (poly_less(q, best)) best = q;
  };
  PolyQ neg = poly_neg_arg(base);
  consider(neg);
  if (kind == AtomKind::GL) {
    consider(poly_reciprocal(base));
    consider(poly_reciprocal(neg));
  }
  return best;
}

struct AtomPairing {
  Atom g_atom;
  Atom h_atom;
  bool inner_form;  // true: matched unitary/GL atoms; false: Sp <-> SO_odd pair
};

struct CommutantPair {
  GroupShape g_shape;  // centralizer of delta in Sp(2n)
  GroupShape h_shape;  // centralizer of gamma in SO x SO, components concatenated
  std::vector<AtomPairing> pairs;
  long w_plus = 0, v_prime_plus = 0;   // dim V'_+ = dim W_+ + 1
  long w_minus = 0, v_second_plus = 0;  // dim V''_+ = dim W_- + 1
};

inline CommutantPair commutant_pair(const EquiSingPair& pair) {
  require_valid(validate_pair(pair), "commutant_pair");
  CommutantPair out;
  out.g_shape = commutant_shape_sp(pair.delta);
  GroupShape hp = commutant_shape_so(pair.gamma_prime);
  GroupShape hs = commutant_shape_so(pair.gamma_second);
  out.h_shape.atoms = hp.atoms;
  out.h_shape.atoms.insert(out.h_shape.atoms.end(), hs.atoms.begin(), hs.atoms.end());
  out.w_plus = pair.delta.dim_plus;
  out.v_prime_plus = pair.gamma_prime.dim_plus;
  out.w_minus = pair.delta.dim_minus;
  out.v_second_plus = pair.gamma_second.dim_plus;
  if (out.v_prime_plus != out.w_plus + 1 || out.v_second_plus != out.w_minus + 1)
    throw std::logic_error("commutant_pair: eigenspace dimension relations violated");
  // unitary/GL atoms: one H atom per delta factor, same kind and size, base
  // agreeing up to the flip-orbit presentation
  std::vector<bool> used(out.h_shape.atoms.size(), false);
  for (const auto& g : out.g_shape.atoms) {
    if (g.kind == AtomKind::Sp) continue;
    bool matched = false;
    for (size_t j = 0; j < out.h_shape.atoms.size() && !matched; ++j) {
      const Atom& h = out.h_shape.atoms[j];
      if (used[j] || h.kind != g.kind || h.size != g.size) continue;
      if (!(atom_base_canonical(h.kind, h.base) == atom_base_canonical(g.kind, g.base))) continue;
      used[j] = true;
      matched = true;
      out.pairs.push_back({g, h, true});
    }
    if (!matched)
      throw std::logic_error("commutant_pair: unmatched unitary atom on the delta side");
  }
  for (size_t j = 0; j < out.h_shape.atoms.size(); ++j)
    if (!used[j] && out.h_shape.atoms[j].kind != AtomKind::SO_odd)
      throw std::logic_error("commutant_pair: unmatched unitary atom on the gamma side");
  if (out.w_plus > 0)
    out.pairs.push_back({{AtomKind::Sp, static_cast<int>(out.w_plus), PolyQ()},
                         {AtomKind::SO_odd, static_cast<int>(out.v_prime_plus), PolyQ()},
                         false});
  if (out.w_minus > 0)
    out.pairs.push_back({{AtomKind::Sp, static_cast<int>(out.w_minus), PolyQ()},
                         {AtomKind::SO_odd, static_cast<int>(out.v_second_plus), PolyQ()},
                         false});
  return out;
}

// ---- stabilization coefficients ----

inline Rational iota(const EndoDatum& d) {
  if (d.nprime < 0 || d.nsecond < 0) throw std::invalid_argument("iota: negative datum entry");
  if (d.nprime + d.nsecond == 0) return Rational(1);
  if (d.nprime >= 1 && d.nsecond >= 1) return Rational(1, 4);
  return Rational(1, 2);
}

inline Rational tamagawa(const GroupShape& s) {
  if (s.so_minus_caveat)
    throw std::invalid_argument("tamagawa: flagged orthogonal blocks are unsupported");
  Rational v = 1;
  for (const auto& a : s.atoms) {
    if (a.kind == AtomKind::Sp) continue;  // tau(Sp) = 1
    if (a.kind == AtomKind::SO_odd) {
      if (a.size >= 3) v *= 2;  // tau(SO(2k+1)) = 2 for k >= 1
      continue;
    }
    throw std::invalid_argument("tamagawa: only Sp and SO_odd atoms are supported");
  }
  return v;
}

// Good-reduction proxy at an odd prime: p-integral coefficients, p-unit
// constant and leading terms, and squarefree reduction of every field-kind
// factor (equivalent to p not dividing its discriminant).
inline bool nonramified_pair_check(const EquiSingPair& pair, const Int& p) {
  if (p == 2) throw std::invalid_argument("nonramified_pair_check: residue characteristic 2 is unsupported");
  if (p < 2 || !is_prime(p)) throw std::invalid_argument("nonramified_pair_check: p must be an odd prime");
  require_valid(validate_pair(pair), "nonramified_pair_check");
  std::vector<const std::vector<UnitaryFactor>*> lists = {
      &pair.delta.factors, &pair.gamma_prime.factors, &pair.gamma_second.factors};
  for (const auto* fs : lists)
    for (const auto& f : *fs) {
      for (const auto& c : f.poly.c)
        if (c != 0 && val_p(c, p) < 0) return false;
      if (val_p(f.poly.constant_term(), p) != 0) return false;
      if (f.kind == FactorKind::field && !squarefree_mod_p(f.poly, p)) return false;
    }
  return true;
}

}  // namespace ellstab
