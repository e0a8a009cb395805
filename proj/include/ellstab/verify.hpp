#pragma once

// Self-verification suites: each named check exercises one documented
// invariant with deterministic pseudo-randomness and reports pass/fail plus a
// counterexample. The CLI exposes these as the `verify` command; the
// acceptance tests assert every check passes.

#include <functional>
#include <random>
#include <set>

#include "ellstab/generators.hpp"
#include "ellstab/motive.hpp"
#include "ellstab/oracles.hpp"

namespace ellstab {

struct CheckResult {
  std::string name;
  std::string anchor;  // topic tag tying the check to its source identity
  bool pass = true;
  std::string detail;  // counterexample or error text when failing
};

struct VerifyReport {
  std::string suite;
  int nmax = 0;
  uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

namespace detail {

// mt19937_64 output is standardized; mapping by modulo (rather than
// std::uniform_int_distribution, whose results are implementation-defined)
// keeps reports byte-identical across platforms.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  long range(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(eng_() % static_cast<uint64_t>(hi - lo + 1));
  }

  Rational nonzero_rational(long maxnum, long maxden) {
    Rational r(range(1, maxnum), range(1, maxden));
    return range(0, 1) ? r : Rational(-r);
  }

  PolyQ monic_poly(long maxdeg) {
    long deg = range(1, maxdeg);
    std::vector<Rational> c(static_cast<size_t>(deg) + 1);
    c.back() = 1;
    for (long i = 1; i < deg; ++i)
      c[static_cast<size_t>(i)] = Rational(range(-6, 6), range(1, 3));
    c[0] = nonzero_rational(6, 3);
    return PolyQ(c);
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {  // Fisher-Yates on the deterministic engine
    for (size_t i = v.size(); i > 1; --i)
      std::swap(v[i - 1], v[static_cast<size_t>(range(0, static_cast<long>(i) - 1))]);
  }

 private:
  std::mt19937_64 eng_;
};

inline void run_check(VerifyReport& rep, const std::string& name, const std::string& anchor,
                      const std::function<std::string()>& body) {
  CheckResult r{name, anchor, true, ""};
  try {
    r.detail = body();
    r.pass = r.detail.empty();
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  rep.checks.push_back(std::move(r));
}

inline std::string rat_str(const Rational& q) { return q.str(); }

// ---- rootsys suite ----

inline void suite_rootsys(VerifyReport& rep, int nmax, uint64_t seed) {
  run_check(rep, "lemma2n-ratio-sweep", "weyl-element-ratio", [&]() -> std::string {
    for (int n = 1; n <= nmax; ++n) {
      auto [r1, r2] = lemma_2n_ratios(n);
      if (r1 != rat_pow(Rational(1, 2), n) || r2 != rat_pow(Rational(1, 2), 2 * n))
        return "n=" + std::to_string(n) + ": got (" + rat_str(r1) + ", " + rat_str(r2) + ")";
    }
    return "";
  });
  run_check(rep, "steinberg-evaluation", "steinberg-constant", [&]() -> std::string {
    for (Family fam : {Family::B, Family::C})
      for (int n = 1; n <= nmax; ++n) {
        RootDatum rd{fam, n};
        Rational direct = varpi_eval(rd, rho(rd));
        Rational closed = steinberg_rho_value(rd);
        if (direct != closed)
          return std::string(fam == Family::B ? "B" : "C") + std::to_string(n) + ": " +
                 rat_str(direct) + " != " + rat_str(closed);
      }
    return "";
  });
  run_check(rep, "type-bc-twinning", "type-bc-coincidence", [&]() -> std::string {
    for (int n = 1; n <= nmax; ++n) {
      RootDatum b{Family::B, n}, c{Family::C, n};
      if (exponents(b) != exponents(c)) return "exponents differ at n=" + std::to_string(n);
      if (weyl_order(b) != weyl_order(c)) return "weyl orders differ at n=" + std::to_string(n);
      if (positive_roots(b).size() != static_cast<size_t>(n) * static_cast<size_t>(n) ||
          positive_roots(c).size() != positive_roots(b).size())
        return "positive-root counts off at n=" + std::to_string(n);
      auto [db, qb] = dim_and_q(AtomKind::SO_odd, n, QContext::real_split);
      auto [dc, qc] = dim_and_q(AtomKind::Sp, n, QContext::real_split);
      if (db != dc || qb != qc || qb != Rational(static_cast<long>(n) * (n + 1) / 2))
        return "dim/q values differ at n=" + std::to_string(n);
    }
    return "";
  });
  run_check(rep, "torus-discriminant-ratio", "torus-discriminant-ratio", [&]() -> std::string {
    Rng rng(seed ^ 0x5eedULL);
    for (int n = 1; n <= std::min(nmax, 6); ++n) {
      for (int trial = 0; trial < 50; ++trial) {
        std::vector<Rational> t;
        while (t.size() < static_cast<size_t>(n)) {
          Rational v(rng.range(2, 60), rng.range(1, 7));
          if (v <= 1) continue;  // keep |t| > 1 so pair products never hit 1
          if (rng.range(0, 1)) v = -v;
          bool dup = false;
          for (const auto& u : t)
            if (u == v || u == -v) dup = true;
          if (!dup) t.push_back(v);
        }
        DiscriminantRatio r = discriminant_ratio(n, t);
        Rational quotient = weyl_discriminant(RootDatum{Family::C, n}, t) /
                            weyl_discriminant(RootDatum{Family::B, n}, t);
        if (r.is_limit || r.value != quotient)
          return "n=" + std::to_string(n) + " trial " + std::to_string(trial) + ": closed " +
                 rat_str(r.value) + " vs quotient " + rat_str(quotient);
      }
      DiscriminantRatio lim = discriminant_ratio(n, std::vector<Rational>(static_cast<size_t>(n), Rational(1)));
      if (!lim.is_limit || lim.value != rat_pow(Rational(2), 2 * n))
        return "limit value at n=" + std::to_string(n) + " is " + rat_str(lim.value);
    }
    return "";
  });
  run_check(rep, "symmetric-product-shuffle", "weyl-element-ratio", [&]() -> std::string {
    Rng rng(seed ^ 0x9d2cULL);
    for (int n = 1; n <= std::min(nmax, 6); ++n)
      for (Family fam : {Family::B, Family::C}) {
        RootDatum rd{fam, n};
        SymElement s = varpi_sym(rd);
        Weight lam;
        for (int i = 0; i < n; ++i) lam.coords.push_back(rng.nonzero_rational(9, 4));
        Rational ref = varpi_eval_sym(s, lam);
        for (int trial = 0; trial < 5; ++trial) {
          rng.shuffle(s.factors);
          if (varpi_eval_sym(s, lam) != ref)
            return "shuffle changed the value at n=" + std::to_string(n);
        }
      }
    return "";
  });
  run_check(rep, "rho-half-sum", "half-sum-positive-roots", [&]() -> std::string {
    for (int n = 1; n <= nmax; ++n)
      for (Family fam : {Family::B, Family::C}) {
        RootDatum rd{fam, n};
        std::vector<Rational> sum(static_cast<size_t>(n), Rational(0));
        for (const auto& a : positive_roots(rd))
          for (int i = 0; i < n; ++i)
            sum[static_cast<size_t>(i)] += a.coords[static_cast<size_t>(i)];
        Weight r = rho(rd);
        for (int i = 0; i < n; ++i)
          if (2 * r.coords[static_cast<size_t>(i)] != sum[static_cast<size_t>(i)])
            return "2*rho mismatch at n=" + std::to_string(n);
      }
    return "";
  });
}

// ---- endoscopy suite (includes the polynomial/class-parameter substrate) ----

inline void suite_endoscopy(VerifyReport& rep, int nmax, uint64_t seed) {
  run_check(rep, "poly-involutions", "eigenvalue-inversion-symmetry", [&]() -> std::string {
    Rng rng(seed ^ 0xabcdULL);
    for (int trial = 0; trial < 200; ++trial) {
      PolyQ p = rng.monic_poly(6);
      if (poly_reciprocal(poly_reciprocal(p)) != p)
        return "reciprocal not involutive: " + poly_to_string(p);
      if (poly_neg_arg(poly_neg_arg(p)) != p)
        return "negation not involutive: " + poly_to_string(p);
      if (poly_reciprocal(poly_neg_arg(p)) != poly_neg_arg(poly_reciprocal(p)))
        return "involutions do not commute: " + poly_to_string(p);
    }
    return "";
  });
  run_check(rep, "poly-product-evaluation", "eigenvalue-multiset-semantics", [&]() -> std::string {
    Rng rng(seed ^ 0xbeefULL);
    for (int trial = 0; trial < 100; ++trial) {
      PolyQ p = rng.monic_poly(5), q = rng.monic_poly(5);
      Rational x = rng.nonzero_rational(12, 5);
      if (poly_eval(poly_mul(p, q), x) != poly_eval(p, x) * poly_eval(q, x))
        return "product evaluation failed at x=" + rat_str(x);
    }
    return "";
  });
  run_check(rep, "quadratic-norm-multiplicative", "quadratic-algebra-norms", [&]() -> std::string {
    Rng rng(seed ^ 0x1357ULL);
    const long ds[] = {-1, -2, 2, 3, 5, -5};
    for (int trial = 0; trial < 100; ++trial) {
      Int d(ds[rng.range(0, 5)]);
      QuadElem x(rng.nonzero_rational(9, 4), rng.nonzero_rational(9, 4), d);
      QuadElem y(rng.nonzero_rational(9, 4), rng.nonzero_rational(9, 4), d);
      if (quad_norm(x * y) != quad_norm(x) * quad_norm(y))
        return "norm not multiplicative over d=" + d.str();
    }
    return "";
  });
  const auto family = sp_family(std::min(nmax, 4));
  run_check(rep, "charpoly-degree-selfreciprocal", "class-parameter-polynomials",
            [&]() -> std::string {
              for (const auto& d : family) {
                PolyQ cp = expand_factored(char_poly(d));
                if (cp.degree() != 2L * d.n)
                  return "char poly degree " + std::to_string(cp.degree()) + " for n=" +
                         std::to_string(d.n);
                if (!is_self_reciprocal(cp)) return "char poly not self-reciprocal";
              }
              return "";
            });
  run_check(rep, "charpoly-roundtrip", "class-parameter-polynomials", [&]() -> std::string {
    for (const auto& d : family) {
      SpClassParam back = sp_from_char_poly(char_poly(d));
      if (!(back == d)) return "round-trip failed for a parameter with n=" + std::to_string(d.n);
    }
    return "";
  });
  run_check(rep, "centralizer-dimension", "centralizer-decomposition", [&]() -> std::string {
    for (const auto& d : family) {
      Int via_shape = shape_dim(commutant_shape_sp(d));
      Int via_mult = centralizer_dim_from_multiplicities(d.factors, d.dim_plus, d.dim_minus, false);
      if (via_shape != via_mult)
        return "dimension bookkeeping differs: " + via_shape.str() + " vs " + via_mult.str();
      if (d.factors.empty() && (d.dim_plus == 0 || d.dim_minus == 0)) {
        Int full = dim_and_q(AtomKind::Sp, d.n, QContext::compact).first;
        if (via_shape != full) return "central element centralizer is not the full group";
      }
    }
    return "";
  });
  run_check(rep, "bijection-roundtrip", "delta-kappa-parametrization", [&]() -> std::string {
    for (const auto& d : family)
      for (const auto& in : bijection_inputs(d)) {
        BijectionImage img = bijection_forward(in);
        EquiSingCheck chk = is_equi_singular(img.pair.gamma_prime, img.pair.gamma_second);
        if (!chk.value) return "forward image is not equi-singular";
        size_t fields = 0;
        for (size_t i : in.isecond)
          if (d.factors[i].kind == FactorKind::field) ++fields;
        if (static_cast<size_t>(kappa_of(img.pair).ssecond) != fields)
          return "kappa does not recover the I'' support";
        BijectionInput back = bijection_inverse(img.pair);
        if (!(back.delta == in.delta) || back.isecond != in.isecond ||
            back.gl_second != in.gl_second)
          return "inverse did not recover the input";
        BijectionImage img2 = bijection_forward(back);
        if (!(img2.pair.gamma_prime == img.pair.gamma_prime) ||
            !(img2.pair.gamma_second == img.pair.gamma_second))
          return "forward is not constant on the recovered input";
      }
    return "";
  });
  run_check(rep, "fiber-oracle-agreement", "correspondence-fibers", [&]() -> std::string {
    for (const auto& d : family)
      for (const auto& dat : enumerate_endo_data(d.n)) {
        auto got = fiber(d, dat);
        auto want = oracle_fiber(d, dat);
        if (got.size() != want.size())
          return "fiber size " + std::to_string(got.size()) + " vs oracle " +
                 std::to_string(want.size()) + " at n=" + std::to_string(d.n);
        for (size_t i = 0; i < got.size(); ++i)
          if (!(got[i].first == want[i].first && got[i].second == want[i].second))
            return "fiber member " + std::to_string(i) + " differs at n=" + std::to_string(d.n);
      }
    return "";
  });
  run_check(rep, "equisingular-centralizer-pairing", "equi-singular-centralizers",
            [&]() -> std::string {
              for (const auto& d : family)
                for (const auto& in : bijection_inputs(d)) {
                  EquiSingPair pair = bijection_forward(in).pair;
                  long t = t_value(pair);  // asserts both formulas agree internally
                  if (2 * t != pair.delta.dim_plus + pair.delta.dim_minus)
                    return "t does not match the central multiplicities";
                  CommutantPair cp = commutant_pair(pair);
                  if (cp.v_prime_plus != cp.w_plus + 1 || cp.v_second_plus != cp.w_minus + 1)
                    return "eigenspace dimension relations violated";
                  size_t inner = 0;
                  for (const auto& pr : cp.pairs)
                    if (pr.inner_form) {
                      ++inner;
                      if (!(pr.g_atom.kind == pr.h_atom.kind && pr.g_atom.size == pr.h_atom.size))
                        return "inner-form pair with mismatched shape labels";
                      GroupShape a{{pr.g_atom}, false, 0}, b{{pr.h_atom}, false, 0};
                      if (!motive_equal(motive_of_shape(a), motive_of_shape(b)))
                        return "inner-form pair with different motives";
                    }
                  if (inner != pair.delta.factors.size())
                    return "not every factor produced an inner-form pair";
                  if (!motive_equal(motive_of_shape(cp.g_shape), motive_of_shape(cp.h_shape)))
                    return "paired centralizers have different motives";
                }
              return "";
            });
  run_check(rep, "iota-tamagawa-inverse", "stabilization-coefficients", [&]() -> std::string {
    for (int n = 1; n <= nmax; ++n)
      for (const auto& dat : enumerate_endo_data(n)) {
        Rational expect =
            dat.nprime >= 1 && dat.nsecond >= 1 ? Rational(1, 4) : Rational(1, 2);
        if (iota(dat) != expect) return "iota value off at n=" + std::to_string(n);
        if (iota(dat) * tamagawa(endo_group_shape(dat)) != 1)
          return "iota * tamagawa != 1 at n=" + std::to_string(n);
      }
    if (iota({0, 0}) != 1) return "iota at the trivial datum";
    return "";
  });
  run_check(rep, "central-worked-examples", "central-elements-example", [&]() -> std::string {
    for (int n = 1; n <= nmax; ++n) {
      SpClassParam plus_one;
      plus_one.n = n;
      plus_one.dim_plus = 2 * n;
      SpClassParam minus_one;
      minus_one.n = n;
      minus_one.dim_minus = 2 * n;
      auto fp = fiber(plus_one, {n, 0});
      if (fp.size() != 1 || fp[0].first.size != 2 * n + 1 || fp[0].first.dim_plus != 2 * n + 1 ||
          !fp[0].first.factors.empty() || fp[0].second.size != 1)
        return "+1 does not pair with the identity at (n,0), n=" + std::to_string(n);
      auto fm = fiber(minus_one, {0, n});
      if (fm.size() != 1 || fm[0].second.size != 2 * n + 1 || fm[0].second.dim_plus != 2 * n + 1 ||
          !fm[0].second.factors.empty() || fm[0].first.size != 1)
        return "-1 does not pair with the identity at (0,n), n=" + std::to_string(n);
      EquiSingPair pp = build_pair({n, 0}, fp[0].first, fp[0].second);
      EquiSingPair pm = build_pair({0, n}, fm[0].first, fm[0].second);
      if (t_value(pp) != n || t_value(pm) != n)
        return "central t-invariant is not n at n=" + std::to_string(n);
    }
    return "";
  });
}

// ---- motive suite ----

inline void suite_motive(VerifyReport& rep, int nmax, uint64_t seed) {
  run_check(rep, "lfactor-point-count", "motive-measure-identity", [&]() -> std::string {
    for (int n = 1; n <= std::min(nmax, 5); ++n)
      for (long q : {3L, 5L, 7L, 9L}) {
        GroupShape sp{{Atom{AtomKind::Sp, 2 * n, PolyQ()}}, false, 0};
        GroupShape so{{Atom{AtomKind::SO_odd, 2 * n + 1, PolyQ()}}, false, 0};
        TateMotive m = motive_of_shape(sp);
        if (!motive_equal(m, motive_of_shape(so))) return "B/C motives differ at n=" + std::to_string(n);
        Int dim = dim_and_q(AtomKind::Sp, n, QContext::compact).first;
        Int npts = point_count(AtomKind::Sp, n, Int(q));
        if (point_count(AtomKind::SO_odd, n, Int(q)) != npts)
          return "point counts differ across B/C at n=" + std::to_string(n);
        Rational lhs = local_L_dual1(m, Int(q)) * Rational(npts);
        if (lhs != Rational(int_pow(Int(q), static_cast<unsigned long>(to_long(dim)))))
          return "L-factor identity fails at n=" + std::to_string(n) + ", q=" + std::to_string(q);
      }
    return "";
  });
  run_check(rep, "finite-group-enumeration", "finite-point-enumeration", [&]() -> std::string {
    if (point_count(AtomKind::Sp, 1, Int(3)) != 24) return "closed form at (1,3)";
    if (oracle_sp2_f3_order() != 24) return "symplectic enumeration";
    if (oracle_so3_f3_order() != 24) return "orthogonal enumeration";
    if (point_count(AtomKind::Sp, 2, Int(3)) != 51840) return "closed form at (2,3)";
    return "";
  });
  run_check(rep, "motive-concatenation", "motive-product-rule", [&]() -> std::string {
    Rng rng(seed ^ 0x7a7eULL);
    const auto& pool = generator_pool();
    auto random_shape = [&](int atoms) {
      GroupShape s;
      for (int i = 0; i < atoms; ++i) {
        switch (rng.range(0, 3)) {
          case 0: s.atoms.push_back({AtomKind::Sp, 2 * static_cast<int>(rng.range(1, 4)), PolyQ()}); break;
          case 1: s.atoms.push_back({AtomKind::SO_odd, 2 * static_cast<int>(rng.range(1, 4)) + 1, PolyQ()}); break;
          case 2: s.atoms.push_back({AtomKind::U, static_cast<int>(rng.range(1, 3)),
                                     pool[static_cast<size_t>(rng.range(0, 4))]});
                  break;
          default: s.atoms.push_back({AtomKind::GL, static_cast<int>(rng.range(1, 3)),
                                      pool[static_cast<size_t>(rng.range(5, 7))]});
        }
      }
      return s;
    };
    for (int trial = 0; trial < 50; ++trial) {
      GroupShape s1 = random_shape(static_cast<int>(rng.range(0, 3)));
      GroupShape s2 = random_shape(static_cast<int>(rng.range(0, 3)));
      GroupShape cat = s1;
      cat.atoms.insert(cat.atoms.end(), s2.atoms.begin(), s2.atoms.end());
      TateMotive merged = motive_of_shape(s1);
      TateMotive m2 = motive_of_shape(s2);
      merged.summands.insert(merged.summands.end(), m2.summands.begin(), m2.summands.end());
      if (!motive_equal(motive_of_shape(cat), merged)) return "concatenation broke the motive";
    }
    return "";
  });
}

// ---- localsym suite ----

inline void suite_localsym(VerifyReport& rep, int nmax, uint64_t seed) {
  run_check(rep, "hilbert-conic-oracle", "hilbert-symbol-table", [&]() -> std::string {
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L})
      for (int a = -30; a <= 30; ++a)
        for (int b = -30; b <= 30; ++b) {
          if (a == 0 || b == 0) continue;
          if (hilbert(Rational(a), Rational(b), place_finite(Int(p))) !=
              oracle_hilbert(Rational(a), Rational(b), Int(p)))
            return "mismatch at (" + std::to_string(a) + "," + std::to_string(b) + ")_" +
                   std::to_string(p);
        }
    return "";
  });
  run_check(rep, "hilbert-product-formula", "hilbert-product-formula", [&]() -> std::string {
    Rng rng(seed ^ 0xf00dULL);
    for (int trial = 0; trial < 500; ++trial) {
      Rational a = rng.nonzero_rational(30, 12), b = rng.nonzero_rational(30, 12);
      std::set<Int> primes{Int(2)};
      for (const Rational* x : {&a, &b})
        for (const auto& [p, e] : factorize(rat_num(*x) * rat_den(*x))) primes.insert(p);
      int prod = hilbert(a, b, place_infinite());
      for (const Int& p : primes) prod *= hilbert(a, b, place_finite(p));
      if (prod != 1)
        return "product formula fails for a=" + rat_str(a) + ", b=" + rat_str(b);
    }
    return "";
  });
  run_check(rep, "hilbert-bilinearity", "hilbert-symbol-table", [&]() -> std::string {
    Rng rng(seed ^ 0xcafeULL);
    std::vector<PlaceQ> places{place_infinite(), place_finite(Int(2)), place_finite(Int(3)),
                               place_finite(Int(5)), place_finite(Int(7))};
    for (int trial = 0; trial < 200; ++trial) {
      Rational a1 = rng.nonzero_rational(20, 8), a2 = rng.nonzero_rational(20, 8),
               b = rng.nonzero_rational(20, 8);
      const PlaceQ& v = places[static_cast<size_t>(rng.range(0, 4))];
      if (hilbert(a1, b, v) != hilbert(b, a1, v)) return "symmetry fails";
      if (hilbert(a1 * a2, b, v) != hilbert(a1, b, v) * hilbert(a2, b, v))
        return "bimultiplicativity fails for a1=" + rat_str(a1) + ", a2=" + rat_str(a2) +
               ", b=" + rat_str(b);
      if (hilbert(a1, -a1, v) != 1) return "(a,-a) != 1 for a=" + rat_str(a1);
    }
    return "";
  });
  run_check(rep, "theta-global-product", "theta-constant", [&]() -> std::string {
    for (int n = 0; n <= std::max(nmax, 10); ++n) {
      Rational prod = theta_minus_one(n, place_infinite()) * theta_minus_one(n, place_finite(Int(2)));
      for (long p : {3L, 5L, 7L}) prod *= theta_minus_one(n, place_finite(Int(p)));
      if (prod != 1) return "global theta product != 1 at n=" + std::to_string(n);
    }
    return "";
  });
  run_check(rep, "two-power-product-trivial", "global-absolute-value-product",
            [&]() -> std::string {
              for (int t = 0; t <= std::max(nmax, 10); ++t)
                if (two_power_product(t) != 1)
                  return "two-power product != 1 at t=" + std::to_string(t);
              return "";
            });
  run_check(rep, "sign-square-class", "transfer-sign-factor", [&]() -> std::string {
    Rng rng(seed ^ 0x51deULL);
    const long ds[] = {-1, -2, 2, 3, 5, -5, 6, -6};
    std::vector<PlaceQ> places{place_infinite(), place_finite(Int(2)), place_finite(Int(3)),
                               place_finite(Int(5)), place_finite(Int(7))};
    for (int trial = 0; trial < 200; ++trial) {
      Int d(ds[rng.range(0, 7)]);
      Rational x = rng.nonzero_rational(20, 8);
      Rational s = rng.nonzero_rational(9, 4);
      const PlaceQ& v = places[static_cast<size_t>(rng.range(0, 4))];
      if (sgn_quadext(d, x, v) != sgn_quadext(d, x * s * s, v))
        return "square-class dependence for d=" + d.str() + ", x=" + rat_str(x);
    }
    // the assembled sign factor inherits the invariance through its argument
    PolyQ P = poly_from_ints({1, -3, 1});
    QuadElem a2(Rational(9), Rational(4), Int(5));
    for (int trial = 0; trial < 20; ++trial) {
      Rational s = rng.nonzero_rational(9, 4);
      const PlaceQ& v = places[static_cast<size_t>(rng.range(0, 4))];
      int lhs = delta_zero(P, {{false, Int(5), a2}}, 1, Rational(4), v);
      int rhs = delta_zero(P, {{false, Int(5), a2}}, 1, Rational(4) * s * s, v);
      if (lhs != rhs) return "sign factor changed under a square rescaling";
    }
    return "";
  });
}

}  // namespace detail

inline VerifyReport verify(const std::string& suite, int nmax, uint64_t seed) {
  if (nmax < 1) throw std::invalid_argument("verify: nmax must be >= 1");
  VerifyReport rep;
  rep.suite = suite;
  rep.nmax = nmax;
  rep.seed = seed;
  bool known = false;
  if (suite == "all" || suite == "rootsys") detail::suite_rootsys(rep, nmax, seed), known = true;
  if (suite == "all" || suite == "endoscopy") detail::suite_endoscopy(rep, nmax, seed), known = true;
  if (suite == "all" || suite == "motive") detail::suite_motive(rep, nmax, seed), known = true;
  if (suite == "all" || suite == "localsym") detail::suite_localsym(rep, nmax, seed), known = true;
  if (!known)
    throw std::invalid_argument(
        "verify: unknown suite (expected all, rootsys, endoscopy, motive, or localsym)");
  return rep;
}

}  // namespace ellstab
