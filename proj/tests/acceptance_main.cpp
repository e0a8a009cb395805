// Acceptance gate: each criterion prints exactly one pass/fail line. The
// binary exits nonzero if any criterion fails. Criteria 1 and 9 also enforce
// their wall-clock budgets (5 s and 30 s).

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "ellstab/cli_core.hpp"
#include "ellstab/verify.hpp"

using namespace ellstab;

namespace {

using Clock = std::chrono::steady_clock;

long ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

struct Criterion {
  int id;
  std::string title;
  std::function<std::string()> body;  // empty string = pass
};

std::string check(bool ok, const std::string& msg) { return ok ? "" : msg; }

SoClassParam trivial_so(int size) {
  SoClassParam g;
  g.size = size;
  g.dim_plus = size;
  g.dim_minus = 0;
  return g;
}

// -------------------------------------------------------------------------

std::string crit_lemma_sweep() {
  auto t0 = Clock::now();
  for (int n = 1; n <= 12; ++n) {
    auto [r1, r2] = lemma_2n_ratios(n);
    if (r1 != rat_pow(Rational(1, 2), n)) return "first ratio wrong at n=" + std::to_string(n);
    if (r2 != rat_pow(Rational(1, 2), 2 * n)) return "second ratio wrong at n=" + std::to_string(n);
  }
  long ms = ms_since(t0);
  return check(ms < 5000, "runtime " + std::to_string(ms) + " ms exceeds the 5 s budget");
}

std::string crit_steinberg() {
  for (Family f : {Family::B, Family::C})
    for (int n = 1; n <= 8; ++n) {
      RootDatum rd{f, n};
      if (steinberg_rho_value(rd) != varpi_eval(rd, rho(rd)))
        return std::string("mismatch for family ") + (f == Family::B ? "B" : "C") + " at n=" +
               std::to_string(n);
    }
  return "";
}

std::string crit_twinning() {
  for (int n = 1; n <= 12; ++n) {
    RootDatum b{Family::B, n}, c{Family::C, n};
    if (exponents(b) != exponents(c)) return "exponents differ at n=" + std::to_string(n);
    if (weyl_order(b) != weyl_order(c)) return "Weyl orders differ at n=" + std::to_string(n);
    if (positive_roots(b).size() != positive_roots(c).size())
      return "root counts differ at n=" + std::to_string(n);
    auto [dim_sp, q_sp] = dim_and_q(AtomKind::Sp, n, QContext::real_split);
    auto [dim_so, q_so] = dim_and_q(AtomKind::SO_odd, n, QContext::real_split);
    if (dim_sp != dim_so || q_sp != q_so) return "dim/q differ at n=" + std::to_string(n);
    if (q_sp != Rational(Int(n) * (n + 1), 2))
      return "real-split q is not n(n+1)/2 at n=" + std::to_string(n);
  }
  return "";
}

std::string crit_discriminant_ratio() {
  detail::Rng rng(20260815);
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 50; ++trial) {
      // regular point: coordinates t_i with |t_i| > 1, pairwise distinct up to sign
      std::vector<Rational> t;
      std::set<std::pair<Int, Int>> used;
      while (static_cast<int>(t.size()) < n) {
        Rational cand(rng.range(2, 60), rng.range(1, 7));
        if (rat_abs(cand) <= 1) continue;
        auto key = std::make_pair(rat_num(rat_abs(cand)), rat_den(cand));
        if (!used.insert(key).second) continue;
        t.push_back(rng.range(0, 1) ? cand : -cand);
      }
      DiscriminantRatio r = discriminant_ratio(n, t);
      if (r.is_limit) return "unexpected singular sample at n=" + std::to_string(n);
      Rational quotient = weyl_discriminant({Family::C, n}, t) / weyl_discriminant({Family::B, n}, t);
      if (r.value != quotient) return "closed form disagrees at n=" + std::to_string(n);
    }
    DiscriminantRatio at_one = discriminant_ratio(n, std::vector<Rational>(n, Rational(1)));
    if (at_one.value != rat_pow(Rational(4), n))
      return "value at t=1 is not 2^(2n) for n=" + std::to_string(n);
  }
  return "";
}

std::string crit_bijection_roundtrip() {
  std::vector<PolyQ> pool = generator_pool();
  long irreducible = 0;
  for (const PolyQ& p : pool)
    if (is_irreducible_q(p) == Verdict::yes) ++irreducible;
  if (irreducible < 6) return "generator pool has fewer than 6 irreducible polynomials";

  long inputs = 0;
  for (const SpClassParam& delta : sp_family(4)) {
    for (const BijectionInput& in : bijection_inputs(delta)) {
      ++inputs;
      BijectionImage img = bijection_forward(in);
      if (!is_equi_singular(img.pair.gamma_prime, img.pair.gamma_second).value)
        return "forward image is not equi-singular";
      size_t fields = 0;
      for (size_t i : in.isecond)
        if (in.delta.factors[i].kind == FactorKind::field) ++fields;
      if (static_cast<size_t>(kappa_of(img.pair).ssecond) != fields)
        return "kappa does not recover the chosen second-side index set";
      BijectionInput back = bijection_inverse(img.pair);
      if (!(back.delta == in.delta) || back.isecond != in.isecond ||
          back.gl_second != in.gl_second)
        return "inverse(forward) is not the identity";
      BijectionImage again = bijection_forward(back);
      if (!(again.pair.delta == img.pair.delta) ||
          !(again.pair.gamma_prime == img.pair.gamma_prime) ||
          !(again.pair.gamma_second == img.pair.gamma_second) ||
          !(again.pair.datum == img.pair.datum))
        return "forward(inverse) is not the identity";
    }
  }
  return check(inputs > 1000, "family swept only " + std::to_string(inputs) + " inputs");
}

std::string crit_fiber_oracle() {
  long pairs = 0;
  for (const SpClassParam& delta : sp_family(4))
    for (const EndoDatum& d : enumerate_endo_data(delta.n)) {
      ++pairs;
      if (fiber(delta, d) != oracle_fiber(delta, d))
        return "fiber mismatch at a family member with n=" + std::to_string(delta.n);
    }
  return check(pairs > 500, "family swept only " + std::to_string(pairs) + " (delta, datum) pairs");
}

std::string crit_coefficients() {
  if (iota({0, 0}) != Rational(1)) return "iota(0,0) is not 1";
  for (int n = 1; n <= 8; ++n) {
    if (iota({n, 0}) != Rational(1, 2)) return "iota(n,0) is not 1/2";
    if (iota({0, n}) != Rational(1, 2)) return "iota(0,n) is not 1/2";
  }
  for (int a = 1; a <= 6; ++a)
    for (int b = 1; b <= 6; ++b)
      if (iota({a, b}) != Rational(1, 4)) return "iota is not 1/4 with both entries positive";
  for (int n = 0; n <= 6; ++n)
    for (const EndoDatum& d : enumerate_endo_data(n)) {
      GroupShape h;
      h.atoms = {Atom{AtomKind::SO_odd, 2 * d.nprime + 1, PolyQ()},
                 Atom{AtomKind::SO_odd, 2 * d.nsecond + 1, PolyQ()}};
      if (iota(d) * tamagawa(h) != Rational(1)) return "iota * tamagawa is not 1";
    }
  return "";
}

std::string crit_motive_point_count() {
  for (int n = 1; n <= 5; ++n)
    for (long q : {3L, 5L, 7L, 9L}) {
      GroupShape sp;
      sp.atoms = {Atom{AtomKind::Sp, 2 * n, PolyQ()}};
      GroupShape so;
      so.atoms = {Atom{AtomKind::SO_odd, 2 * n + 1, PolyQ()}};
      Int dim = Int(n) * (2 * n + 1);
      Rational qdim(int_pow(Int(q), dim.convert_to<unsigned long>()));
      Int nsp = point_count(AtomKind::Sp, n, Int(q));
      Int nso = point_count(AtomKind::SO_odd, n, Int(q));
      if (nsp != nso) return "Sp and SO orders differ";
      if (local_L_dual1(motive_of_shape(sp), Int(q)) * Rational(nsp) != qdim)
        return "L-factor identity fails for Sp at n=" + std::to_string(n);
      if (local_L_dual1(motive_of_shape(so), Int(q)) * Rational(nso) != qdim)
        return "L-factor identity fails for SO at n=" + std::to_string(n);
    }
  if (point_count(AtomKind::Sp, 1, Int(3)) != Int(24)) return "|Sp(2, F_3)| is not 24";
  if (oracle_sp2_f3_order() != Int(24)) return "exhaustive Sp(2, F_3) enumeration is not 24";
  if (oracle_so3_f3_order() != Int(24)) return "exhaustive SO(3, F_3) enumeration is not 24";
  return "";
}

std::string crit_hilbert_suite() {
  auto t0 = Clock::now();
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
    PlaceQ v = place_finite(p);
    for (long a = -30; a <= 30; ++a)
      for (long b = -30; b <= 30; ++b) {
        if (a == 0 || b == 0) continue;
        if (hilbert(Rational(a), Rational(b), v) != oracle_hilbert(Rational(a), Rational(b), Int(p)))
          return "oracle disagrees at (" + std::to_string(a) + "," + std::to_string(b) + ") over p=" +
                 std::to_string(p);
      }
  }

  detail::Rng rng(97);
  for (int trial = 0; trial < 500; ++trial) {
    Rational a = rng.nonzero_rational(40, 12);
    Rational b = rng.nonzero_rational(40, 12);
    std::set<Int> primes = {Int(2)};
    for (const Rational& x : {a, b})
      for (const auto& [p, e] : factorize(rat_num(x) * rat_den(x))) {
        (void)e;
        primes.insert(p);
      }
    int prod = hilbert(a, b, place_infinite());
    for (const Int& p : primes) prod *= hilbert(a, b, place_finite(p));
    if (prod != 1) return "product formula fails at trial " + std::to_string(trial);
  }

  const std::vector<PlaceQ> places = {place_infinite(), place_finite(2), place_finite(3),
                                      place_finite(5), place_finite(11)};
  for (int trial = 0; trial < 120; ++trial) {
    Rational a = rng.nonzero_rational(30, 9);
    Rational b = rng.nonzero_rational(30, 9);
    Rational c = rng.nonzero_rational(30, 9);
    for (const PlaceQ& v : places) {
      if (hilbert(a, b * c, v) != hilbert(a, b, v) * hilbert(a, c, v))
        return "bimultiplicativity fails";
      if (hilbert(a, -a, v) != 1) return "(a, -a) is not trivial";
      if (hilbert(a, b, v) != hilbert(b, a, v)) return "symmetry fails";
    }
  }

  long ms = ms_since(t0);
  return check(ms < 30000, "runtime " + std::to_string(ms) + " ms exceeds the 30 s budget");
}

std::string crit_theta_products() {
  for (long n = 0; n <= 10; ++n) {
    Rational prod = theta_minus_one(n, place_infinite());
    for (long p : {2L, 3L, 5L, 7L}) prod *= theta_minus_one(n, place_finite(p));
    if (prod != 1) return "global theta product is not 1 at n=" + std::to_string(n);
  }
  for (long t = 0; t <= 10; ++t)
    if (two_power_product(t) != 1) return "two-power product is not 1 at t=" + std::to_string(t);
  return "";
}

std::string crit_commutant_pairing() {
  long pairs_seen = 0;
  for (const SpClassParam& delta : sp_family(4))
    for (const BijectionInput& in : bijection_inputs(delta)) {
      EquiSingPair pair = bijection_forward(in).pair;
      ++pairs_seen;
      CommutantPair cp = commutant_pair(pair);
      if (cp.v_prime_plus != cp.w_plus + 1) return "dim V'_+ != dim W_+ + 1";
      if (cp.v_second_plus != cp.w_minus + 1) return "dim V''_+ != dim W_- + 1";
      if (cp.pairs.size() != cp.g_shape.atoms.size() || cp.pairs.size() != cp.h_shape.atoms.size())
        return "atom pairing is not a perfect matching";
      for (const auto& ap : cp.pairs) {
        if (ap.inner_form) {
          if (ap.g_atom.kind != ap.h_atom.kind || ap.g_atom.size != ap.h_atom.size)
            return "inner-form pair mismatch";
          if (!(atom_base_canonical(ap.g_atom.kind, ap.g_atom.base) ==
                atom_base_canonical(ap.h_atom.kind, ap.h_atom.base)))
            return "inner-form base mismatch";
        } else {
          if (ap.g_atom.kind != AtomKind::Sp || ap.h_atom.kind != AtomKind::SO_odd ||
              ap.h_atom.size != ap.g_atom.size + 1)
            return "twin pair is not Sp(2a) with SO(2a+1)";
        }
      }
      if (!motive_equal(motive_of_shape(cp.g_shape), motive_of_shape(cp.h_shape)))
        return "motives of the paired centralizers differ";
      (void)t_value(pair);  // throws if its two defining formulas disagree
    }
  return check(pairs_seen > 1000, "only " + std::to_string(pairs_seen) + " pairs examined");
}

std::string crit_worked_examples() {
  for (int n = 1; n <= 5; ++n) {
    SpClassParam plus = correspond(trivial_so(2 * n + 1), trivial_so(1));
    if (!plus.factors.empty() || plus.dim_plus != 2 * n || plus.dim_minus != 0)
      return "+1 does not correspond to the trivial class at (n, 0)";
    auto fib_plus = fiber(plus, {n, 0});
    if (fib_plus.size() != 1 || !(fib_plus[0].first == trivial_so(2 * n + 1)) ||
        !(fib_plus[0].second == trivial_so(1)))
      return "fiber of +1 at (n, 0) is not the single central class";

    SpClassParam minus = correspond(trivial_so(1), trivial_so(2 * n + 1));
    if (!minus.factors.empty() || minus.dim_plus != 0 || minus.dim_minus != 2 * n)
      return "-1 does not correspond to the trivial class at (0, n)";
    auto fib_minus = fiber(minus, {0, n});
    if (fib_minus.size() != 1 || !(fib_minus[0].first == trivial_so(1)) ||
        !(fib_minus[0].second == trivial_so(2 * n + 1)))
      return "fiber of -1 at (0, n) is not the single central class";

    EquiSingPair pp = build_pair({n, 0}, trivial_so(2 * n + 1), trivial_so(1));
    EquiSingPair pm = build_pair({0, n}, trivial_so(1), trivial_so(2 * n + 1));
    if (t_value(pp) != n || t_value(pm) != n) return "central t value is not n";

    for (const PlaceQ& v : {place_infinite(), place_finite(2), place_finite(3)})
      if (theta_minus_one(n, v) != rat_pow(abs_norm(Rational(2), v), -static_cast<long>(n)))
        return "theta constant is not |2|^{-n}";
  }
  return "";
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "Weyl-element ratio sweep (n <= 12, < 5 s)", crit_lemma_sweep},
      {2, "Steinberg value equals the direct product at rho", crit_steinberg},
      {3, "type B/C twinning of exponents, orders, and q", crit_twinning},
      {4, "discriminant quotient matches its closed form", crit_discriminant_ratio},
      {5, "class/index bijection round-trips over the family", crit_bijection_roundtrip},
      {6, "fibers agree with the exhaustive matcher", crit_fiber_oracle},
      {7, "stabilization coefficients and Tamagawa inverses", crit_coefficients},
      {8, "motive L-factors match finite point counts", crit_motive_point_count},
      {9, "Hilbert symbols against the conic oracle (< 30 s)", crit_hilbert_suite},
      {10, "theta and two-power global products are trivial", crit_theta_products},
      {11, "centralizer pairing with matched motives", crit_commutant_pairing},
      {12, "central worked examples with t = n and theta = |2|^{-n}", crit_worked_examples},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    std::string msg;
    try {
      msg = c.body();
    } catch (const std::exception& e) {
      msg = std::string("exception: ") + e.what();
    }
    if (msg.empty()) {
      std::cout << "criterion " << c.id << ": PASS — " << c.title << "\n";
    } else {
      ++failures;
      std::cout << "criterion " << c.id << ": FAIL — " << c.title << " (" << msg << ")\n";
    }
  }
  if (failures) std::cout << failures << " criterion(s) failed\n";
  return failures ? 1 : 0;
}
