#pragma once

// Deterministic generator family for property tests: symplectic class
// parameters of rank <= nmax whose factors are drawn from a fixed pool of
// small irreducible polynomials, over all parity-feasible eigenspace
// dimensions, together with the side-assignment enumerations feeding the
// bijection round-trip.

#include "ellstab/endoscopy.hpp"

namespace ellstab {

// Pool entries are monic irreducible, nonvanishing at 0 and +-1; the first
// five are self-reciprocal (field kind), the rest pair with a distinct
// reciprocal (split kind).
inline const std::vector<PolyQ>& generator_pool() {
  static const std::vector<PolyQ> pool = {
      poly_from_ints({1, 0, 1}),        // X^2 + 1
      poly_from_ints({1, -3, 1}),       // X^2 - 3X + 1
      poly_from_ints({1, 3, 1}),        // X^2 + 3X + 1
      poly_from_ints({1, 1, 1}),        // X^2 + X + 1
      poly_from_ints({1, 1, 1, 1, 1}),  // X^4 + X^3 + X^2 + X + 1
      poly_from_ints({-2, 1}),          // X - 2
      poly_from_ints({3, 1}),           // X + 3
      poly_from_ints({-2, 0, 1}),       // X^2 - 2
  };
  return pool;
}

// Every valid SpClassParam with 1 <= n <= nmax, factors from the pool (each
// with some rank >= 1 or absent), and every even split of the leftover
// dimension between the +1 and -1 eigenspaces.
inline std::vector<SpClassParam> sp_family(int nmax) {
  if (nmax < 0) throw std::invalid_argument("sp_family: nmax must be nonnegative");
  const auto& pool = generator_pool();
  std::vector<UnitaryFactor> canon;
  canon.reserve(pool.size());
  for (const auto& p : pool) canon.push_back(make_factor(p, 1));
  std::vector<SpClassParam> out;
  for (int n = 1; n <= nmax; ++n) {
    const long budget = 2L * n;
    std::vector<int> rank(pool.size(), 0);
    while (true) {
      long used = 0;
      for (size_t i = 0; i < pool.size(); ++i)
        used += rank[i] * effective_degree({canon[i].kind, canon[i].poly, 1});
      if (used <= budget && (budget - used) % 2 == 0) {
        for (long plus = 0; plus <= budget - used; plus += 2) {
          SpClassParam d;
          d.n = n;
          d.dim_plus = plus;
          d.dim_minus = budget - used - plus;
          for (size_t i = 0; i < pool.size(); ++i)
            if (rank[i] > 0) d.factors.push_back({canon[i].kind, canon[i].poly, rank[i]});
          sort_factors(d.factors);
          out.push_back(std::move(d));
        }
      }
      size_t i = 0;
      while (i < pool.size()) {
        long eff = effective_degree({canon[i].kind, canon[i].poly, 1});
        if ((rank[i] + 1) * eff <= budget) {
          ++rank[i];
          break;
        }
        rank[i++] = 0;
      }
      if (i == pool.size()) break;
    }
  }
  return out;
}

// All admissible bijection inputs for one delta: every subset of the
// field-kind factor indices as the kappa-support, crossed with every side
// assignment of the split-kind factors.
inline std::vector<BijectionInput> bijection_inputs(const SpClassParam& delta) {
  std::vector<size_t> field_idx, split_idx;
  for (size_t i = 0; i < delta.factors.size(); ++i)
    (delta.factors[i].kind == FactorKind::field ? field_idx : split_idx).push_back(i);
  std::vector<BijectionInput> out;
  for (size_t fm = 0; fm < (size_t{1} << field_idx.size()); ++fm)
    for (size_t sm = 0; sm < (size_t{1} << split_idx.size()); ++sm) {
      BijectionInput in;
      in.delta = delta;
      for (size_t j = 0; j < field_idx.size(); ++j)
        if (fm >> j & 1) in.isecond.push_back(field_idx[j]);
      for (size_t j = 0; j < split_idx.size(); ++j)
        if (sm >> j & 1) in.gl_second.push_back(split_idx[j]);
      out.push_back(std::move(in));
    }
  return out;
}

}  // namespace ellstab
