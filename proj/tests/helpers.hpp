#pragma once

#include <initializer_list>
#include <vector>

#include "ellstab/poly.hpp"

namespace tst {

// Polynomial from integer coefficients, constant term first.
inline ellstab::PolyQ P(std::initializer_list<long> cs) {
  std::vector<ellstab::Rational> v;
  for (long c : cs) v.emplace_back(c);
  return ellstab::PolyQ(v);
}

inline ellstab::Rational R(long num, long den = 1) { return {num, den}; }

}  // namespace tst
