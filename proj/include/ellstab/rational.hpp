#pragma once

// Exact integer and rational arithmetic. Values are immutable once built;
// cpp_rational keeps lowest terms and a positive denominator by construction.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ellstab {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return rat_den(q) == 1; }

inline std::string int_to_string(const Int& n) { return n.str(); }

// Canonical form: "7" for integers, "num/den" otherwise.
inline std::string rat_to_string(const Rational& q) {
  if (is_integer(q)) return rat_num(q).str();
  return rat_num(q).str() + "/" + rat_den(q).str();
}

inline Rational rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument(std::string("bad rational literal '") + s + "': " + e.what());
  }
}

inline Int int_pow(Int base, unsigned long e) {
  Int r = 1;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

inline Rational rat_pow(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  if (e < 0) {
    if (base == 0) throw std::domain_error("0 to a negative power");
    return rat_pow(Rational(1) / base, -e);
  }
  Rational r = 1, b = base;
  unsigned long k = static_cast<unsigned long>(e);
  while (k) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

inline Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline long to_long(const Int& n) {
  if (n > std::numeric_limits<long>::max() || n < std::numeric_limits<long>::min())
    throw std::overflow_error("integer out of long range");
  return static_cast<long>(n);
}

// p-adic valuation of a nonzero rational.
inline long val_p(const Rational& q, const Int& p) {
  if (q == 0) throw std::domain_error("valuation of zero");
  long v = 0;
  Int n = rat_num(q), d = rat_den(q);
  while (n % p == 0) { n /= p; ++v; }
  while (d % p == 0) { d /= p; --v; }
  return v;
}

inline bool miller_rabin(const Int& n, const Int& a) {
  if (n % a == 0) return n == a;
  Int d = n - 1;
  int r = 0;
  while (d % 2 == 0) { d /= 2; ++r; }
  Int x = boost::multiprecision::powm(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 0; i + 1 < r; ++i) {
    x = x * x % n;
    if (x == n - 1) return true;
  }
  return false;
}

inline bool is_prime(const Int& n) {
  if (n < 2) return false;
  for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  // deterministic witness set for 64-bit-and-beyond desk inputs
  for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
    if (!miller_rabin(n, a)) return false;
  return true;
}

inline Int pollard_rho(const Int& n) {
  if (n % 2 == 0) return 2;
  Int x = 2, y = 2, c = 1, d = 1;
  auto f = [&](const Int& v) { return (v * v + c) % n; };
  while (true) {
    x = 2; y = 2; d = 1;
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = boost::multiprecision::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
    ++c;
  }
}

// Prime factorization, exponent map as sorted pairs.
inline std::vector<std::pair<Int, int>> factorize(Int n) {
  if (n < 0) n = -n;
  std::vector<std::pair<Int, int>> out;
  if (n <= 1) return out;
  std::vector<Int> stack{n};
  std::vector<Int> primes;
  while (!stack.empty()) {
    Int m = stack.back();
    stack.pop_back();
    if (m == 1) continue;
    if (is_prime(m)) { primes.push_back(m); continue; }
    bool split = false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
      if (m % p == 0) { stack.push_back(p); stack.push_back(m / p); split = true; break; }
    }
    if (!split) {
      Int d = pollard_rho(m);
      stack.push_back(d);
      stack.push_back(m / d);
    }
  }
  std::sort(primes.begin(), primes.end());
  for (const Int& p : primes) {
    if (!out.empty() && out.back().first == p) ++out.back().second;
    else out.emplace_back(p, 1);
  }
  return out;
}

inline bool is_squarefree(const Int& n) {
  if (n == 0) return false;
  for (auto& [p, e] : factorize(n))
    if (e > 1) return false;
  return true;
}

inline bool is_perfect_square(const Int& n) {
  if (n < 0) return false;
  Int r = boost::multiprecision::sqrt(n);
  return r * r == n;
}

// All positive divisors, ascending. Intended for desk-scale inputs.
inline std::vector<Int> divisors(const Int& n) {
  std::vector<Int> out{1};
  for (auto& [p, e] : factorize(n)) {
    size_t sz = out.size();
    Int pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (size_t j = 0; j < sz; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ellstab
