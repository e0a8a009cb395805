#pragma once

// Elements a + b*sqrt(d) of a quadratic etale algebra Q(sqrt(d)), d a
// squarefree nonzero integer (d = 1 degenerates to Q and is allowed so the
// split case can share code paths).

#include "ellstab/rational.hpp"

namespace ellstab {

struct QuadElem {
  Rational a{0};
  Rational b{0};
  Int d{1};

  QuadElem() = default;
  explicit QuadElem(Rational r) : a(std::move(r)) {}
  QuadElem(Rational a_, Rational b_, Int d_) : a(std::move(a_)), b(std::move(b_)), d(std::move(d_)) {}

  bool is_rational() const { return b == 0; }
};

inline void check_same_field(const QuadElem& x, const QuadElem& y) {
  if (x.d != y.d && x.b != 0 && y.b != 0)
    throw std::invalid_argument("quadratic elements from different fields");
}

inline QuadElem operator+(const QuadElem& x, const QuadElem& y) {
  check_same_field(x, y);
  return {x.a + y.a, x.b + y.b, x.b != 0 ? x.d : y.d};
}

inline QuadElem operator-(const QuadElem& x, const QuadElem& y) {
  check_same_field(x, y);
  return {x.a - y.a, x.b - y.b, x.b != 0 ? x.d : y.d};
}

inline QuadElem operator-(const QuadElem& x) { return {-x.a, -x.b, x.d}; }

inline QuadElem operator*(const QuadElem& x, const QuadElem& y) {
  check_same_field(x, y);
  Int d = x.b != 0 ? x.d : y.d;
  return {x.a * y.a + x.b * y.b * Rational(d), x.a * y.b + x.b * y.a, d};
}

inline bool operator==(const QuadElem& x, const QuadElem& y) {
  if (x.a != y.a) return false;
  if (x.b == 0 && y.b == 0) return true;
  return x.b == y.b && x.d == y.d;
}

inline bool operator!=(const QuadElem& x, const QuadElem& y) { return !(x == y); }

inline QuadElem quad_conj(const QuadElem& x) { return {x.a, -x.b, x.d}; }

inline Rational quad_norm(const QuadElem& x) { return x.a * x.a - x.b * x.b * Rational(x.d); }

inline Rational quad_trace(const QuadElem& x) { return 2 * x.a; }

inline QuadElem quad_inverse(const QuadElem& x) {
  Rational n = quad_norm(x);
  if (n == 0) throw std::domain_error("quadratic element is not invertible");
  return {x.a / n, -x.b / n, x.d};
}

inline Rational quad_rational_part(const QuadElem& x) {
  if (!x.is_rational()) throw std::domain_error("quadratic element is not rational");
  return x.a;
}

}  // namespace ellstab
