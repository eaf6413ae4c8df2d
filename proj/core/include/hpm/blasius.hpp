#pragma once

#include <span>
#include <vector>

#include "hpm/poly.hpp"

namespace hpm::blasius {

// f''(0) used by the reference computation; the shooting oracle recovers
// it independently.
inline constexpr double kReferenceAlpha = 0.332057;

// Coefficient behaviour beyond this order is untested.
inline constexpr int kMaxOrder = 12;

// Truncated series for f''' + f f''/2 = 0, f(0) = f'(0) = 0, f''(0) = alpha.
// Term n is a monomial of degree 3n + 2.
struct Series {
  double alpha = 0.0;
  std::vector<Poly> terms;

  int order() const { return static_cast<int>(terms.size()) - 1; }
};

// (alpha/2) eta^2; alpha must be positive and finite.
Poly order_zero(double alpha);

// Right-hand side of the order-n cascade equation,
//   F_n''' = -1/2 * sum_{k=0}^{n-1} F_k F''_{n-1-k}.
// prev must hold exactly the terms of orders 0..n-1.
Poly rhs(std::span<const Poly> prev, int n);

// Full cascade: invert_linear is the triple antiderivative with zero
// constants (F_n(0) = F_n'(0) = F_n''(0) = 0 for n >= 1).
Series series(double alpha, int order);

struct Point {
  double f = 0.0;
  double fp = 0.0;
  double fpp = 0.0;
};

// Assembled series and its first two derivatives at eta >= 0.
Point eval(const Series& series, double eta);

// f''' + f f''/2 of the assembled truncation, as a polynomial in eta.
Poly residual(const Series& series);

}  // namespace hpm::blasius
