#include "hpm/blasius.hpp"

#include <cmath>
#include <stdexcept>

#include "hpm/engine.hpp"

namespace hpm::blasius {

Poly order_zero(double alpha) {
  if (!std::isfinite(alpha) || alpha <= 0.0)
    throw std::domain_error("blasius::order_zero: alpha must be positive and finite");
  return Poly::monomial(2, alpha / 2.0);
}

Poly rhs(std::span<const Poly> prev, int n) {
  if (n < 1) throw std::invalid_argument("blasius::rhs: order must be >= 1");
  if (static_cast<int>(prev.size()) != n)
    throw std::invalid_argument("blasius::rhs: prev must hold orders 0..n-1");
  Poly sum;
  for (int k = 0; k < n; ++k)
    sum += prev[static_cast<std::size_t>(k)] *
           prev[static_cast<std::size_t>(n - 1 - k)].derivative().derivative();
  return sum * -0.5;
}

Series series(double alpha, int order) {
  if (order < 0) throw std::invalid_argument("blasius::series: negative order");
  if (order > kMaxOrder) throw std::invalid_argument("blasius::series: order exceeds maximum");
  HpmProblem<Poly> problem{
      "blasius",
      order_zero(alpha),
      [](int n, std::span<const Poly> prev) { return rhs(prev, n); },
      [](const Poly& p) {
        return p.antiderivative().antiderivative().antiderivative();
      }};
  HpmSeries<Poly> solved = hpm_solve(problem, order);
  return Series{alpha, std::move(solved.terms)};
}

Point eval(const Series& series, double eta) {
  if (!std::isfinite(eta) || eta < 0.0)
    throw std::domain_error("blasius::eval: eta must be finite and non-negative");
  Poly f;
  for (const Poly& term : series.terms) f += term;
  const Poly fp = f.derivative();
  const Poly fpp = fp.derivative();
  return Point{f.eval(eta), fp.eval(eta), fpp.eval(eta)};
}

Poly residual(const Series& series) {
  Poly f;
  for (const Poly& term : series.terms) f += term;
  const Poly fpp = f.derivative().derivative();
  return fpp.derivative() + 0.5 * (f * fpp);
}

}  // namespace hpm::blasius
