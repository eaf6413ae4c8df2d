#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace hpm::oracles {

// Thrown when an integration blows up; carries the abscissa reached.
class IntegrationError : public std::runtime_error {
 public:
  IntegrationError(double eta_reached, const std::string& what)
      : std::runtime_error(what), eta_reached_(eta_reached) {}
  double eta_reached() const { return eta_reached_; }

 private:
  double eta_reached_;
};

// Classical fourth-order Runge-Kutta update for an autonomous system.
template <std::size_t N, class F>
std::array<double, N> rk4_step(F&& deriv, const std::array<double, N>& y, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("rk4_step: step must be positive");
  for (double yi : y)
    if (!std::isfinite(yi)) throw std::invalid_argument("rk4_step: non-finite state");

  auto scaled_add = [](const std::array<double, N>& a, const std::array<double, N>& b,
                       double s) {
    std::array<double, N> out;
    for (std::size_t i = 0; i < N; ++i) out[i] = a[i] + s * b[i];
    return out;
  };
  const std::array<double, N> k1 = deriv(y);
  const std::array<double, N> k2 = deriv(scaled_add(y, k1, h / 2.0));
  const std::array<double, N> k3 = deriv(scaled_add(y, k2, h / 2.0));
  const std::array<double, N> k4 = deriv(scaled_add(y, k3, h));
  std::array<double, N> out;
  for (std::size_t i = 0; i < N; ++i) {
    out[i] = y[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    if (!std::isfinite(out[i]))
      throw IntegrationError(0.0, "rk4_step: non-finite result");
  }
  return out;
}

struct TrajectoryRow {
  double eta = 0.0;
  double f = 0.0;
  double fp = 0.0;
  double fpp = 0.0;
};

struct ShootOutcome {
  double fp_end = 0.0;
  std::vector<TrajectoryRow> trajectory;
};

// Integrates f''' = -f f''/2 from (0, 0, alpha) to eta_max with fixed-step
// RK4; trajectory sampled roughly every 0.01 in eta.  alpha = 0 is allowed
// (the exact f == 0 solution) so bracket probes can start low.
ShootOutcome blasius_shoot(double alpha, double eta_max, double h);

struct ShootingResult {
  double alpha = 0.0;
  double eta_max = 0.0;
  std::vector<TrajectoryRow> trajectory;
  int iterations = 0;
  double final_mismatch = 0.0;
};

// Recovers f''(0) from the far-field condition f'(eta_max) = 1 by
// bisection (10 iterations on the bracket [0.1, 1.0]) followed by secant
// iteration down to |f'(eta_max) - 1| <= tol.  At most 50 residual
// evaluations after the bracket probes.
ShootingResult blasius_find_alpha(double tol, double eta_max = 10.0, double h = 1e-3);

// Linear interpolation of f between stored trajectory samples.
double trajectory_f(const std::vector<TrajectoryRow>& trajectory, double eta);

}  // namespace hpm::oracles
