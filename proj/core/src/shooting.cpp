#include "hpm/shooting.hpp"

#include <algorithm>
#include <cmath>

namespace hpm::oracles {

ShootOutcome blasius_shoot(double alpha, double eta_max, double h) {
  if (!std::isfinite(alpha) || alpha < 0.0)
    throw std::invalid_argument("blasius_shoot: alpha must be finite and >= 0");
  if (!(eta_max > 0.0) || !(h > 0.0))
    throw std::invalid_argument("blasius_shoot: eta_max and h must be positive");

  auto deriv = [](const std::array<double, 3>& y) {
    return std::array<double, 3>{y[1], y[2], -0.5 * y[0] * y[2]};
  };

  const long n_steps = std::lround(eta_max / h);
  const long stride = std::max<long>(1, std::lround(0.01 / h));
  std::array<double, 3> y{0.0, 0.0, alpha};

  ShootOutcome out;
  out.trajectory.reserve(static_cast<std::size_t>(n_steps / stride) + 2);
  out.trajectory.push_back({0.0, y[0], y[1], y[2]});
  for (long i = 0; i < n_steps; ++i) {
    try {
      y = rk4_step(deriv, y, h);
    } catch (const IntegrationError&) {
      throw IntegrationError(static_cast<double>(i) * h,
                             "blasius_shoot: integration blew up");
    }
    if ((i + 1) % stride == 0 || i + 1 == n_steps)
      out.trajectory.push_back({static_cast<double>(i + 1) * h, y[0], y[1], y[2]});
  }
  out.fp_end = y[1];
  return out;
}

ShootingResult blasius_find_alpha(double tol, double eta_max, double h) {
  if (!(tol > 0.0)) throw std::invalid_argument("blasius_find_alpha: tol must be positive");

  auto mismatch = [&](double alpha) { return blasius_shoot(alpha, eta_max, h).fp_end - 1.0; };

  double lo = 0.1;
  double hi = 1.0;
  double g_lo = mismatch(lo);
  double g_hi = mismatch(hi);
  if (g_lo >= 0.0 || g_hi <= 0.0)
    throw std::runtime_error("blasius_find_alpha: no sign change in bracket [0.1, 1.0]");

  constexpr int kMaxIterations = 50;
  int iterations = 0;
  double a = lo;
  double g_a = g_lo;
  double b = hi;
  double g_b = g_hi;

  for (int i = 0; i < 10; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double g_mid = mismatch(mid);
    ++iterations;
    a = b;
    g_a = g_b;
    b = mid;
    g_b = g_mid;
    if (g_mid < 0.0) {
      lo = mid;
      g_lo = g_mid;
    } else {
      hi = mid;
      g_hi = g_mid;
    }
    if (std::abs(g_mid) <= tol) break;
  }

  while (std::abs(g_b) > tol) {
    if (iterations >= kMaxIterations)
      throw std::runtime_error("blasius_find_alpha: iteration limit exceeded");
    const double denom = g_b - g_a;
    double next;
    if (denom == 0.0)
      next = 0.5 * (lo + hi);  // fall back to the bisection bracket
    else
      next = b - g_b * (b - a) / denom;
    if (!(next > lo) || !(next < hi)) next = 0.5 * (lo + hi);
    const double g_next = mismatch(next);
    ++iterations;
    a = b;
    g_a = g_b;
    b = next;
    g_b = g_next;
    if (g_next < 0.0) {
      lo = std::max(lo, next);
      g_lo = g_next;
    } else {
      hi = std::min(hi, next);
      g_hi = g_next;
    }
  }

  ShootOutcome final_run = blasius_shoot(b, eta_max, h);
  ShootingResult result;
  result.alpha = b;
  result.eta_max = eta_max;
  result.trajectory = std::move(final_run.trajectory);
  result.iterations = iterations;
  result.final_mismatch = std::abs(final_run.fp_end - 1.0);
  return result;
}

double trajectory_f(const std::vector<TrajectoryRow>& trajectory, double eta) {
  if (trajectory.empty()) throw std::domain_error("trajectory_f: empty trajectory");
  if (eta < trajectory.front().eta || eta > trajectory.back().eta)
    throw std::domain_error("trajectory_f: eta outside trajectory range");
  auto it = std::lower_bound(trajectory.begin(), trajectory.end(), eta,
                             [](const TrajectoryRow& row, double e) { return row.eta < e; });
  if (it == trajectory.begin()) return it->f;
  const TrajectoryRow& hi = *it;
  const TrajectoryRow& lo = *(it - 1);
  const double w = (eta - lo.eta) / (hi.eta - lo.eta);
  return lo.f + w * (hi.f - lo.f);
}

}  // namespace hpm::oracles
