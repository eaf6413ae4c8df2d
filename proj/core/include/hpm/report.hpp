#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hpm/blasius.hpp"
#include "hpm/burgers.hpp"
#include "hpm/shooting.hpp"

namespace hpm::oracles {

struct ErrorRow {
  double x = 0.0;  // eta for Blasius rows
  double t = 0.0;  // unused for Blasius rows
  double approx = 0.0;
  double reference = 0.0;
  double abs_err = 0.0;
};

struct ErrorReport {
  std::string label;
  std::vector<ErrorRow> rows;
  double max_err = 0.0;
  double rms_err = 0.0;
};

// Assembled series f against the interpolated shooting trajectory.
ErrorReport blasius_compare(const blasius::Series& series, const ShootingResult& result,
                            std::span<const double> etas);

// Partial sums against cos x e^-t over the tensor grid; both components
// enter the norms.
ErrorReport burgers_compare(const burgers::Series& series, std::span<const double> xs,
                            std::span<const double> ts);

// Max of |u_t - u_xx - 2uu_x + (uv)_x| over the grid, and the v analog.
std::pair<double, double> pde_residual(const burgers::Series& series,
                                       std::span<const double> xs,
                                       std::span<const double> ts);

// Convenience: n evenly spaced points from a to b inclusive (n == 1 gives {a}).
std::vector<double> linspace(double a, double b, int n);

}  // namespace hpm::oracles
