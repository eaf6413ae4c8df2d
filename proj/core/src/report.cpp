#include "hpm/report.hpp"

#include <cmath>
#include <stdexcept>

namespace hpm::oracles {

namespace {

void finish_norms(ErrorReport& report) {
  double max_err = 0.0;
  double sq_sum = 0.0;
  for (const ErrorRow& row : report.rows) {
    max_err = std::max(max_err, row.abs_err);
    sq_sum += row.abs_err * row.abs_err;
  }
  report.max_err = max_err;
  report.rms_err = report.rows.empty() ? 0.0 : std::sqrt(sq_sum / report.rows.size());
}

}  // namespace

ErrorReport blasius_compare(const blasius::Series& series, const ShootingResult& result,
                            std::span<const double> etas) {
  ErrorReport report;
  report.label = "blasius order " + std::to_string(series.order());
  report.rows.reserve(etas.size());
  for (double eta : etas) {
    const double approx = blasius::eval(series, eta).f;
    const double reference = trajectory_f(result.trajectory, eta);
    report.rows.push_back({eta, 0.0, approx, reference, std::abs(approx - reference)});
  }
  finish_norms(report);
  return report;
}

ErrorReport burgers_compare(const burgers::Series& series, std::span<const double> xs,
                            std::span<const double> ts) {
  ErrorReport report;
  report.label = "burgers order " + std::to_string(series.order());
  report.rows.reserve(xs.size() * ts.size());
  for (double x : xs) {
    for (double t : ts) {
      const auto [u, v] = burgers::eval(series, x, t);
      const auto [u_ref, v_ref] = burgers::exact(x, t);
      // u and v are identical by symmetry; the u rows are reported and
      // both errors enter the norms.
      const double err = std::max(std::abs(u - u_ref), std::abs(v - v_ref));
      report.rows.push_back({x, t, u, u_ref, err});
    }
  }
  finish_norms(report);
  return report;
}

std::pair<double, double> pde_residual(const burgers::Series& series,
                                       std::span<const double> xs,
                                       std::span<const double> ts) {
  const TrigSeries res_u = burgers::residual(series, burgers::Component::u);
  const TrigSeries res_v = burgers::residual(series, burgers::Component::v);
  double max_u = 0.0;
  double max_v = 0.0;
  for (double x : xs) {
    for (double t : ts) {
      max_u = std::max(max_u, std::abs(res_u.eval(x, t)));
      max_v = std::max(max_v, std::abs(res_v.eval(x, t)));
    }
  }
  return {max_u, max_v};
}

std::vector<double> linspace(double a, double b, int n) {
  if (n < 1) throw std::invalid_argument("linspace: need at least one point");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n));
  if (n == 1) {
    out.push_back(a);
    return out;
  }
  const double step = (b - a) / static_cast<double>(n - 1);
  for (int i = 0; i < n; ++i) out.push_back(a + step * static_cast<double>(i));
  return out;
}

}  // namespace hpm::oracles
