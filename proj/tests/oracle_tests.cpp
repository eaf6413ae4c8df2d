#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "hpm/blasius.hpp"
#include "hpm/burgers.hpp"
#include "hpm/report.hpp"
#include "hpm/shooting.hpp"

using namespace hpm::oracles;

namespace {

std::map<std::string, double> load_golden(const std::string& path) {
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.good(), "cannot open golden file: " << path);
  std::map<std::string, double> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string key, eq;
    double value;
    ls >> key >> eq >> value;
    REQUIRE(eq == "=");
    out[key] = value;
  }
  return out;
}

}  // namespace

TEST_CASE("rk4 single step") {
  auto identity = [](const std::array<double, 1>& y) { return y; };
  const auto grown = rk4_step(identity, std::array<double, 1>{1.0}, 0.1);
  // Truncated exponential: 1 + h + h^2/2 + h^3/6 + h^4/24
  CHECK(grown[0] == doctest::Approx(1.1051708333333333).epsilon(1e-15));

  auto flat = [](const std::array<double, 1>&) { return std::array<double, 1>{0.0}; };
  CHECK(rk4_step(flat, std::array<double, 1>{3.5}, 0.2)[0] == 3.5);

  auto unit = [](const std::array<double, 1>&) { return std::array<double, 1>{1.0}; };
  CHECK(rk4_step(unit, std::array<double, 1>{0.0}, 0.5)[0] == 0.5);

  CHECK_THROWS_AS((void)rk4_step(identity, std::array<double, 1>{1.0}, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)rk4_step(identity, std::array<double, 1>{std::nan("")}, 0.1),
                  std::invalid_argument);
}

TEST_CASE("rk4 order of accuracy") {
  auto identity = [](const std::array<double, 1>& y) { return y; };
  auto integrate = [&](double h) {
    std::array<double, 1> y{1.0};
    const long steps = std::lround(1.0 / h);
    for (long i = 0; i < steps; ++i) y = rk4_step(identity, y, h);
    return std::abs(y[0] - std::exp(1.0));
  };
  const double coarse = integrate(0.01);
  const double fine = integrate(0.005);
  const double ratio = coarse / fine;
  CHECK(ratio > 12.0);
  CHECK(ratio < 20.0);
}

TEST_CASE("blasius shooting trajectories") {
  const auto run = blasius_shoot(hpm::blasius::kReferenceAlpha, 10.0, 1e-3);
  CHECK(run.fp_end == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(run.trajectory.front().eta == 0.0);
  CHECK(run.trajectory.front().f == 0.0);
  CHECK(run.trajectory.front().fpp ==
        doctest::Approx(hpm::blasius::kReferenceAlpha).epsilon(1e-15));
  for (std::size_t i = 1; i < run.trajectory.size(); ++i)
    CHECK(run.trajectory[i].eta > run.trajectory[i - 1].eta);

  const auto zero = blasius_shoot(0.0, 10.0, 1e-3);
  CHECK(zero.fp_end == 0.0);

  CHECK_THROWS_AS((void)blasius_shoot(1.0, -1.0, 1e-3), std::invalid_argument);
}

TEST_CASE("shooting recovers the initial curvature") {
  const auto result = blasius_find_alpha(1e-10);
  CHECK(result.alpha == doctest::Approx(0.332057).epsilon(2e-5));
  CHECK(std::abs(result.alpha - 0.332057) < 5e-6);
  CHECK(result.alpha > 0.33);
  CHECK(result.alpha < 0.34);
  CHECK(result.iterations <= 50);
  CHECK(result.final_mismatch <= 1e-10);

  // Self-consistency: re-integrating at the converged alpha reproduces the
  // mismatch.
  const auto rerun = blasius_shoot(result.alpha, result.eta_max, 1e-3);
  CHECK(std::abs(rerun.fp_end - 1.0) <= 1e-10);

  // A looser tolerance stays consistent.
  const auto loose = blasius_find_alpha(1e-4);
  CHECK(std::abs(loose.alpha - 0.332057) < 1e-3);
  CHECK(loose.iterations <= result.iterations);
}

TEST_CASE("bracket endpoints straddle the root") {
  CHECK(blasius_shoot(0.1, 10.0, 1e-3).fp_end - 1.0 < 0.0);
  CHECK(blasius_shoot(1.0, 10.0, 1e-3).fp_end - 1.0 > 0.0);
}

TEST_CASE("golden oracle constants") {
  const auto golden = load_golden(HPM_GOLDEN_PATH);
  const auto result = blasius_find_alpha(1e-10);
  CHECK(result.alpha == doctest::Approx(golden.at("blasius_alpha")).epsilon(1e-9));

  const auto one = blasius_shoot(1.0, 10.0, 1e-3);
  CHECK(one.fp_end == doctest::Approx(golden.at("blasius_fprime_eta10_alpha1")).epsilon(1e-9));
  CHECK(one.fp_end == doctest::Approx(2.085).epsilon(1e-3));

  CHECK(trajectory_f(result.trajectory, 1.0) ==
        doctest::Approx(golden.at("blasius_f_eta1")).epsilon(1e-8));
  CHECK(trajectory_f(result.trajectory, 2.0) ==
        doctest::Approx(golden.at("blasius_f_eta2")).epsilon(1e-8));
}

TEST_CASE("series versus shooting oracle") {
  const auto result = blasius_find_alpha(1e-10);
  const auto series = hpm::blasius::series(hpm::blasius::kReferenceAlpha, 3);

  const std::vector<double> origin{0.0};
  const auto at0 = blasius_compare(series, result, origin);
  CHECK(at0.rows.size() == 1);
  CHECK(at0.max_err == 0.0);

  const std::vector<double> near{1.0};
  CHECK(blasius_compare(series, result, near).max_err <= 2e-4);

  // Outside the validity range the error grows and is reported as-is.
  const std::vector<double> far{4.0};
  const auto report = blasius_compare(series, result, far);
  CHECK(report.max_err > 1e-2);

  for (int order = 4; order <= 6; ++order) {
    const auto high = hpm::blasius::series(hpm::blasius::kReferenceAlpha, order);
    const std::vector<double> etas{0.5, 1.0, 1.5};
    CHECK(blasius_compare(high, result, etas).max_err <= 1e-4);
  }

  const std::vector<double> outside{result.eta_max + 1.0};
  CHECK_THROWS_AS((void)blasius_compare(series, result, outside), std::domain_error);
}

TEST_CASE("burgers error report") {
  const auto xs = linspace(0.0, 2.0 * std::numbers::pi, 65);
  const auto ts = linspace(0.0, 1.0, 21);

  const auto order3 = hpm::burgers::series(3);
  const auto report3 = burgers_compare(order3, xs, ts);
  CHECK(report3.max_err <= 1.0 / 24.0 + 1e-12);
  CHECK(report3.rms_err <= report3.max_err);

  const std::vector<double> t0{0.0};
  CHECK(burgers_compare(order3, xs, t0).max_err <= 1e-15);

  const auto order8 = hpm::burgers::series(8);
  CHECK(burgers_compare(order8, xs, ts).max_err <= 3e-6);
}

TEST_CASE("burgers pde residual") {
  const auto xs = linspace(0.0, 2.0 * std::numbers::pi, 65);
  const auto ts_half = linspace(0.0, 0.5, 21);

  // High-order truncation is the exact solution up to its Taylor tail.
  const auto order12 = hpm::burgers::series(12);
  const auto [r12u, r12v] = pde_residual(order12, xs, ts_half);
  CHECK(r12u <= 1e-9);
  CHECK(r12v <= 1e-9);

  // Order zero: u_t = 0 but u_xx = -cos x.
  const auto order0 = hpm::burgers::series(0);
  const auto [r0u, r0v] = pde_residual(order0, xs, ts_half);
  CHECK(r0u == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r0v == doctest::Approx(1.0).epsilon(1e-12));

  double prev = 0.0;
  for (int order = 0; order <= 6; ++order) {
    const auto series = hpm::burgers::series(order);
    const auto [ru, rv] = pde_residual(series, xs, ts_half);
    if (order > 0) {
      CHECK(ru < prev);
      CHECK(std::max(ru, rv) < prev);
    }
    prev = std::max(ru, rv);
  }
}
