#include "hpm/burgers.hpp"

#include <cmath>
#include <stdexcept>

#include "hpm/engine.hpp"

namespace hpm::burgers {

namespace {

struct Pair {
  TrigSeries u;
  TrigSeries v;

  friend Pair operator+(const Pair& a, const Pair& b) { return {a.u + b.u, a.v + b.v}; }
};

}  // namespace

std::pair<TrigSeries, TrigSeries> initial() {
  TrigSeries cosx = TrigSeries::harmonic_cos(1, Poly::constant(1.0));
  return {cosx, cosx};
}

TrigSeries rhs(std::span<const TrigSeries> prev_u, std::span<const TrigSeries> prev_v,
               int n, Component which) {
  if (n < 1) throw std::invalid_argument("burgers::rhs: order must be >= 1");
  if (static_cast<int>(prev_u.size()) != n || static_cast<int>(prev_v.size()) != n)
    throw std::invalid_argument("burgers::rhs: prev lists must hold orders 0..n-1");

  const std::span<const TrigSeries> own = which == Component::u ? prev_u : prev_v;
  TrigSeries out = own[static_cast<std::size_t>(n - 1)].diff_x().diff_x();
  for (int k = 0; k < n; ++k) {
    const std::size_t i = static_cast<std::size_t>(k);
    const std::size_t j = static_cast<std::size_t>(n - 1 - k);
    // Grouped per k so that identical u and v data cancels the nonlinear
    // contributions exactly, coefficient by coefficient.
    TrigSeries contrib = 2.0 * (own[i] * own[j].diff_x());
    contrib -= prev_u[i] * prev_v[j].diff_x();
    contrib -= prev_v[i] * prev_u[j].diff_x();
    out += contrib;
  }
  return out;
}

Series series(int order) {
  if (order < 0) throw std::invalid_argument("burgers::series: negative order");
  auto [u0, v0] = initial();
  HpmProblem<Pair> problem{
      "burgers",
      Pair{u0, v0},
      [](int n, std::span<const Pair> prev) {
        std::vector<TrigSeries> us;
        std::vector<TrigSeries> vs;
        us.reserve(prev.size());
        vs.reserve(prev.size());
        for (const Pair& p : prev) {
          us.push_back(p.u);
          vs.push_back(p.v);
        }
        return Pair{rhs(us, vs, n, Component::u), rhs(us, vs, n, Component::v)};
      },
      [](const Pair& p) { return Pair{p.u.integrate_t(), p.v.integrate_t()}; }};
  HpmSeries<Pair> solved = hpm_solve(problem, order);
  Series out;
  out.u_terms.reserve(solved.terms.size());
  out.v_terms.reserve(solved.terms.size());
  for (Pair& p : solved.terms) {
    out.u_terms.push_back(std::move(p.u));
    out.v_terms.push_back(std::move(p.v));
  }
  return out;
}

std::pair<double, double> exact(double x, double t) {
  if (!std::isfinite(x) || !std::isfinite(t))
    throw std::domain_error("burgers::exact: non-finite argument");
  const double value = std::cos(x) * std::exp(-t);
  return {value, value};
}

std::pair<double, double> eval(const Series& series, double x, double t) {
  TrigSeries u_sum;
  TrigSeries v_sum;
  for (const TrigSeries& term : series.u_terms) u_sum += term;
  for (const TrigSeries& term : series.v_terms) v_sum += term;
  return {u_sum.eval(x, t), v_sum.eval(x, t)};
}

TrigSeries residual(const Series& series, Component which) {
  TrigSeries u_sum;
  TrigSeries v_sum;
  for (const TrigSeries& term : series.u_terms) u_sum += term;
  for (const TrigSeries& term : series.v_terms) v_sum += term;
  const TrigSeries& own = which == Component::u ? u_sum : v_sum;
  TrigSeries res = own.diff_t();
  res -= own.diff_x().diff_x();
  res -= 2.0 * (own * own.diff_x());
  res += (u_sum * v_sum).diff_x();
  return res;
}

}  // namespace hpm::burgers
