#pragma once

#include <span>
#include <utility>
#include <vector>

#include "hpm/trig.hpp"

namespace hpm::burgers {

// Which component of the coupled system a cascade step targets.
enum class Component { u, v };

// Truncated series for the coupled system
//   u_t - u_xx - 2 u u_x + (uv)_x = 0
//   v_t - v_xx - 2 v v_x + (uv)_x = 0
// with u(x,0) = v(x,0) = cos x.  With this data the two components stay
// identical and term n is (-1)^n t^n / n! * cos x.
struct Series {
  std::vector<TrigSeries> u_terms;
  std::vector<TrigSeries> v_terms;

  int order() const { return static_cast<int>(u_terms.size()) - 1; }
};

// (cos x, cos x)
std::pair<TrigSeries, TrigSeries> initial();

// Right-hand side of the order-n cascade equation for one component:
//   d u_n / dt = (u_{n-1})_xx
//              + sum_{k=0}^{n-1} [ 2 u_k (u_j)_x - u_k (v_j)_x - v_k (u_j)_x ],
// j = n-1-k, and the u<->v swap for the v component.  prev_u / prev_v must
// each hold exactly the terms of orders 0..n-1.
TrigSeries rhs(std::span<const TrigSeries> prev_u, std::span<const TrigSeries> prev_v,
               int n, Component which);

// Full cascade: invert_linear integrates in t with zero constant, which
// enforces u_n(x, 0) = 0 for n >= 1.
Series series(int order);

// Closed-form reference (cos x e^-t, cos x e^-t).
std::pair<double, double> exact(double x, double t);

// Assembled partial sums at (x, t).
std::pair<double, double> eval(const Series& series, double x, double t);

// u_t - u_xx - 2 u u_x + (uv)_x of the assembled truncation (or the
// v analog), kept symbolic.
TrigSeries residual(const Series& series, Component which);

}  // namespace hpm::burgers
