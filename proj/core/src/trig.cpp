#include "hpm/trig.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace hpm {

TrigSeries TrigSeries::harmonic_cos(int k, Poly coeff) {
  TrigSeries s;
  s.accumulate_cos(k, coeff);
  return s;
}

TrigSeries TrigSeries::harmonic_sin(int k, Poly coeff) {
  TrigSeries s;
  s.accumulate_sin(k, coeff);
  return s;
}

double TrigSeries::eval(double x, double t) const {
  if (!std::isfinite(x) || !std::isfinite(t))
    throw std::domain_error("TrigSeries::eval: non-finite argument");
  double acc = 0.0;
  for (const auto& [k, term] : terms_) {
    const double kx = static_cast<double>(k) * x;
    if (!term.cos_part.is_zero()) acc += term.cos_part.eval(t) * std::cos(kx);
    if (!term.sin_part.is_zero()) acc += term.sin_part.eval(t) * std::sin(kx);
  }
  return acc;
}

TrigSeries TrigSeries::diff_x() const {
  TrigSeries out;
  for (const auto& [k, term] : terms_) {
    if (k == 0) continue;
    const double dk = static_cast<double>(k);
    out.accumulate_sin(k, term.cos_part * -dk);
    out.accumulate_cos(k, term.sin_part * dk);
  }
  return out;
}

TrigSeries TrigSeries::diff_t() const {
  TrigSeries out;
  for (const auto& [k, term] : terms_) {
    out.accumulate_cos(k, term.cos_part.derivative());
    out.accumulate_sin(k, term.sin_part.derivative());
  }
  return out;
}

TrigSeries TrigSeries::integrate_t() const {
  TrigSeries out;
  for (const auto& [k, term] : terms_) {
    out.accumulate_cos(k, term.cos_part.antiderivative());
    out.accumulate_sin(k, term.sin_part.antiderivative());
  }
  return out;
}

void TrigSeries::accumulate_cos(int k, const Poly& p) {
  if (p.is_zero()) return;
  k = std::abs(k);
  TrigTerm& term = terms_[k];
  term.harmonic = k;
  term.cos_part += p;
  prune(k);
}

void TrigSeries::accumulate_sin(int k, const Poly& p) {
  if (p.is_zero()) return;
  if (k == 0) return;  // sin 0 == 0
  const bool flip = k < 0;
  k = std::abs(k);
  TrigTerm& term = terms_[k];
  term.harmonic = k;
  if (flip)
    term.sin_part -= p;
  else
    term.sin_part += p;
  prune(k);
}

TrigSeries& TrigSeries::operator+=(const TrigSeries& rhs) {
  for (const auto& [k, term] : rhs.terms_) {
    accumulate_cos(k, term.cos_part);
    accumulate_sin(k, term.sin_part);
  }
  return *this;
}

TrigSeries& TrigSeries::operator-=(const TrigSeries& rhs) {
  for (const auto& [k, term] : rhs.terms_) {
    accumulate_cos(k, -term.cos_part);
    accumulate_sin(k, -term.sin_part);
  }
  return *this;
}

TrigSeries& TrigSeries::operator*=(double s) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second.cos_part *= s;
    it->second.sin_part *= s;
    if (it->second.cos_part.is_zero() && it->second.sin_part.is_zero())
      it = terms_.erase(it);
    else
      ++it;
  }
  return *this;
}

// cos A cos B = [cos(A-B) + cos(A+B)] / 2
// sin A sin B = [cos(A-B) - cos(A+B)] / 2
// sin A cos B = [sin(A+B) + sin(A-B)] / 2
// cos A sin B = [sin(A+B) - sin(A-B)] / 2
TrigSeries operator*(const TrigSeries& a, const TrigSeries& b) {
  TrigSeries out;
  for (const auto& [ka, ta] : a.terms_) {
    for (const auto& [kb, tb] : b.terms_) {
      const int sum = ka + kb;
      const int diff = ka - kb;
      if (!ta.cos_part.is_zero() && !tb.cos_part.is_zero()) {
        const Poly half = (ta.cos_part * tb.cos_part) * 0.5;
        out.accumulate_cos(diff, half);
        out.accumulate_cos(sum, half);
      }
      if (!ta.sin_part.is_zero() && !tb.sin_part.is_zero()) {
        const Poly half = (ta.sin_part * tb.sin_part) * 0.5;
        out.accumulate_cos(diff, half);
        out.accumulate_cos(sum, -half);
      }
      if (!ta.sin_part.is_zero() && !tb.cos_part.is_zero()) {
        const Poly half = (ta.sin_part * tb.cos_part) * 0.5;
        out.accumulate_sin(sum, half);
        out.accumulate_sin(diff, half);
      }
      if (!ta.cos_part.is_zero() && !tb.sin_part.is_zero()) {
        const Poly half = (ta.cos_part * tb.sin_part) * 0.5;
        out.accumulate_sin(sum, half);
        out.accumulate_sin(diff, -half);
      }
    }
  }
  return out;
}

void TrigSeries::prune(int k) {
  auto it = terms_.find(k);
  if (it != terms_.end() && it->second.cos_part.is_zero() && it->second.sin_part.is_zero())
    terms_.erase(it);
}

bool approx_equal(const TrigSeries& a, const TrigSeries& b, double tol) {
  auto covered = [&](const TrigSeries& lhs, const TrigSeries& rhs) {
    for (const auto& [k, term] : lhs.terms()) {
      auto it = rhs.terms().find(k);
      const TrigTerm empty{k, {}, {}};
      const TrigTerm& other = it == rhs.terms().end() ? empty : it->second;
      if (!approx_equal(term.cos_part, other.cos_part, tol)) return false;
      if (!approx_equal(term.sin_part, other.sin_part, tol)) return false;
    }
    return true;
  };
  return covered(a, b) && covered(b, a);
}

}  // namespace hpm
