#include "hpm/poly.hpp"

#include <cmath>
#include <stdexcept>

namespace hpm {

Poly::Poly(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::constant(double c) { return Poly({c}); }

Poly Poly::monomial(int degree, double coeff) {
  if (degree < 0) throw std::invalid_argument("Poly::monomial: negative degree");
  std::vector<double> c(static_cast<std::size_t>(degree) + 1, 0.0);
  c.back() = coeff;
  return Poly(std::move(c));
}

double Poly::coeff(int i) const {
  if (i < 0) throw std::invalid_argument("Poly::coeff: negative index");
  if (static_cast<std::size_t>(i) >= coeffs_.size()) return 0.0;
  return coeffs_[static_cast<std::size_t>(i)];
}

double Poly::eval(double x) const {
  if (!std::isfinite(x)) throw std::domain_error("Poly::eval: non-finite argument");
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly{};
  std::vector<double> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    out[i - 1] = static_cast<double>(i) * coeffs_[i];
  return Poly(std::move(out));
}

Poly Poly::antiderivative() const {
  if (coeffs_.empty()) return Poly{};
  std::vector<double> out(coeffs_.size() + 1, 0.0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    out[i + 1] = coeffs_[i] / static_cast<double>(i + 1);
  return Poly(std::move(out));
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0.0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0.0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(double s) {
  for (double& c : coeffs_) c *= s;
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly{};
  std::vector<double> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Poly(std::move(out));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

bool approx_equal(const Poly& a, const Poly& b, double tol) {
  const int n = std::max(a.degree(), b.degree());
  for (int i = 0; i <= n; ++i)
    if (std::abs(a.coeff(i) - b.coeff(i)) > tol) return false;
  return true;
}

}  // namespace hpm
