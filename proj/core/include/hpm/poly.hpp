#pragma once

#include <span>
#include <vector>

namespace hpm {

// Dense univariate polynomial over double, index i holding the coefficient
// of x^i.  Canonical form: no trailing zero coefficients; the zero
// polynomial is the empty coefficient sequence.  Immutable in spirit: all
// operations return new values.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<double> coeffs);

  static Poly constant(double c);
  static Poly monomial(int degree, double coeff);

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  // Coefficient of x^i; zero beyond the stored degree.
  double coeff(int i) const;
  std::span<const double> coeffs() const { return coeffs_; }

  // Horner evaluation.  Throws std::domain_error for non-finite x.
  double eval(double x) const;

  Poly derivative() const;
  // Antiderivative with the integration constant fixed to zero.
  Poly antiderivative() const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(double s);

  friend Poly operator+(Poly a, const Poly& b) {
    a += b;
    return a;
  }
  friend Poly operator-(Poly a, const Poly& b) {
    a -= b;
    return a;
  }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly p, double s) {
    p *= s;
    return p;
  }
  friend Poly operator*(double s, Poly p) {
    p *= s;
    return p;
  }
  friend Poly operator-(Poly p) {
    p *= -1.0;
    return p;
  }

 private:
  void trim();

  std::vector<double> coeffs_;
};

// Coefficient-wise comparison of canonical forms, absolute tolerance.
bool approx_equal(const Poly& a, const Poly& b, double tol = 1e-14);

}  // namespace hpm
