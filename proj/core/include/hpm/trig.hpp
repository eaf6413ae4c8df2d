#pragma once

#include <map>

#include "hpm/poly.hpp"

namespace hpm {

// One harmonic of a trigonometric series:
//   cos(kx) * cos_part(t) + sin(kx) * sin_part(t).
// For harmonic 0 the sin part is identically zero.
struct TrigTerm {
  int harmonic = 0;
  Poly cos_part;
  Poly sin_part;
};

// Finite sum over harmonics k >= 0 of cos(kx)/sin(kx) carrying
// polynomial-in-t coefficients.  Canonical form: at most one term per
// harmonic, and no term whose both parts are zero.
class TrigSeries {
 public:
  TrigSeries() = default;

  static TrigSeries harmonic_cos(int k, Poly coeff);
  static TrigSeries harmonic_sin(int k, Poly coeff);

  bool empty() const { return terms_.empty(); }
  const std::map<int, TrigTerm>& terms() const { return terms_; }

  // Sum over harmonics at (x, t).  Throws std::domain_error for
  // non-finite arguments.
  double eval(double x, double t) const;

  // cos(kx) -> -k sin(kx), sin(kx) -> k cos(kx).
  TrigSeries diff_x() const;
  // Term-wise d/dt of the polynomial parts.
  TrigSeries diff_t() const;
  // Term-wise antiderivative in t, zero integration constant.
  TrigSeries integrate_t() const;

  // Signed accumulation; negative k is folded onto |k| via the parity of
  // cos and sin, and sin contributions at harmonic 0 vanish.
  void accumulate_cos(int k, const Poly& p);
  void accumulate_sin(int k, const Poly& p);

  TrigSeries& operator+=(const TrigSeries& rhs);
  TrigSeries& operator-=(const TrigSeries& rhs);
  TrigSeries& operator*=(double s);

  friend TrigSeries operator+(TrigSeries a, const TrigSeries& b) {
    a += b;
    return a;
  }
  friend TrigSeries operator-(TrigSeries a, const TrigSeries& b) {
    a -= b;
    return a;
  }
  // Product via the product-to-sum identities; t-polynomials multiply
  // through.
  friend TrigSeries operator*(const TrigSeries& a, const TrigSeries& b);
  friend TrigSeries operator*(TrigSeries s, double c) {
    s *= c;
    return s;
  }
  friend TrigSeries operator*(double c, TrigSeries s) {
    s *= c;
    return s;
  }
  friend TrigSeries operator-(TrigSeries s) {
    s *= -1.0;
    return s;
  }

 private:
  void prune(int k);

  std::map<int, TrigTerm> terms_;
};

bool approx_equal(const TrigSeries& a, const TrigSeries& b, double tol = 1e-14);

}  // namespace hpm
