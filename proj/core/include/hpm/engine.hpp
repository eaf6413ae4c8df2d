#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hpm {

// Thrown when a cascade's right-hand-side builder or linear inversion
// fails; carries the offending order.
class SolveError : public std::runtime_error {
 public:
  SolveError(int order, const std::string& what)
      : std::runtime_error("hpm_solve at order " + std::to_string(order) + ": " + what),
        order_(order) {}
  int order() const { return order_; }

 private:
  int order_;
};

// One homotopy cascade: an order-zero seed, a builder producing each
// order's right-hand side from the strictly lower orders, and the inverse
// of the linear operator.  Term is Poly for Blasius and a pair of
// TrigSeries for the coupled Burgers system.
template <class Term>
struct HpmProblem {
  std::string name;
  Term order_zero;
  std::function<Term(int n, std::span<const Term> prev)> rhs_at_order;
  std::function<Term(const Term&)> invert_linear;
};

template <class Term>
struct HpmSeries {
  std::string problem;
  std::vector<Term> terms;

  int order() const { return static_cast<int>(terms.size()) - 1; }
};

// terms[0] = order_zero; terms[n] = invert_linear(rhs_at_order(n, terms[0..n)))
template <class Term>
HpmSeries<Term> hpm_solve(const HpmProblem<Term>& problem, int order) {
  if (order < 0) throw std::invalid_argument("hpm_solve: negative order");
  HpmSeries<Term> out{problem.name, {}};
  out.terms.reserve(static_cast<std::size_t>(order) + 1);
  out.terms.push_back(problem.order_zero);
  for (int n = 1; n <= order; ++n) {
    try {
      Term rhs = problem.rhs_at_order(n, std::span<const Term>(out.terms));
      out.terms.push_back(problem.invert_linear(rhs));
    } catch (const SolveError&) {
      throw;
    } catch (const std::exception& e) {
      throw SolveError(n, e.what());
    }
  }
  return out;
}

// Sum of all terms: the embedding parameter set to one.
template <class Term>
Term hpm_assemble(const HpmSeries<Term>& series) {
  if (series.terms.empty()) throw std::invalid_argument("hpm_assemble: empty series");
  Term sum = series.terms.front();
  for (std::size_t i = 1; i < series.terms.size(); ++i) sum = sum + series.terms[i];
  return sum;
}

}  // namespace hpm
