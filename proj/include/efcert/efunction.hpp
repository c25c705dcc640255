#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "efcert/diffop.hpp"
#include "efcert/rootset.hpp"

namespace efcert {

/// |a_n| <= K * C^n for every n.
struct GrowthBound {
  Rational K = 1;
  Rational C = 1;
};

/// f(z) = sum a_n z^n / n! with exact rational a_n.
class EFunction {
 public:
  /// Returns a_0 .. a_{count-1}. Must be pure: two calls never share state.
  using Generator = std::function<std::vector<Rational>(std::size_t count)>;

  EFunction(std::string name, DiffOperator annihilator, std::vector<Rational> initial_values, Generator generator);

  const std::string& name() const { return name_; }
  const DiffOperator& annihilator() const { return annihilator_; }
  const std::vector<Rational>& initial_values() const { return initial_values_; }
  std::vector<Rational> coefficients(std::size_t count) const { return generator_(count); }

  const std::optional<RootSet>& closed_form_singularities() const { return closed_form_; }
  /// Rigorous coefficient bound, when the construction provides one.
  const std::optional<GrowthBound>& growth_bound() const { return bound_; }

  EFunction& with_closed_form(RootSet s);
  EFunction& with_growth_bound(GrowthBound b);
  EFunction& renamed(std::string name);

 private:
  std::string name_;
  DiffOperator annihilator_;
  std::vector<Rational> initial_values_;
  Generator generator_;
  std::optional<RootSet> closed_form_;
  std::optional<GrowthBound> bound_;
};

struct HypergeometricParams {
  std::vector<Rational> upper;  // a_1 .. a_r
  std::vector<Rational> lower;  // b_1 .. b_s

  /// s - r; requires valid().
  unsigned k() const { return static_cast<unsigned>(lower.size() - upper.size()); }
  /// Throws InvalidInput unless s > r >= 0 and no b_j is a nonpositive integer.
  void validate() const;
};

EFunction ef_exp();
EFunction ef_bessel_j0();
/// Si(z) = integral_0^z sin(t)/t dt.
EFunction ef_sin_integral();

/// sum_n (a_1)_n..(a_r)_n / ((b_1)_n..(b_s)_n) z^(k n), k = s - r.
EFunction ef_hypergeometric(const HypergeometricParams& params);

/// Function given by an annihilator and E-normalised initial values; the
/// coefficient stream comes from the operator's recurrence. More initial
/// values than the order may be given when the recurrence needs them.
EFunction ef_from_ode(std::string name, DiffOperator annihilator, std::vector<Rational> initial_values);

/// f(lambda z); lambda must be a nonzero rational.
EFunction ef_scale(const EFunction& f, const AlgebraicNumber& lambda);
EFunction ef_scale(const EFunction& f, const Rational& lambda);

struct SumOptions {
  /// Largest order tried; 0 means ord f + ord g.
  unsigned max_order = 0;
  unsigned max_degree = 24;
  /// Extra coefficients checked beyond the equations used by the ansatz.
  unsigned validation_terms = 96;
};

/// f + g, with an annihilator found by an undetermined-coefficients ansatz
/// and validated on a longer prefix. Throws Unsupported when the caps are hit.
EFunction ef_sum(const EFunction& f, const EFunction& g, const SumOptions& options = {});
EFunction ef_derivative(const EFunction& f);
EFunction ef_mul_poly(const EFunction& f, const Polynomial& p);

/// The polynomial L_i of the combination below: degree n, L_i(alpha_j) = delta_ij.
Polynomial lagrange_basis(const std::vector<Rational>& points, std::size_t i);
/// g(z) = sum_i L_i(z) f(z / alpha_i), so that g(alpha_j) = f(1) for every j.
EFunction ef_lagrange_combo(const EFunction& f, const std::vector<Rational>& points);

/// a_0 .. a_n (n + 1 coefficients), i.e. the prefix of sum a_n z^n.
TruncatedSeries psi_series(const EFunction& f, std::size_t n);

struct GrowthReport {
  /// Smallest C with |a_k| <= C^k and d_k <= C^k over the prefix (k >= 1).
  double c_estimate = 1;
  std::vector<std::string> violations;
  std::size_t prefix = 0;
};

/// Heuristic test of geometric growth of |a_k| and of the lcm d_k of the
/// denominators of a_0..a_k over a prefix of length n >= 8.
GrowthReport growth_check(const EFunction& f, std::size_t n);

}  // namespace efcert
