#pragma once

#include <string>
#include <vector>

#include "efcert/criterion.hpp"

namespace efcert {

/// Complex ball with exact rational midpoint. The value it stands for lies
/// within `radius` of `mid`; `heuristic` marks an empirically chosen tail.
struct Ball {
  ComplexRational mid;
  Rational radius = 0;
  bool heuristic = false;

  bool contains(const ComplexRational& z) const;
  bool contains(const Ball& other) const;
  std::string to_string(unsigned digits) const;
};

/// sum_n a_(kn) x^n / (kn)!, i.e. f at a k-th root of x when f(z) is a series
/// in z^k; root = 1 is plain evaluation. The radius is 10^-digits / 2 and
/// covers the truncation, rounding and the radius of x. Rigorous when f has a
/// growth bound, otherwise marked heuristic. Throws PrecisionExceeded when the
/// working precision would pass policy.max_bits.
Ball eval_efunction(const EFunction& f, const ComplexBox& x, unsigned digits, const PrecisionPolicy& policy = {},
                    unsigned root = 1);
Ball eval_efunction(const EFunction& f, const AlgebraicNumber& x, unsigned digits, const PrecisionPolicy& policy = {},
                    unsigned root = 1);
Ball eval_term(const EvalTerm& term, unsigned digits, const PrecisionPolicy& policy = {});

struct RelationReport {
  bool found = false;
  /// Set when found.
  std::vector<Integer> coefficients;
  /// Rigorous upper bound for |sum c_k v_k| when found.
  Rational residual_bound = 0;
  /// No nonzero relation with max |c_k| <= coeff_bound holds within the
  /// resolution 10^-digits (times the 1-norm of c). Empirical evidence only.
  bool excluded = false;
  unsigned digits = 0;
  Integer coeff_bound = 0;
  std::string note;
};

/// LLL reduction of the lattice spanned by (e_k, W re v_k, W im v_k) with
/// W = 10^digits. Throws PrecisionExceeded when a radius is not below
/// 10^-(digits + 10).
RelationReport find_integer_relation(const std::vector<Ball>& values, const Integer& coeff_bound, unsigned digits);

/// LLL-reduces the rows in place (delta = 3/4).
void lll_reduce(std::vector<std::vector<Integer>>& basis);

struct FalsifyReport {
  bool skipped = false;
  std::string notice;
  std::vector<std::string> labels;  // "1" then the certificate's terms
  std::vector<Ball> values;
  RelationReport relation;
  /// A relation was found for a certified family.
  bool contradiction = false;
};

/// Evaluates 1 and the certificate's terms and searches an integer relation.
FalsifyReport falsify(const Certificate& cert, unsigned digits, const Integer& coeff_bound,
                      const PrecisionPolicy& policy = {});

}  // namespace efcert
