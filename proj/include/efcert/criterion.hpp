#pragma once

#include <stop_token>
#include <string>
#include <utility>
#include <vector>

#include "efcert/efunction.hpp"

namespace efcert {

enum class Verdict { CertifiedIndependent, Inconclusive };
enum class Outcome { Satisfied, Violated };

const char* verdict_name(Verdict v);
const char* outcome_name(Outcome o);

struct Hypothesis {
  std::string description;
  /// Names the criterion the check belongs to, e.g. "pairwise disjoint singularity sets".
  std::string anchor;
  Outcome outcome = Outcome::Violated;
  std::string witness;
};

/// One number of a certified family: f evaluated at a root y of y^root = point.
/// For the hypergeometric family F(z^k) this is F evaluated at `point` itself.
struct EvalTerm {
  std::string label;
  EFunction function;
  AlgebraicNumber point;
  unsigned root = 1;
};

struct Certificate {
  std::string kind;
  Verdict verdict = Verdict::Inconclusive;
  std::string statement;
  std::vector<Hypothesis> hypotheses;
  std::string caveat;
  /// Conditions the conclusion still depends on.
  std::vector<std::string> conditional_on;
  std::vector<std::string> inputs;
  std::vector<std::string> notes;
  /// The numbers (besides 1) the statement is about, as far as they can be
  /// evaluated; empty when there is nothing to cross-check.
  std::vector<EvalTerm> terms;
};

extern const char* const kAlgebraicCaveat;

/// 1, f_1(alpha), .., f_n(alpha) from pairwise disjoint singularity sets.
Certificate certify_main(const std::vector<EFunction>& functions, const AlgebraicNumber& alpha,
                         const PrecisionPolicy& policy = {}, std::stop_token stop = {});
/// 1, f_1(alpha_1), .., f_n(alpha_n) from the ratio condition on every pair.
Certificate certify_multi(const std::vector<EFunction>& functions, const std::vector<AlgebraicNumber>& points,
                          const PrecisionPolicy& policy = {}, std::stop_token stop = {});
/// certify_multi with one function at every point.
Certificate certify_single(const EFunction& f, const std::vector<AlgebraicNumber>& points,
                           const PrecisionPolicy& policy = {}, std::stop_token stop = {});

/// Outcome of the power condition alpha_i^k_j / alpha_j^k_i != (k_j/k_i)^(k_i k_j).
bool hyp_power_condition(unsigned k_i, unsigned k_j, const AlgebraicNumber& alpha_i, const AlgebraicNumber& alpha_j,
                         const PrecisionPolicy& policy = {});
/// The same pair judged through the E-functions F(z^k) at k-th roots beta of
/// the points, with singularity sets {rho/k : rho^k = 1}.
bool hyp_ratio_route(unsigned k_i, unsigned k_j, const AlgebraicNumber& alpha_i, const AlgebraicNumber& alpha_j,
                     const PrecisionPolicy& policy = {});
/// A k-th root of alpha.
AlgebraicNumber kth_root(const AlgebraicNumber& alpha, unsigned k, const PrecisionPolicy& policy = {});

/// 1, F_1(alpha_1), .., F_n(alpha_n) for hypergeometric F_i = sum (a)_n/(b)_n z^n.
/// Throws InvalidInput on bad parameters or a length mismatch, Contradiction
/// when the two hypergeometric routes disagree in the impossible direction.
Certificate certify_hypergeometric(const std::vector<HypergeometricParams>& params,
                                   const std::vector<AlgebraicNumber>& points, const PrecisionPolicy& policy = {});

/// The integrals of sin(t)/t from alpha_i to beta_i.
Certificate certify_si_integrals(const std::vector<std::pair<AlgebraicNumber, AlgebraicNumber>>& pairs,
                                 const PrecisionPolicy& policy = {});

std::string render_text(const Certificate& cert);

}  // namespace efcert
