#include "efcert/criterion.hpp"

#include <sstream>

#include "efcert/error.hpp"
#include "efcert/singularities.hpp"

namespace efcert {

const char* const kAlgebraicCaveat =
    "The conclusion holds unless two of the listed numbers are algebraic; whether any of them is "
    "algebraic is not decided here.";

namespace {

const char* const kAnchorNonzero = "nonzero evaluation points";
const char* const kAnchorDisjoint = "pairwise disjoint singularity sets";
const char* const kAnchorRatio = "point ratios avoid singularity ratios";
const char* const kAnchorPower = "hypergeometric power condition";
const char* const kAnchorDistinct = "hypergeometric pairwise distinct points";
const char* const kAnchorSquares = "distinct squares of the integration endpoints";
const char* const kConditionAlgebraic = "no two of the listed numbers are algebraic";

std::string point_str(const AlgebraicNumber& a) { return a.to_string(12); }

std::string listing(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", " : "") + items[i];
  return out;
}

void finish(Certificate& c) {
  bool ok = !c.hypotheses.empty();
  for (const auto& h : c.hypotheses) ok = ok && h.outcome == Outcome::Satisfied;
  c.verdict = ok ? Verdict::CertifiedIndependent : Verdict::Inconclusive;
}

Hypothesis nonzero_hypothesis(const std::vector<AlgebraicNumber>& points, const PrecisionPolicy& policy) {
  Hypothesis h{"every evaluation point is nonzero", kAnchorNonzero, Outcome::Satisfied, "all points nonzero"};
  for (std::size_t i = 0; i < points.size(); ++i)
    if (alg_is_zero(points[i], policy)) {
      h.outcome = Outcome::Violated;
      h.witness = "point " + std::to_string(i + 1) + " is 0; values at 0 are algebraic";
      break;
    }
  return h;
}

void superset_notes(Certificate& c, const std::vector<EFunction>& fs, const std::vector<RootSet>& sets) {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    bool seen = false;
    for (std::size_t j = 0; j < i; ++j) seen = seen || (fs[j].name() == fs[i].name() && sets[j] == sets[i]);
    if (!seen && sets[i].provenance == Provenance::LeadingCoefficientSuperset)
      c.notes.push_back("S(" + fs[i].name() + ") = " + sets[i].to_string() +
                        " is a superset read off the annihilator's leading coefficient; a failed check "
                        "may come from apparent singularities and only means inconclusive");
  }
}

std::vector<RootSet> sets_of(const std::vector<EFunction>& fs, std::stop_token stop) {
  std::vector<RootSet> sets;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    // identical functions share one computation
    std::size_t same = i;
    for (std::size_t j = 0; j < i; ++j)
      if (fs[j].name() == fs[i].name() && fs[j].annihilator() == fs[i].annihilator() &&
          fs[j].initial_values() == fs[i].initial_values()) {
        same = j;
        break;
      }
    sets.push_back(same == i ? singularity_superset(fs[i], stop) : sets[same]);
  }
  return sets;
}

}  // namespace

const char* verdict_name(Verdict v) {
  return v == Verdict::CertifiedIndependent ? "CertifiedIndependent" : "Inconclusive";
}

const char* outcome_name(Outcome o) { return o == Outcome::Satisfied ? "satisfied" : "violated"; }

Certificate certify_main(const std::vector<EFunction>& functions, const AlgebraicNumber& alpha,
                         const PrecisionPolicy& policy, std::stop_token stop) {
  if (functions.empty()) fail(ErrorCode::InvalidInput, "certify_main needs at least one function");
  Certificate c;
  c.kind = "main";
  c.caveat = kAlgebraicCaveat;
  c.conditional_on = {kConditionAlgebraic};
  std::vector<std::string> vals{"1"};
  for (const auto& f : functions) {
    c.inputs.push_back("function " + f.name());
    vals.push_back(f.name() + "(" + point_str(alpha) + ")");
  }
  c.inputs.push_back("point " + point_str(alpha));
  c.statement = listing(vals) + " are linearly independent over Q̄, unless two of them are algebraic";

  Hypothesis nz = nonzero_hypothesis({alpha}, policy);
  c.hypotheses.push_back(nz);

  auto sets = sets_of(functions, stop);
  for (std::size_t i = 0; i < functions.size(); ++i)
    for (std::size_t j = i + 1; j < functions.size(); ++j) {
      Hypothesis h;
      h.description = "S(" + functions[i].name() + ") and S(" + functions[j].name() + ") are disjoint";
      h.anchor = kAnchorDisjoint;
      bool ok = rootsets_disjoint(sets[i], sets[j]);
      h.outcome = ok ? Outcome::Satisfied : Outcome::Violated;
      std::string g = poly_gcd(sets[i].poly, sets[j].poly).primitive().to_string();
      h.witness = sets[i].to_string() + " vs " + sets[j].to_string() + "; gcd = " + g +
                  (sets[i].includes_zero && sets[j].includes_zero ? "; both contain 0" : "");
      c.hypotheses.push_back(h);
    }
  superset_notes(c, functions, sets);
  if (nz.outcome == Outcome::Satisfied)
    for (const auto& f : functions) c.terms.push_back({f.name() + "(" + point_str(alpha) + ")", f, alpha, 1});
  finish(c);
  return c;
}

Certificate certify_multi(const std::vector<EFunction>& functions, const std::vector<AlgebraicNumber>& points,
                          const PrecisionPolicy& policy, std::stop_token stop) {
  if (functions.empty()) fail(ErrorCode::InvalidInput, "certify_multi needs at least one function");
  if (functions.size() != points.size())
    fail(ErrorCode::InvalidInput, "certify_multi: " + std::to_string(functions.size()) + " functions but " +
                                      std::to_string(points.size()) + " points");
  Certificate c;
  c.kind = "multi";
  c.caveat = kAlgebraicCaveat;
  c.conditional_on = {kConditionAlgebraic};
  std::vector<std::string> vals{"1"};
  for (std::size_t i = 0; i < functions.size(); ++i) {
    c.inputs.push_back("function " + functions[i].name() + " at " + point_str(points[i]));
    vals.push_back(functions[i].name() + "(" + point_str(points[i]) + ")");
  }
  c.statement = listing(vals) + " are linearly independent over Q̄, unless two of them are algebraic";

  Hypothesis nz = nonzero_hypothesis(points, policy);
  c.hypotheses.push_back(nz);
  auto sets = sets_of(functions, stop);
  for (std::size_t i = 0; i < functions.size(); ++i)
    for (std::size_t j = i + 1; j < functions.size(); ++j) {
      Hypothesis h;
      h.description = "alpha_" + std::to_string(i + 1) + "/alpha_" + std::to_string(j + 1) +
                      " is not a ratio rho1/rho2 with rho1 in S(" + functions[i].name() + "), rho2 in S(" +
                      functions[j].name() + ")";
      h.anchor = kAnchorRatio;
      if (alg_is_zero(points[i], policy) || alg_is_zero(points[j], policy)) {
        h.outcome = Outcome::Violated;
        h.witness = "not evaluated: a point is 0";
      } else {
        bool ok = ratio_condition(sets[i], sets[j], points[i], points[j], policy);
        h.outcome = ok ? Outcome::Satisfied : Outcome::Violated;
        h.witness = "alpha_i/alpha_j = " + point_str(alg_div(points[i], points[j], policy)) + "; S_i = " +
                    sets[i].to_string() + ", S_j = " + sets[j].to_string();
      }
      c.hypotheses.push_back(h);
    }
  superset_notes(c, functions, sets);
  if (nz.outcome == Outcome::Satisfied)
    for (std::size_t i = 0; i < functions.size(); ++i)
      c.terms.push_back({functions[i].name() + "(" + point_str(points[i]) + ")", functions[i], points[i], 1});
  finish(c);
  return c;
}

Certificate certify_single(const EFunction& f, const std::vector<AlgebraicNumber>& points,
                           const PrecisionPolicy& policy, std::stop_token stop) {
  if (points.empty()) fail(ErrorCode::InvalidInput, "certify_single needs at least one point");
  Certificate c = certify_multi(std::vector<EFunction>(points.size(), f), points, policy, stop);
  c.kind = "single";
  return c;
}

AlgebraicNumber kth_root(const AlgebraicNumber& alpha, unsigned k, const PrecisionPolicy& policy) {
  if (k == 1) return alpha;
  if (alg_is_zero(alpha, policy)) return alpha;
  for (const auto& beta : AlgebraicNumber::roots_of(alpha.poly().substitute_power(k), policy))
    if (alg_equals(alg_pow(beta, k, policy), alpha, policy)) return beta;
  fail(ErrorCode::Contradiction, "no k-th root of " + alpha.to_string() + " among the roots of p(z^k)");
}

bool hyp_power_condition(unsigned k_i, unsigned k_j, const AlgebraicNumber& alpha_i, const AlgebraicNumber& alpha_j,
                         const PrecisionPolicy& policy) {
  AlgebraicNumber lhs = alg_div(alg_pow(alpha_i, k_j, policy), alg_pow(alpha_j, k_i, policy), policy);
  Rational base(k_j, k_i);
  base.canonicalize();
  AlgebraicNumber rhs = AlgebraicNumber::from_rational(pow(base, static_cast<unsigned long>(k_i) * k_j));
  return !alg_equals(lhs, rhs, policy);
}

bool hyp_ratio_route(unsigned k_i, unsigned k_j, const AlgebraicNumber& alpha_i, const AlgebraicNumber& alpha_j,
                     const PrecisionPolicy& policy) {
  return ratio_condition(hypergeometric_singularities(k_i), hypergeometric_singularities(k_j),
                         kth_root(alpha_i, k_i, policy), kth_root(alpha_j, k_j, policy), policy);
}

Certificate certify_hypergeometric(const std::vector<HypergeometricParams>& params,
                                   const std::vector<AlgebraicNumber>& points, const PrecisionPolicy& policy) {
  if (params.empty()) fail(ErrorCode::InvalidInput, "certify_hypergeometric needs at least one function");
  if (params.size() != points.size())
    fail(ErrorCode::InvalidInput, "certify_hypergeometric: " + std::to_string(params.size()) + " functions but " +
                                      std::to_string(points.size()) + " points");
  for (const auto& p : params) p.validate();
  const std::size_t n = params.size();
  std::vector<EFunction> fs;
  std::vector<unsigned> ks;
  for (const auto& p : params) {
    fs.push_back(ef_hypergeometric(p));
    ks.push_back(p.k());
  }

  Certificate c;
  c.kind = "hypergeometric";
  c.caveat = kAlgebraicCaveat;
  c.conditional_on = {kConditionAlgebraic};
  std::vector<std::string> vals{"1"};
  for (std::size_t i = 0; i < n; ++i) {
    std::string label = "F" + std::to_string(i + 1) + "(" + point_str(points[i]) + ")";
    c.inputs.push_back(fs[i].name() + " (k = " + std::to_string(ks[i]) + ") at " + point_str(points[i]));
    vals.push_back(label);
  }
  c.statement = listing(vals) + " are linearly independent over Q̄, unless two of them are algebraic";

  bool equal_k = true;
  for (unsigned k : ks) equal_k = equal_k && k == ks[0];

  // Route through the power condition, each pair backed up by the ratio route.
  std::vector<Hypothesis> general;
  Hypothesis nz = nonzero_hypothesis(points, policy);
  general.push_back(nz);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Hypothesis h;
      const std::string si = std::to_string(i + 1), sj = std::to_string(j + 1);
      h.description = "alpha_" + si + "^" + std::to_string(ks[j]) + " / alpha_" + sj + "^" + std::to_string(ks[i]) +
                      " != (" + std::to_string(ks[j]) + "/" + std::to_string(ks[i]) + ")^" +
                      std::to_string(ks[i] * ks[j]) + ", or the ratio condition at k-th roots";
      h.anchor = kAnchorPower;
      if (alg_is_zero(points[i], policy) || alg_is_zero(points[j], policy)) {
        h.outcome = Outcome::Violated;
        h.witness = "not evaluated: a point is 0";
        general.push_back(h);
        continue;
      }
      bool power = hyp_power_condition(ks[i], ks[j], points[i], points[j], policy);
      bool ratio = hyp_ratio_route(ks[i], ks[j], points[i], points[j], policy);
      // (beta_i/beta_j)^(k_i k_j) = alpha_i^k_j / alpha_j^k_i, and every
      // singularity ratio raised to that power is (k_j/k_i)^(k_i k_j).
      if (power && !ratio)
        fail(ErrorCode::Contradiction, "hypergeometric self-check: power condition holds for pair (" + si + ", " + sj +
                                           ") but the ratio route fails");
      h.outcome = power || ratio ? Outcome::Satisfied : Outcome::Violated;
      h.witness = std::string("power condition ") + (power ? "holds" : "fails") + "; ratio route " +
                  (ratio ? "holds" : "fails");
      general.push_back(h);
    }
  bool general_ok = true;
  for (const auto& h : general) general_ok = general_ok && h.outcome == Outcome::Satisfied;

  std::vector<Hypothesis> distinct;
  if (equal_k) {
    distinct.push_back({"all functions share k = s - r = " + std::to_string(ks[0]), kAnchorDistinct,
                        Outcome::Satisfied, "k = " + std::to_string(ks[0])});
    Hypothesis h{"the points are pairwise distinct", kAnchorDistinct, Outcome::Satisfied, "all distinct"};
    for (std::size_t i = 0; i < n && h.outcome == Outcome::Satisfied; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (alg_equals(points[i], points[j], policy)) {
          h.outcome = Outcome::Violated;
          h.witness = "alpha_" + std::to_string(i + 1) + " = alpha_" + std::to_string(j + 1);
          break;
        }
    distinct.push_back(h);
  }
  bool distinct_ok = equal_k && distinct.back().outcome == Outcome::Satisfied;

  if (distinct_ok && !general_ok) {
    c.hypotheses = distinct;
    c.notes.push_back("certified through the equal-k route; the power-condition route alone was inconclusive");
  } else {
    c.hypotheses = general;
    if (equal_k && !distinct_ok) c.notes.push_back("equal-k route also inconclusive: repeated point");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (alg_is_zero(points[i], policy)) {
      c.notes.push_back("F" + std::to_string(i + 1) + " at 0 equals 1 and is left out of the numeric cross-check");
      continue;
    }
    c.terms.push_back({"F" + std::to_string(i + 1) + "(" + point_str(points[i]) + ")", fs[i], points[i], ks[i]});
  }
  finish(c);
  return c;
}

Certificate certify_si_integrals(const std::vector<std::pair<AlgebraicNumber, AlgebraicNumber>>& pairs,
                                 const PrecisionPolicy& policy) {
  if (pairs.empty()) fail(ErrorCode::InvalidInput, "certify_si_integrals needs at least one pair");
  Certificate c;
  c.kind = "si";
  c.caveat = kAlgebraicCaveat;
  std::vector<std::string> ints;
  std::vector<AlgebraicNumber> ends;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [a, b] = pairs[i];
    c.inputs.push_back("integral from " + point_str(a) + " to " + point_str(b));
    ints.push_back("int_{" + point_str(a) + "}^{" + point_str(b) + "} sin(t)/t dt");
    ends.push_back(a);
    ends.push_back(b);
    names.push_back("alpha_" + std::to_string(i + 1));
    names.push_back("beta_" + std::to_string(i + 1));
  }
  c.statement = (pairs.size() == 1 ? "the number " : "the numbers ") + listing(ints) +
                (pairs.size() == 1 ? " is transcendental" : " are transcendental and linearly independent over Q̄");

  std::vector<AlgebraicNumber> squares;
  for (const auto& e : ends) squares.push_back(alg_pow(e, 2, policy));
  Hypothesis h{"the squares of all 2n endpoints are pairwise distinct", kAnchorSquares, Outcome::Satisfied,
               "all squares distinct"};
  for (std::size_t i = 0; i < squares.size() && h.outcome == Outcome::Satisfied; ++i)
    for (std::size_t j = i + 1; j < squares.size(); ++j)
      if (alg_equals(squares[i], squares[j], policy)) {
        h.outcome = Outcome::Violated;
        h.witness = names[i] + "^2 = " + names[j] + "^2 = " + point_str(squares[i]);
        break;
      }
  c.hypotheses.push_back(h);
  c.notes.push_back("Si is purely transcendental, so the conclusion does not depend on the algebraic-values exception");
  if (h.outcome == Outcome::Satisfied) {
    // The argument goes through 1, Si(e) for the nonzero endpoints e, which
    // is also what the numeric cross-check looks at.
    EFunction si = ef_sin_integral();
    for (const auto& e : ends)
      if (!alg_is_zero(e, policy)) c.terms.push_back({"Si(" + point_str(e) + ")", si, e, 1});
  }
  finish(c);
  return c;
}

std::string render_text(const Certificate& cert) {
  std::ostringstream out;
  out << "certificate (" << cert.kind << "): " << verdict_name(cert.verdict) << "\n";
  out << "  claim: " << cert.statement << "\n";
  for (const auto& in : cert.inputs) out << "  input: " << in << "\n";
  for (const auto& h : cert.hypotheses) {
    out << "  [" << outcome_name(h.outcome) << "] " << h.description << "  <" << h.anchor << ">\n";
    if (!h.witness.empty()) out << "      " << h.witness << "\n";
  }
  if (cert.verdict == Verdict::Inconclusive) out << "  no claim is made; the hypotheses above were not all met\n";
  out << "  caveat: " << cert.caveat << "\n";
  for (const auto& cond : cert.conditional_on) out << "  conditional on: " << cond << "\n";
  for (const auto& n : cert.notes) out << "  note: " << n << "\n";
  return out.str();
}

}  // namespace efcert
