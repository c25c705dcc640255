#pragma once

#include <json.hpp>
#include <string>

#include "efcert/numeric.hpp"

namespace efcert {

using Json = nlohmann::ordered_json;

/// Rationals travel as exact strings ("-3/4"); integers may also be JSON numbers.
Json rational_json(const Rational& r);
Rational rational_from_json(const Json& j, const std::string& path);

/// Integer coefficient list, constant term first.
Json polynomial_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j, const std::string& path);

/// Rational points as plain strings, others as {"poly", "box": {"re", "im", "rad"}}.
Json algebraic_json(const AlgebraicNumber& a);
AlgebraicNumber algebraic_from_json(const Json& j, const std::string& path, const PrecisionPolicy& policy = {});

Json operator_json(const DiffOperator& op);
Json rootset_json(const RootSet& s);
Json certificate_json(const Certificate& c);
Json ball_json(const Ball& b, unsigned digits);
Json relation_json(const RelationReport& r);
Json falsify_json(const FalsifyReport& r, unsigned digits);

/// Throws InvalidInput naming the first key of `j` outside `allowed`.
void require_keys(const Json& j, const std::string& path, std::initializer_list<const char*> allowed);

}  // namespace efcert
