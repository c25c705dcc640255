#pragma once

#include <functional>
#include <string>
#include <vector>

#include "efcert/criterion.hpp"

namespace efcert {

/// One worked example: how to build its certificate and the verdict it must get.
struct DemoCase {
  std::string name;
  std::function<Certificate(const PrecisionPolicy&)> make;
  Verdict expected;
  /// All points rational, so the numeric cross-check is run.
  bool rational_points = true;
  /// The numbers satisfy a known integer relation (Lagrange construction).
  bool expect_relation = false;
};

std::vector<DemoCase> demo_cases();

}  // namespace efcert
