#pragma once

#include <functional>

#include "shiftlab/arre.hpp"
#include "shiftlab/degree.hpp"
#include "shiftlab/lemma.hpp"

namespace shiftlab {

struct CheckResult {
  std::string description;
  bool pass = false;
  std::string detail;
};

struct CaseReport {
  std::string id;
  bool pass = true;
  std::vector<CheckResult> checks;
};

struct ExampleCase {
  std::string id;
  std::string summary;
  std::function<CaseReport()> run;
};

/// Named, runnable reproductions of the worked constructions; the backbone
/// of the regression suite and of `examples run` in the CLI.
const std::vector<ExampleCase>& example_registry();

std::vector<std::string> example_ids();

/// Throws std::invalid_argument for an unknown id.
CaseReport run_example(const std::string& id);

}  // namespace shiftlab
