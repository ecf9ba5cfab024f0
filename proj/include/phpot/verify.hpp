#pragma once

#include <string>
#include <vector>

// Executable form of the library's cross-check contracts: every closed form
// against its independent oracle, with measured residuals. Shared by the
// `verify` CLI subcommand and the acceptance suite.

namespace phpot::verify {

enum class Suite { All, Classical, Quantum, Polymer, Continuum };

struct CheckResult {
  std::string name;
  bool pass;
  double residual;     // measured worst-case residual (check-specific scale)
  std::string detail;  // tolerance used, erratum cross-check outcomes, ...
};

std::vector<CheckResult> run_suite(Suite suite);

Suite suite_from_name(const std::string& name);  // "all", "classical", ...

}  // namespace phpot::verify
