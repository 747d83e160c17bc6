#pragma once

// Built-in verification corpora. Each check regenerates its corpus from the
// budget seed and reports one row per case.

#include <optional>
#include <string>
#include <vector>

#include "semicrossed/norms.hpp"

namespace semicrossed {

struct CheckRow {
  std::string check;
  std::string item;
  double measured = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerifyOptions {
  Budget budget;
  /// Replaces the 1e-2 convergence tolerance of the windowed check.
  std::optional<double> tolerance;
};

/// covariance lemma3 thm1 monotone cor5 lemma5 lemma6 lemma7 thm4-pushdown
/// thm3 prop1, in that order.
const std::vector<std::string>& checkNames();

/// Throws BadInput for an unknown name.
std::vector<CheckRow> runCheck(const std::string& name, const VerifyOptions& options);

}  // namespace semicrossed
