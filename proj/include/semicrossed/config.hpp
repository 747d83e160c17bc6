#pragma once

// Line-oriented configuration:
//
//   system { kind = circle; k = 2 }
//   system { kind = sft; matrix = 11 10 }      rows separated by spaces
//   system { kind = perm; perm = 1 2 0 }
//   element F { form = semicrossed; expr = 1 + U*cos(1) }
//   budgets { nmax = 256; grid = 256; window = 128; seed = 1; tolerance = 1e-2 }
//
// Entries end at a newline or ';'. '#' starts a comment. Unknown sections and
// keys are rejected with the line number and field name.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semicrossed/dynsys.hpp"
#include "semicrossed/element.hpp"
#include "semicrossed/norms.hpp"

namespace semicrossed {

struct Config {
  DynamicalSystem system = DynamicalSystem::circle(2);
  std::vector<std::pair<std::string, Element>> elements;
  Budget budget;
  std::optional<double> tolerance;

  /// Named element, or nullptr.
  const Element* element(const std::string& name) const;
};

Config parseConfig(const std::string& text);
Config loadConfig(const std::string& path);

}  // namespace semicrossed
