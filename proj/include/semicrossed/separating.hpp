#pragma once

#include <vector>

#include "semicrossed/dynsys.hpp"
#include "semicrossed/funcalg.hpp"

namespace semicrossed {

/// Real f with 0 <= f <= 1, f(orbit[n]) = 1 and f(orbit[j]) = 0 for the
/// other j <= m (positions are 1-based). Circle systems get a product of
/// squared Fejer bumps, SFTs a cylinder indicator, permutations a table.
/// Throws SeparationImpossible when orbit[n] repeats among the first m.
BaseFunction separatingFunction(const DynamicalSystem& sys, const std::vector<Point>& orbit, int n, int m);

}  // namespace semicrossed
