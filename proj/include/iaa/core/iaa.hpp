//------------------------------------------------------------------------------
//
//   Copyright 2026 The IAA Toolkit Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------
#pragma once

#include "iaa/core/fuzzy_set.hpp"
#include "iaa/core/grid.hpp"
#include "iaa/core/interval.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace iaa::core {

/// Number of intervals containing each grid point (closed on both ends).
/// Throws EmptyInput for an empty list and DomainViolation for an interval
/// outside the grid, naming its position in the list.
std::vector<std::size_t> overlap_counts(std::span<Interval const> intervals, DomainGrid const &grid);

/// Interval Agreement Approach, type-1 case: membership at each grid point is
/// the fraction of the N intervals that contain it. The result does not depend
/// on the order of `intervals`.
FuzzySet build_iaa(std::span<Interval const> intervals, DomainGrid const &grid);

}  // namespace iaa::core
