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

#include <cstddef>

namespace iaa::core {

/// Jaccard similarity: sum of pointwise minima over sum of pointwise maxima.
/// Two all-zero sets are identical (1.0). Throws GridMismatch when the grids
/// differ in min, max or step.
double jaccard(FuzzySet const &a, FuzzySet const &b);

/// Discrete centroid sum(x * mu) / sum(mu). Throws EmptySet on an all-zero set.
double centroid(FuzzySet const &fs);

/// Largest membership degree; 0 for an all-zero set.
double height(FuzzySet const &fs);

/// step * (number of grid points with mu > 0). Closed intervals are counted
/// with both endpoints, so an interval of length L measures L + step.
double support_size(FuzzySet const &fs);

/// Number of maximal plateaus strictly above both neighbours, with the
/// domain boundaries acting as -infinity. An all-zero set has no modes.
std::size_t mode_count(FuzzySet const &fs);

}  // namespace iaa::core
