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

#include "iaa/core/grid.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace iaa::core {

/// Type-1 fuzzy set sampled on a DomainGrid: one membership degree in [0, 1]
/// per grid point. Immutable once constructed.
class FuzzySet
{
public:
  /// Throws InvalidFuzzySet if the membership count does not match the grid or
  /// a value falls outside [0, 1].
  FuzzySet(DomainGrid grid, std::vector<double> memberships);

  /// The everywhere-zero set on `grid`.
  static FuzzySet zero(DomainGrid const &grid);

  DomainGrid const &grid() const noexcept
  {
    return grid_;
  }

  std::span<double const> memberships() const noexcept
  {
    return memberships_;
  }

  double operator[](std::size_t i) const noexcept
  {
    return memberships_[i];
  }

  std::size_t size() const noexcept
  {
    return memberships_.size();
  }

  bool is_zero() const noexcept;

  bool operator==(FuzzySet const &) const = default;

private:
  DomainGrid          grid_;
  std::vector<double> memberships_;
};

}  // namespace iaa::core
