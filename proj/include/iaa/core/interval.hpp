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

namespace iaa::core {

/// Closed crisp interval [left, right]. left == right models a point response.
class Interval
{
public:
  /// Throws InvalidInterval when left > right or either endpoint is not finite.
  Interval(double left, double right);

  double left() const noexcept
  {
    return left_;
  }
  double right() const noexcept
  {
    return right_;
  }
  double width() const noexcept
  {
    return right_ - left_;
  }

  bool is_point() const noexcept
  {
    return left_ == right_;
  }

  /// Closed containment with the grid's containment tolerance.
  bool contains(double x) const noexcept
  {
    return left_ - DomainGrid::kContainmentTolerance <= x &&
           x <= right_ + DomainGrid::kContainmentTolerance;
  }

  bool fits(DomainGrid const &grid) const noexcept
  {
    return left_ >= grid.min() && right_ <= grid.max();
  }

  Interval shifted(double delta) const
  {
    return Interval{left_ + delta, right_ + delta};
  }

  bool operator==(Interval const &) const noexcept = default;

private:
  double left_;
  double right_;
};

}  // namespace iaa::core
