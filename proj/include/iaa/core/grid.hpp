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

#include <cstddef>

namespace iaa::core {

/// Uniform sampling of the response scale. Points are min + i*step for
/// i = 0..intervals(); the first point is exactly min and the last exactly max.
class DomainGrid
{
public:
  static constexpr double kDefaultMin  = 0.0;
  static constexpr double kDefaultMax  = 10.0;
  static constexpr double kDefaultStep = 0.01;

  // Absolute slack used when testing whether a grid point lies inside an
  // interval; absorbs representation error between decimal endpoints and
  // computed grid points.
  static constexpr double kContainmentTolerance = 1e-9;

  DomainGrid();
  DomainGrid(double min, double max, double step);

  double min() const noexcept
  {
    return min_;
  }
  double max() const noexcept
  {
    return max_;
  }
  double step() const noexcept
  {
    return step_;
  }

  /// Number of steps between min and max.
  std::size_t intervals() const noexcept
  {
    return intervals_;
  }

  /// Number of grid points (intervals() + 1).
  std::size_t size() const noexcept
  {
    return intervals_ + 1;
  }

  double point(std::size_t i) const noexcept;

  /// Smallest index whose point is >= value - tolerance, or size() if none.
  std::size_t first_at_or_above(double value) const noexcept;

  /// Largest index whose point is <= value + tolerance, as a signed value so
  /// that -1 means "no such point".
  long long last_at_or_below(double value) const noexcept;

  bool operator==(DomainGrid const &other) const noexcept
  {
    return min_ == other.min_ && max_ == other.max_ && step_ == other.step_;
  }

private:
  double      min_;
  double      max_;
  double      step_;
  std::size_t intervals_;
};

}  // namespace iaa::core
