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
#include "iaa/core/grid.hpp"

#include "iaa/error.hpp"

#include <cmath>
#include <sstream>

namespace iaa::core {

namespace {

constexpr double kStepIntegralityTolerance = 1e-9;

std::size_t checked_step_count(double min, double max, double step)
{
  if (!std::isfinite(min) || !std::isfinite(max) || !std::isfinite(step))
  {
    throw Error(ErrorCode::InvalidGrid, "grid parameters must be finite");
  }
  if (!(min < max))
  {
    std::ostringstream os;
    os << "grid min " << min << " must be below max " << max;
    throw Error(ErrorCode::InvalidGrid, os.str());
  }
  if (!(step > 0.0))
  {
    throw Error(ErrorCode::InvalidGrid, "grid step must be positive");
  }

  double const ratio   = (max - min) / step;
  double const rounded = std::round(ratio);
  if (std::abs(ratio - rounded) > kStepIntegralityTolerance || rounded < 1.0)
  {
    std::ostringstream os;
    os << "grid step " << step << " does not divide [" << min << ", " << max << "] evenly";
    throw Error(ErrorCode::InvalidGrid, os.str());
  }
  if (rounded > 1e8)
  {
    throw Error(ErrorCode::InvalidGrid, "grid has more than 1e8 points");
  }
  return static_cast<std::size_t>(rounded);
}

}  // namespace

DomainGrid::DomainGrid()
  : DomainGrid(kDefaultMin, kDefaultMax, kDefaultStep)
{}

DomainGrid::DomainGrid(double min, double max, double step)
  : min_(min)
  , max_(max)
  , step_(step)
  , intervals_(checked_step_count(min, max, step))
{}

double DomainGrid::point(std::size_t i) const noexcept
{
  if (i >= intervals_)
  {
    return max_;
  }
  // (max - min) * i / n rounds once for integral spans, so decimal points such
  // as 0.7 on a 0..10 grid come out identical to the parsed literal.
  return min_ + ((max_ - min_) * static_cast<double>(i)) / static_cast<double>(intervals_);
}

std::size_t DomainGrid::first_at_or_above(double value) const noexcept
{
  double const threshold = value - kContainmentTolerance;
  double       estimate  = std::ceil((threshold - min_) / step_);
  if (estimate < 0.0)
  {
    estimate = 0.0;
  }
  if (estimate > static_cast<double>(size()))
  {
    return size();
  }
  auto i = static_cast<std::size_t>(estimate);
  while (i > 0 && point(i - 1) >= threshold)
  {
    --i;
  }
  while (i < size() && point(i) < threshold)
  {
    ++i;
  }
  return i;
}

long long DomainGrid::last_at_or_below(double value) const noexcept
{
  double const threshold = value + kContainmentTolerance;
  double       estimate  = std::floor((threshold - min_) / step_);
  auto const   last      = static_cast<long long>(intervals_);
  if (estimate < -1.0)
  {
    return -1;
  }
  long long i = estimate > static_cast<double>(last) ? last : static_cast<long long>(estimate);
  while (i < last && point(static_cast<std::size_t>(i + 1)) <= threshold)
  {
    ++i;
  }
  while (i >= 0 && point(static_cast<std::size_t>(i)) > threshold)
  {
    --i;
  }
  return i;
}

}  // namespace iaa::core
