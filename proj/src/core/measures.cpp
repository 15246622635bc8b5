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
#include "iaa/core/measures.hpp"

#include "iaa/error.hpp"

#include <algorithm>
#include <limits>

namespace iaa::core {

double jaccard(FuzzySet const &a, FuzzySet const &b)
{
  if (!(a.grid() == b.grid()))
  {
    throw Error(ErrorCode::GridMismatch, "Jaccard similarity requires both sets on the same grid");
  }

  double intersection = 0.0;
  double union_       = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
  {
    intersection += std::min(a[i], b[i]);
    union_ += std::max(a[i], b[i]);
  }

  if (union_ == 0.0)
  {
    return 1.0;
  }
  return intersection / union_;
}

double centroid(FuzzySet const &fs)
{
  DomainGrid const &grid     = fs.grid();
  double            weighted = 0.0;
  double            mass     = 0.0;
  for (std::size_t i = 0; i < fs.size(); ++i)
  {
    weighted += grid.point(i) * fs[i];
    mass += fs[i];
  }
  if (mass == 0.0)
  {
    throw Error(ErrorCode::EmptySet, "centroid of an all-zero fuzzy set is undefined");
  }
  return weighted / mass;
}

double height(FuzzySet const &fs)
{
  auto const mu = fs.memberships();
  return mu.empty() ? 0.0 : *std::max_element(mu.begin(), mu.end());
}

double support_size(FuzzySet const &fs)
{
  auto const  mu    = fs.memberships();
  auto const  count = std::count_if(mu.begin(), mu.end(), [](double v) { return v > 0.0; });
  return fs.grid().step() * static_cast<double>(count);
}

std::size_t mode_count(FuzzySet const &fs)
{
  if (fs.is_zero())
  {
    return 0;
  }

  auto const       mu     = fs.memberships();
  constexpr double kFloor = -std::numeric_limits<double>::infinity();

  std::size_t modes = 0;
  std::size_t start = 0;
  while (start < mu.size())
  {
    std::size_t end = start;
    while (end + 1 < mu.size() && mu[end + 1] == mu[start])
    {
      ++end;
    }
    double const before = start == 0 ? kFloor : mu[start - 1];
    double const after  = end + 1 == mu.size() ? kFloor : mu[end + 1];
    if (mu[start] > before && mu[start] > after)
    {
      ++modes;
    }
    start = end + 1;
  }
  return modes;
}

}  // namespace iaa::core
