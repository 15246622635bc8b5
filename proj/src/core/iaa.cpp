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
#include "iaa/core/iaa.hpp"

#include "iaa/error.hpp"

#include <sstream>

namespace iaa::core {

std::vector<std::size_t> overlap_counts(std::span<Interval const> intervals, DomainGrid const &grid)
{
  if (intervals.empty())
  {
    throw Error(ErrorCode::EmptyInput, "cannot build a fuzzy set from zero intervals");
  }

  // Difference array: +1 at the first covered point, -1 one past the last.
  std::vector<long long> delta(grid.size() + 1, 0);
  for (std::size_t k = 0; k < intervals.size(); ++k)
  {
    Interval const &iv = intervals[k];
    if (!iv.fits(grid))
    {
      std::ostringstream os;
      os << "interval #" << k << " [" << iv.left() << ", " << iv.right() << "] lies outside the domain ["
         << grid.min() << ", " << grid.max() << "]";
      throw Error(ErrorCode::DomainViolation, os.str());
    }

    std::size_t const first = grid.first_at_or_above(iv.left());
    long long const   last  = grid.last_at_or_below(iv.right());
    if (last < 0 || static_cast<long long>(first) > last)
    {
      continue;  // falls strictly between two grid points
    }
    ++delta[first];
    --delta[static_cast<std::size_t>(last) + 1];
  }

  std::vector<std::size_t> counts(grid.size());
  long long                running = 0;
  for (std::size_t i = 0; i < counts.size(); ++i)
  {
    running += delta[i];
    counts[i] = static_cast<std::size_t>(running);
  }
  return counts;
}

FuzzySet build_iaa(std::span<Interval const> intervals, DomainGrid const &grid)
{
  auto const   counts = overlap_counts(intervals, grid);
  double const n      = static_cast<double>(intervals.size());

  std::vector<double> memberships(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i)
  {
    memberships[i] = static_cast<double>(counts[i]) / n;
  }
  return FuzzySet{grid, std::move(memberships)};
}

}  // namespace iaa::core
