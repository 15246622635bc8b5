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
#include "iaa/core/fuzzy_set.hpp"

#include "iaa/error.hpp"

#include <algorithm>
#include <sstream>

namespace iaa::core {

FuzzySet::FuzzySet(DomainGrid grid, std::vector<double> memberships)
  : grid_(grid)
  , memberships_(std::move(memberships))
{
  if (memberships_.size() != grid_.size())
  {
    std::ostringstream os;
    os << "expected " << grid_.size() << " membership values, got " << memberships_.size();
    throw Error(ErrorCode::InvalidFuzzySet, os.str());
  }
  for (std::size_t i = 0; i < memberships_.size(); ++i)
  {
    double const mu = memberships_[i];
    if (!(mu >= 0.0 && mu <= 1.0))
    {
      std::ostringstream os;
      os << "membership " << mu << " at grid index " << i << " is outside [0, 1]";
      throw Error(ErrorCode::InvalidFuzzySet, os.str());
    }
  }
}

FuzzySet FuzzySet::zero(DomainGrid const &grid)
{
  return FuzzySet{grid, std::vector<double>(grid.size(), 0.0)};
}

bool FuzzySet::is_zero() const noexcept
{
  return std::all_of(memberships_.begin(), memberships_.end(), [](double mu) { return mu == 0.0; });
}

}  // namespace iaa::core
