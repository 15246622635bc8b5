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
#include "iaa/core/interval.hpp"

#include "iaa/error.hpp"

#include <cmath>
#include <sstream>

namespace iaa::core {

Interval::Interval(double left, double right)
  : left_(left)
  , right_(right)
{
  if (!std::isfinite(left) || !std::isfinite(right))
  {
    throw Error(ErrorCode::InvalidInterval, "interval endpoints must be finite");
  }
  if (left > right)
  {
    std::ostringstream os;
    os << "left endpoint " << left << " exceeds right endpoint " << right;
    throw Error(ErrorCode::InvalidInterval, os.str());
  }
}

}  // namespace iaa::core
