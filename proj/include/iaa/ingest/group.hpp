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

#include "iaa/core/interval.hpp"
#include "iaa/ingest/dataset.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace iaa::ingest {

/// A named selection of underlying group labels. Composite groups such as
/// PS = {physio, surgeon} concatenate their members' responses.
struct GroupSpec
{
  std::string              name;
  std::vector<std::string> members;

  static GroupSpec single(std::string label);

  bool operator==(GroupSpec const &) const = default;
};

/// Parses "NAME=g1,g2". Throws InvalidGroupSpec on a malformed definition.
GroupSpec parse_group_spec(std::string_view text);

/// Intervals for `word` from every record whose group is a member of `spec`,
/// in dataset order. Throws UnknownWord / UnknownGroup / InvalidGroupSpec.
std::vector<core::Interval> select_group(Dataset const &ds, GroupSpec const &spec, std::string_view word);

}  // namespace iaa::ingest
