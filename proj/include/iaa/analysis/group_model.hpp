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
#include "iaa/ingest/dataset.hpp"
#include "iaa/ingest/group.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace iaa::analysis {

struct WordModel
{
  std::string    word;
  core::FuzzySet set;
  std::size_t    count;  // number of intervals the set was built from

  bool operator==(WordModel const &) const = default;
};

/// Word models for one (possibly composite) group, in questionnaire order.
/// Words the group never answered are absent.
struct GroupModel
{
  std::string            group;
  std::vector<WordModel> words;

  WordModel const *find(std::string_view word) const;

  bool operator==(GroupModel const &) const = default;
};

/// Builds one IAA set per answered word. Throws EmptyGroup when the group has
/// no responses at all; ingest errors propagate.
GroupModel build_group_model(ingest::Dataset const &ds, ingest::GroupSpec const &spec);

}  // namespace iaa::analysis
