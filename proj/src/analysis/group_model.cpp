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
#include "iaa/analysis/group_model.hpp"

#include "iaa/core/iaa.hpp"

#include <algorithm>

namespace iaa::analysis {

WordModel const *GroupModel::find(std::string_view word) const
{
  auto const w  = ingest::canonical_word(word);
  auto const it = std::find_if(words.begin(), words.end(), [&](WordModel const &m) { return m.word == w; });
  return it == words.end() ? nullptr : &*it;
}

GroupModel build_group_model(ingest::Dataset const &ds, ingest::GroupSpec const &spec)
{
  GroupModel model{spec.name, {}};
  for (auto const &word : ds.words())
  {
    auto const intervals = ingest::select_group(ds, spec, word);
    if (intervals.empty())
    {
      continue;
    }
    model.words.push_back({word, core::build_iaa(intervals, ds.grid()), intervals.size()});
  }
  if (model.words.empty())
  {
    throw Error(ErrorCode::EmptyGroup, "group '" + spec.name + "' has no responses for any word");
  }
  return model;
}

}  // namespace iaa::analysis
