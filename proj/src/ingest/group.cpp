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
#include "iaa/ingest/group.hpp"

#include <algorithm>

namespace iaa::ingest {

GroupSpec GroupSpec::single(std::string label)
{
  return GroupSpec{label, {label}};
}

GroupSpec parse_group_spec(std::string_view text)
{
  auto const eq = text.find('=');
  if (eq == std::string_view::npos)
  {
    throw Error(ErrorCode::InvalidGroupSpec, "expected NAME=group1,group2 but got '" + std::string{text} + "'");
  }
  GroupSpec spec;
  spec.name = trimmed(text.substr(0, eq));
  if (spec.name.empty())
  {
    throw Error(ErrorCode::InvalidGroupSpec, "composite group name is empty in '" + std::string{text} + "'");
  }

  std::string_view rest = text.substr(eq + 1);
  while (true)
  {
    auto const comma  = rest.find(',');
    auto const member = trimmed(rest.substr(0, comma));
    if (member.empty())
    {
      throw Error(ErrorCode::InvalidGroupSpec, "empty member label in '" + std::string{text} + "'");
    }
    if (std::find(spec.members.begin(), spec.members.end(), member) == spec.members.end())
    {
      spec.members.push_back(member);
    }
    if (comma == std::string_view::npos)
    {
      break;
    }
    rest.remove_prefix(comma + 1);
  }
  return spec;
}

std::vector<core::Interval> select_group(Dataset const &ds, GroupSpec const &spec, std::string_view word)
{
  if (spec.members.empty())
  {
    throw Error(ErrorCode::InvalidGroupSpec, "group '" + spec.name + "' has no members");
  }
  auto const w = canonical_word(word);
  if (!ds.has_word(w))
  {
    throw Error(ErrorCode::UnknownWord, "descriptor '" + w + "' is not part of the dataset");
  }
  for (auto const &member : spec.members)
  {
    if (!ds.has_group(member))
    {
      throw Error(ErrorCode::UnknownGroup,
                  "group '" + spec.name + "' references '" + member + "', which has no responses in the dataset");
    }
  }

  std::vector<core::Interval> out;
  for (auto const &r : ds.records())
  {
    if (r.word == w && std::find(spec.members.begin(), spec.members.end(), r.group) != spec.members.end())
    {
      out.push_back(r.interval);
    }
  }
  return out;
}

}  // namespace iaa::ingest
