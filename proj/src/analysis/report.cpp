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
#include "iaa/analysis/report.hpp"

#include "iaa/core/measures.hpp"
#include "iaa/error.hpp"

#include <algorithm>

namespace iaa::analysis {

bool GroupDescriptors::ordered() const noexcept
{
  return std::none_of(gaps.begin(), gaps.end(), [](CentroidGap const &g) { return g.ordering_violation(); });
}

double GroupDescriptors::gap_spread() const noexcept
{
  if (!min_gap || !max_gap)
  {
    return 0.0;
  }
  return gaps[*max_gap].gap - gaps[*min_gap].gap;
}

WordDescriptor const *GroupDescriptors::find(std::string_view word) const
{
  auto const w  = ingest::canonical_word(word);
  auto const it = std::find_if(words.begin(), words.end(), [&](WordDescriptor const &d) { return d.word == w; });
  return it == words.end() ? nullptr : &*it;
}

GroupDescriptors const *DescriptorReport::find(std::string_view group) const
{
  auto const it =
      std::find_if(groups.begin(), groups.end(), [&](GroupDescriptors const &g) { return g.group == group; });
  return it == groups.end() ? nullptr : &*it;
}

DescriptorReport descriptor_report(std::span<GroupModel const> models, std::span<std::string const> word_order)
{
  if (models.empty())
  {
    throw Error(ErrorCode::EmptyInput, "descriptor report needs at least one group model");
  }

  DescriptorReport report;
  for (auto const &model : models)
  {
    GroupDescriptors g{model.group, {}, 0.0, {}, std::nullopt, std::nullopt};
    double           centroid_sum = 0.0;
    for (auto const &word : word_order)
    {
      auto const *wm = model.find(word);
      if (wm == nullptr)
      {
        continue;
      }
      if (wm->set.is_zero())
      {
        throw Error(ErrorCode::EmptySet, "group '" + model.group + "', word '" + wm->word +
                                             "': no grid point lies inside any response interval");
      }
      WordDescriptor d{wm->word,
                       core::centroid(wm->set),
                       core::height(wm->set),
                       core::support_size(wm->set),
                       core::mode_count(wm->set),
                       wm->count};
      centroid_sum += d.centroid;
      g.words.push_back(std::move(d));
    }
    if (!g.words.empty())
    {
      g.overall_centroid_mean = centroid_sum / static_cast<double>(g.words.size());
    }

    for (std::size_t k = 0; k + 1 < g.words.size(); ++k)
    {
      g.gaps.push_back({g.words[k].word, g.words[k + 1].word, g.words[k + 1].centroid - g.words[k].centroid});
      if (!g.min_gap || g.gaps.back().gap < g.gaps[*g.min_gap].gap)
      {
        g.min_gap = k;
      }
      if (!g.max_gap || g.gaps.back().gap > g.gaps[*g.max_gap].gap)
      {
        g.max_gap = k;
      }
    }
    report.groups.push_back(std::move(g));
  }
  return report;
}

}  // namespace iaa::analysis
