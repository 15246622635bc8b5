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

#include "iaa/analysis/group_model.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace iaa::analysis {

struct WordDescriptor
{
  std::string word;
  double      centroid;
  double      height;
  double      support;
  std::size_t modes;
  std::size_t count;

  bool operator==(WordDescriptor const &) const = default;
};

/// Signed centroid difference between adjacent words: later minus earlier.
struct CentroidGap
{
  std::string from;
  std::string to;
  double      gap;

  bool ordering_violation() const noexcept
  {
    return gap < 0.0;
  }

  bool operator==(CentroidGap const &) const = default;
};

struct GroupDescriptors
{
  std::string                 group;
  std::vector<WordDescriptor> words;  // questionnaire order
  double                      overall_centroid_mean;
  std::vector<CentroidGap>    gaps;  // words.size() - 1 entries
  std::optional<std::size_t>  min_gap;  // index into gaps
  std::optional<std::size_t>  max_gap;

  /// True when every gap is non-negative, i.e. word models follow the
  /// questionnaire order.
  bool ordered() const noexcept;

  /// max gap - min gap; 0 with fewer than two gaps.
  double gap_spread() const noexcept;

  WordDescriptor const *find(std::string_view word) const;

  bool operator==(GroupDescriptors const &) const = default;
};

struct DescriptorReport
{
  std::vector<GroupDescriptors> groups;

  GroupDescriptors const *find(std::string_view group) const;

  bool operator==(DescriptorReport const &) const = default;
};

/// Centroid, height, support size and mode count per (group, word), the mean
/// centroid per group and adjacent centroid gaps in `word_order`. Words a group
/// did not answer are skipped for that group. Throws EmptyInput for no models
/// and EmptySet (with group and word) for an all-zero model.
DescriptorReport descriptor_report(std::span<GroupModel const> models, std::span<std::string const> word_order);

}  // namespace iaa::analysis
