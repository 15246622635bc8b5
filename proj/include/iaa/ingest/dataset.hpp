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

#include "iaa/core/grid.hpp"
#include "iaa/core/interval.hpp"
#include "iaa/error.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace iaa::ingest {

/// One participant's interval for one descriptor.
struct ResponseRecord
{
  std::string    participant_id;
  std::string    group;
  std::string    word;
  core::Interval interval;

  bool operator==(ResponseRecord const &) const = default;
};

/// One problem found in the input. `line` is 1-based for CSV and the
/// response index + 1 for JSON; 0 when the problem is not tied to a record.
struct Issue
{
  ErrorCode   code;
  std::string message;
  std::size_t line = 0;
  std::string participant_id;
  std::string word;

  std::string describe() const;
};

/// Validated survey responses on a shared scale. Every record references a
/// listed word, fits the grid, and no participant answers a word twice.
class Dataset
{
public:
  /// Throws the first violated invariant as an Error.
  static Dataset create(core::DomainGrid grid, std::vector<std::string> words,
                        std::vector<ResponseRecord> records);

  core::DomainGrid const &grid() const noexcept
  {
    return grid_;
  }

  /// Descriptor labels in questionnaire order, canonical form.
  std::vector<std::string> const &words() const noexcept
  {
    return words_;
  }

  std::vector<ResponseRecord> const &records() const noexcept
  {
    return records_;
  }

  bool has_word(std::string_view word) const;
  bool has_group(std::string_view group) const;

  /// Group labels in order of first appearance.
  std::vector<std::string> groups() const;

  std::size_t participant_count() const;

  /// Same records with a different questionnaire order; `order` must be a
  /// permutation of words() (labels are canonicalized first).
  Dataset with_word_order(std::vector<std::string> const &order) const;

  bool operator==(Dataset const &) const = default;

private:
  Dataset(core::DomainGrid grid, std::vector<std::string> words, std::vector<ResponseRecord> records);

  core::DomainGrid            grid_;
  std::vector<std::string>    words_;
  std::vector<ResponseRecord> records_;
};

/// Checks every dataset invariant and reports all violations. `lines`, when
/// non-empty, gives the source line of each record for error locations.
std::vector<Issue> find_issues(core::DomainGrid const &grid, std::vector<std::string> const &words,
                               std::vector<ResponseRecord> const &records,
                               std::vector<std::size_t> const &lines = {});

/// Trimmed, ASCII-lowercased descriptor label.
std::string canonical_word(std::string_view word);

/// Trimmed copy of `text`.
std::string trimmed(std::string_view text);

/// Merges datasets that share a grid. Words keep first-seen order; records are
/// concatenated and revalidated (so cross-file duplicates are rejected).
Dataset merge(std::vector<Dataset> const &parts);

}  // namespace iaa::ingest
