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

/// Pairwise Jaccard similarities between groups for one word. Symmetric with a
/// unit diagonal. Entries involving a group without a model for the word are
/// empty (only produced under MissingModels::Skip).
class SimilarityMatrix
{
public:
  SimilarityMatrix(std::string word, std::vector<std::string> groups);

  std::string const &word() const noexcept
  {
    return word_;
  }
  std::vector<std::string> const &groups() const noexcept
  {
    return groups_;
  }
  std::size_t size() const noexcept
  {
    return groups_.size();
  }

  std::optional<double> at(std::size_t row, std::size_t col) const
  {
    return values_[row * groups_.size() + col];
  }

  /// Sets both (row, col) and (col, row).
  void set(std::size_t row, std::size_t col, double value);

  bool complete() const noexcept;

  bool operator==(SimilarityMatrix const &) const = default;

private:
  std::string                        word_;
  std::vector<std::string>           groups_;
  std::vector<std::optional<double>> values_;
};

enum class MissingModels
{
  Throw,
  Skip,
};

/// Throws MissingModel (naming group and word) if a group lacks the word,
/// unless `missing` is Skip. Throws EmptyInput for an empty model list.
SimilarityMatrix similarity_matrix(std::span<GroupModel const> models, std::string_view word,
                                   MissingModels missing = MissingModels::Throw);

/// A word left out of one pair's average because that pair had no value.
struct Exclusion
{
  std::size_t row;
  std::size_t col;
  std::string word;

  bool operator==(Exclusion const &) const = default;
};

/// Entry-wise mean over words. A pair missing in some word is averaged over
/// the words where it is present, and each omission is listed.
struct AveragedSimilarity
{
  std::vector<std::string>           groups;
  std::vector<std::optional<double>> values;       // row-major, unit diagonal
  std::vector<std::size_t>           word_counts;  // words contributing per entry
  std::vector<Exclusion>             exclusions;

  std::optional<double> at(std::size_t row, std::size_t col) const
  {
    return values[row * groups.size() + col];
  }

  bool operator==(AveragedSimilarity const &) const = default;
};

/// Throws GroupListMismatch if the matrices disagree on groups, EmptyInput if
/// there are none.
AveragedSimilarity average_similarity(std::span<SimilarityMatrix const> matrices);

}  // namespace iaa::analysis
