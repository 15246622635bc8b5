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
#include "iaa/analysis/similarity.hpp"

#include "iaa/core/measures.hpp"
#include "iaa/error.hpp"

#include <algorithm>

namespace iaa::analysis {

SimilarityMatrix::SimilarityMatrix(std::string word, std::vector<std::string> groups)
  : word_(std::move(word))
  , groups_(std::move(groups))
  , values_(groups_.size() * groups_.size())
{}

void SimilarityMatrix::set(std::size_t row, std::size_t col, double value)
{
  values_[row * groups_.size() + col] = value;
  values_[col * groups_.size() + row] = value;
}

bool SimilarityMatrix::complete() const noexcept
{
  return std::all_of(values_.begin(), values_.end(), [](auto const &v) { return v.has_value(); });
}

SimilarityMatrix similarity_matrix(std::span<GroupModel const> models, std::string_view word, MissingModels missing)
{
  if (models.empty())
  {
    throw Error(ErrorCode::EmptyInput, "similarity matrix needs at least one group model");
  }

  auto const               w = ingest::canonical_word(word);
  std::vector<std::string> groups;
  std::vector<WordModel const *> sets;
  for (auto const &m : models)
  {
    groups.push_back(m.group);
    auto const *found = m.find(w);
    if (found == nullptr && missing == MissingModels::Throw)
    {
      throw Error(ErrorCode::MissingModel, "group '" + m.group + "' has no model for word '" + w + "'");
    }
    sets.push_back(found);
  }

  SimilarityMatrix matrix{w, std::move(groups)};
  for (std::size_t i = 0; i < sets.size(); ++i)
  {
    if (sets[i] == nullptr)
    {
      continue;
    }
    matrix.set(i, i, 1.0);
    for (std::size_t j = i + 1; j < sets.size(); ++j)
    {
      if (sets[j] != nullptr)
      {
        matrix.set(i, j, core::jaccard(sets[i]->set, sets[j]->set));
      }
    }
  }
  return matrix;
}

AveragedSimilarity average_similarity(std::span<SimilarityMatrix const> matrices)
{
  if (matrices.empty())
  {
    throw Error(ErrorCode::EmptyInput, "no similarity matrices to average");
  }
  auto const &groups = matrices.front().groups();
  for (auto const &m : matrices)
  {
    if (m.groups() != groups)
    {
      throw Error(ErrorCode::GroupListMismatch,
                  "matrix for word '" + m.word() + "' covers a different group list than '" +
                      matrices.front().word() + "'");
    }
  }

  std::size_t const  n = groups.size();
  AveragedSimilarity out{groups, std::vector<std::optional<double>>(n * n), std::vector<std::size_t>(n * n, 0), {}};
  for (std::size_t i = 0; i < n; ++i)
  {
    for (std::size_t j = 0; j < n; ++j)
    {
      double sum = 0.0;
      std::size_t used = 0;
      for (auto const &m : matrices)
      {
        if (auto v = m.at(i, j))
        {
          sum += *v;
          ++used;
        }
        else if (i < j)
        {
          out.exclusions.push_back({i, j, m.word()});
        }
      }
      out.word_counts[i * n + j] = used;
      if (i == j)
      {
        out.values[i * n + j] = 1.0;
      }
      else if (used > 0)
      {
        out.values[i * n + j] = sum / static_cast<double>(used);
      }
    }
  }
  return out;
}

}  // namespace iaa::analysis
