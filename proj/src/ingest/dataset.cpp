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
#include "iaa/ingest/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <utility>

namespace iaa::ingest {

std::string Issue::describe() const
{
  std::ostringstream os;
  if (line > 0)
  {
    os << "line " << line << ": ";
  }
  os << to_string(code) << ": " << message;
  if (!participant_id.empty() || !word.empty())
  {
    os << " (participant '" << participant_id << "', word '" << word << "')";
  }
  return os.str();
}

std::string trimmed(std::string_view text)
{
  auto const is_space = [](unsigned char c) { return std::isspace(c) != 0; };
  while (!text.empty() && is_space(static_cast<unsigned char>(text.front())))
  {
    text.remove_prefix(1);
  }
  while (!text.empty() && is_space(static_cast<unsigned char>(text.back())))
  {
    text.remove_suffix(1);
  }
  return std::string{text};
}

std::string canonical_word(std::string_view word)
{
  std::string out = trimmed(word);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::vector<Issue> find_issues(core::DomainGrid const &grid, std::vector<std::string> const &words,
                               std::vector<ResponseRecord> const &records, std::vector<std::size_t> const &lines)
{
  std::vector<Issue> issues;

  std::set<std::string> known;
  for (auto const &w : words)
  {
    if (w.empty())
    {
      issues.push_back({ErrorCode::ParseError, "empty descriptor label in word list", 0, "", ""});
    }
    else if (!known.insert(w).second)
    {
      issues.push_back({ErrorCode::ParseError, "descriptor '" + w + "' listed twice", 0, "", w});
    }
  }

  std::map<std::pair<std::string, std::string>, std::size_t> seen;
  for (std::size_t k = 0; k < records.size(); ++k)
  {
    ResponseRecord const &r    = records[k];
    std::size_t const     line = k < lines.size() ? lines[k] : 0;
    auto const issue = [&](ErrorCode code, std::string message) {
      issues.push_back({code, std::move(message), line, r.participant_id, r.word});
    };

    if (r.participant_id.empty() || r.group.empty() || r.word.empty())
    {
      issue(ErrorCode::ParseError, "participant_id, group and word must be nonempty");
      continue;
    }
    if (known.count(r.word) == 0)
    {
      issue(ErrorCode::UnknownWord, "descriptor '" + r.word + "' is not in the word list");
    }
    if (!r.interval.fits(grid))
    {
      std::ostringstream os;
      os << "interval [" << r.interval.left() << ", " << r.interval.right() << "] lies outside the scale ["
         << grid.min() << ", " << grid.max() << "]";
      issue(ErrorCode::DomainViolation, os.str());
    }
    auto const [it, inserted] = seen.emplace(std::make_pair(r.participant_id, r.word), line);
    if (!inserted)
    {
      std::ostringstream os;
      os << "participant answered this word more than once";
      if (it->second > 0)
      {
        os << " (first answer on line " << it->second << ")";
      }
      issue(ErrorCode::DuplicateResponse, os.str());
    }
  }
  return issues;
}

Dataset::Dataset(core::DomainGrid grid, std::vector<std::string> words, std::vector<ResponseRecord> records)
  : grid_(grid)
  , words_(std::move(words))
  , records_(std::move(records))
{}

Dataset Dataset::create(core::DomainGrid grid, std::vector<std::string> words, std::vector<ResponseRecord> records)
{
  for (auto &w : words)
  {
    w = canonical_word(w);
  }
  for (auto &r : records)
  {
    r.participant_id = trimmed(r.participant_id);
    r.group          = trimmed(r.group);
    r.word           = canonical_word(r.word);
  }
  auto const issues = find_issues(grid, words, records);
  if (!issues.empty())
  {
    throw Error(issues.front().code, issues.front().describe());
  }
  return Dataset{grid, std::move(words), std::move(records)};
}

bool Dataset::has_word(std::string_view word) const
{
  auto const w = canonical_word(word);
  return std::find(words_.begin(), words_.end(), w) != words_.end();
}

bool Dataset::has_group(std::string_view group) const
{
  return std::any_of(records_.begin(), records_.end(), [&](ResponseRecord const &r) { return r.group == group; });
}

std::vector<std::string> Dataset::groups() const
{
  std::vector<std::string> out;
  for (auto const &r : records_)
  {
    if (std::find(out.begin(), out.end(), r.group) == out.end())
    {
      out.push_back(r.group);
    }
  }
  return out;
}

std::size_t Dataset::participant_count() const
{
  std::set<std::string> ids;
  for (auto const &r : records_)
  {
    ids.insert(r.participant_id);
  }
  return ids.size();
}

Dataset Dataset::with_word_order(std::vector<std::string> const &order) const
{
  std::vector<std::string> canonical;
  canonical.reserve(order.size());
  for (auto const &w : order)
  {
    canonical.push_back(canonical_word(w));
  }

  auto sorted_new = canonical;
  auto sorted_old = words_;
  std::sort(sorted_new.begin(), sorted_new.end());
  std::sort(sorted_old.begin(), sorted_old.end());
  if (sorted_new != sorted_old)
  {
    for (auto const &w : canonical)
    {
      if (!has_word(w))
      {
        throw Error(ErrorCode::UnknownWord, "word order names '" + w + "', which the dataset does not contain");
      }
    }
    throw Error(ErrorCode::UnknownWord, "word order must list every dataset word exactly once");
  }
  return Dataset{grid_, std::move(canonical), records_};
}

Dataset merge(std::vector<Dataset> const &parts)
{
  if (parts.empty())
  {
    throw Error(ErrorCode::EmptyInput, "no datasets to merge");
  }
  std::vector<std::string>    words;
  std::vector<ResponseRecord> records;
  for (auto const &part : parts)
  {
    if (!(part.grid() == parts.front().grid()))
    {
      throw Error(ErrorCode::GridMismatch, "input files declare different scales");
    }
    for (auto const &w : part.words())
    {
      if (std::find(words.begin(), words.end(), w) == words.end())
      {
        words.push_back(w);
      }
    }
    records.insert(records.end(), part.records().begin(), part.records().end());
  }
  return Dataset::create(parts.front().grid(), std::move(words), std::move(records));
}

}  // namespace iaa::ingest
