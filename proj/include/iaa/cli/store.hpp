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
#include "iaa/ingest/dataset.hpp"

#include <cstdio>
#include <filesystem>
#include <map>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

namespace iaa::cli {

struct SubmittedResponse
{
  std::string word;
  double      left;
  double      right;

  bool operator==(SubmittedResponse const &) const = default;
};

/// One participant's full response set as posted by the capture form.
struct Submission
{
  std::string                    participant_id;
  std::string                    group;
  std::vector<SubmittedResponse> responses;
  std::string                    submission_id;  // optional idempotency key

  bool operator==(Submission const &) const = default;
};

/// Decodes the POST body: {"participant_id", "group", "submission_id"?,
/// "responses": [{"word", "left", "right"}]}. Throws ParseError.
Submission parse_submission(std::string_view body);

std::string submission_to_json(Submission const &submission);

/// Survey definition served to the capture form.
struct Survey
{
  core::DomainGrid         grid;
  std::vector<std::string> words;
};

/// The five descriptors of the functional-outcome questionnaire on 0..10.
Survey default_survey();

/// Reads {"scale": {...}, "words": [...]}; any dataset JSON qualifies.
Survey load_survey(std::string_view json_text);

std::string survey_to_json(Survey const &survey);

/// Accepted submissions, persisted one JSON line each to an append-only log
/// and replayed from it on construction. All members are thread-safe; writes
/// are serialized and export sees a consistent prefix of the log.
class ResponseStore
{
public:
  enum class Outcome
  {
    Accepted,
    Replayed,  // same submission_id and content seen before; nothing written
  };

  /// Opens (creating if needed) the log at `log_path`. Lines that fail to
  /// parse or validate are skipped and counted in skipped_lines().
  ResponseStore(Survey survey, std::filesystem::path log_path);
  ~ResponseStore();

  ResponseStore(ResponseStore const &)            = delete;
  ResponseStore &operator=(ResponseStore const &) = delete;

  Survey const &survey() const noexcept
  {
    return survey_;
  }

  /// Validates against the dataset rules plus everything already stored and
  /// appends. Throws the violated rule as an Error (Io when the log write
  /// fails; the submission is then not recorded).
  Outcome submit(Submission const &submission);

  /// Accumulated responses in the ingest JSON schema.
  std::string export_json() const;

  ingest::Dataset snapshot() const;

  std::size_t submission_count() const;
  std::size_t skipped_lines() const noexcept
  {
    return skipped_lines_;
  }

private:
  std::vector<ingest::ResponseRecord> validate(Submission const &submission) const;

  Survey                                          survey_;
  std::filesystem::path                           log_path_;
  std::FILE                                      *log_ = nullptr;
  mutable std::mutex                              mutex_;
  std::vector<ingest::ResponseRecord>             records_;
  std::map<std::string, Submission>               by_submission_id_;
  std::size_t                                     submissions_   = 0;
  std::size_t                                     skipped_lines_ = 0;
};

}  // namespace iaa::cli
