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
#include "iaa/cli/store.hpp"

#include "iaa/error.hpp"
#include "iaa/ingest/format.hpp"

#include <json.hpp>

#include <cerrno>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>
#include <unistd.h>

namespace iaa::cli {

namespace {

using json  = nlohmann::json;
using ojson = nlohmann::ordered_json;

std::string const &required_string(json const &obj, char const *key, std::string const &where)
{
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_string())
  {
    throw Error(ErrorCode::ParseError, where + "." + key + " must be a string");
  }
  return it->get_ref<std::string const &>();
}

double required_number(json const &obj, char const *key, std::string const &where)
{
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_number() || !std::isfinite(it->get<double>()))
  {
    throw Error(ErrorCode::ParseError, where + "." + key + " must be a finite number");
  }
  return it->get<double>();
}

json parse_json(std::string_view text)
{
  try
  {
    return json::parse(text.begin(), text.end());
  }
  catch (json::parse_error const &e)
  {
    std::ostringstream os;
    os << "malformed JSON at byte " << e.byte;
    throw Error(ErrorCode::ParseError, os.str());
  }
}

}  // namespace

Submission parse_submission(std::string_view body)
{
  json const doc = parse_json(body);
  if (!doc.is_object())
  {
    throw Error(ErrorCode::ParseError, "submission must be a JSON object");
  }

  Submission sub;
  sub.participant_id = ingest::trimmed(required_string(doc, "participant_id", "submission"));
  sub.group          = ingest::trimmed(required_string(doc, "group", "submission"));
  if (auto it = doc.find("submission_id"); it != doc.end() && !it->is_null())
  {
    if (!it->is_string())
    {
      throw Error(ErrorCode::ParseError, "submission.submission_id must be a string");
    }
    sub.submission_id = it->get<std::string>();
  }

  auto const responses = doc.find("responses");
  if (responses == doc.end() || !responses->is_array())
  {
    throw Error(ErrorCode::ParseError, "submission.responses must be an array");
  }
  for (std::size_t i = 0; i < responses->size(); ++i)
  {
    auto const       &item  = (*responses)[i];
    std::string const where = "responses[" + std::to_string(i) + "]";
    if (!item.is_object())
    {
      throw Error(ErrorCode::ParseError, where + " must be an object");
    }
    sub.responses.push_back({ingest::canonical_word(required_string(item, "word", where)),
                             required_number(item, "left", where), required_number(item, "right", where)});
  }
  return sub;
}

std::string submission_to_json(Submission const &submission)
{
  ojson doc;
  doc["participant_id"] = submission.participant_id;
  doc["group"]          = submission.group;
  if (!submission.submission_id.empty())
  {
    doc["submission_id"] = submission.submission_id;
  }
  auto &responses = doc["responses"] = ojson::array();
  for (auto const &r : submission.responses)
  {
    responses.push_back(ojson{{"word", r.word}, {"left", r.left}, {"right", r.right}});
  }
  return doc.dump();
}

Survey default_survey()
{
  return Survey{core::DomainGrid{},
                {"impossible to do", "extremely difficult", "moderately difficult", "a little bit difficult",
                 "not at all difficult"}};
}

Survey load_survey(std::string_view json_text)
{
  json const doc = parse_json(json_text);
  if (!doc.is_object())
  {
    throw Error(ErrorCode::ParseError, "survey definition must be a JSON object");
  }
  Survey survey{core::DomainGrid{}, {}};
  if (auto it = doc.find("scale"); it != doc.end())
  {
    if (!it->is_object())
    {
      throw Error(ErrorCode::ParseError, "'scale' must be an object");
    }
    survey.grid = core::DomainGrid{required_number(*it, "min", "scale"), required_number(*it, "max", "scale"),
                                   required_number(*it, "step", "scale")};
  }
  auto const words = doc.find("words");
  if (words == doc.end() || !words->is_array() || words->empty())
  {
    throw Error(ErrorCode::ParseError, "survey definition needs a nonempty 'words' array");
  }
  for (auto const &w : *words)
  {
    if (!w.is_string())
    {
      throw Error(ErrorCode::ParseError, "'words' must contain strings");
    }
    survey.words.push_back(ingest::canonical_word(w.get<std::string>()));
  }
  auto const issues = ingest::find_issues(survey.grid, survey.words, {});
  if (!issues.empty())
  {
    throw Error(issues.front().code, issues.front().describe());
  }
  return survey;
}

std::string survey_to_json(Survey const &survey)
{
  ojson doc;
  doc["scale"] = ojson{{"min", survey.grid.min()}, {"max", survey.grid.max()}, {"step", survey.grid.step()}};
  doc["words"] = survey.words;
  return doc.dump(2) + "\n";
}

ResponseStore::ResponseStore(Survey survey, std::filesystem::path log_path)
  : survey_(std::move(survey))
  , log_path_(std::move(log_path))
{
  std::error_code ec;
  if (std::filesystem::is_regular_file(log_path_, ec))
  {
    std::ifstream in{log_path_};
    std::string   line;
    while (std::getline(in, line))
    {
      if (ingest::trimmed(line).empty())
      {
        continue;
      }
      try
      {
        auto sub     = parse_submission(line);
        auto records = validate(sub);
        records_.insert(records_.end(), records.begin(), records.end());
        if (!sub.submission_id.empty())
        {
          by_submission_id_.emplace(sub.submission_id, sub);
        }
        ++submissions_;
      }
      catch (Error const &)
      {
        ++skipped_lines_;  // e.g. a line cut short by a crash
      }
    }
  }
  else if (log_path_.has_parent_path())
  {
    std::filesystem::create_directories(log_path_.parent_path(), ec);
  }

  log_ = std::fopen(log_path_.c_str(), "a");
  if (log_ == nullptr)
  {
    throw Error(ErrorCode::Io, "cannot open response log '" + log_path_.string() + "': " + std::strerror(errno));
  }
  std::setvbuf(log_, nullptr, _IONBF, 0);
}

ResponseStore::~ResponseStore()
{
  if (log_ != nullptr)
  {
    std::fclose(log_);
  }
}

std::vector<ingest::ResponseRecord> ResponseStore::validate(Submission const &submission) const
{
  if (submission.participant_id.empty() || submission.group.empty())
  {
    throw Error(ErrorCode::ParseError, "participant_id and group must be nonempty");
  }
  if (submission.responses.empty())
  {
    throw Error(ErrorCode::EmptyInput, "submission contains no responses");
  }

  std::vector<ingest::ResponseRecord> fresh;
  for (auto const &r : submission.responses)
  {
    try
    {
      fresh.push_back({submission.participant_id, submission.group, ingest::canonical_word(r.word),
                       core::Interval{r.left, r.right}});
    }
    catch (Error const &e)
    {
      throw Error(e.code(), std::string{e.what()} + " (participant '" + submission.participant_id + "', word '" +
                                ingest::canonical_word(r.word) + "')");
    }
  }

  auto candidate = records_;
  candidate.insert(candidate.end(), fresh.begin(), fresh.end());
  auto const issues = ingest::find_issues(survey_.grid, survey_.words, candidate);
  if (!issues.empty())
  {
    throw Error(issues.front().code, issues.front().describe());
  }
  return fresh;
}

ResponseStore::Outcome ResponseStore::submit(Submission const &submission)
{
  std::lock_guard lock{mutex_};

  if (!submission.submission_id.empty())
  {
    if (auto it = by_submission_id_.find(submission.submission_id); it != by_submission_id_.end())
    {
      if (it->second == submission)
      {
        return Outcome::Replayed;
      }
      throw Error(ErrorCode::DuplicateResponse,
                  "submission id '" + submission.submission_id + "' was already used for different content");
    }
  }

  auto fresh = validate(submission);

  std::string const line   = submission_to_json(submission) + "\n";
  off_t const       offset = ::lseek(::fileno(log_), 0, SEEK_END);
  bool const        written = std::fwrite(line.data(), 1, line.size(), log_) == line.size() &&
                       std::fflush(log_) == 0 && ::fsync(::fileno(log_)) == 0;
  if (!written)
  {
    int const err = errno;
    std::clearerr(log_);
    if (offset >= 0)
    {
      [[maybe_unused]] int const rc = ::ftruncate(::fileno(log_), offset);
    }
    throw Error(ErrorCode::Io, "failed to persist submission: " + std::string{std::strerror(err)});
  }

  records_.insert(records_.end(), fresh.begin(), fresh.end());
  if (!submission.submission_id.empty())
  {
    by_submission_id_.emplace(submission.submission_id, submission);
  }
  ++submissions_;
  return Outcome::Accepted;
}

ingest::Dataset ResponseStore::snapshot() const
{
  std::lock_guard lock{mutex_};
  return ingest::Dataset::create(survey_.grid, survey_.words, records_);
}

std::string ResponseStore::export_json() const
{
  return ingest::serialize_json(snapshot());
}

std::size_t ResponseStore::submission_count() const
{
  std::lock_guard lock{mutex_};
  return submissions_;
}

}  // namespace iaa::cli
