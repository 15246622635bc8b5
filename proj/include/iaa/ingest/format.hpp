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
#include "iaa/error.hpp"
#include "iaa/ingest/dataset.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace iaa::ingest {

enum class Format
{
  Csv,
  Json,
};

/// "csv" or "json" (case-insensitive); throws ParseError otherwise.
Format parse_format(std::string_view name);

/// Guess from a file extension; nullopt when it is neither .csv nor .json.
std::optional<Format> format_from_extension(std::string_view path);

/// Metadata the CSV layout cannot carry. JSON input uses its own "scale" and
/// "words" when present and falls back to these otherwise.
struct ParseOptions
{
  core::DomainGrid         grid{};
  std::vector<std::string> words{};  // empty: first-appearance order
};

struct ValidationReport
{
  std::optional<Dataset> dataset;  // present iff issues is empty
  std::vector<Issue>     issues;

  bool ok() const noexcept
  {
    return issues.empty();
  }
};

/// Parses and validates, collecting every record-level issue. A syntax error
/// that prevents reading further (bad header, malformed JSON) ends collection.
ValidationReport check_dataset(std::string_view input, Format format, ParseOptions const &options = {});

/// Parses and validates; throws the first issue as an Error.
Dataset parse_dataset(std::string_view input, Format format, ParseOptions const &options = {});
Dataset parse_dataset(std::istream &input, Format format, ParseOptions const &options = {});

std::string serialize_csv(Dataset const &ds);
std::string serialize_json(Dataset const &ds);

/// Shortest decimal text that parses back to exactly `value`.
std::string format_number(double value);

}  // namespace iaa::ingest
