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
#include "iaa/ingest/format.hpp"

#include <optional>
#include <string>
#include <vector>

namespace iaa::cli {

struct RunConfig
{
  std::vector<std::string>      inputs;
  std::optional<ingest::Format> format;  // nullopt: infer from extension

  double scale_min = core::DomainGrid::kDefaultMin;
  double scale_max = core::DomainGrid::kDefaultMax;
  double step      = core::DomainGrid::kDefaultStep;
  bool   scale_explicit = false;  // a scale flag was passed; overrides JSON "scale"

  std::vector<std::string> groups;      // base groups to analyse; empty: all
  std::vector<std::string> merges;      // "NAME=g1,g2"
  std::vector<std::string> word_order;  // empty: dataset order

  std::string out_dir;  // empty: $IAA_OUT, then "iaa_out"
  bool        csv_tables      = true;
  bool        markdown_tables = false;
  bool        plots           = false;

  // serve
  std::string host = "127.0.0.1";
  int         port = 8080;
  std::string survey;  // JSON file with "scale" and "words"
  std::string store;   // append-only log; empty: <out>/responses.ndjson
  std::string assets;  // capture UI static files

  /// Throws InvalidGrid when the scale flags are inconsistent.
  core::DomainGrid grid() const;

  /// --out, then IAA_OUT, then "iaa_out".
  std::string resolved_out_dir() const;
};

}  // namespace iaa::cli
