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

#include "iaa/cli/config.hpp"
#include "iaa/ingest/dataset.hpp"
#include "iaa/ingest/group.hpp"

#include <iosfwd>
#include <vector>

namespace iaa::cli {

/// Reads, parses and merges every input. Throws the first problem found.
ingest::Dataset load_dataset(RunConfig const &config);

/// Group specs from --groups (or every base group) followed by --merge specs.
std::vector<ingest::GroupSpec> group_specs(RunConfig const &config, ingest::Dataset const &ds);

/// Prints every issue with its location and a summary. Returns 0 iff valid.
int cmd_validate(RunConfig const &config, std::ostream &out, std::ostream &err);

/// Runs the full analysis and writes the tables (and optionally plots) into
/// the output directory. Nothing is left behind when any step fails.
int cmd_analyze(RunConfig const &config, std::ostream &out, std::ostream &err);

/// Serves the capture form until the process is terminated.
int cmd_serve(RunConfig const &config, std::ostream &out, std::ostream &err);

}  // namespace iaa::cli
