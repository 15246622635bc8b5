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
#include "iaa/analysis/report.hpp"
#include "iaa/analysis/similarity.hpp"
#include "iaa/ingest/dataset.hpp"
#include "iaa/ingest/group.hpp"

#include <span>
#include <vector>

namespace iaa::analysis {

struct PipelineResult
{
  std::vector<GroupModel>       models;    // one per spec, in spec order
  std::vector<SimilarityMatrix> matrices;  // one per dataset word, in word order
  AveragedSimilarity            average;
  DescriptorReport              report;

  bool operator==(PipelineResult const &) const = default;
};

/// One spec per base group label, in order of first appearance.
std::vector<ingest::GroupSpec> base_group_specs(ingest::Dataset const &ds);

/// Builds every group model, then the per-word similarity matrices, their
/// average and the descriptor report. Errors from all groups are gathered
/// into a single Error whose message lists each one with its group.
PipelineResult full_pipeline(ingest::Dataset const &ds, std::span<ingest::GroupSpec const> specs);

}  // namespace iaa::analysis
