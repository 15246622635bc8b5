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

#include "iaa/analysis/pipeline.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace iaa::cli {

/// Lowercase file-name fragment: ASCII letters and digits kept, everything
/// else collapsed to single underscores.
std::string slug(std::string_view label);

/// Fixed-point text with `decimals` places.
std::string fixed(double value, int decimals);

// CSV tables. Similarities, centroids and heights carry 3 decimals and
// supports 1; cells without a value read "NA".
std::string similarity_csv(analysis::SimilarityMatrix const &matrix);
std::string average_csv(analysis::AveragedSimilarity const &average);
std::string exclusions_csv(analysis::AveragedSimilarity const &average);
std::string centroids_csv(analysis::DescriptorReport const &report, std::vector<std::string> const &words);
std::string heights_csv(analysis::DescriptorReport const &report, std::vector<std::string> const &words);
std::string supports_csv(analysis::DescriptorReport const &report, std::vector<std::string> const &words);
std::string modes_csv(analysis::DescriptorReport const &report, std::vector<std::string> const &words);
std::string gaps_csv(analysis::DescriptorReport const &report);

/// Membership at every grid point: column "x" then one column per word the
/// group answered. Full precision.
std::string model_csv(analysis::GroupModel const &model, core::DomainGrid const &grid);

/// Every table above as one Markdown document.
std::string markdown_report(analysis::PipelineResult const &result, std::vector<std::string> const &words,
                            core::DomainGrid const &grid);

/// File name -> content for everything `analyze` writes. Ordered, so that
/// iteration and output are deterministic.
using Artifacts = std::map<std::string, std::string>;

struct EmitOptions
{
  bool csv      = true;
  bool markdown = false;
  bool plots    = false;
};

Artifacts render_artifacts(analysis::PipelineResult const &result, std::vector<std::string> const &words,
                           core::DomainGrid const &grid, EmitOptions const &emit);

}  // namespace iaa::cli
