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

#include "iaa/core/fuzzy_set.hpp"

#include <string>
#include <vector>

namespace iaa::cli {

struct PlotSeries
{
  std::string           label;
  core::FuzzySet const *set;
};

/// Static SVG overlaying piecewise-constant membership curves with a legend.
/// All series must share one grid.
std::string membership_plot_svg(std::string const &title, std::vector<PlotSeries> const &series);

}  // namespace iaa::cli
