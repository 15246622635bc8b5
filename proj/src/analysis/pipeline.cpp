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
#include "iaa/analysis/pipeline.hpp"

#include "iaa/error.hpp"

#include <optional>
#include <set>
#include <sstream>

namespace iaa::analysis {

std::vector<ingest::GroupSpec> base_group_specs(ingest::Dataset const &ds)
{
  std::vector<ingest::GroupSpec> specs;
  for (auto const &g : ds.groups())
  {
    specs.push_back(ingest::GroupSpec::single(g));
  }
  return specs;
}

PipelineResult full_pipeline(ingest::Dataset const &ds, std::span<ingest::GroupSpec const> specs)
{
  if (specs.empty())
  {
    throw Error(ErrorCode::EmptyInput, "no groups to analyse");
  }

  std::set<std::string> names;
  for (auto const &spec : specs)
  {
    if (!names.insert(spec.name).second)
    {
      throw Error(ErrorCode::InvalidGroupSpec, "group name '" + spec.name + "' is defined twice");
    }
  }

  PipelineResult            result;
  std::optional<ErrorCode>  first_code;
  std::ostringstream        failures;
  for (auto const &spec : specs)
  {
    try
    {
      result.models.push_back(build_group_model(ds, spec));
    }
    catch (Error const &e)
    {
      if (!first_code)
      {
        first_code = e.code();
      }
      else
      {
        failures << "; ";
      }
      failures << "group '" << spec.name << "': " << e.what();
    }
  }
  if (first_code)
  {
    throw Error(*first_code, failures.str());
  }

  for (auto const &word : ds.words())
  {
    result.matrices.push_back(similarity_matrix(result.models, word, MissingModels::Skip));
  }
  result.average = average_similarity(result.matrices);
  result.report  = descriptor_report(result.models, ds.words());
  return result;
}

}  // namespace iaa::analysis
