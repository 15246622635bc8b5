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
#include "iaa/cli/commands.hpp"

#include "iaa/analysis/pipeline.hpp"
#include "iaa/cli/server.hpp"
#include "iaa/cli/store.hpp"
#include "iaa/cli/tables.hpp"
#include "iaa/error.hpp"
#include "iaa/ingest/format.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>

namespace iaa::cli {

namespace fs = std::filesystem;

core::DomainGrid RunConfig::grid() const
{
  return core::DomainGrid{scale_min, scale_max, step};
}

std::string RunConfig::resolved_out_dir() const
{
  if (!out_dir.empty())
  {
    return out_dir;
  }
  if (char const *env = std::getenv("IAA_OUT"); env != nullptr && *env != '\0')
  {
    return env;
  }
  return "iaa_out";
}

namespace {

std::string read_file(std::string const &path)
{
  std::ifstream in{path, std::ios::binary};
  if (!in)
  {
    throw Error(ErrorCode::Io, "cannot open '" + path + "'");
  }
  std::string content{std::istreambuf_iterator<char>{in}, std::istreambuf_iterator<char>{}};
  if (in.bad())
  {
    throw Error(ErrorCode::Io, "failed reading '" + path + "'");
  }
  return content;
}

ingest::Format input_format(RunConfig const &config, std::string const &path)
{
  if (config.format)
  {
    return *config.format;
  }
  if (auto f = ingest::format_from_extension(path))
  {
    return *f;
  }
  throw Error(ErrorCode::ParseError, "cannot infer the format of '" + path + "'; pass --format csv|json");
}

ingest::ParseOptions parse_options(RunConfig const &config)
{
  return ingest::ParseOptions{config.grid(), config.word_order};
}

}  // namespace

ingest::Dataset load_dataset(RunConfig const &config)
{
  if (config.inputs.empty())
  {
    throw Error(ErrorCode::EmptyInput, "no input files given");
  }
  auto const options = parse_options(config);

  std::vector<ingest::Dataset> parts;
  for (auto const &path : config.inputs)
  {
    try
    {
      auto ds = ingest::parse_dataset(read_file(path), input_format(config, path), options);
      if (config.scale_explicit && !(ds.grid() == options.grid))
      {
        ds = ingest::Dataset::create(options.grid, ds.words(), ds.records());
      }
      parts.push_back(std::move(ds));
    }
    catch (Error const &e)
    {
      throw Error(e.code(), path + ": " + e.what());
    }
  }

  auto ds = parts.size() == 1 ? std::move(parts.front()) : ingest::merge(parts);
  if (!config.word_order.empty())
  {
    ds = ds.with_word_order(config.word_order);
  }
  return ds;
}

std::vector<ingest::GroupSpec> group_specs(RunConfig const &config, ingest::Dataset const &ds)
{
  std::vector<ingest::GroupSpec> specs;
  if (config.groups.empty())
  {
    specs = analysis::base_group_specs(ds);
  }
  else
  {
    for (auto const &g : config.groups)
    {
      specs.push_back(ingest::GroupSpec::single(ingest::trimmed(g)));
    }
  }
  auto const declared = ds.groups();
  for (auto const &m : config.merges)
  {
    auto spec = ingest::parse_group_spec(m);
    for (auto const &member : spec.members)
    {
      if (std::find(declared.begin(), declared.end(), member) == declared.end())
      {
        throw Error(ErrorCode::UnknownGroup,
                    "--merge " + spec.name + " references '" + member + "', which has no responses");
      }
    }
    specs.push_back(std::move(spec));
  }
  return specs;
}

int cmd_validate(RunConfig const &config, std::ostream &out, std::ostream &err)
{
  if (config.inputs.empty())
  {
    err << "error: no input files given\n";
    return 1;
  }

  bool                         valid = true;
  std::vector<ingest::Dataset> parts;
  try
  {
    auto const options = parse_options(config);
    for (auto const &path : config.inputs)
    {
      auto report = ingest::check_dataset(read_file(path), input_format(config, path), options);
      if (report.ok() && config.scale_explicit && !(report.dataset->grid() == options.grid))
      {
        report.issues = ingest::find_issues(options.grid, report.dataset->words(), report.dataset->records());
      }
      for (auto const &issue : report.issues)
      {
        out << path << ": " << issue.describe() << '\n';
      }
      if (!report.ok())
      {
        out << path << ": " << report.issues.size() << (report.issues.size() == 1 ? " problem" : " problems")
            << " found\n";
        valid = false;
        continue;
      }
      parts.push_back(std::move(*report.dataset));
    }
    if (!valid)
    {
      return 1;
    }

    auto ds = parts.size() == 1 ? std::move(parts.front()) : ingest::merge(parts);
    if (!config.word_order.empty())
    {
      ds = ds.with_word_order(config.word_order);
    }
    out << ds.participant_count() << " participants, " << ds.words().size() << " words, " << ds.records().size()
        << " records";
    auto const groups = ds.groups();
    if (!groups.empty())
    {
      out << " (groups:";
      for (auto const &g : groups)
      {
        out << ' ' << g;
      }
      out << ')';
    }
    out << '\n';
    return 0;
  }
  catch (Error const &e)
  {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

int cmd_analyze(RunConfig const &config, std::ostream &out, std::ostream &err)
{
  Artifacts                artifacts;
  analysis::PipelineResult result;
  std::vector<std::string> words;
  try
  {
    auto const ds    = load_dataset(config);
    auto const specs = group_specs(config, ds);
    result           = analysis::full_pipeline(ds, specs);
    words            = ds.words();
    artifacts        = render_artifacts(result, words, ds.grid(),
                                        EmitOptions{config.csv_tables, config.markdown_tables, config.plots});
  }
  catch (Error const &e)
  {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  fs::path const  dir = config.resolved_out_dir();
  std::error_code ec;
  bool const      created_dir = !fs::exists(dir, ec) && fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir, ec))
  {
    err << "error: cannot create output directory '" << dir.string() << "'\n";
    return 1;
  }

  std::vector<fs::path> written;
  for (auto const &[name, content] : artifacts)
  {
    auto const    path = dir / name;
    std::ofstream file{path, std::ios::binary | std::ios::trunc};
    if (file)
    {
      written.push_back(path);
      file << content;
      file.close();
    }
    if (!file)
    {
      err << "error: cannot write '" << path.string() << "'; removing partial output\n";
      for (auto const &p : written)
      {
        fs::remove(p, ec);
      }
      if (created_dir)
      {
        fs::remove(dir, ec);
      }
      return 1;
    }
  }

  out << "wrote " << artifacts.size() << " files to " << dir.string() << '\n';
  for (auto const &g : result.report.groups)
  {
    if (!g.ordered())
    {
      out << "warning: group '" << g.group << "' word centroids are out of questionnaire order\n";
    }
  }
  for (auto const &e : result.average.exclusions)
  {
    out << "note: '" << e.word << "' excluded from the " << result.average.groups[e.row] << " / "
        << result.average.groups[e.col] << " average (missing model)\n";
  }
  return 0;
}

int cmd_serve(RunConfig const &config, std::ostream &out, std::ostream &err)
{
  try
  {
    Survey survey = default_survey();
    if (!config.survey.empty())
    {
      survey = load_survey(read_file(config.survey));
    }
    else if (config.scale_explicit)
    {
      survey.grid = config.grid();
    }
    fs::path const store_path =
        config.store.empty() ? fs::path{config.resolved_out_dir()} / "responses.ndjson" : fs::path{config.store};

    ResponseStore store{survey, store_path};
    if (store.skipped_lines() > 0)
    {
      err << "warning: skipped " << store.skipped_lines() << " unreadable lines in " << store_path.string() << '\n';
    }
    CaptureServer server{store, config.assets};
    int const     port = server.bind(config.host, config.port);
    out << "serving on http://" << config.host << ':' << port << " (log: " << store_path.string() << ", "
        << store.submission_count() << " submissions loaded)" << std::endl;
    server.run();
    return 0;
  }
  catch (Error const &e)
  {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace iaa::cli
