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
#include "iaa/error.hpp"
#include "iaa/ingest/format.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char **argv)
{
  using iaa::cli::RunConfig;

  CLI::App app{"Interval-valued survey modelling: IAA fuzzy word models and group comparison"};
  app.require_subcommand(1);

  RunConfig   config;
  std::string format;

  auto add_scale = [&](CLI::App *cmd) {
    cmd->add_option("--format", format, "Input format (default: from file extension)")
        ->check(CLI::IsMember({"csv", "json"}, CLI::ignore_case));
    cmd->add_option("--scale-min", config.scale_min, "Scale minimum");
    cmd->add_option("--scale-max", config.scale_max, "Scale maximum");
    cmd->add_option("--step", config.step, "Grid step");
  };

  auto *validate = app.add_subcommand("validate", "Check a dataset and report every problem");
  validate->add_option("input", config.inputs, "Dataset file(s)")->required();
  add_scale(validate);
  validate->add_option("--words", config.word_order, "Questionnaire word order")->delimiter(';');

  auto *analyze = app.add_subcommand("analyze", "Build word models and write comparison tables");
  analyze->add_option("input", config.inputs, "Dataset file(s)")->required();
  add_scale(analyze);
  analyze->add_option("--groups", config.groups, "Base groups to analyse, in order")->delimiter(',');
  analyze->add_option("--merge", config.merges, "Composite group NAME=g1,g2 (repeatable)");
  analyze->add_option("--words", config.word_order, "Questionnaire word order, ';'-separated")->delimiter(';');
  analyze->add_option("--out", config.out_dir, "Output directory (default: $IAA_OUT or iaa_out)");
  analyze->add_flag("--plots", config.plots, "Also write SVG plots");
  analyze->add_flag("--markdown", config.markdown_tables, "Also write report.md");
  bool no_csv = false;
  analyze->add_flag("--no-csv", no_csv, "Skip the CSV tables");

  auto *serve = app.add_subcommand("serve", "Serve the capture form and collect responses");
  add_scale(serve);
  serve->add_option("--host", config.host, "Bind address");
  serve->add_option("--port", config.port, "Port (0 picks a free one)");
  serve->add_option("--survey", config.survey, "Survey definition JSON (scale and words)");
  serve->add_option("--store", config.store, "Append-only response log");
  serve->add_option("--assets", config.assets, "Capture UI static files");
  serve->add_option("--out", config.out_dir, "Directory for the default response log");

  CLI11_PARSE(app, argc, argv);

  for (auto const *cmd : {validate, analyze, serve})
  {
    for (auto const *flag : {"--scale-min", "--scale-max", "--step"})
    {
      if (cmd->parsed() && cmd->count(flag) > 0)
      {
        config.scale_explicit = true;
      }
    }
  }
  config.csv_tables = !no_csv;

  try
  {
    if (!format.empty())
    {
      config.format = iaa::ingest::parse_format(format);
    }
    (void)config.grid();
  }
  catch (iaa::Error const &e)
  {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  if (validate->parsed())
  {
    return iaa::cli::cmd_validate(config, std::cout, std::cerr);
  }
  if (analyze->parsed())
  {
    return iaa::cli::cmd_analyze(config, std::cout, std::cerr);
  }
  return iaa::cli::cmd_serve(config, std::cout, std::cerr);
}
