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
#include "iaa/cli/tables.hpp"

#include "iaa/cli/svg.hpp"
#include "iaa/ingest/format.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <set>

namespace iaa::cli {

namespace {

std::string cell(std::optional<double> value, int decimals)
{
  return value ? fixed(*value, decimals) : std::string{"NA"};
}

std::string csv_text(std::string_view text)
{
  if (text.find_first_of(",\"\n\r") == std::string_view::npos)
  {
    return std::string{text};
  }
  std::string out = "\"";
  for (char c : text)
  {
    if (c == '"')
    {
      out.push_back('"');
    }
    out.push_back(c);
  }
  return out + "\"";
}

using Getter = std::function<std::optional<double>(analysis::WordDescriptor const &)>;

std::vector<std::vector<std::string>> descriptor_rows(analysis::DescriptorReport const &report,
                                                      std::vector<std::string> const &words, Getter const &get,
                                                      int decimals)
{
  std::vector<std::vector<std::string>> rows;
  for (auto const &w : words)
  {
    std::vector<std::string> row{w};
    for (auto const &g : report.groups)
    {
      auto const *d = g.find(w);
      row.push_back(d == nullptr ? "NA" : cell(get(*d), decimals));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::string> descriptor_header(analysis::DescriptorReport const &report)
{
  std::vector<std::string> header{"word"};
  for (auto const &g : report.groups)
  {
    header.push_back(g.group);
  }
  return header;
}

std::string to_csv(std::vector<std::string> const &header, std::vector<std::vector<std::string>> const &rows)
{
  std::string out;
  auto const  line = [&](std::vector<std::string> const &fields) {
    for (std::size_t i = 0; i < fields.size(); ++i)
    {
      out += (i == 0 ? "" : ",") + csv_text(fields[i]);
    }
    out += '\n';
  };
  line(header);
  for (auto const &r : rows)
  {
    line(r);
  }
  return out;
}

std::string to_markdown(std::vector<std::string> const &header, std::vector<std::vector<std::string>> const &rows)
{
  std::string out;
  auto const  line = [&](std::vector<std::string> const &fields) {
    out += '|';
    for (auto const &f : fields)
    {
      out += ' ' + f + " |";
    }
    out += '\n';
  };
  line(header);
  out += '|';
  for (std::size_t i = 0; i < header.size(); ++i)
  {
    out += i == 0 ? " --- |" : " ---: |";
  }
  out += '\n';
  for (auto const &r : rows)
  {
    line(r);
  }
  return out;
}

struct Table
{
  std::vector<std::string>              header;
  std::vector<std::vector<std::string>> rows;
};

Table matrix_table(std::vector<std::string> const &groups,
                   std::function<std::optional<double>(std::size_t, std::size_t)> const &at)
{
  Table t;
  t.header.push_back("group");
  t.header.insert(t.header.end(), groups.begin(), groups.end());
  for (std::size_t i = 0; i < groups.size(); ++i)
  {
    std::vector<std::string> row{groups[i]};
    for (std::size_t j = 0; j < groups.size(); ++j)
    {
      row.push_back(cell(at(i, j), 3));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table similarity_table(analysis::SimilarityMatrix const &m)
{
  return matrix_table(m.groups(), [&](std::size_t i, std::size_t j) { return m.at(i, j); });
}

Table average_table(analysis::AveragedSimilarity const &a)
{
  return matrix_table(a.groups, [&](std::size_t i, std::size_t j) { return a.at(i, j); });
}

Table centroid_table(analysis::DescriptorReport const &report, std::vector<std::string> const &words)
{
  Table t{descriptor_header(report),
          descriptor_rows(report, words, [](auto const &d) { return std::optional<double>{d.centroid}; }, 3)};
  std::vector<std::string> overall{"overall (average)"};
  for (auto const &g : report.groups)
  {
    overall.push_back(g.words.empty() ? "NA" : fixed(g.overall_centroid_mean, 3));
  }
  t.rows.push_back(std::move(overall));
  return t;
}

Table height_table(analysis::DescriptorReport const &report, std::vector<std::string> const &words)
{
  return {descriptor_header(report),
          descriptor_rows(report, words, [](auto const &d) { return std::optional<double>{d.height}; }, 3)};
}

Table support_table(analysis::DescriptorReport const &report, std::vector<std::string> const &words)
{
  return {descriptor_header(report),
          descriptor_rows(report, words, [](auto const &d) { return std::optional<double>{d.support}; }, 1)};
}

Table mode_table(analysis::DescriptorReport const &report, std::vector<std::string> const &words)
{
  Table t{descriptor_header(report), {}};
  for (auto const &w : words)
  {
    std::vector<std::string> row{w};
    for (auto const &g : report.groups)
    {
      auto const *d = g.find(w);
      row.push_back(d == nullptr ? "NA" : std::to_string(d->modes));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table gap_table(analysis::DescriptorReport const &report)
{
  Table t{{"group", "from", "to", "gap", "is_min", "is_max", "ordering_violation"}, {}};
  for (auto const &g : report.groups)
  {
    for (std::size_t k = 0; k < g.gaps.size(); ++k)
    {
      auto const &gap = g.gaps[k];
      t.rows.push_back({g.group, gap.from, gap.to, fixed(gap.gap, 3), g.min_gap == k ? "1" : "0",
                        g.max_gap == k ? "1" : "0", gap.ordering_violation() ? "1" : "0"});
    }
  }
  return t;
}

std::string unique_name(std::set<std::string> &taken, std::string const &prefix, std::string const &label,
                        std::string const &extension)
{
  auto        base = prefix + slug(label);
  std::string name = base + extension;
  for (int n = 2; taken.count(name) > 0; ++n)
  {
    name = base + "_" + std::to_string(n) + extension;
  }
  taken.insert(name);
  return name;
}

}  // namespace

std::string slug(std::string_view label)
{
  std::string out;
  for (char c : label)
  {
    auto const u = static_cast<unsigned char>(c);
    if (std::isalnum(u) != 0 && u < 0x80)
    {
      out.push_back(static_cast<char>(std::tolower(u)));
    }
    else if (!out.empty() && out.back() != '_')
    {
      out.push_back('_');
    }
  }
  while (!out.empty() && out.back() == '_')
  {
    out.pop_back();
  }
  return out.empty() ? std::string{"unnamed"} : out;
}

std::string fixed(double value, int decimals)
{
  // Avoid printing "-0.000" for tiny negative values.
  double const scale = std::pow(10.0, decimals);
  if (std::round(value * scale) == 0.0)
  {
    value = 0.0;
  }
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*f", decimals, value);
  return buffer;
}

std::string similarity_csv(analysis::SimilarityMatrix const &matrix)
{
  auto const t = similarity_table(matrix);
  return to_csv(t.header, t.rows);
}

std::string average_csv(analysis::AveragedSimilarity const &average)
{
  auto const t = average_table(average);
  return to_csv(t.header, t.rows);
}

std::string exclusions_csv(analysis::AveragedSimilarity const &average)
{
  std::vector<std::vector<std::string>> rows;
  for (auto const &e : average.exclusions)
  {
    rows.push_back({average.groups[e.row], average.groups[e.col], e.word});
  }
  return to_csv({"group_a", "group_b", "word"}, rows);
}

std::string centroids_csv(analysis::DescriptorReport const &report, std::vector<std::string> const &words)
{
  auto const t = centroid_table(report, words);
  return to_csv(t.header, t.rows);
}

std::string heights_csv(analysis::DescriptorReport const &report, std::vector<std::string> const &words)
{
  auto const t = height_table(report, words);
  return to_csv(t.header, t.rows);
}

std::string supports_csv(analysis::DescriptorReport const &report, std::vector<std::string> const &words)
{
  auto const t = support_table(report, words);
  return to_csv(t.header, t.rows);
}

std::string modes_csv(analysis::DescriptorReport const &report, std::vector<std::string> const &words)
{
  auto const t = mode_table(report, words);
  return to_csv(t.header, t.rows);
}

std::string gaps_csv(analysis::DescriptorReport const &report)
{
  auto const t = gap_table(report);
  return to_csv(t.header, t.rows);
}

std::string model_csv(analysis::GroupModel const &model, core::DomainGrid const &grid)
{
  std::string out = "x";
  for (auto const &w : model.words)
  {
    out += ',' + csv_text(w.word);
  }
  out += '\n';
  for (std::size_t i = 0; i < grid.size(); ++i)
  {
    out += ingest::format_number(grid.point(i));
    for (auto const &w : model.words)
    {
      out += ',' + ingest::format_number(w.set[i]);
    }
    out += '\n';
  }
  return out;
}

std::string markdown_report(analysis::PipelineResult const &result, std::vector<std::string> const &words,
                            core::DomainGrid const &grid)
{
  std::string out = "# Word model report\n\n";
  out += "Scale [" + ingest::format_number(grid.min()) + ", " + ingest::format_number(grid.max()) +
         "], grid step " + ingest::format_number(grid.step()) + ".\n\n";

  for (auto const &m : result.matrices)
  {
    auto const t = similarity_table(m);
    out += "## Similarity: " + m.word() + "\n\n" + to_markdown(t.header, t.rows) + "\n";
  }
  {
    auto const t = average_table(result.average);
    out += "## Average similarity across words\n\n" + to_markdown(t.header, t.rows) + "\n";
    for (auto const &e : result.average.exclusions)
    {
      out += "- excluded '" + e.word + "' from " + result.average.groups[e.row] + " / " +
             result.average.groups[e.col] + " (missing model)\n";
    }
    if (!result.average.exclusions.empty())
    {
      out += "\n";
    }
  }
  auto const section = [&](std::string const &title, Table const &t) {
    out += "## " + title + "\n\n" + to_markdown(t.header, t.rows) + "\n";
  };
  section("Centroids", centroid_table(result.report, words));
  section("Heights", height_table(result.report, words));
  section("Support sizes", support_table(result.report, words));
  out += "Support size is the grid step times the number of grid points with positive membership; "
         "a closed interval of length L therefore measures L + step.\n\n";
  section("Modes", mode_table(result.report, words));
  section("Adjacent centroid gaps", gap_table(result.report));
  return out;
}

Artifacts render_artifacts(analysis::PipelineResult const &result, std::vector<std::string> const &words,
                           core::DomainGrid const &grid, EmitOptions const &emit)
{
  Artifacts             files;
  std::set<std::string> taken{"similarity_average.csv", "similarity_exclusions.csv"};

  if (emit.csv)
  {
    for (auto const &m : result.matrices)
    {
      files[unique_name(taken, "similarity_", m.word(), ".csv")] = similarity_csv(m);
    }
    files["similarity_average.csv"] = average_csv(result.average);
    if (!result.average.exclusions.empty())
    {
      files["similarity_exclusions.csv"] = exclusions_csv(result.average);
    }
    files["centroids.csv"]     = centroids_csv(result.report, words);
    files["heights.csv"]       = heights_csv(result.report, words);
    files["supports.csv"]      = supports_csv(result.report, words);
    files["modes.csv"]         = modes_csv(result.report, words);
    files["centroid_gaps.csv"] = gaps_csv(result.report);
    for (auto const &model : result.models)
    {
      files[unique_name(taken, "models_", model.group, ".csv")] = model_csv(model, grid);
    }
  }
  if (emit.markdown)
  {
    files["report.md"] = markdown_report(result, words, grid);
  }
  if (emit.plots)
  {
    for (auto const &model : result.models)
    {
      std::vector<PlotSeries> series;
      for (auto const &w : model.words)
      {
        series.push_back({w.word, &w.set});
      }
      files[unique_name(taken, "plot_group_", model.group, ".svg")] =
          membership_plot_svg("Word models: " + model.group, series);
    }
    for (auto const &word : words)
    {
      std::vector<PlotSeries> series;
      for (auto const &model : result.models)
      {
        if (auto const *w = model.find(word))
        {
          series.push_back({model.group, &w->set});
        }
      }
      if (!series.empty())
      {
        files[unique_name(taken, "plot_word_", word, ".svg")] = membership_plot_svg(word, series);
      }
    }
  }
  return files;
}

}  // namespace iaa::cli
