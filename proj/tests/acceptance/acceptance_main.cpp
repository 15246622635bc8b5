// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include "fixtures.hpp"
#include "iaa/analysis/pipeline.hpp"
#include "iaa/cli/commands.hpp"
#include "iaa/cli/tables.hpp"
#include "iaa/core/iaa.hpp"
#include "iaa/core/measures.hpp"
#include "iaa/error.hpp"
#include "iaa/ingest/format.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace iaa;
using iaa::testing::RawGrid;
using iaa::testing::RawInterval;

namespace {

struct Verdict
{
  bool        ok;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start)
{
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string fmt(char const *pattern, auto... args)
{
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

std::vector<double> values(core::FuzzySet const &set)
{
  return {set.memberships().begin(), set.memberships().end()};
}

core::FuzzySet set_of(std::vector<RawInterval> const &raw, core::DomainGrid const &grid)
{
  return core::build_iaa(iaa::testing::to_intervals(raw), grid);
}

Verdict worked_example()
{
  core::DomainGrid const            grid{0.0, 10.0, 1.0};
  std::vector<core::Interval> const intervals{{3, 5}, {4, 7}};
  auto const                        start = Clock::now();
  auto const                        set   = core::build_iaa(intervals, grid);
  double const                      ms    = ms_since(start);
  std::vector<double> const         expected{0, 0, 0, 0.5, 1, 1, 0.5, 0.5, 0, 0, 0};
  bool const                        exact = values(set) == expected;
  return {exact && ms < 1.0, fmt("exact match %s, %.3f ms (limit 1 ms)", exact ? "yes" : "no", ms)};
}

Verdict oracle_equivalence()
{
  core::DomainGrid const grid{0.0, 10.0, 0.1};
  RawGrid const          rg{0.0, 10.0, 0.1};
  std::mt19937_64        rng{1001};
  double                 worst = 0.0;
  auto const             start = Clock::now();
  for (int trial = 0; trial < 1000; ++trial)
  {
    auto const raw = iaa::testing::random_intervals(rng, 1 + rng() % 30, 0.0, 10.0, 0.1);
    auto const got = set_of(raw, grid);
    auto const exp = iaa::testing::oracle_memberships(raw, rg);
    for (std::size_t i = 0; i < exp.size(); ++i)
    {
      worst = std::max(worst, std::abs(got[i] - exp[i]));
    }
  }
  double const ms = ms_since(start);
  return {worst <= 1e-12 && ms < 5000.0,
          fmt("1000 instances, max deviation %.3g (limit 1e-12), %.0f ms (limit 5000 ms)", worst, ms)};
}

Verdict jaccard_properties()
{
  core::DomainGrid const grid{};
  std::mt19937_64        rng{1002};
  int                    failures = 0;
  double                 worst    = 0.0;
  for (int trial = 0; trial < 1000; ++trial)
  {
    auto const a = set_of(iaa::testing::random_intervals(rng, 1 + rng() % 30, 0.0, 10.0, 0.01), grid);
    auto const b = set_of(iaa::testing::random_intervals(rng, 1 + rng() % 30, 0.0, 10.0, 0.01), grid);
    double const ab = core::jaccard(a, b);
    if (core::jaccard(a, a) != 1.0 || ab != core::jaccard(b, a) || ab < 0.0 || ab > 1.0)
    {
      ++failures;
    }
    worst = std::max(worst, std::abs(ab - iaa::testing::oracle_jaccard(values(a), values(b))));

    auto const low  = set_of(iaa::testing::random_intervals(rng, 1 + rng() % 30, 0.0, 4.0, 0.01), grid);
    auto const high = set_of(iaa::testing::random_intervals(rng, 1 + rng() % 30, 4.5, 10.0, 0.01), grid);
    if (core::jaccard(low, high) != 0.0)
    {
      ++failures;
    }
  }
  return {failures == 0 && worst <= 1e-12,
          fmt("1000 pairs, %d property violations, oracle deviation %.3g (limit 1e-12)", failures, worst)};
}

Verdict descriptor_properties()
{
  core::DomainGrid const grid{};
  RawGrid const          rg{0.0, 10.0, 0.01};
  std::mt19937_64        rng{1003};
  int const              cases = 500;

  double midpoint_err = 0.0;
  for (int trial = 0; trial < cases; ++trial)
  {
    auto const l = static_cast<double>(rng() % 1001) / 100.0;
    auto const r = l + static_cast<double>(rng() % (1001 - static_cast<std::size_t>(std::lround(l * 100)))) / 100.0;
    midpoint_err = std::max(midpoint_err, std::abs(core::centroid(set_of({{l, r}}, grid)) - (l + r) / 2.0));
  }

  double shift_err = 0.0;
  for (int trial = 0; trial < cases; ++trial)
  {
    auto const        raw = iaa::testing::random_intervals(rng, 1 + rng() % 30, 0.0, 5.0, 0.01);
    std::size_t const m   = rng() % 501;
    double const      d   = grid.point(m) - grid.point(0);
    std::vector<RawInterval> moved;
    for (auto const &[l, r] : raw)
    {
      moved.emplace_back(l + d, r + d);
    }
    shift_err = std::max(shift_err,
                         std::abs(core::centroid(set_of(moved, grid)) - (core::centroid(set_of(raw, grid)) + d)));
  }

  int quantization_failures = 0;
  for (int trial = 0; trial < cases; ++trial)
  {
    auto const   raw    = iaa::testing::random_intervals(rng, 1 + rng() % 30, 0.0, 10.0, 0.01);
    auto const   counts = iaa::testing::containment_counts(raw, rg);
    auto const   k      = *std::max_element(counts.begin(), counts.end());
    double const n      = static_cast<double>(raw.size());
    if (core::height(set_of(raw, grid)) != static_cast<double>(k) / n)
    {
      ++quantization_failures;
    }
  }

  int monotonicity_failures = 0;
  for (int trial = 0; trial < cases; ++trial)
  {
    auto raw = iaa::testing::random_intervals(rng, 1 + rng() % 29, 0.0, 10.0, 0.01);
    double const before = core::support_size(set_of(raw, grid));
    raw.push_back(iaa::testing::random_interval(rng, 0.0, 10.0, 0.01));
    if (core::support_size(set_of(raw, grid)) < before)
    {
      ++monotonicity_failures;
    }
  }

  bool const ok = midpoint_err <= 1e-9 && shift_err <= 1e-12 && quantization_failures == 0 &&
                  monotonicity_failures == 0;
  return {ok, fmt("%d cases each: midpoint error %.3g (limit 1e-9), translation error %.3g (limit 1e-12), "
                  "%d height quantization failures, %d support monotonicity failures",
                  cases, midpoint_err, shift_err, quantization_failures, monotonicity_failures)};
}

std::vector<double> gaps_for(std::vector<double> const &centres)
{
  std::vector<RawInterval> const base{{0.2, 1.6}, {0.5, 1.5}, {0.0, 2.0}, {0.8, 1.1}, {0.6, 1.9}};
  auto const ds     = iaa::testing::translated_words_dataset(base, centres, core::DomainGrid{});
  auto const models = std::vector<analysis::GroupModel>{
      analysis::build_group_model(ds, ingest::GroupSpec::single("solo"))};
  auto const report = analysis::descriptor_report(models, ds.words());
  std::vector<double> gaps;
  for (auto const &g : report.groups.at(0).gaps)
  {
    gaps.push_back(g.gap);
  }
  if (!report.groups.at(0).ordered())
  {
    gaps.push_back(-1.0);
  }
  return gaps;
}

Verdict equidistance()
{
  auto const check = [](std::vector<double> const &got, std::vector<double> const &want) {
    double worst = got.size() == want.size() ? 0.0 : INFINITY;
    for (std::size_t k = 0; k < std::min(got.size(), want.size()); ++k)
    {
      worst = std::max(worst, std::abs(got[k] - want[k]));
    }
    return worst;
  };
  double const even    = check(gaps_for({1, 3, 5, 7, 9}), {2, 2, 2, 2});
  double const shifted = check(gaps_for({1, 3, 6, 7, 9}), {2, 3, 1, 2});
  return {even <= 1e-6 && shifted <= 1e-6,
          fmt("equidistant gap error %.3g, perturbed gap error %.3g (limit 1e-6, ordering checked)", even,
              shifted)};
}

std::vector<ingest::GroupSpec> clinic_specs()
{
  return {ingest::GroupSpec::single("patient"), ingest::GroupSpec::single("physio"),
          ingest::GroupSpec::single("surgeon"), ingest::GroupSpec{"PS", {"physio", "surgeon"}}};
}

Verdict pipeline_shape()
{
  auto const start  = Clock::now();
  auto const result = analysis::full_pipeline(iaa::testing::clinic_dataset(2024), clinic_specs());
  auto const same   = analysis::full_pipeline(iaa::testing::clinic_dataset(2024, 12, true), clinic_specs());
  double const ms   = ms_since(start);

  bool shape = result.matrices.size() == 5 && result.average.groups.size() == 4 &&
               result.average.values.size() == 16;
  for (auto const &m : result.matrices)
  {
    shape = shape && m.size() == 4 && m.complete();
    for (std::size_t i = 0; shape && i < 4; ++i)
    {
      shape = shape && m.at(i, i) == 1.0;
      for (std::size_t j = 0; j < 4; ++j)
      {
        shape = shape && m.at(i, j) == m.at(j, i);
      }
    }
  }
  bool unity = same.matrices.size() == 5;
  for (auto const &m : same.matrices)
  {
    for (std::size_t i = 0; i < 4; ++i)
    {
      for (std::size_t j = 0; j < 4; ++j)
      {
        unity = unity && m.at(i, j).has_value() && cli::fixed(*m.at(i, j), 3) == "1.000";
      }
    }
  }
  return {shape && unity && ms < 10000.0,
          fmt("5 symmetric 4x4 matrices with unit diagonal: %s, identical groups all 1.000: %s, %.0f ms "
              "(limit 10000 ms)",
              shape ? "yes" : "no", unity ? "yes" : "no", ms)};
}

Verdict determinism()
{
  iaa::testing::TempDir dir;
  auto const            path = dir.file("data.csv");
  iaa::testing::write_text(path, ingest::serialize_csv(iaa::testing::clinic_dataset(7)));

  cli::RunConfig config;
  config.inputs          = {path};
  config.merges          = {"PS=physio,surgeon"};
  config.markdown_tables = true;
  config.plots           = true;

  std::ostringstream sink;
  config.out_dir = dir.file("run1");
  if (cli::cmd_analyze(config, sink, sink) != 0)
  {
    return {false, "first run failed: " + sink.str()};
  }
  config.out_dir = dir.file("run2");
  if (cli::cmd_analyze(config, sink, sink) != 0)
  {
    return {false, "second run failed: " + sink.str()};
  }

  std::size_t files = 0, differing = 0;
  for (auto const &entry : std::filesystem::directory_iterator(dir.file("run1")))
  {
    ++files;
    auto const twin = std::filesystem::path{dir.file("run2")} / entry.path().filename();
    if (!std::filesystem::exists(twin) ||
        iaa::testing::read_text(entry.path().string()) != iaa::testing::read_text(twin.string()))
    {
      ++differing;
    }
  }
  std::size_t const second = static_cast<std::size_t>(
      std::distance(std::filesystem::directory_iterator(dir.file("run2")), std::filesystem::directory_iterator{}));
  return {files > 0 && differing == 0 && files == second,
          fmt("%zu files compared, %zu differ", files, differing + (files == second ? 0 : 1))};
}

Verdict ingest_round_trip()
{
  auto const ds = iaa::testing::clinic_dataset(36);
  bool const sized = ds.participant_count() == 36 && ds.words().size() == 5 && ds.records().size() == 180;
  auto const csv   = ingest::serialize_csv(ds);
  auto const json  = ingest::serialize_json(ds);
  bool const csv_ok =
      ingest::parse_dataset(csv, ingest::Format::Csv, {ds.grid(), ds.words()}) == ds;
  bool const json_ok = ingest::parse_dataset(json, ingest::Format::Json) == ds;

  std::mt19937_64   rng{1008};
  std::string const alphabet = ",\"\n\r{}[]:.-e0123456789 \\\xff\xc3\x80";
  int const         cases    = 10000;
  int               rejected = 0, accepted = 0, unstructured = 0;
  for (int trial = 0; trial < cases; ++trial)
  {
    bool const  use_csv = trial % 2 == 0;
    std::string input   = use_csv ? csv : json;
    int const   edits   = 1 + static_cast<int>(rng() % 8);
    for (int e = 0; e < edits && !input.empty(); ++e)
    {
      std::size_t const pos = rng() % input.size();
      switch (rng() % 4)
      {
      case 0:
        input[pos] = alphabet[rng() % alphabet.size()];
        break;
      case 1:
        input.erase(pos, 1 + rng() % 16);
        break;
      case 2:
        input.insert(pos, 1, alphabet[rng() % alphabet.size()]);
        break;
      default:
        input.resize(pos);
      }
    }
    try
    {
      auto const parsed = ingest::parse_dataset(input, use_csv ? ingest::Format::Csv : ingest::Format::Json);
      if (!ingest::find_issues(parsed.grid(), parsed.words(), parsed.records()).empty())
      {
        ++unstructured;
      }
      ++accepted;
    }
    catch (Error const &)
    {
      ++rejected;
    }
    catch (...)
    {
      ++unstructured;
    }
  }
  return {sized && csv_ok && json_ok && unstructured == 0,
          fmt("36x5 round trip csv %s json %s; %d fuzz cases: %d structured errors, %d valid, %d other",
              csv_ok ? "ok" : "MISMATCH", json_ok ? "ok" : "MISMATCH", cases, rejected, accepted,
              unstructured)};
}

}  // namespace

int main()
{
  struct Criterion
  {
    char const              *name;
    std::function<Verdict()> run;
  };
  std::vector<Criterion> const criteria{
      {"worked-example", worked_example},         {"oracle-equivalence", oracle_equivalence},
      {"jaccard-properties", jaccard_properties}, {"descriptor-properties", descriptor_properties},
      {"equidistance", equidistance},             {"pipeline-shape", pipeline_shape},
      {"determinism", determinism},               {"ingest-round-trip", ingest_round_trip},
  };

  int failed = 0;
  for (auto const &c : criteria)
  {
    Verdict v{false, {}};
    try
    {
      v = c.run();
    }
    catch (std::exception const &e)
    {
      v = {false, std::string{"exception: "} + e.what()};
    }
    failed += v.ok ? 0 : 1;
    std::printf("%s  %-22s %s\n", v.ok ? "PASS" : "FAIL", c.name, v.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}
