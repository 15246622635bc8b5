#include "fixtures.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <random>
#include <stdexcept>
#include <unistd.h>

namespace iaa::testing {

std::vector<std::string> const &tess_words()
{
  static std::vector<std::string> const words{"impossible to do", "extremely difficult", "moderately difficult",
                                              "a little bit difficult", "not at all difficult"};
  return words;
}

std::vector<core::Interval> to_intervals(std::vector<RawInterval> const &raw)
{
  std::vector<core::Interval> out;
  for (auto const &[l, r] : raw)
  {
    out.emplace_back(l, r);
  }
  return out;
}

ingest::Dataset clinic_dataset(std::uint64_t seed, std::size_t per_group, bool identical_groups)
{
  std::mt19937_64                         rng{seed};
  constexpr std::array<double, 5>         centres{0.8, 1.9, 4.3, 6.3, 9.0};
  constexpr std::array<double, 5>         widths{1.2, 2.0, 2.4, 3.0, 1.4};
  std::array<char const *, 3> const       groups{"patient", "physio", "surgeon"};
  std::normal_distribution<double>        jitter(0.0, 0.6);
  std::uniform_real_distribution<double>  spread(0.3, 1.0);

  std::vector<std::vector<RawInterval>> patient_answers(per_group);
  std::vector<ingest::ResponseRecord>   records;
  for (std::size_t g = 0; g < groups.size(); ++g)
  {
    for (std::size_t p = 0; p < per_group; ++p)
    {
      std::string const id = std::string{groups[g]} + "_" + std::to_string(p + 1);
      for (std::size_t w = 0; w < tess_words().size(); ++w)
      {
        RawInterval iv;
        if (identical_groups && g > 0)
        {
          iv = patient_answers[p][w];
        }
        else
        {
          double const c    = centres[w] + jitter(rng);
          double const half = 0.5 * widths[w] * spread(rng);
          double       l    = std::round(std::clamp(c - half, 0.0, 10.0) * 10.0) / 10.0;
          double       r    = std::round(std::clamp(c + half, 0.0, 10.0) * 10.0) / 10.0;
          iv                = {std::min(l, r), std::max(l, r)};
          if (g == 0)
          {
            patient_answers[p].push_back(iv);
          }
        }
        records.push_back({id, groups[g], tess_words()[w], core::Interval{iv.first, iv.second}});
      }
    }
  }
  return ingest::Dataset::create(core::DomainGrid{}, tess_words(), records);
}

ingest::Dataset translated_words_dataset(std::vector<RawInterval> const &base, std::vector<double> const &centres,
                                         core::DomainGrid const &grid)
{
  double lo = base.front().first;
  double hi = base.front().second;
  for (auto const &[l, r] : base)
  {
    lo = std::min(lo, l);
    hi = std::max(hi, r);
  }
  double const mid = 0.5 * (lo + hi);

  std::vector<std::string>            words;
  std::vector<ingest::ResponseRecord> records;
  for (std::size_t w = 0; w < centres.size(); ++w)
  {
    words.push_back("word " + std::to_string(w + 1));
    double const shift = centres[w] - mid;
    for (std::size_t p = 0; p < base.size(); ++p)
    {
      records.push_back({"p" + std::to_string(p + 1), "solo", words.back(),
                         core::Interval{base[p].first + shift, base[p].second + shift}});
    }
  }
  return ingest::Dataset::create(grid, words, records);
}

TempDir::TempDir()
{
  static std::atomic<int> counter{0};
  auto const base = std::filesystem::temp_directory_path() /
                    ("iaa_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
  std::filesystem::remove_all(base);
  std::filesystem::create_directories(base);
  path_ = base.string();
}

TempDir::~TempDir()
{
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

std::string read_text(std::string const &path)
{
  std::ifstream in{path, std::ios::binary};
  if (!in)
  {
    throw std::runtime_error("cannot read " + path);
  }
  return {std::istreambuf_iterator<char>{in}, std::istreambuf_iterator<char>{}};
}

void write_text(std::string const &path, std::string const &content)
{
  std::ofstream out{path, std::ios::binary | std::ios::trunc};
  out << content;
  if (!out)
  {
    throw std::runtime_error("cannot write " + path);
  }
}

}  // namespace iaa::testing
