#pragma once

#include "iaa/core/interval.hpp"
#include "iaa/ingest/dataset.hpp"
#include "oracles.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace iaa::testing {

/// The five descriptors, in questionnaire order.
std::vector<std::string> const &tess_words();

std::vector<core::Interval> to_intervals(std::vector<RawInterval> const &raw);

/// Three base groups (patient, physio, surgeon) x `per_group` participants x
/// the five descriptors, with intervals scattered around a per-word centre.
/// `identical_groups` gives every group the patients' intervals.
ingest::Dataset clinic_dataset(std::uint64_t seed, std::size_t per_group = 12,
                                     bool identical_groups = false);

/// A single-group dataset where word k is `base` translated so that its
/// midpoint sits at centres[k].
ingest::Dataset translated_words_dataset(std::vector<RawInterval> const &base, std::vector<double> const &centres,
                                         core::DomainGrid const &grid);

/// A scratch directory under the system temp dir, removed on destruction.
class TempDir
{
public:
  TempDir();
  ~TempDir();
  TempDir(TempDir const &)            = delete;
  TempDir &operator=(TempDir const &) = delete;

  std::string const &path() const
  {
    return path_;
  }
  std::string file(std::string const &name) const
  {
    return path_ + "/" + name;
  }

private:
  std::string path_;
};

std::string read_text(std::string const &path);
void        write_text(std::string const &path, std::string const &content);

}  // namespace iaa::testing
