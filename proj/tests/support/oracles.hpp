#pragma once

// Independent reference computations used by the tests. They work from raw
// endpoint pairs and recompute grid points as min + i * step, so they share no
// code path with the library's difference-array construction.

#include <cstddef>
#include <random>
#include <utility>
#include <vector>

namespace iaa::testing {

using RawInterval = std::pair<double, double>;

struct RawGrid
{
  double min;
  double max;
  double step;

  std::size_t count() const;  // number of grid points
  double      point(std::size_t i) const;
};

/// Number of intervals containing each grid point, by direct iteration.
std::vector<std::size_t> containment_counts(std::vector<RawInterval> const &intervals, RawGrid const &grid);

/// containment count / N at each point.
std::vector<double> oracle_memberships(std::vector<RawInterval> const &intervals, RawGrid const &grid);

/// Sum of minima over sum of maxima, accumulated in long double.
double oracle_jaccard(std::vector<double> const &a, std::vector<double> const &b);

/// Membership-weighted mean of grid points, accumulated in long double.
double oracle_centroid(std::vector<double> const &mu, RawGrid const &grid);

/// Random interval with endpoints in [lo, hi]. Half of the draws land exactly
/// on multiples of `snap` (when snap > 0) to exercise closed endpoints.
RawInterval random_interval(std::mt19937_64 &rng, double lo, double hi, double snap = 0.0);

std::vector<RawInterval> random_intervals(std::mt19937_64 &rng, std::size_t n, double lo, double hi,
                                          double snap = 0.0);

}  // namespace iaa::testing
