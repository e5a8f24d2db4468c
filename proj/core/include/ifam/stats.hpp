#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ifam/dynamics.hpp"

/// Day aggregation, distribution moments, moving-average histograms, and a
/// seeded random-walk baseline.
///
/// Moments are population (biased) central moments.  Standard errors follow
/// the 6/d and 24/d convention; conventional_standard_errors exposes the
/// sqrt forms for comparison.

namespace ifam {

/// Moment summary of one aggregated daily series.
struct SeriesStats {
  std::uint64_t count = 0;     ///< number of days d
  std::uint64_t distinct = 0;  ///< distinct daily values
  double skewness = 0.0;
  double excess_kurtosis = 0.0;
  double se_skew = 0.0;
  double se_kurt = 0.0;
};

/// Sums consecutive non-overlapping blocks of ticks_per_day tick changes.
/// Throws unless the length is divisible by ticks_per_day; with truncate
/// set, a trailing partial block is dropped instead.
std::vector<std::int64_t> aggregate_days(std::span<const std::int64_t> ticks,
                                         std::uint64_t ticks_per_day,
                                         bool truncate = false);

/// m3 / m2^1.5 over population central moments.  Throws std::domain_error
/// on zero variance.
double skewness(std::span<const double> xs);

/// m4 / m2^2 - 3.  Throws std::domain_error on zero variance.
double excess_kurtosis(std::span<const double> xs);

/// (6/d, 24/d).  Throws if d < 1.
std::pair<double, double> standard_errors(std::uint64_t days);

/// (sqrt(6/d), sqrt(24/d)).
std::pair<double, double> conventional_standard_errors(std::uint64_t days);

/// Full moment summary of a daily series.
SeriesStats series_stats(std::span<const std::int64_t> daily);

/// Generates the rule's series once (total_ticks from the all-UP start) and
/// aggregates it at each day length.  Every day length must divide
/// total_ticks.
std::vector<SeriesStats> summary_table(
    const RuleSpec& spec, int window, std::uint64_t total_ticks,
    std::span<const std::uint64_t> day_lengths);

/// Averages of window_len consecutive values starting at multiples of
/// stride.  Throws if the input is shorter than window_len.
std::vector<double> moving_average(std::span<const double> xs,
                                   std::size_t window_len, std::size_t stride);

/// Equal-width histogram; 101 edges for 100 bins.
struct Histogram {
  std::vector<double> bin_edges;         ///< strictly increasing, bins+1 edges
  std::vector<std::uint64_t> counts;     ///< sums to the input length
  std::vector<double> frequencies;       ///< counts normalized to sum 1
};

/// Bins over [min, max]; the maximum value lands in the last bin.  A
/// degenerate range (min == max) falls back to a unit-wide range.  Throws on
/// empty input or bin_count < 1.
Histogram histogram(std::span<const double> values, int bin_count = 100);

/// Independent equiprobable +/-1 ticks from std::mt19937_64 seeded with
/// `seed`; each engine output supplies 64 ticks, least significant bit
/// first.  Identical (tick_count, seed) give bit-identical series.
Series random_walk_baseline(std::uint64_t tick_count, std::uint64_t seed);

}  // namespace ifam
