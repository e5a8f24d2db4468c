#include "ifam/stats.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <unordered_set>

namespace ifam {

std::vector<std::int64_t> aggregate_days(std::span<const std::int64_t> ticks,
                                         std::uint64_t ticks_per_day,
                                         bool truncate) {
  if (ticks_per_day < 1) {
    throw std::invalid_argument("aggregate_days: require ticks_per_day >= 1");
  }
  if (!truncate && ticks.size() % ticks_per_day != 0) {
    throw std::invalid_argument(
        "aggregate_days: tick count not divisible by ticks_per_day "
        "(pass truncate to drop the remainder)");
  }
  const std::uint64_t days = ticks.size() / ticks_per_day;
  std::vector<std::int64_t> daily(days);
  for (std::uint64_t d = 0; d < days; ++d) {
    std::int64_t sum = 0;
    const std::size_t base = d * ticks_per_day;
    for (std::uint64_t i = 0; i < ticks_per_day; ++i) {
      sum += ticks[base + i];
    }
    daily[d] = sum;
  }
  return daily;
}

namespace {

struct CentralMoments {
  double m2, m3, m4;
};

/// Two-pass population central moments.
CentralMoments central_moments(std::span<const double> xs) {
  if (xs.size() < 2) {
    throw std::domain_error("moments: need at least 2 values");
  }
  double mean = 0.0;
  for (double x : xs) {
    mean += x;
  }
  mean /= static_cast<double>(xs.size());

  double s2 = 0.0, s3 = 0.0, s4 = 0.0;
  for (double x : xs) {
    const double d = x - mean;
    const double d2 = d * d;
    s2 += d2;
    s3 += d2 * d;
    s4 += d2 * d2;
  }
  const auto n = static_cast<double>(xs.size());
  const CentralMoments m{s2 / n, s3 / n, s4 / n};
  if (m.m2 <= 0.0) {
    throw std::domain_error("moments: zero variance, skewness and kurtosis undefined");
  }
  return m;
}

}  // namespace

double skewness(std::span<const double> xs) {
  const CentralMoments m = central_moments(xs);
  return m.m3 / std::pow(m.m2, 1.5);
}

double excess_kurtosis(std::span<const double> xs) {
  const CentralMoments m = central_moments(xs);
  return m.m4 / (m.m2 * m.m2) - 3.0;
}

std::pair<double, double> standard_errors(std::uint64_t days) {
  if (days < 1) {
    throw std::invalid_argument("standard_errors: require d >= 1");
  }
  const auto d = static_cast<double>(days);
  return {6.0 / d, 24.0 / d};
}

std::pair<double, double> conventional_standard_errors(std::uint64_t days) {
  const auto [s, k] = standard_errors(days);
  return {std::sqrt(s), std::sqrt(k)};
}

SeriesStats series_stats(std::span<const std::int64_t> daily) {
  std::vector<double> xs(daily.begin(), daily.end());
  std::unordered_set<std::int64_t> distinct(daily.begin(), daily.end());

  SeriesStats stats;
  stats.count = daily.size();
  stats.distinct = distinct.size();
  const CentralMoments m = central_moments(xs);
  stats.skewness = m.m3 / std::pow(m.m2, 1.5);
  stats.excess_kurtosis = m.m4 / (m.m2 * m.m2) - 3.0;
  std::tie(stats.se_skew, stats.se_kurt) = standard_errors(stats.count);
  return stats;
}

std::vector<SeriesStats> summary_table(
    const RuleSpec& spec, int window, std::uint64_t total_ticks,
    std::span<const std::uint64_t> day_lengths) {
  for (std::uint64_t length : day_lengths) {
    if (length < 1 || total_ticks % length != 0) {
      throw std::invalid_argument(
          "summary_table: every day length must divide the total tick count");
    }
  }
  const Series series = generate_series(spec, window, total_ticks);

  std::vector<SeriesStats> rows;
  rows.reserve(day_lengths.size());
  for (std::uint64_t length : day_lengths) {
    const std::vector<std::int64_t> daily =
        aggregate_days(series.changes, length);
    rows.push_back(series_stats(daily));
  }
  return rows;
}

std::vector<double> moving_average(std::span<const double> xs,
                                   std::size_t window_len,
                                   std::size_t stride) {
  if (window_len < 1 || stride < 1) {
    throw std::invalid_argument("moving_average: require window and stride >= 1");
  }
  if (xs.size() < window_len) {
    throw std::invalid_argument("moving_average: series shorter than window");
  }
  std::vector<double> averages;
  averages.reserve((xs.size() - window_len) / stride + 1);
  for (std::size_t start = 0; start + window_len <= xs.size();
       start += stride) {
    double sum = 0.0;
    for (std::size_t i = 0; i < window_len; ++i) {
      sum += xs[start + i];
    }
    averages.push_back(sum / static_cast<double>(window_len));
  }
  return averages;
}

Histogram histogram(std::span<const double> values, int bin_count) {
  if (values.empty()) {
    throw std::invalid_argument("histogram: empty input");
  }
  if (bin_count < 1) {
    throw std::invalid_argument("histogram: require at least one bin");
  }
  const auto [min_it, max_it] = std::minmax_element(values.begin(), values.end());
  const double lo = *min_it;
  // Degenerate range: spread the single value over a unit-wide range.
  const double hi = (*max_it > lo) ? *max_it : lo + 1.0;
  const double width = (hi - lo) / static_cast<double>(bin_count);

  Histogram h;
  h.bin_edges.resize(static_cast<std::size_t>(bin_count) + 1);
  for (int i = 0; i <= bin_count; ++i) {
    h.bin_edges[static_cast<std::size_t>(i)] =
        lo + width * static_cast<double>(i);
  }
  h.bin_edges.back() = hi;  // exact upper edge

  h.counts.assign(static_cast<std::size_t>(bin_count), 0);
  for (double v : values) {
    auto bin = static_cast<std::size_t>((v - lo) / width);
    if (bin >= static_cast<std::size_t>(bin_count)) {
      bin = static_cast<std::size_t>(bin_count) - 1;  // max value, last bin
    }
    ++h.counts[bin];
  }
  h.frequencies.resize(h.counts.size());
  const auto total = static_cast<double>(values.size());
  for (std::size_t i = 0; i < h.counts.size(); ++i) {
    h.frequencies[i] = static_cast<double>(h.counts[i]) / total;
  }
  return h;
}

Series random_walk_baseline(std::uint64_t tick_count, std::uint64_t seed) {
  if (tick_count < 1) {
    throw std::invalid_argument("random_walk_baseline: require at least one tick");
  }
  std::mt19937_64 engine(seed);

  Series series;
  series.movements.reserve(tick_count);
  series.changes.reserve(tick_count);
  series.prices.reserve(tick_count);
  std::int64_t price = 0;
  std::uint64_t bits = 0;
  int bits_left = 0;
  for (std::uint64_t i = 0; i < tick_count; ++i) {
    if (bits_left == 0) {
      bits = engine();
      bits_left = 64;
    }
    const auto movement = static_cast<Symbol>(bits & 1);
    bits >>= 1;
    --bits_left;

    const std::int64_t change = movement == 1 ? 1 : -1;
    price += change;
    series.movements.push_back(movement);
    series.changes.push_back(change);
    series.prices.push_back(price);
  }
  return series;
}

}  // namespace ifam
