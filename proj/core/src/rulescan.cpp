#include "ifam/rulescan.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <thread>

namespace ifam {

namespace {

RuleCatalogRow measure_rule(int state_count, int symbol_count, int window,
                            std::uint64_t rule) {
  const RuleSpec spec{state_count, symbol_count, rule, 2};
  const CycleResult cycle = find_cycle(spec, window);
  const double max_period =
      static_cast<double>(history_space_size(window, symbol_count));
  return RuleCatalogRow{state_count,
                        symbol_count,
                        window,
                        rule,
                        cycle.period,
                        cycle.transient,
                        cycle.complexity,
                        static_cast<double>(cycle.period) / max_period};
}

}  // namespace

std::vector<RuleCatalogRow> scan_rules(int state_count, int symbol_count,
                                       int window,
                                       std::optional<RuleRange> range,
                                       int workers) {
  const std::uint64_t total = rule_space_size(state_count, symbol_count);
  const RuleRange span = range.value_or(RuleRange{0, total});
  if (span.first > span.last || span.last > total) {
    throw std::out_of_range("scan_rules: rule range out of bounds");
  }
  if (workers < 1) {
    throw std::invalid_argument("scan_rules: require workers >= 1");
  }
  history_space_size(window, symbol_count);  // fail fast on the guard

  const std::uint64_t count = span.last - span.first;
  std::vector<RuleCatalogRow> rows(count);
  if (count == 0) {
    return rows;
  }

  const auto n_workers =
      static_cast<std::uint64_t>(workers) > count
          ? count
          : static_cast<std::uint64_t>(workers);
  // Contiguous chunks; each worker writes its own slice, so the merged
  // catalog is ordered by rule number regardless of scheduling.
  auto run_chunk = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      rows[i] = measure_rule(state_count, symbol_count, window,
                             span.first + i);
    }
  };

  if (n_workers == 1) {
    run_chunk(0, count);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(n_workers);
    const std::uint64_t chunk = (count + n_workers - 1) / n_workers;
    for (std::uint64_t t = 0; t < n_workers; ++t) {
      const std::uint64_t begin = t * chunk;
      const std::uint64_t end = std::min(begin + chunk, count);
      threads.emplace_back(run_chunk, begin, end);
    }
    for (std::thread& t : threads) {
      t.join();
    }
  }
  return rows;
}

std::vector<RuleCatalogRow> scan_windows(std::uint64_t rule, int state_count,
                                         int symbol_count, int window_min,
                                         int window_max) {
  if (window_min < 1 || window_min > window_max) {
    throw std::invalid_argument("scan_windows: require 1 <= w_min <= w_max");
  }
  std::vector<RuleCatalogRow> rows;
  rows.reserve(static_cast<std::size_t>(window_max - window_min + 1));
  for (int w = window_min; w <= window_max; ++w) {
    rows.push_back(measure_rule(state_count, symbol_count, w, rule));
  }
  return rows;
}

ScanSummary summarize_scan(std::span<const RuleCatalogRow> rows) {
  if (rows.empty()) {
    throw std::invalid_argument("summarize_scan: empty catalog");
  }
  ScanSummary summary;
  for (const RuleCatalogRow& row : rows) {
    switch (row.complexity) {
      case ComplexityClass::Simple:
        ++summary.simple_count;
        break;
      case ComplexityClass::Complex:
        ++summary.complex_count;
        summary.complex_rules.push_back(row.rule);
        break;
      case ComplexityClass::MaximallyComplex:
        ++summary.maximally_complex_count;
        summary.complex_rules.push_back(row.rule);
        break;
    }
  }
  std::sort(summary.complex_rules.begin(), summary.complex_rules.end());

  std::set<std::uint64_t> canonical;
  for (std::uint64_t rule : summary.complex_rules) {
    canonical.insert(
        canonical_rule_number(rule, rows[0].state_count, rows[0].symbol_count));
  }
  summary.deduplicated_complex_count = canonical.size();
  return summary;
}

}  // namespace ifam
