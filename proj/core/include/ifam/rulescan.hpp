#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ifam/dynamics.hpp"

/// Exhaustive enumeration of rule spaces and window ranges, classifying the
/// cycle of every rule from the all-UP start.

namespace ifam {

/// One catalog record per (rule, window) measurement.
struct RuleCatalogRow {
  int state_count;
  int symbol_count;
  int window;
  std::uint64_t rule;
  std::uint64_t period;
  std::uint64_t transient;
  ComplexityClass complexity;
  double pct_of_max;  ///< period / k^w

  bool operator==(const RuleCatalogRow&) const = default;
};

/// Half-open rule-number interval [first, last).
struct RuleRange {
  std::uint64_t first = 0;
  std::uint64_t last = 0;
};

/// Measures every rule in the range (the whole space by default), one row
/// per rule ordered by rule number.  The scan partitions the range across
/// `workers` threads; the merged catalog is identical for any worker count.
std::vector<RuleCatalogRow> scan_rules(int state_count, int symbol_count,
                                       int window,
                                       std::optional<RuleRange> range = {},
                                       int workers = 1);

/// Measures one rule across a window range, one row per window.
std::vector<RuleCatalogRow> scan_windows(std::uint64_t rule, int state_count,
                                         int symbol_count, int window_min,
                                         int window_max);

/// Per-class counts plus the complex rule list of a catalog.
struct ScanSummary {
  std::uint64_t simple_count = 0;
  std::uint64_t complex_count = 0;             ///< class Complex
  std::uint64_t maximally_complex_count = 0;   ///< class MaximallyComplex
  /// Rules with class != Simple, ascending.
  std::vector<std::uint64_t> complex_rules;
  /// complex_rules counted up to state relabeling.
  std::uint64_t deduplicated_complex_count = 0;
};

/// Summarizes a nonempty catalog whose rows share (s, k).  Throws on empty
/// input.
ScanSummary summarize_scan(std::span<const RuleCatalogRow> rows);

}  // namespace ifam
