#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ifam/dynamics.hpp"
#include "ifam/rulescan.hpp"

namespace ifam::cli {

/// Configuration mistakes that should exit with the usage code.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { Csv, Json };

/// Fully parsed invocation of one subcommand.
struct RunConfig {
  std::string command;  // decode|simulate|period|table1|scan|table2|hist|graph

  std::uint64_t rule = 54;
  int state_count = 2;
  int symbol_count = 2;
  std::int64_t action_base = 2;
  int window = 10;

  int window_min = 5;   // table1
  int window_max = 22;  // table1

  std::optional<std::uint64_t> ticks;  // simulate, hist
  std::string init;                    // oldest-first movements; empty = all-UP

  OutputFormat format = OutputFormat::Csv;
  std::string output_path;  // empty = stdout

  bool baseline = false;  // simulate/table2/hist: random walk instead of a rule
  std::uint64_t seed = 1;

  int workers = 1;                      // scan
  std::optional<RuleRange> rule_range;  // scan

  std::uint64_t total_ticks = std::uint64_t{1} << 22;  // table2
  std::vector<std::uint64_t> day_lengths;              // empty = 32*2^i, i=0..12
  bool conventional_se = false;

  int bins = 100;  // hist
  std::size_t ma_window = 128;
  std::size_t ma_stride = 128;

  RuleSpec rule_spec() const {
    return RuleSpec{state_count, symbol_count, rule, action_base};
  }
};

/// "5..22" -> {5, 22}; "7" -> {7, 7}.  Throws UsageError on anything else.
std::pair<int, int> parse_window_range(const std::string& text);

/// Movement string, oldest day first: 'U'/'D' for k = 2, digit characters
/// for other k.  Returns the word newest-first.  Throws UsageError on bad
/// characters or a length mismatch.
HistoryWord parse_history(const std::string& oldest_first, int window,
                          int symbol_count);

/// Day lengths 32, 64, ..., 131072 (32 * 2^i for i = 0..12).
std::vector<std::uint64_t> default_day_lengths();

}  // namespace ifam::cli
