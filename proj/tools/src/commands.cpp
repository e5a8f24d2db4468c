#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>

#include "ifam/stats.hpp"
#include "writers.hpp"

namespace ifam::cli {

namespace {

std::pair<int, int> parse_int_pair(const std::string& text) {
  const auto dots = text.find("..");
  auto parse_int = [&](std::size_t begin, std::size_t end) {
    int value = 0;
    const char* first = text.data() + begin;
    const char* last = text.data() + end;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
      throw UsageError("bad window range '" + text + "', expected N or N..M");
    }
    return value;
  };
  if (dots == std::string::npos) {
    const int w = parse_int(0, text.size());
    return {w, w};
  }
  return {parse_int(0, dots), parse_int(dots + 2, text.size())};
}

void advise_small_window(int window, std::ostream& err) {
  if (window < kMinRecommendedWindow) {
    err << "advisory: window " << window << " is below the recommended minimum "
        << kMinRecommendedWindow
        << "; complexity at tiny windows is degenerate\n";
  }
}

HistoryWord initial_word(const RunConfig& cfg) {
  if (cfg.init.empty()) {
    return initial_history(cfg.window, cfg.symbol_count);
  }
  return parse_history(cfg.init, cfg.window, cfg.symbol_count);
}

Series make_series(const RunConfig& cfg, std::uint64_t ticks) {
  if (cfg.baseline) {
    return random_walk_baseline(ticks, cfg.seed);
  }
  return generate_series(cfg.rule_spec(), cfg.window, ticks,
                         initial_word(cfg));
}

void cmd_decode(const RunConfig& cfg, std::ostream& out) {
  const TransitionTable table = decode_rule(cfg.rule_spec());
  for (const EdgeRule& e : table.edges()) {
    out << '{' << e.state << ',' << static_cast<int>(e.input) << "} -> {"
        << e.next_state << ',' << static_cast<int>(e.output) << "}\n";
  }
}

void cmd_simulate(const RunConfig& cfg, std::ostream& out) {
  const std::uint64_t ticks = cfg.ticks.value_or(1024);
  write_series(make_series(cfg, ticks), cfg.format, out);
}

void cmd_period(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  advise_small_window(cfg.window, err);
  const CycleResult cycle =
      find_cycle(cfg.rule_spec(), cfg.window, initial_word(cfg));
  out << "period=" << cycle.period << " transient=" << cycle.transient
      << " class=" << to_string(cycle.complexity)
      << " max=" << history_space_size(cfg.window, cfg.symbol_count) << '\n';
}

void cmd_table1(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  advise_small_window(cfg.window_min, err);
  const auto rows = scan_windows(cfg.rule, cfg.state_count, cfg.symbol_count,
                                 cfg.window_min, cfg.window_max);
  write_catalog(rows, cfg.format, out);
}

void cmd_scan(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  advise_small_window(cfg.window, err);
  const auto rows = scan_rules(cfg.state_count, cfg.symbol_count, cfg.window,
                               cfg.rule_range, cfg.workers);
  write_catalog(rows, cfg.format, out);
  if (!rows.empty()) {
    const ScanSummary summary = summarize_scan(rows);
    err << "scanned=" << rows.size() << " simple=" << summary.simple_count
        << " complex=" << summary.complex_count
        << " maximally_complex=" << summary.maximally_complex_count
        << " dedup_complex=" << summary.deduplicated_complex_count;
    err << " complex_rules=";
    for (std::size_t i = 0; i < summary.complex_rules.size(); ++i) {
      err << (i ? "," : "") << summary.complex_rules[i];
    }
    err << '\n';
  }
}

std::vector<SeriesStats> stats_rows(const Series& series,
                                    std::span<const std::uint64_t> lengths) {
  std::vector<SeriesStats> rows;
  rows.reserve(lengths.size());
  for (std::uint64_t length : lengths) {
    rows.push_back(series_stats(aggregate_days(series.changes, length)));
  }
  return rows;
}

void cmd_table2(const RunConfig& cfg, std::ostream& out) {
  const std::vector<std::uint64_t> lengths =
      cfg.day_lengths.empty() ? default_day_lengths() : cfg.day_lengths;
  std::vector<SeriesStats> rows;
  if (cfg.baseline) {
    for (std::uint64_t length : lengths) {
      if (length < 1 || cfg.total_ticks % length != 0) {
        throw std::invalid_argument(
            "table2: every day length must divide the total tick count");
      }
    }
    rows = stats_rows(random_walk_baseline(cfg.total_ticks, cfg.seed), lengths);
  } else {
    rows = summary_table(cfg.rule_spec(), cfg.window, cfg.total_ticks, lengths);
  }
  write_summary_stats(lengths, rows, cfg.conventional_se, cfg.format, out);
}

void cmd_hist(const RunConfig& cfg, std::ostream& out) {
  // Default series length 2^w, the span of one near-maximal cycle.
  const std::uint64_t ticks =
      cfg.ticks.value_or(history_space_size(cfg.window, cfg.symbol_count));
  const Series series = make_series(cfg, ticks);
  const std::vector<double> changes(series.changes.begin(),
                                    series.changes.end());
  const std::vector<double> averages =
      moving_average(changes, cfg.ma_window, cfg.ma_stride);
  write_histogram(histogram(averages, cfg.bins), cfg.format, out);
}

void cmd_graph(const RunConfig& cfg, std::ostream& out) {
  write_graph(transition_graph(cfg.rule_spec(), cfg.window), cfg.format, out);
}

void run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.command == "decode") {
    cmd_decode(cfg, out);
  } else if (cfg.command == "simulate") {
    cmd_simulate(cfg, out);
  } else if (cfg.command == "period") {
    cmd_period(cfg, out, err);
  } else if (cfg.command == "table1") {
    cmd_table1(cfg, out, err);
  } else if (cfg.command == "scan") {
    cmd_scan(cfg, out, err);
  } else if (cfg.command == "table2") {
    cmd_table2(cfg, out);
  } else if (cfg.command == "hist") {
    cmd_hist(cfg, out);
  } else if (cfg.command == "graph") {
    cmd_graph(cfg, out);
  } else {
    throw UsageError("unknown subcommand '" + cfg.command + "'");
  }
}

}  // namespace

std::pair<int, int> parse_window_range(const std::string& text) {
  const auto [lo, hi] = parse_int_pair(text);
  if (lo < 1 || lo > hi) {
    throw UsageError("bad window range '" + text + "': need 1 <= min <= max");
  }
  return {lo, hi};
}

HistoryWord parse_history(const std::string& oldest_first, int window,
                          int symbol_count) {
  if (static_cast<int>(oldest_first.size()) != window) {
    throw UsageError("initial history has " +
                     std::to_string(oldest_first.size()) +
                     " movements, expected w = " + std::to_string(window));
  }
  HistoryWord word;
  word.movements.resize(oldest_first.size());
  for (std::size_t i = 0; i < oldest_first.size(); ++i) {
    const char c = oldest_first[i];
    Symbol sym;
    if (symbol_count == 2) {
      if (c == 'U') {
        sym = 1;
      } else if (c == 'D') {
        sym = 0;
      } else {
        throw UsageError("bad movement character '" + std::string(1, c) +
                         "', expected U or D");
      }
    } else {
      if (c < '0' || c >= '0' + std::min(symbol_count, 10)) {
        throw UsageError("bad movement digit '" + std::string(1, c) +
                         "', expected 0.." + std::to_string(symbol_count - 1));
      }
      sym = static_cast<Symbol>(c - '0');
    }
    // Oldest-first input, newest-first storage.
    word.movements[oldest_first.size() - 1 - i] = sym;
  }
  return word;
}

std::vector<std::uint64_t> default_day_lengths() {
  std::vector<std::uint64_t> lengths;
  for (int i = 0; i <= 12; ++i) {
    lengths.push_back(std::uint64_t{32} << i);
  }
  return lengths;
}

int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.output_path.empty()) {
      run_command(cfg, out, err);
    } else {
      std::ofstream file(cfg.output_path, std::ios::binary);
      if (!file) {
        throw std::runtime_error("cannot open output path '" +
                                 cfg.output_path + "'");
      }
      run_command(cfg, file, err);
      if (!file) {
        throw std::runtime_error("write failed for '" + cfg.output_path + "'");
      }
    }
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace ifam::cli
