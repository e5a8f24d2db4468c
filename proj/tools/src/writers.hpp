#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>

#include "ifam/dynamics.hpp"
#include "ifam/rulescan.hpp"
#include "ifam/stats.hpp"
#include "run_config.hpp"

/// CSV/JSON exporters.  Output is byte-deterministic: no timestamps, plain
/// integers, and doubles that re-parse to the exact in-memory value.

namespace ifam::cli {

/// %.17g rendering; round-trips any finite double.
std::string format_double(double value);

/// Catalog rows with header s,k,w,rule,period,transient,class,pct_of_max
/// (JSON uses the same field names).  Returns bytes written.
std::size_t write_catalog(std::span<const RuleCatalogRow> rows,
                          OutputFormat format, std::ostream& out);

/// Tick series: tick,movement,change,price (tick numbering starts at 1).
std::size_t write_series(const Series& series, OutputFormat format,
                         std::ostream& out);

/// Summary statistics per day length:
/// ticks_per_day,days,distinct,skewness,se_skew,excess_kurtosis,se_kurt.
/// With conventional_se the SE columns carry sqrt(6/d) and sqrt(24/d).
std::size_t write_summary_stats(std::span<const std::uint64_t> day_lengths,
                                std::span<const SeriesStats> rows,
                                bool conventional_se, OutputFormat format,
                                std::ostream& out);

/// Histogram bins: bin_left,bin_right,count,frequency.
std::size_t write_histogram(const Histogram& histogram, OutputFormat format,
                            std::ostream& out);

/// Edge list: from_word,to_word,emitted_symbol.
std::size_t write_graph(std::span<const GraphEdge> edges, OutputFormat format,
                        std::ostream& out);

}  // namespace ifam::cli
