#include "writers.hpp"

#include <cstdio>
#include <ostream>

#include "json.hpp"

namespace ifam::cli {

namespace {

using nlohmann::json;

class LineWriter {
 public:
  explicit LineWriter(std::ostream& out) : out_(out) {}

  void line(const std::string& text) {
    out_ << text << '\n';
    bytes_ += text.size() + 1;
  }

  std::size_t bytes() const { return bytes_; }

 private:
  std::ostream& out_;
  std::size_t bytes_ = 0;
};

std::size_t write_json(const json& doc, std::ostream& out) {
  const std::string dumped = doc.dump();
  out << dumped << '\n';
  return dumped.size() + 1;
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::size_t write_catalog(std::span<const RuleCatalogRow> rows,
                          OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::Json) {
    json doc = json::array();
    for (const RuleCatalogRow& r : rows) {
      doc.push_back(json{{"s", r.state_count},
                         {"k", r.symbol_count},
                         {"w", r.window},
                         {"rule", r.rule},
                         {"period", r.period},
                         {"transient", r.transient},
                         {"class", to_string(r.complexity)},
                         {"pct_of_max", r.pct_of_max}});
    }
    return write_json(doc, out);
  }
  LineWriter writer(out);
  writer.line("s,k,w,rule,period,transient,class,pct_of_max");
  for (const RuleCatalogRow& r : rows) {
    writer.line(std::to_string(r.state_count) + "," +
                std::to_string(r.symbol_count) + "," +
                std::to_string(r.window) + "," + std::to_string(r.rule) +
                "," + std::to_string(r.period) + "," +
                std::to_string(r.transient) + "," + to_string(r.complexity) +
                "," + format_double(r.pct_of_max));
  }
  return writer.bytes();
}

std::size_t write_series(const Series& series, OutputFormat format,
                         std::ostream& out) {
  if (format == OutputFormat::Json) {
    json doc = json::array();
    for (std::size_t i = 0; i < series.movements.size(); ++i) {
      doc.push_back(json{{"tick", i + 1},
                         {"movement", static_cast<int>(series.movements[i])},
                         {"change", series.changes[i]},
                         {"price", series.prices[i]}});
    }
    return write_json(doc, out);
  }
  LineWriter writer(out);
  writer.line("tick,movement,change,price");
  for (std::size_t i = 0; i < series.movements.size(); ++i) {
    writer.line(std::to_string(i + 1) + "," +
                std::to_string(static_cast<int>(series.movements[i])) + "," +
                std::to_string(series.changes[i]) + "," +
                std::to_string(series.prices[i]));
  }
  return writer.bytes();
}

std::size_t write_summary_stats(std::span<const std::uint64_t> day_lengths,
                                std::span<const SeriesStats> rows,
                                bool conventional_se, OutputFormat format,
                                std::ostream& out) {
  auto se_pair = [&](const SeriesStats& s) {
    return conventional_se ? conventional_standard_errors(s.count)
                           : std::pair{s.se_skew, s.se_kurt};
  };
  if (format == OutputFormat::Json) {
    json doc = json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto [se_s, se_k] = se_pair(rows[i]);
      doc.push_back(json{{"ticks_per_day", day_lengths[i]},
                         {"days", rows[i].count},
                         {"distinct", rows[i].distinct},
                         {"skewness", rows[i].skewness},
                         {"se_skew", se_s},
                         {"excess_kurtosis", rows[i].excess_kurtosis},
                         {"se_kurt", se_k}});
    }
    return write_json(doc, out);
  }
  LineWriter writer(out);
  writer.line("ticks_per_day,days,distinct,skewness,se_skew,excess_kurtosis,se_kurt");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto [se_s, se_k] = se_pair(rows[i]);
    writer.line(std::to_string(day_lengths[i]) + "," +
                std::to_string(rows[i].count) + "," +
                std::to_string(rows[i].distinct) + "," +
                format_double(rows[i].skewness) + "," + format_double(se_s) +
                "," + format_double(rows[i].excess_kurtosis) + "," +
                format_double(se_k));
  }
  return writer.bytes();
}

std::size_t write_histogram(const Histogram& histogram, OutputFormat format,
                            std::ostream& out) {
  if (format == OutputFormat::Json) {
    json doc = json::array();
    for (std::size_t i = 0; i < histogram.counts.size(); ++i) {
      doc.push_back(json{{"bin_left", histogram.bin_edges[i]},
                         {"bin_right", histogram.bin_edges[i + 1]},
                         {"count", histogram.counts[i]},
                         {"frequency", histogram.frequencies[i]}});
    }
    return write_json(doc, out);
  }
  LineWriter writer(out);
  writer.line("bin_left,bin_right,count,frequency");
  for (std::size_t i = 0; i < histogram.counts.size(); ++i) {
    writer.line(format_double(histogram.bin_edges[i]) + "," +
                format_double(histogram.bin_edges[i + 1]) + "," +
                std::to_string(histogram.counts[i]) + "," +
                format_double(histogram.frequencies[i]));
  }
  return writer.bytes();
}

std::size_t write_graph(std::span<const GraphEdge> edges, OutputFormat format,
                        std::ostream& out) {
  if (format == OutputFormat::Json) {
    json doc = json::array();
    for (const GraphEdge& e : edges) {
      doc.push_back(json{{"from_word", e.from},
                         {"to_word", e.to},
                         {"emitted_symbol", static_cast<int>(e.emitted)}});
    }
    return write_json(doc, out);
  }
  LineWriter writer(out);
  writer.line("from_word,to_word,emitted_symbol");
  for (const GraphEdge& e : edges) {
    writer.line(std::to_string(e.from) + "," + std::to_string(e.to) + "," +
                std::to_string(static_cast<int>(e.emitted)));
  }
  return writer.bytes();
}

}  // namespace ifam::cli
