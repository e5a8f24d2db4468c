#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

using ifam::cli::OutputFormat;
using ifam::cli::RunConfig;

void add_rule_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--rule,-m", cfg.rule, "Rule number");
  cmd->add_option("--s", cfg.state_count, "State count")->check(CLI::PositiveNumber);
  cmd->add_option("--k", cfg.symbol_count, "Symbol/action count")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--b", cfg.action_base, "Action strength base (k >= 4 only)");
}

void add_output_options(CLI::App* cmd, RunConfig& cfg) {
  const std::map<std::string, OutputFormat> formats{
      {"csv", OutputFormat::Csv}, {"json", OutputFormat::Json}};
  cmd->add_option("--format", cfg.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  cmd->add_option("--out,-o", cfg.output_path, "Output file (default stdout)");
}

CLI::Option* add_window_option(CLI::App* cmd, RunConfig& cfg) {
  return cmd->add_option("--w", cfg.window, "Lookback window")
      ->check(CLI::PositiveNumber);
}

void add_init_option(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--init", cfg.init,
                  "Initial history, oldest day first (U/D for k=2, digits "
                  "otherwise; default all UP)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Deterministic simulator and analyzer for iterated-finite-automaton "
      "market models"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string window_range = "5..22";

  CLI::App* decode =
      app.add_subcommand("decode", "Print a rule's transition table");
  add_rule_options(decode, cfg);

  CLI::App* simulate =
      app.add_subcommand("simulate", "Generate a tick/price series");
  add_rule_options(simulate, cfg);
  add_window_option(simulate, cfg);
  add_init_option(simulate, cfg);
  simulate->add_option("--ticks,-n", cfg.ticks, "Number of ticks");
  auto* sim_baseline = simulate->add_flag(
      "--baseline", cfg.baseline, "Random-walk baseline instead of a rule");
  simulate->add_option("--seed", cfg.seed, "Baseline RNG seed")
      ->needs(sim_baseline);
  add_output_options(simulate, cfg);

  CLI::App* period = app.add_subcommand(
      "period", "Measure the cycle of a rule from the starting history");
  add_rule_options(period, cfg);
  add_window_option(period, cfg);
  add_init_option(period, cfg);

  CLI::App* table1 = app.add_subcommand(
      "table1", "Period catalog of one rule across a window range");
  add_rule_options(table1, cfg);
  table1->add_option("--w", window_range, "Window range, N or N..M")
      ->capture_default_str();
  add_output_options(table1, cfg);

  CLI::App* scan = app.add_subcommand(
      "scan", "Measure every rule of a rule space at one window");
  add_rule_options(scan, cfg);
  add_window_option(scan, cfg);
  std::uint64_t from = 0;
  std::uint64_t to = 0;
  auto* opt_from =
      scan->add_option("--from", from, "First rule number (inclusive)");
  auto* opt_to = scan->add_option("--to", to, "Last rule number (exclusive)");
  opt_to->needs(opt_from);
  opt_from->needs(opt_to);
  scan->add_option("--workers", cfg.workers, "Worker thread count")
      ->check(CLI::PositiveNumber);
  add_output_options(scan, cfg);

  CLI::App* table2 = app.add_subcommand(
      "table2", "Summary statistics over a range of day lengths");
  add_rule_options(table2, cfg);
  add_window_option(table2, cfg)->default_val(22);
  table2->add_option("--total-ticks", cfg.total_ticks, "Total tick count");
  table2->add_option("--day-lengths", cfg.day_lengths,
                     "Comma-separated ticks-per-day values")
      ->delimiter(',');
  table2->add_flag("--conventional-se", cfg.conventional_se,
                   "Report sqrt(6/d), sqrt(24/d) standard errors");
  auto* t2_baseline = table2->add_flag("--baseline", cfg.baseline,
                                       "Random-walk baseline instead of a rule");
  table2->add_option("--seed", cfg.seed, "Baseline RNG seed")->needs(t2_baseline);
  add_output_options(table2, cfg);

  CLI::App* hist = app.add_subcommand(
      "hist", "Histogram of moving averages of the tick changes");
  add_rule_options(hist, cfg);
  add_window_option(hist, cfg);
  hist->add_option("--ticks,-n", cfg.ticks,
                   "Series length (default 2^w)");
  hist->add_option("--ma-window", cfg.ma_window, "Moving-average window");
  hist->add_option("--ma-stride", cfg.ma_stride, "Moving-average stride");
  hist->add_option("--bins", cfg.bins, "Bin count")->check(CLI::PositiveNumber);
  auto* h_baseline = hist->add_flag("--baseline", cfg.baseline,
                                    "Random-walk baseline instead of a rule");
  hist->add_option("--seed", cfg.seed, "Baseline RNG seed")->needs(h_baseline);
  add_output_options(hist, cfg);

  CLI::App* graph = app.add_subcommand(
      "graph", "Transition edge list over all history words");
  add_rule_options(graph, cfg);
  add_window_option(graph, cfg);
  add_output_options(graph, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    if (cfg.command == "table1") {
      std::tie(cfg.window_min, cfg.window_max) =
          ifam::cli::parse_window_range(window_range);
    }
    if (cfg.command == "scan" && opt_from->count() > 0) {
      cfg.rule_range = ifam::RuleRange{from, to};
    }
  } catch (const ifam::cli::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  }

  return ifam::cli::dispatch(cfg, std::cout, std::cerr);
}
