#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ifam/automaton.hpp"

/// Price-series generation under the representative-investor feedback loop
/// and cycle detection over the induced map on history words.
///
/// The market state is the word of the last w movements.  Each day the
/// trader decides from that word, the decision becomes the day's movement,
/// and the word shifts.  With k symbols there are only k^w distinct words,
/// so the series must eventually cycle.

namespace ifam {

/// The last w market movements, index 0 = most recent.
struct HistoryWord {
  std::vector<Symbol> movements;

  int length() const { return static_cast<int>(movements.size()); }
};

/// Default starting history: w repetitions of the mildest-buy symbol
/// (all UP days for k = 2).  Throws if window < 1.
HistoryWord initial_history(int window, int symbol_count);

/// k^w, guarded to <= 2^32.  Throws std::length_error beyond the guard.
std::uint64_t history_space_size(int window, int symbol_count);

/// Packs a word into an integer: the symbol at index i contributes digit i
/// in base k.  Bijective with unpack_history for fixed (w, k).
std::uint64_t pack_history(const HistoryWord& word, int symbol_count);
HistoryWord unpack_history(std::uint64_t packed, int window, int symbol_count);

enum class ComplexityClass { Simple, Complex, MaximallyComplex };

const char* to_string(ComplexityClass c);

/// Classifies a cycle length: MaximallyComplex at period == k^w, Complex
/// strictly above k^w/2, Simple otherwise (a period of exactly k^w/2 is
/// Simple).  Single-symbol series (k = 1) only trend and are always Simple.
ComplexityClass classify(std::uint64_t period, int symbol_count, int window);

/// Windows below this make "complex" periods only a few days long; callers
/// may want to advise against them.
inline constexpr int kMinRecommendedWindow = 5;

/// Transient length and minimal period of the orbit of a history word.
struct CycleResult {
  std::uint64_t transient = 0;  ///< steps from the initial word to the cycle
  std::uint64_t period = 1;     ///< minimal cycle length
  ComplexityClass complexity = ComplexityClass::Simple;
};

/// Movements, per-tick price changes, and cumulative prices starting at 0.
struct Series {
  std::vector<Symbol> movements;
  std::vector<std::int64_t> changes;
  std::vector<std::int64_t> prices;

  bool operator==(const Series&) const = default;
};

/// One day of the feedback loop: decide on the window, then shift the
/// decision in as the newest movement (the oldest drops off).
std::pair<HistoryWord, Symbol> advance(const TransitionTable& table,
                                       const HistoryWord& window);

/// Runs the loop for tick_count days from the given initial history.
Series generate_series(const RuleSpec& spec, int window,
                       std::uint64_t tick_count, const HistoryWord& init);
Series generate_series(const RuleSpec& spec, int window,
                       std::uint64_t tick_count);

/// Iterates the induced map on packed words from the initial word, recording
/// first-visit steps; the first revisited word yields the exact transient
/// and minimal period.  Requires k^w <= 2^32.
CycleResult find_cycle(const RuleSpec& spec, int window,
                       const HistoryWord& init);
CycleResult find_cycle(const RuleSpec& spec, int window);

/// The packed words on the cycle reached from init, in orbit order starting
/// at step `transient`.  Same guard as find_cycle.
std::vector<std::uint64_t> cycle_words(const RuleSpec& spec, int window,
                                       const HistoryWord& init);

/// One transition of the induced map.
struct GraphEdge {
  std::uint64_t from;
  std::uint64_t to;
  Symbol emitted;

  bool operator==(const GraphEdge&) const = default;
};

/// The full functional graph over all k^w packed words: exactly one outgoing
/// edge per word, ordered by source word.  Same guard as find_cycle.
std::vector<GraphEdge> transition_graph(const RuleSpec& spec, int window);

}  // namespace ifam
