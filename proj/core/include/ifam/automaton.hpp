#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

/// Numbered transducer (Mealy machine) rules and the per-day decision
/// procedure of the representative investor.
///
/// A rule is an s-state, k-symbol transducer identified by a single integer
/// in [0, (s*k)^(s*k)).  Symbols double as market movements and trader
/// actions: for k = 2, symbol 0 is DOWN/Sell and symbol 1 is UP/Buy.

namespace ifam {

/// Input/output symbol, 0..k-1.
using Symbol = std::uint8_t;

/// Parameters identifying one rule.
struct RuleSpec {
  int state_count = 2;           ///< s >= 1
  int symbol_count = 2;          ///< k >= 1
  std::uint64_t rule = 54;       ///< m, 0 <= m < (s*k)^(s*k)
  std::int64_t action_base = 2;  ///< b; ignored for k <= 3

  /// Throws std::invalid_argument / std::out_of_range on violated invariants.
  void validate() const;
};

/// (s*k)^(s*k).  Throws std::overflow_error if it does not fit in 64 bits
/// (s*k <= 15 is representable).
std::uint64_t rule_space_size(int state_count, int symbol_count);

/// One edge of the transducer network.
struct Transition {
  int next_state;  ///< 1..s
  Symbol output;   ///< 0..k-1

  bool operator==(const Transition&) const = default;
};

/// One edge given in rule form, {state, input} -> {next_state, output}.
struct EdgeRule {
  int state;
  Symbol input;
  int next_state;
  Symbol output;
};

/// Total transition map of an s-state, k-symbol transducer.
/// Immutable after construction; every (state, input) pair has exactly one
/// entry.
class TransitionTable {
 public:
  /// Builds from a dense entry vector indexed (state-1)*k + input.
  /// Throws if the size is not s*k or an entry is out of range.
  TransitionTable(int state_count, int symbol_count,
                  std::vector<Transition> entries);

  /// Builds from an explicit edge list.  Throws on missing or duplicate
  /// (state, input) pairs and on out-of-range states or outputs.
  static TransitionTable from_edges(int state_count, int symbol_count,
                                    std::span<const EdgeRule> edges);

  int state_count() const { return state_count_; }
  int symbol_count() const { return symbol_count_; }

  /// The unique transition for (state, input).  Bounds-checked.
  Transition step(int state, Symbol input) const;

  /// Unchecked hot-path lookup.
  Transition step_unchecked(int state, Symbol input) const {
    return entries_[static_cast<std::size_t>(state - 1) * symbol_count_ +
                    input];
  }

  /// The trader's decision for one day: start in state 1, consume the
  /// window newest movement first, return the output of the final
  /// transition (the one consuming the oldest movement).
  /// Throws on an empty window or an out-of-range symbol.
  Symbol decide(std::span<const Symbol> window_newest_first) const;

  /// Edges in rule-number digit order: states ascending, inputs descending.
  std::vector<EdgeRule> edges() const;

  bool operator==(const TransitionTable&) const = default;

 private:
  int state_count_;
  int symbol_count_;
  std::vector<Transition> entries_;
};

/// Decodes a rule number into its transition table.
///
/// The rule number is written in base s*k as exactly s*k digits, most
/// significant first, and partitioned into s groups of k digits.  Digit d at
/// group i, position j (both 1-based) yields the entry
/// (state i, input k-j) -> (next state floor(d/k) mod s + 1, output d mod k).
TransitionTable decode_rule(const RuleSpec& spec);

/// Inverse of decode_rule: encode_rule(decode_rule(m)) == m for valid m.
std::uint64_t encode_rule(const TransitionTable& table);

/// Signed price-change contribution of an action symbol, in tick units.
/// Symbols map in ascending order onto the sorted action set
/// {-b^(k/2-1), ..., -b^0, (0 if k odd), +b^0, ..., +b^(k/2-1)}.
/// For k = 2 this gives 0 -> -1 and 1 -> +1; k = 1 yields 0 (no movement).
/// Throws on an out-of-range symbol, b < 2 when k >= 4, or int64 overflow.
std::int64_t action_value(Symbol symbol, int symbol_count,
                          std::int64_t action_base);

/// The symbol whose action value is +1 (the mildest buy); symbol 0 for k = 1.
Symbol mildest_buy_symbol(int symbol_count);

/// Applies a state relabeling.  permutation[i] is the new label of old state
/// i+1; it must be a permutation of 1..s.
TransitionTable relabel(const TransitionTable& table,
                        std::span<const int> permutation);

/// True iff some permutation of state labels maps one table onto the other.
/// With pin_start_state the permutation must fix state 1 (the start state),
/// so equivalent rules agree on every decision from the first day; without
/// it the match is structural and the start state may move.
bool relabel_equivalent(std::uint64_t rule_a, std::uint64_t rule_b,
                        int state_count, int symbol_count,
                        bool pin_start_state = false);

/// Smallest rule number among all state relabelings of the given rule.
std::uint64_t canonical_rule_number(std::uint64_t rule, int state_count,
                                    int symbol_count);

}  // namespace ifam
