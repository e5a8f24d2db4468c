#include "ifam/automaton.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ifam {

namespace {

std::uint64_t checked_pow(std::uint64_t base, unsigned exp,
                          const char* what) {
  std::uint64_t result = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && result > UINT64_MAX / base) {
      throw std::overflow_error(what);
    }
    result *= base;
  }
  return result;
}

}  // namespace

std::uint64_t rule_space_size(int state_count, int symbol_count) {
  if (state_count < 1 || symbol_count < 1) {
    throw std::invalid_argument("rule_space_size: require s >= 1 and k >= 1");
  }
  const auto n = static_cast<std::uint64_t>(state_count) *
                 static_cast<std::uint64_t>(symbol_count);
  return checked_pow(n, static_cast<unsigned>(n),
                     "rule_space_size: (s*k)^(s*k) exceeds 64 bits");
}

void RuleSpec::validate() const {
  const std::uint64_t total = rule_space_size(state_count, symbol_count);
  if (rule >= total) {
    throw std::out_of_range("RuleSpec: rule number " + std::to_string(rule) +
                            " out of range [0, " + std::to_string(total) +
                            ")");
  }
  if (symbol_count >= 4 && action_base < 2) {
    throw std::invalid_argument("RuleSpec: action base must be >= 2 for k >= 4");
  }
}

TransitionTable::TransitionTable(int state_count, int symbol_count,
                                 std::vector<Transition> entries)
    : state_count_(state_count),
      symbol_count_(symbol_count),
      entries_(std::move(entries)) {
  if (state_count_ < 1 || symbol_count_ < 1) {
    throw std::invalid_argument("TransitionTable: require s >= 1 and k >= 1");
  }
  const auto expected = static_cast<std::size_t>(state_count_) * symbol_count_;
  if (entries_.size() != expected) {
    throw std::invalid_argument("TransitionTable: expected " +
                                std::to_string(expected) + " entries, got " +
                                std::to_string(entries_.size()));
  }
  for (const Transition& t : entries_) {
    if (t.next_state < 1 || t.next_state > state_count_) {
      throw std::invalid_argument("TransitionTable: next state out of range");
    }
    if (t.output >= symbol_count_) {
      throw std::invalid_argument("TransitionTable: output symbol out of range");
    }
  }
}

TransitionTable TransitionTable::from_edges(int state_count, int symbol_count,
                                            std::span<const EdgeRule> edges) {
  if (state_count < 1 || symbol_count < 1) {
    throw std::invalid_argument("TransitionTable: require s >= 1 and k >= 1");
  }
  const auto total = static_cast<std::size_t>(state_count) * symbol_count;
  std::vector<Transition> entries(total, Transition{0, 0});
  std::vector<bool> seen(total, false);
  for (const EdgeRule& e : edges) {
    if (e.state < 1 || e.state > state_count || e.input >= symbol_count) {
      throw std::invalid_argument("TransitionTable: edge key out of range");
    }
    const std::size_t idx =
        static_cast<std::size_t>(e.state - 1) * symbol_count + e.input;
    if (seen[idx]) {
      throw std::invalid_argument(
          "TransitionTable: duplicate entry for (state " +
          std::to_string(e.state) + ", input " + std::to_string(e.input) +
          ")");
    }
    seen[idx] = true;
    entries[idx] = Transition{e.next_state, e.output};
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) {
    throw std::invalid_argument("TransitionTable: missing entries");
  }
  return TransitionTable(state_count, symbol_count, std::move(entries));
}

Transition TransitionTable::step(int state, Symbol input) const {
  if (state < 1 || state > state_count_) {
    throw std::out_of_range("step: state out of range");
  }
  if (input >= symbol_count_) {
    throw std::out_of_range("step: input symbol out of range");
  }
  return step_unchecked(state, input);
}

Symbol TransitionTable::decide(std::span<const Symbol> window) const {
  if (window.empty()) {
    throw std::invalid_argument("decide: empty window");
  }
  int state = 1;
  Symbol out = 0;
  for (Symbol sym : window) {
    if (sym >= symbol_count_) {
      throw std::out_of_range("decide: movement symbol out of range");
    }
    const Transition t = step_unchecked(state, sym);
    state = t.next_state;
    out = t.output;
  }
  return out;
}

std::vector<EdgeRule> TransitionTable::edges() const {
  std::vector<EdgeRule> result;
  result.reserve(entries_.size());
  for (int state = 1; state <= state_count_; ++state) {
    for (int input = symbol_count_ - 1; input >= 0; --input) {
      const Transition t = step_unchecked(state, static_cast<Symbol>(input));
      result.push_back(
          EdgeRule{state, static_cast<Symbol>(input), t.next_state, t.output});
    }
  }
  return result;
}

TransitionTable decode_rule(const RuleSpec& spec) {
  spec.validate();
  const int s = spec.state_count;
  const int k = spec.symbol_count;
  const int n = s * k;

  // n digits of the rule number in base n, most significant first.
  std::vector<int> digits(static_cast<std::size_t>(n), 0);
  std::uint64_t x = spec.rule;
  for (int pos = n - 1; pos >= 0; --pos) {
    digits[static_cast<std::size_t>(pos)] = static_cast<int>(x % n);
    x /= n;
  }

  // Group i (1-based), position j (1-based) holds the entry for
  // (state i, input k-j).
  std::vector<Transition> entries(static_cast<std::size_t>(n),
                                  Transition{0, 0});
  for (int i = 1; i <= s; ++i) {
    for (int j = 1; j <= k; ++j) {
      const int d = digits[static_cast<std::size_t>((i - 1) * k + (j - 1))];
      const int input = k - j;
      entries[static_cast<std::size_t>(i - 1) * k + input] =
          Transition{(d / k) % s + 1, static_cast<Symbol>(d % k)};
    }
  }
  return TransitionTable(s, k, std::move(entries));
}

std::uint64_t encode_rule(const TransitionTable& table) {
  const int s = table.state_count();
  const int k = table.symbol_count();
  const int n = s * k;
  std::uint64_t m = 0;
  for (int i = 1; i <= s; ++i) {
    for (int j = 1; j <= k; ++j) {
      const Transition t = table.step_unchecked(i, static_cast<Symbol>(k - j));
      const int d = (t.next_state - 1) * k + t.output;
      m = m * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(d);
    }
  }
  return m;
}

std::int64_t action_value(Symbol symbol, int symbol_count,
                          std::int64_t action_base) {
  if (symbol_count < 1) {
    throw std::invalid_argument("action_value: require k >= 1");
  }
  if (symbol >= symbol_count) {
    throw std::out_of_range("action_value: symbol out of range");
  }
  if (symbol_count == 1) {
    return 0;  // a single action cannot move the price
  }
  if (symbol_count >= 4 && action_base < 2) {
    throw std::invalid_argument("action_value: base must be >= 2 for k >= 4");
  }

  const int half = symbol_count / 2;
  const bool odd = symbol_count % 2 != 0;
  int exponent;
  int sign;
  if (symbol < half) {
    sign = -1;
    exponent = half - 1 - symbol;
  } else if (odd && symbol == half) {
    return 0;  // hold
  } else {
    sign = +1;
    exponent = symbol - half - (odd ? 1 : 0);
  }

  std::int64_t value = 1;
  for (int i = 0; i < exponent; ++i) {
    if (value > INT64_MAX / action_base) {
      throw std::overflow_error("action_value: strength exceeds 64 bits");
    }
    value *= action_base;
  }
  return sign * value;
}

Symbol mildest_buy_symbol(int symbol_count) {
  if (symbol_count < 1) {
    throw std::invalid_argument("mildest_buy_symbol: require k >= 1");
  }
  if (symbol_count == 1) {
    return 0;
  }
  const int half = symbol_count / 2;
  return static_cast<Symbol>(symbol_count % 2 == 0 ? half : half + 1);
}

TransitionTable relabel(const TransitionTable& table,
                        std::span<const int> permutation) {
  const int s = table.state_count();
  const int k = table.symbol_count();
  if (static_cast<int>(permutation.size()) != s) {
    throw std::invalid_argument("relabel: permutation size mismatch");
  }
  std::vector<bool> hit(static_cast<std::size_t>(s), false);
  for (int label : permutation) {
    if (label < 1 || label > s || hit[static_cast<std::size_t>(label - 1)]) {
      throw std::invalid_argument("relabel: not a permutation of 1..s");
    }
    hit[static_cast<std::size_t>(label - 1)] = true;
  }

  std::vector<Transition> entries(static_cast<std::size_t>(s) * k,
                                  Transition{0, 0});
  for (int state = 1; state <= s; ++state) {
    for (int input = 0; input < k; ++input) {
      const Transition t = table.step_unchecked(state, static_cast<Symbol>(input));
      const int new_state = permutation[static_cast<std::size_t>(state - 1)];
      const int new_next = permutation[static_cast<std::size_t>(t.next_state - 1)];
      entries[static_cast<std::size_t>(new_state - 1) * k + input] =
          Transition{new_next, t.output};
    }
  }
  return TransitionTable(s, k, std::move(entries));
}

namespace {

template <typename Fn>
void for_each_permutation(int s, bool pin_first, Fn&& fn) {
  std::vector<int> perm(static_cast<std::size_t>(s));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    if (pin_first && perm[0] != 1) {
      continue;
    }
    fn(std::span<const int>(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

bool relabel_equivalent(std::uint64_t rule_a, std::uint64_t rule_b,
                        int state_count, int symbol_count,
                        bool pin_start_state) {
  const TransitionTable a =
      decode_rule({state_count, symbol_count, rule_a, 2});
  const TransitionTable b =
      decode_rule({state_count, symbol_count, rule_b, 2});
  bool found = false;
  for_each_permutation(state_count, pin_start_state,
                       [&](std::span<const int> perm) {
                         if (!found && relabel(a, perm) == b) {
                           found = true;
                         }
                       });
  return found;
}

std::uint64_t canonical_rule_number(std::uint64_t rule, int state_count,
                                    int symbol_count) {
  const TransitionTable table =
      decode_rule({state_count, symbol_count, rule, 2});
  std::uint64_t best = UINT64_MAX;
  for_each_permutation(state_count, false, [&](std::span<const int> perm) {
    best = std::min(best, encode_rule(relabel(table, perm)));
  });
  return best;
}

}  // namespace ifam
