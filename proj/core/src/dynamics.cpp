#include "ifam/dynamics.hpp"

#include <stdexcept>
#include <string>
#include <unordered_map>

namespace ifam {

HistoryWord initial_history(int window, int symbol_count) {
  if (window < 1) {
    throw std::invalid_argument("initial_history: require w >= 1");
  }
  const Symbol up = mildest_buy_symbol(symbol_count);
  return HistoryWord{std::vector<Symbol>(static_cast<std::size_t>(window), up)};
}

std::uint64_t history_space_size(int window, int symbol_count) {
  if (window < 1 || symbol_count < 1) {
    throw std::invalid_argument("history_space_size: require w >= 1, k >= 1");
  }
  constexpr std::uint64_t kGuard = std::uint64_t{1} << 32;
  std::uint64_t size = 1;
  for (int i = 0; i < window; ++i) {
    size *= static_cast<std::uint64_t>(symbol_count);
    if (size > kGuard) {
      throw std::length_error("history_space_size: k^w exceeds the 2^32 guard");
    }
  }
  return size;
}

std::uint64_t pack_history(const HistoryWord& word, int symbol_count) {
  history_space_size(word.length(), symbol_count);  // validates and guards
  std::uint64_t packed = 0;
  for (std::size_t i = word.movements.size(); i-- > 0;) {
    const Symbol sym = word.movements[i];
    if (sym >= symbol_count) {
      throw std::out_of_range("pack_history: symbol out of range");
    }
    packed = packed * static_cast<std::uint64_t>(symbol_count) + sym;
  }
  return packed;
}

HistoryWord unpack_history(std::uint64_t packed, int window,
                           int symbol_count) {
  const std::uint64_t total = history_space_size(window, symbol_count);
  if (packed >= total) {
    throw std::out_of_range("unpack_history: packed word out of range");
  }
  HistoryWord word;
  word.movements.resize(static_cast<std::size_t>(window));
  for (int i = 0; i < window; ++i) {
    word.movements[static_cast<std::size_t>(i)] =
        static_cast<Symbol>(packed % symbol_count);
    packed /= static_cast<std::uint64_t>(symbol_count);
  }
  return word;
}

const char* to_string(ComplexityClass c) {
  switch (c) {
    case ComplexityClass::Simple:
      return "Simple";
    case ComplexityClass::Complex:
      return "Complex";
    case ComplexityClass::MaximallyComplex:
      return "MaximallyComplex";
  }
  return "?";
}

ComplexityClass classify(std::uint64_t period, int symbol_count, int window) {
  if (symbol_count < 2) {
    return ComplexityClass::Simple;  // one action only trends
  }
  const std::uint64_t max_period = history_space_size(window, symbol_count);
  if (period == max_period) {
    return ComplexityClass::MaximallyComplex;
  }
  if (period * 2 > max_period) {  // strictly greater than k^w/2
    return ComplexityClass::Complex;
  }
  return ComplexityClass::Simple;
}

namespace {

/// Decision from a packed word: digits least significant first are the
/// movements newest first, which is exactly the consumption order.
Symbol decide_packed(const TransitionTable& table, std::uint64_t packed,
                     int window) {
  const int k = table.symbol_count();
  int state = 1;
  Symbol out = 0;
  std::uint64_t x = packed;
  for (int i = 0; i < window; ++i) {
    const auto sym = static_cast<Symbol>(x % k);
    x /= static_cast<std::uint64_t>(k);
    const Transition t = table.step_unchecked(state, sym);
    state = t.next_state;
    out = t.output;
  }
  return out;
}

struct PackedStep {
  std::uint64_t next;
  Symbol emitted;
};

PackedStep advance_packed(const TransitionTable& table, std::uint64_t packed,
                          int window, std::uint64_t space_size) {
  const Symbol emitted = decide_packed(table, packed, window);
  const auto k = static_cast<std::uint64_t>(table.symbol_count());
  return PackedStep{(packed % (space_size / k)) * k + emitted, emitted};
}

/// First-visit bookkeeping: dense array for two-symbol words up to w = 26,
/// hash map otherwise.
class FirstVisitIndex {
 public:
  FirstVisitIndex(std::uint64_t space_size, int symbol_count, int window) {
    if (symbol_count == 2 && window <= 26) {
      dense_.assign(space_size, kUnseen);
    }
  }

  /// Returns the previously recorded step, or records `step` and returns
  /// kUnseen.
  std::uint64_t visit(std::uint64_t word, std::uint64_t step) {
    if (!dense_.empty()) {
      const std::uint32_t prior = dense_[word];
      if (prior != kUnseen) {
        return prior;
      }
      dense_[word] = static_cast<std::uint32_t>(step);
      return kUnseen;
    }
    const auto [it, inserted] = sparse_.try_emplace(word, step);
    return inserted ? kUnseen : it->second;
  }

  static constexpr std::uint64_t kUnseen = UINT32_MAX;

 private:
  std::vector<std::uint32_t> dense_;
  std::unordered_map<std::uint64_t, std::uint64_t> sparse_;
};

CycleResult find_cycle_packed(const TransitionTable& table, int window,
                              int symbol_count, std::uint64_t start) {
  const std::uint64_t space = history_space_size(window, symbol_count);
  FirstVisitIndex index(space, symbol_count, window);
  std::uint64_t word = start;
  std::uint64_t step = 0;
  for (;;) {
    const std::uint64_t prior = index.visit(word, step);
    if (prior != FirstVisitIndex::kUnseen) {
      CycleResult result;
      result.transient = prior;
      result.period = step - prior;
      result.complexity = classify(result.period, symbol_count, window);
      return result;
    }
    word = advance_packed(table, word, window, space).next;
    ++step;
  }
}

void check_window_matches(const HistoryWord& init, int window) {
  if (init.length() != window) {
    throw std::invalid_argument("initial history has length " +
                                std::to_string(init.length()) +
                                ", expected w = " + std::to_string(window));
  }
}

}  // namespace

std::pair<HistoryWord, Symbol> advance(const TransitionTable& table,
                                       const HistoryWord& window) {
  const Symbol emitted = table.decide(window.movements);
  HistoryWord next;
  next.movements.resize(window.movements.size());
  next.movements[0] = emitted;
  std::copy(window.movements.begin(), window.movements.end() - 1,
            next.movements.begin() + 1);
  return {std::move(next), emitted};
}

Series generate_series(const RuleSpec& spec, int window,
                       std::uint64_t tick_count, const HistoryWord& init) {
  if (tick_count < 1) {
    throw std::invalid_argument("generate_series: require at least one tick");
  }
  check_window_matches(init, window);
  const TransitionTable table = decode_rule(spec);

  // Ring buffer over the window: slot (head + i) % w is the movement i days
  // back.
  std::vector<Symbol> ring(init.movements);
  const auto w = static_cast<std::size_t>(window);
  std::size_t head = 0;

  Series series;
  series.movements.reserve(tick_count);
  series.changes.reserve(tick_count);
  series.prices.reserve(tick_count);
  std::int64_t price = 0;

  for (std::uint64_t tick = 0; tick < tick_count; ++tick) {
    int state = 1;
    Symbol out = 0;
    for (std::size_t i = 0; i < w; ++i) {
      const Symbol sym = ring[(head + i) % w];
      const Transition t = table.step(state, sym);
      state = t.next_state;
      out = t.output;
    }
    head = (head + w - 1) % w;
    ring[head] = out;

    series.movements.push_back(out);
    const std::int64_t change =
        action_value(out, spec.symbol_count, spec.action_base);
    price += change;
    series.changes.push_back(change);
    series.prices.push_back(price);
  }
  return series;
}

Series generate_series(const RuleSpec& spec, int window,
                       std::uint64_t tick_count) {
  return generate_series(spec, window, tick_count,
                         initial_history(window, spec.symbol_count));
}

CycleResult find_cycle(const RuleSpec& spec, int window,
                       const HistoryWord& init) {
  check_window_matches(init, window);
  const TransitionTable table = decode_rule(spec);
  return find_cycle_packed(table, window, spec.symbol_count,
                           pack_history(init, spec.symbol_count));
}

CycleResult find_cycle(const RuleSpec& spec, int window) {
  return find_cycle(spec, window,
                    initial_history(window, spec.symbol_count));
}

std::vector<std::uint64_t> cycle_words(const RuleSpec& spec, int window,
                                       const HistoryWord& init) {
  check_window_matches(init, window);
  const TransitionTable table = decode_rule(spec);
  const std::uint64_t space = history_space_size(window, spec.symbol_count);

  FirstVisitIndex index(space, spec.symbol_count, window);
  std::vector<std::uint64_t> orbit;
  std::uint64_t word = pack_history(init, spec.symbol_count);
  std::uint64_t step = 0;
  for (;;) {
    const std::uint64_t prior = index.visit(word, step);
    if (prior != FirstVisitIndex::kUnseen) {
      return {orbit.begin() + static_cast<std::ptrdiff_t>(prior), orbit.end()};
    }
    orbit.push_back(word);
    word = advance_packed(table, word, window, space).next;
    ++step;
  }
}

std::vector<GraphEdge> transition_graph(const RuleSpec& spec, int window) {
  const TransitionTable table = decode_rule(spec);
  const std::uint64_t space = history_space_size(window, spec.symbol_count);
  std::vector<GraphEdge> edges;
  edges.reserve(space);
  for (std::uint64_t word = 0; word < space; ++word) {
    const PackedStep step = advance_packed(table, word, window, space);
    edges.push_back(GraphEdge{word, step.next, step.emitted});
  }
  return edges;
}

}  // namespace ifam
