#include <stdexcept>
#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "doctest.h"
#include "ifam/dynamics.hpp"
#include "ifam/rulescan.hpp"
#include "oracles.hpp"

using namespace ifam;

namespace {

constexpr std::uint64_t kAlwaysBuy = 85;  // every entry -> (state 1, output 1)

RuleSpec spec_for(std::uint64_t rule, int s = 2, int k = 2) {
  return RuleSpec{s, k, rule, 2};
}

std::vector<Symbol> movements(const HistoryWord& w) { return w.movements; }

}  // namespace

TEST_SUITE_BEGIN("dynamics");

TEST_CASE("the default history is all UP") {
  const HistoryWord h = initial_history(3, 2);
  CHECK(movements(h) == std::vector<Symbol>{1, 1, 1});
  CHECK(pack_history(initial_history(5, 2), 2) == 31);
  CHECK_THROWS_AS(initial_history(0, 2), std::invalid_argument);
}

TEST_CASE("the default history buys mildly for larger action sets") {
  const HistoryWord h = initial_history(2, 4);
  for (Symbol sym : h.movements) {
    CHECK(action_value(sym, 4, 3) == 1);
  }
}

TEST_CASE("packing is a bijection") {
  for (const auto& [w, k] : std::vector<std::pair<int, int>>{
           {5, 2}, {3, 4}, {4, 3}, {1, 2}}) {
    const std::uint64_t space = history_space_size(w, k);
    std::set<std::uint64_t> seen;
    for (std::uint64_t packed = 0; packed < space; ++packed) {
      const HistoryWord word = unpack_history(packed, w, k);
      CHECK(pack_history(word, k) == packed);
      seen.insert(packed);
    }
    CHECK(seen.size() == space);
  }
  CHECK_THROWS_AS(history_space_size(40, 2), std::length_error);
  CHECK_THROWS_AS(unpack_history(32, 5, 2), std::out_of_range);
}

TEST_CASE("advance shifts the decision in as the newest movement") {
  const TransitionTable t = decode_rule(spec_for(54));
  HistoryWord w = initial_history(3, 2);

  auto [w1, first] = advance(t, w);
  CHECK(first == 0);
  // Oldest -> newest is (UP, UP, DOWN); stored newest-first.
  CHECK(movements(w1) == std::vector<Symbol>{0, 1, 1});

  auto [w2, second] = advance(t, w1);
  auto [w3, third] = advance(t, w2);
  CHECK(second == 0);
  CHECK(third == 1);
  CHECK(movements(w3) == std::vector<Symbol>{1, 0, 0});
}

TEST_CASE("an always-buy rule emits UP from any window") {
  const TransitionTable t = decode_rule(spec_for(kAlwaysBuy));
  for (std::uint64_t packed = 0; packed < 16; ++packed) {
    const auto [next, emitted] = advance(t, unpack_history(packed, 4, 2));
    CHECK(emitted == 1);
    CHECK(next.movements[0] == 1);
  }
}

TEST_CASE("rule 54 at w=6 covers 63 ticks with 32 ups and 31 downs") {
  const Series s = generate_series(spec_for(54), 6, 63);
  CHECK(std::accumulate(s.changes.begin(), s.changes.end(), std::int64_t{0}) ==
        1);
  CHECK(std::count(s.movements.begin(), s.movements.end(), Symbol{1}) == 32);
  CHECK(std::count(s.movements.begin(), s.movements.end(), Symbol{0}) == 31);
  CHECK(s.prices.back() == 1);
  CHECK(s.movements == oracle::rule54_series(6, 63));
}

TEST_CASE("an always-buy series trends one tick per day") {
  const Series s = generate_series(spec_for(kAlwaysBuy), 4, 10);
  std::vector<std::int64_t> expected(10);
  std::iota(expected.begin(), expected.end(), 1);
  CHECK(s.prices == expected);
}

TEST_CASE("series generation is deterministic and matches the recurrence") {
  const Series a = generate_series(spec_for(54), 9, 512);
  const Series b = generate_series(spec_for(54), 9, 512);
  CHECK(a == b);
  CHECK(a.movements == oracle::rule54_series(9, 512));
}

TEST_CASE("prices are the running sum of changes") {
  const Series s = generate_series(spec_for(54), 7, 200);
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < s.changes.size(); ++i) {
    sum += s.changes[i];
    REQUIRE(s.prices[i] == sum);
    REQUIRE((s.changes[i] == 1 || s.changes[i] == -1));
  }
}

TEST_CASE("generate_series validates its inputs") {
  CHECK_THROWS_AS(generate_series(spec_for(54), 5, 0), std::invalid_argument);
  CHECK_THROWS_AS(
      generate_series(spec_for(54), 5, 10, initial_history(4, 2)),
      std::invalid_argument);
}

TEST_CASE("rule 54 cycles after 21 steps at w=5") {
  const CycleResult r = find_cycle(spec_for(54), 5);
  CHECK(r.period == 21);
  CHECK(r.transient == 0);
  CHECK(r.complexity == ComplexityClass::Complex);
}

TEST_CASE("an always-buy rule is a fixed point of the word map") {
  for (int w : {1, 3, 9}) {
    const CycleResult r = find_cycle(spec_for(kAlwaysBuy), w);
    CHECK(r.period == 1);
    CHECK(r.transient == 0);
  }
}

TEST_CASE("an always-sell rule drains to the all-DOWN fixed point") {
  for (int w : {2, 5, 8}) {
    const CycleResult r = find_cycle(spec_for(0), w);
    CHECK(r.period == 1);
    CHECK(r.transient == static_cast<std::uint64_t>(w));
  }
}

TEST_CASE("find_cycle enforces the word-space guard") {
  CHECK_THROWS_AS(find_cycle(spec_for(54), 40, initial_history(40, 2)),
                  std::length_error);
}

TEST_CASE("classification follows the strict half-space rule") {
  CHECK(classify(21, 2, 5) == ComplexityClass::Complex);
  CHECK(classify(63, 2, 8) == ComplexityClass::Simple);
  CHECK(classify(16, 2, 5) == ComplexityClass::Simple);  // exactly half
  CHECK(classify(17, 2, 5) == ComplexityClass::Complex);
  CHECK(classify(32, 2, 5) == ComplexityClass::MaximallyComplex);
  CHECK(classify(14, 3, 3) == ComplexityClass::Complex);   // 14 > 27/2
  CHECK(classify(13, 3, 3) == ComplexityClass::Simple);    // 13 < 27/2
}

TEST_CASE("single-symbol dynamics always classify Simple") {
  CHECK(classify(1, 1, 9) == ComplexityClass::Simple);
  const CycleResult r = find_cycle(spec_for(0, 2, 1), 9);
  CHECK(r.period == 1);
  CHECK(r.complexity == ComplexityClass::Simple);
}

TEST_CASE("reported periods are minimal") {
  for (int w : {5, 8}) {
    const CycleResult r = find_cycle(spec_for(54), w);
    const std::vector<std::uint64_t> cycle =
        cycle_words(spec_for(54), w, initial_history(w, 2));
    REQUIRE(cycle.size() == r.period);
    // All positions on the cycle are distinct words, so no shift smaller
    // than the period can repeat.
    const std::set<std::uint64_t> distinct(cycle.begin(), cycle.end());
    CHECK(distinct.size() == r.period);
  }
}

TEST_CASE("only the all-DOWN word misses the w=6 cycle") {
  const std::vector<std::uint64_t> cycle =
      cycle_words(spec_for(54), 6, initial_history(6, 2));
  CHECK(cycle.size() == 63);
  CHECK(std::find(cycle.begin(), cycle.end(), 0) == cycle.end());
  CHECK(std::set<std::uint64_t>(cycle.begin(), cycle.end()).size() == 63);
}

TEST_CASE("the transition graph is a total deterministic map") {
  const auto edges = transition_graph(spec_for(54), 5);
  REQUIRE(edges.size() == 32);
  for (std::uint64_t word = 0; word < 32; ++word) {
    CHECK(edges[word].from == word);  // one outgoing edge per word, in order
    CHECK(edges[word].to < 32);
  }
}

TEST_CASE("every word flows to the all-UP fixed point under always-buy") {
  const auto edges = transition_graph(spec_for(kAlwaysBuy), 3);
  REQUIRE(edges.size() == 8);
  for (std::uint64_t word = 0; word < 8; ++word) {
    std::uint64_t at = word;
    for (int step = 0; step < 8; ++step) {
      at = edges[at].to;
    }
    CHECK(at == 7);
  }
}

TEST_CASE("maximally complex rules cycle through every word from any start") {
  // Tiny windows admit maximal rules in the 2-state space; find some.
  bool found_any = false;
  for (int w : {2, 3}) {
    const std::uint64_t space = history_space_size(w, 2);
    for (const RuleCatalogRow& row : scan_rules(2, 2, w)) {
      if (row.complexity != ComplexityClass::MaximallyComplex) {
        continue;
      }
      found_any = true;
      std::int64_t up_count = 0;
      const auto cycle =
          cycle_words(spec_for(row.rule), w, initial_history(w, 2));
      REQUIRE(cycle.size() == space);
      for (std::uint64_t word : cycle) {
        up_count += static_cast<std::int64_t>(word & 1);  // newest movement
      }
      // Every word appears once, so ups and downs balance exactly.
      CHECK(up_count * 2 == static_cast<std::int64_t>(space));

      for (std::uint64_t start = 0; start < space; ++start) {
        const CycleResult r =
            find_cycle(spec_for(row.rule), w, unpack_history(start, w, 2));
        REQUIRE(r.period == space);
        REQUIRE(r.transient == 0);
      }
    }
  }
  CHECK(found_any);
}

TEST_CASE("a maximal cycle's price path returns exactly to its start") {
  // Rule 18 never leaves state 1 and flips the oldest movement; it is
  // maximally complex at w=2.
  const CycleResult r = find_cycle(spec_for(18), 2);
  REQUIRE(r.period == 4);
  REQUIRE(r.complexity == ComplexityClass::MaximallyComplex);
  const Series s = generate_series(spec_for(18), 2, 4);
  CHECK(s.prices.back() == 0);
}

TEST_CASE("rules 54 and 201 generate identical movements") {
  for (int w : {2, 3, 6}) {
    const Series a = generate_series(spec_for(54), w, 200);
    const Series b = generate_series(spec_for(201), w, 200);
    CHECK(a.movements == b.movements);
  }
}

TEST_SUITE_END();
