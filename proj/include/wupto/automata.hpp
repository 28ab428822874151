#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "wupto/linalg.hpp"

namespace wupto {

// Word over the automaton's alphabet, as symbol indices.
using Word = std::vector<int>;

// Weighted automaton: output vector o and one transition matrix per symbol,
// entry (src, dst) holding the weight of src -> dst. A linear combination of
// states is a Vec; its language maps each word to a scalar.
struct WeightedAutomaton {
  SemiringId semiring;
  std::size_t n = 0;
  std::vector<std::string> alphabet;
  Vec output;
  std::vector<Mat> trans;  // parallel to alphabet

  static WeightedAutomaton make(SemiringId s, std::size_t n, std::vector<std::string> alphabet,
                                Vec output, std::vector<Mat> trans);

  int symbol_index(std::string_view symbol) const;  // -1 when unknown
};

// One transition step: the successor combination of v under symbol a.
Vec step(const WeightedAutomaton& a, int symbol, const Vec& v);

// Weight the automaton assigns to the empty word from v.
Value output_weight(const WeightedAutomaton& a, const Vec& v);

// Weight of word w from v: apply the transition matrices left to right,
// then take the output weight.
Value language_weight(const WeightedAutomaton& a, const Vec& v, const Word& w);

// All word weights up to length max_len. Throws UsageError if the table
// would exceed cap entries.
std::map<Word, Value> brute_language_table(const WeightedAutomaton& a, const Vec& v,
                                           std::size_t max_len, std::size_t cap = 1'000'000);

// Clamp entries above the threshold to infinity (tropical naturals).
Value abstraction(const Value& v, unsigned long long threshold);
Vec abstraction(const Vec& v, unsigned long long threshold);

// True when v is finite and at most the threshold.
bool within_threshold(const Value& v, unsigned long long threshold);

// Adds a fresh state t with output T and a weight-0 self loop per symbol.
// e_t then assigns every word exactly weight T, which turns the threshold
// problem into an inclusion problem from e_t. Returns the extended automaton
// and the index of t.
std::pair<WeightedAutomaton, std::size_t> extend_with_threshold_state(const WeightedAutomaton& a,
                                                                      unsigned long long threshold);

// v with one extra zero entry (to match an extended automaton).
Vec lift_with_zero(const Vec& v);

std::string format_word(const WeightedAutomaton& a, const Word& w);

}  // namespace wupto
