#include "wupto/automata.hpp"

#include <deque>
#include <utility>

namespace wupto {

WeightedAutomaton WeightedAutomaton::make(SemiringId s, std::size_t n,
                                          std::vector<std::string> alphabet, Vec output,
                                          std::vector<Mat> trans) {
  if (n == 0) throw UsageError("automaton needs at least one state");
  if (alphabet.empty()) throw UsageError("automaton needs at least one symbol");
  if (output.semiring() != s || output.dim() != n)
    throw UsageError("output vector does not match automaton shape");
  if (trans.size() != alphabet.size())
    throw UsageError("one transition matrix per symbol required");
  for (const Mat& m : trans)
    if (m.semiring() != s || m.dim() != n)
      throw UsageError("transition matrix does not match automaton shape");
  for (std::size_t i = 0; i < alphabet.size(); ++i)
    for (std::size_t j = i + 1; j < alphabet.size(); ++j)
      if (alphabet[i] == alphabet[j]) throw UsageError("duplicate alphabet symbol");
  return WeightedAutomaton{s, n, std::move(alphabet), std::move(output), std::move(trans)};
}

int WeightedAutomaton::symbol_index(std::string_view symbol) const {
  for (std::size_t i = 0; i < alphabet.size(); ++i)
    if (alphabet[i] == symbol) return static_cast<int>(i);
  return -1;
}

Vec step(const WeightedAutomaton& a, int symbol, const Vec& v) {
  if (symbol < 0 || static_cast<std::size_t>(symbol) >= a.alphabet.size())
    throw UsageError("symbol index out of range");
  return mat_apply(a.trans[static_cast<std::size_t>(symbol)], v);
}

Value output_weight(const WeightedAutomaton& a, const Vec& v) {
  if (v.semiring() != a.semiring || v.dim() != a.n)
    throw UsageError("vector does not match automaton shape");
  Value acc = Value::zero(a.semiring);
  for (std::size_t i = 0; i < a.n; ++i) acc = combine(acc, times(v[i], a.output[i]));
  return acc;
}

Value language_weight(const WeightedAutomaton& a, const Vec& v, const Word& w) {
  Vec cur = v;
  for (int sym : w) cur = step(a, sym, cur);
  return output_weight(a, cur);
}

std::map<Word, Value> brute_language_table(const WeightedAutomaton& a, const Vec& v,
                                           std::size_t max_len, std::size_t cap) {
  std::map<Word, Value> table;
  std::deque<std::pair<Word, Vec>> frontier;
  frontier.emplace_back(Word{}, v);
  while (!frontier.empty()) {
    auto [word, vec] = std::move(frontier.front());
    frontier.pop_front();
    if (table.size() >= cap) throw UsageError("language table cap exceeded");
    table.emplace(word, output_weight(a, vec));
    if (word.size() == max_len) continue;
    for (std::size_t s = 0; s < a.alphabet.size(); ++s) {
      Word next = word;
      next.push_back(static_cast<int>(s));
      frontier.emplace_back(std::move(next), step(a, static_cast<int>(s), vec));
    }
  }
  return table;
}

Value abstraction(const Value& v, unsigned long long threshold) {
  if (v.semiring() != SemiringId::TropicalNat)
    throw UsageError("abstraction is defined over tropical naturals");
  if (v.is_infinite() || v.rat() <= Rat(threshold)) return v;
  return Value::infinity(v.semiring());
}

Vec abstraction(const Vec& v, unsigned long long threshold) {
  Vec r(v.semiring(), v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) r.set(i, abstraction(v[i], threshold));
  return r;
}

bool within_threshold(const Value& v, unsigned long long threshold) {
  if (v.semiring() != SemiringId::TropicalNat)
    throw UsageError("threshold comparison is defined over tropical naturals");
  return !v.is_infinite() && v.rat() <= Rat(threshold);
}

std::pair<WeightedAutomaton, std::size_t> extend_with_threshold_state(
    const WeightedAutomaton& a, unsigned long long threshold) {
  if (a.semiring != SemiringId::TropicalNat)
    throw UsageError("threshold extension is defined over tropical naturals");
  std::size_t t = a.n;
  Vec output(a.semiring, a.n + 1);
  for (std::size_t i = 0; i < a.n; ++i) output.set(i, a.output[i]);
  output.set(t, Value::from_rat(a.semiring, Rat(threshold)));
  std::vector<Mat> trans;
  trans.reserve(a.trans.size());
  for (const Mat& m : a.trans) {
    Mat ext(a.semiring, a.n + 1);
    for (std::size_t x = 0; x < a.n; ++x)
      for (std::size_t y = 0; y < a.n; ++y) ext.set(x, y, m.at(x, y));
    ext.set(t, t, Value::one(a.semiring));
    trans.push_back(std::move(ext));
  }
  return {WeightedAutomaton::make(a.semiring, a.n + 1, a.alphabet, std::move(output),
                                  std::move(trans)),
          t};
}

Vec lift_with_zero(const Vec& v) {
  Vec r(v.semiring(), v.dim() + 1);
  for (std::size_t i = 0; i < v.dim(); ++i) r.set(i, v[i]);
  return r;
}

std::string format_word(const WeightedAutomaton& a, const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += " ";
    out += a.alphabet.at(static_cast<std::size_t>(w[i]));
  }
  return out;
}

}  // namespace wupto
