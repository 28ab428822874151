#include <doctest.h>

#include "testutil.hpp"

using namespace tu;

namespace {

// two tropical states: 0 -a(1)-> 0, 0 -a(2)-> 1, 1 -a(0)-> 1; outputs (0, 3)
WeightedAutomaton tiny_tropical() {
  Mat m(SemiringId::TropicalNat, 2);
  m.set(0, 0, tn(1));
  m.set(0, 1, tn(2));
  m.set(1, 1, tn(0));
  return WeightedAutomaton::make(SemiringId::TropicalNat, 2, {"a"},
                                 vec_of({tn(0), tn(3)}), {m});
}

Word word_of(std::initializer_list<int> syms) { return Word(syms); }

}  // namespace

TEST_CASE("step follows source-to-destination rows") {
  WeightedAutomaton a = tiny_tropical();
  CHECK(step(a, 0, Vec::unit(a.semiring, 2, 0)) == vec_of({tn(1), tn(2)}));
  CHECK(step(a, 0, Vec::unit(a.semiring, 2, 1)) == vec_of({tninf(), tn(0)}));
  CHECK_THROWS_AS(step(a, 1, Vec::unit(a.semiring, 2, 0)), UsageError);
}

TEST_CASE("word weights on the tiny automaton") {
  WeightedAutomaton a = tiny_tropical();
  Vec start = Vec::unit(a.semiring, 2, 0);
  CHECK(language_weight(a, start, {}) == tn(0));
  CHECK(language_weight(a, start, word_of({0})) == tn(1));
  CHECK(language_weight(a, start, word_of({0, 0})) == tn(2));
  CHECK(language_weight(a, start, word_of({0, 0, 0})) == tn(3));
}

TEST_CASE("brute language table agrees with single-word evaluation") {
  for (SemiringId s : {SemiringId::Boolean, SemiringId::TropicalNat, SemiringId::MaxTimes,
                       SemiringId::RationalField}) {
    CAPTURE(semiring_name(s));
    SplitMix64 rng(17);
    for (int i = 0; i < 25; ++i) {
      WeightedAutomaton a = random_automaton(s, 1 + rng.below(3), 1 + rng.below(2), rng);
      Vec start = random_vec(s, a.n, rng);
      auto table = brute_language_table(a, start, 3);
      std::size_t expected = 0;
      for (std::size_t len = 0, c = 1; len <= 3; ++len, c *= a.alphabet.size()) expected += c;
      CHECK(table.size() == expected);
      for (const auto& [word, weight] : table) CHECK(weight == language_weight(a, start, word));
    }
  }
}

TEST_CASE("brute language table refuses to blow up") {
  WeightedAutomaton a = tiny_tropical();
  CHECK_THROWS_AS(brute_language_table(a, Vec::unit(a.semiring, 2, 0), 10, 5), UsageError);
}

TEST_CASE("step and output are linear") {
  for (SemiringId s : {SemiringId::Boolean, SemiringId::TropicalNat, SemiringId::TropicalReal,
                       SemiringId::MaxTimes, SemiringId::RationalField}) {
    CAPTURE(semiring_name(s));
    SplitMix64 rng(29);
    for (int i = 0; i < 80; ++i) {
      WeightedAutomaton a = random_automaton(s, 1 + rng.below(4), 1 + rng.below(3), rng);
      Vec v = random_vec(s, a.n, rng), w = random_vec(s, a.n, rng);
      Value c = random_value(s, rng);
      int sym = static_cast<int>(rng.below(a.alphabet.size()));
      CHECK(step(a, sym, vec_combine(v, w)) == vec_combine(step(a, sym, v), step(a, sym, w)));
      CHECK(step(a, sym, vec_scale(v, c)) == vec_scale(step(a, sym, v), c));
      CHECK(output_weight(a, vec_combine(v, w)) ==
            combine(output_weight(a, v), output_weight(a, w)));
      CHECK(output_weight(a, vec_scale(v, c)) == times(output_weight(a, v), c));
    }
  }
}

TEST_CASE("abstraction clamps strictly-above-threshold weights") {
  CHECK(abstraction(tn(5), 5) == tn(5));
  CHECK(abstraction(tn(6), 5) == tninf());
  CHECK(abstraction(tn(0), 0) == tn(0));
  CHECK(abstraction(tninf(), 5) == tninf());
  CHECK_THROWS_AS(abstraction(tr(1), 5), UsageError);

  CHECK(abstraction(vec_of({tn(2), tn(9), tninf()}), 8) == vec_of({tn(2), tninf(), tninf()}));
}

TEST_CASE("abstraction is an interior operator") {
  // idempotent, below the identity (clamping moves weights toward the
  // lattice bottom), and monotone
  SplitMix64 rng(41);
  for (int i = 0; i < 300; ++i) {
    unsigned long long t = rng.below(12);
    Vec v = random_vec(SemiringId::TropicalNat, 1 + rng.below(4), rng);
    Vec av = abstraction(v, t);
    CHECK(abstraction(av, t) == av);
    CHECK(vec_leq(av, v));
    Vec w = vec_combine(v, random_vec(SemiringId::TropicalNat, v.dim(), rng));
    CHECK(vec_leq(abstraction(v, t), abstraction(w, t)));
  }
}

TEST_CASE("abstraction commutes with steps up to abstraction") {
  SplitMix64 rng(53);
  for (int i = 0; i < 200; ++i) {
    unsigned long long t = rng.below(15);
    WeightedAutomaton a =
        random_automaton(SemiringId::TropicalNat, 1 + rng.below(4), 1 + rng.below(3), rng);
    Vec v = random_vec(SemiringId::TropicalNat, a.n, rng);
    for (std::size_t sym = 0; sym < a.alphabet.size(); ++sym) {
      Vec lhs = abstraction(step(a, static_cast<int>(sym), abstraction(v, t)), t);
      Vec rhs = abstraction(step(a, static_cast<int>(sym), v), t);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("within_threshold wants finite small weights") {
  CHECK(within_threshold(tn(5), 5));
  CHECK(within_threshold(tn(0), 0));
  CHECK(!within_threshold(tn(6), 5));
  CHECK(!within_threshold(tninf(), 1000));
}

TEST_CASE("threshold state accepts everything at exactly the threshold") {
  SplitMix64 rng(67);
  for (int i = 0; i < 40; ++i) {
    unsigned long long t = rng.below(20);
    WeightedAutomaton a =
        random_automaton(SemiringId::TropicalNat, 1 + rng.below(4), 1 + rng.below(3), rng);
    auto [ext, tstate] = extend_with_threshold_state(a, t);
    REQUIRE(ext.n == a.n + 1);
    REQUIRE(tstate == a.n);
    CHECK(ext.output[tstate] == tn(static_cast<long long>(t)));
    for (std::size_t x = 0; x < a.n; ++x) CHECK(ext.output[x] == a.output[x]);

    Vec et = Vec::unit(ext.semiring, ext.n, tstate);
    for (std::size_t sym = 0; sym < ext.alphabet.size(); ++sym)
      CHECK(step(ext, static_cast<int>(sym), et) == et);

    Word w;
    for (int k = 0; k < 6; ++k) {
      CHECK(language_weight(ext, et, w) == tn(static_cast<long long>(t)));
      w.push_back(static_cast<int>(rng.below(ext.alphabet.size())));
    }
  }
}

TEST_CASE("lifting into the extended automaton keeps the language") {
  SplitMix64 rng(71);
  for (int i = 0; i < 40; ++i) {
    WeightedAutomaton a =
        random_automaton(SemiringId::TropicalNat, 1 + rng.below(4), 1 + rng.below(3), rng);
    auto [ext, tstate] = extend_with_threshold_state(a, 7);
    (void)tstate;
    Vec v = random_vec(SemiringId::TropicalNat, a.n, rng);
    Vec lifted = lift_with_zero(v);
    REQUIRE(lifted.dim() == a.n + 1);
    CHECK(lifted[a.n] == tninf());
    Word w;
    for (int k = 0; k < 5; ++k) {
      CHECK(language_weight(ext, lifted, w) == language_weight(a, v, w));
      w.push_back(static_cast<int>(rng.below(a.alphabet.size())));
    }
  }
  SplitMix64 other(1);
  WeightedAutomaton b = random_automaton(SemiringId::Boolean, 2, 1, other);
  CHECK_THROWS_AS(extend_with_threshold_state(b, 3), UsageError);
}

TEST_CASE("automaton construction rejects malformed pieces") {
  Mat m(SemiringId::TropicalNat, 2);
  Vec o(SemiringId::TropicalNat, 2);
  CHECK_THROWS_AS(WeightedAutomaton::make(SemiringId::TropicalNat, 0, {"a"},
                                          Vec(SemiringId::TropicalNat, 1), {}),
                  UsageError);
  CHECK_THROWS_AS(WeightedAutomaton::make(SemiringId::TropicalNat, 2, {}, o, {}), UsageError);
  CHECK_THROWS_AS(WeightedAutomaton::make(SemiringId::TropicalNat, 2, {"a", "a"}, o, {m, m}),
                  UsageError);
  CHECK_THROWS_AS(WeightedAutomaton::make(SemiringId::TropicalNat, 2, {"a"}, o, {m, m}),
                  UsageError);
  CHECK_THROWS_AS(WeightedAutomaton::make(SemiringId::TropicalNat, 2, {"a"},
                                          Vec(SemiringId::TropicalNat, 3), {m}),
                  UsageError);
  CHECK_THROWS_AS(WeightedAutomaton::make(SemiringId::Boolean, 2, {"a"}, o, {m}), UsageError);

  WeightedAutomaton a = tiny_tropical();
  CHECK(a.symbol_index("a") == 0);
  CHECK(a.symbol_index("b") == -1);
  CHECK(format_word(a, {}) == "");
  CHECK(format_word(a, {0, 0}) == "a a");
}
