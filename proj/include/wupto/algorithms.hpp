#pragma once

#include <optional>
#include <set>
#include <string>

#include "wupto/automata.hpp"
#include "wupto/congruence.hpp"

namespace wupto {

inline constexpr long long kDefaultPairFuel = 1'000'000;

enum class Answer { True, False, FuelExhausted };

struct Stats {
  std::size_t relation_size = 0;   // |R| (or |P| for the plain set algorithm)
  std::size_t pairs_processed = 0;
  long long rewrite_steps = 0;
  std::optional<std::size_t> sim_size;  // non-reflexive similarity pairs, when used
};

struct Verdict {
  Answer answer = Answer::True;
  std::optional<Word> witness;  // word refuting the property, when answer is False
  Stats stats;

  explicit operator bool() const { return answer == Answer::True; }
};

// Stable one-line rendering, e.g.
//   false witness="a b" relation=3 pairs=7 rewrite-steps=12 sim=2
std::string verdict_line(const Verdict& v, const WeightedAutomaton* a = nullptr);

// Similarity relation on states: (i, j) present when e_i is simulated by e_j.
struct SimilarityRelation {
  std::size_t n = 0;
  std::set<std::pair<std::size_t, std::size_t>> pairs;

  static SimilarityRelation identity(std::size_t n);
  bool contains(std::size_t i, std::size_t j) const { return pairs.count({i, j}) != 0; }
  std::size_t size_nonreflexive() const;
};

// Language equivalence of v1 and v2, up to congruence: worklist over vector
// pairs, each skipped when already in the congruence closure of the pairs
// processed before it. Exact when it terminates.
Verdict hkc(const WeightedAutomaton& a, const Vec& v1, const Vec& v2,
            long long fuel = kDefaultPairFuel, long long rewrite_fuel = kDefaultRewriteFuel);

// Language inclusion of v1 in v2, up to precongruence (l-monoids).
Verdict hkp(const WeightedAutomaton& a, const Vec& v1, const Vec& v2,
            long long fuel = kDefaultPairFuel, long long rewrite_fuel = kDefaultRewriteFuel);

// hkp seeded with a precomputed similarity relation (coarser closure,
// same answer).
Verdict hkp_prime(const WeightedAutomaton& a, const Vec& v1, const Vec& v2,
                  const SimilarityRelation& sim_rel, long long fuel = kDefaultPairFuel,
                  long long rewrite_fuel = kDefaultRewriteFuel);

// Does every word from v weigh at most T? (tropical naturals). Reduces to
// inclusion from a fresh threshold state and clamps right-hand successors
// above T to infinity, which keeps the state space finite.
Verdict hkp_a(const WeightedAutomaton& a, const Vec& v, unsigned long long threshold,
              long long fuel = kDefaultPairFuel, long long rewrite_fuel = kDefaultRewriteFuel);

// hkp_a seeded with the similarity relation of the extended automaton.
Verdict hkp_a_prime(const WeightedAutomaton& a, const Vec& v, unsigned long long threshold,
                    long long fuel = kDefaultPairFuel,
                    long long rewrite_fuel = kDefaultRewriteFuel);

// Greatest simulation relation on unit vectors (l-monoids): starts from all
// state pairs and prunes until every remaining pair is dominated.
SimilarityRelation sim(const WeightedAutomaton& a);

// Threshold check by plain breadth-first search over abstracted successor
// vectors with set membership; baseline without up-to reasoning.
Verdict abk(const WeightedAutomaton& a, const Vec& v0, unsigned long long threshold);

}  // namespace wupto
