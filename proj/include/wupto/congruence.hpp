#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "wupto/linalg.hpp"

namespace wupto {

inline constexpr long long kDefaultRewriteFuel = 1'000'000;

// One rewrite rule lhs |-> rhs with vec_leq(lhs, rhs). Applying it to v
// joins v with rhs scaled by the residuum of lhs into v, which can only
// move v up the lattice.
struct RewriteRule {
  Vec lhs;
  Vec rhs;
};

// Symmetric systems decide membership in the congruence closure of a
// relation; directed systems decide the precongruence (ordered) closure.
enum class RewriteMode { Symmetric, Directed };

// Rule-selection strategies. All but Greedy attempt every rule once per
// pass, which makes them fair; Greedy picks the applicable rule with the
// lattice-greatest multiplicand (ties broken by rule index).
enum class Strategy { RoundRobin, ReverseRoundRobin, RandomFair, Greedy };

// Single rewrite attempt: v -> v join rhs * (lhs -> v), or nothing if that
// join does not strictly increase v.
std::optional<Vec> rewrite_step(const Vec& v, const RewriteRule& rule);

class RewriteSystem {
 public:
  RewriteSystem(SemiringId s, std::size_t dim, RewriteMode mode,
                long long fuel = kDefaultRewriteFuel);

  // Adds the rule(s) encoding relation pair (v, w): w |-> v join w, and for
  // symmetric systems also v |-> v join w. Degenerate rules (lhs == rhs)
  // are dropped. Invalidates the normal-form cache.
  void add_pair(const Vec& v, const Vec& w);

  SemiringId semiring() const { return sr_; }
  std::size_t dim() const { return dim_; }
  RewriteMode mode() const { return mode_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  long long fuel() const { return fuel_; }
  void set_fuel(long long fuel) { fuel_ = fuel; }

  // Applies rules until none is applicable. nullopt means the per-call fuel
  // was exhausted. Results for the default strategy are memoized per input.
  std::optional<Vec> normal_form(const Vec& v);
  std::optional<Vec> normal_form(const Vec& v, Strategy strategy, std::uint64_t seed = 0);

  // (v, w) in the congruence closure: equal normal forms. Symmetric mode.
  std::optional<bool> in_congruence(const Vec& v, const Vec& w);

  // (v, w) in the precongruence closure: v leq the normal form of w.
  // Directed mode.
  std::optional<bool> in_precongruence(const Vec& v, const Vec& w);

  // Rewrite steps applied across all normal-form computations so far.
  long long total_steps() const { return total_steps_; }

 private:
  SemiringId sr_;
  std::size_t dim_;
  RewriteMode mode_;
  long long fuel_;
  std::vector<RewriteRule> rules_;
  std::map<Vec, Vec> memo_;
  long long total_steps_ = 0;
};

RewriteSystem rules_from_relation(const std::vector<std::pair<Vec, Vec>>& relation,
                                  RewriteMode mode, SemiringId s, std::size_t dim,
                                  long long fuel = kDefaultRewriteFuel);

// Row-echelon basis over the rational field, grown incrementally.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

  // Reduces v against the basis; if a nonzero residual remains it joins the
  // basis. Returns true when the rank grew.
  bool insert(Vec v);
  bool contains(Vec v) const;
  std::size_t rank() const { return rows_.size(); }

 private:
  Vec reduce(Vec v) const;

  std::size_t dim_;
  std::vector<Vec> rows_;          // normalized: leading coefficient 1
  std::vector<std::size_t> lead_;  // pivot column per row
};

struct Generators {
  std::vector<Vec> vectors;
};

// u in span(gens) over the rational field.
bool span_member(const Vec& u, const Generators& gens);

// (v, w) in the congruence closure of a field relation: v - w lies in the
// span of the pairwise differences.
bool in_congruence_ring(const Vec& v, const Vec& w,
                        const std::vector<std::pair<Vec, Vec>>& relation);

}  // namespace wupto
