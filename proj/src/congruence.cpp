#include "wupto/congruence.hpp"

#include <algorithm>
#include <numeric>

#include "wupto/rng.hpp"

namespace wupto {

std::optional<Vec> rewrite_step(const Vec& v, const RewriteRule& rule) {
  Value m = vec_residuum(rule.lhs, v);
  Vec candidate = vec_combine(v, vec_scale(rule.rhs, m));
  if (candidate == v) return std::nullopt;
  return candidate;
}

RewriteSystem::RewriteSystem(SemiringId s, std::size_t dim, RewriteMode mode, long long fuel)
    : sr_(s), dim_(dim), mode_(mode), fuel_(fuel) {
  if (!is_lmonoid(s)) throw UsageError("rewriting requires an l-monoid semiring");
}

void RewriteSystem::add_pair(const Vec& v, const Vec& w) {
  if (v.semiring() != sr_ || w.semiring() != sr_ || v.dim() != dim_ || w.dim() != dim_)
    throw UsageError("relation pair does not match rewrite system shape");
  Vec join = vec_combine(v, w);
  bool added = false;
  if (join != w) {
    rules_.push_back(RewriteRule{w, join});
    added = true;
  }
  if (mode_ == RewriteMode::Symmetric && join != v) {
    rules_.push_back(RewriteRule{v, join});
    added = true;
  }
  if (added) memo_.clear();
}

std::optional<Vec> RewriteSystem::normal_form(const Vec& v) {
  return normal_form(v, Strategy::RoundRobin, 0);
}

std::optional<Vec> RewriteSystem::normal_form(const Vec& v, Strategy strategy,
                                              std::uint64_t seed) {
  if (v.semiring() != sr_ || v.dim() != dim_)
    throw UsageError("vector does not match rewrite system shape");
  bool cacheable = strategy == Strategy::RoundRobin;
  if (cacheable) {
    auto it = memo_.find(v);
    if (it != memo_.end()) return it->second;
  }

  Vec cur = v;
  long long steps = 0;
  std::vector<std::size_t> order(rules_.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (strategy == Strategy::ReverseRoundRobin) std::reverse(order.begin(), order.end());
  SplitMix64 rng(seed);

  if (strategy == Strategy::Greedy) {
    for (;;) {
      // Applicable rule with the lattice-greatest multiplicand; for the
      // tropicals that is the numerically smallest increment, which makes
      // the sweep mimic a shortest-path relaxation.
      std::optional<std::size_t> best;
      std::optional<Value> best_m;
      for (std::size_t i = 0; i < rules_.size(); ++i) {
        if (!rewrite_step(cur, rules_[i])) continue;
        Value m = vec_residuum(rules_[i].lhs, cur);
        if (!best || (leq(*best_m, m) && *best_m != m)) {
          best = i;
          best_m = m;
        }
      }
      if (!best) break;
      cur = *rewrite_step(cur, rules_[*best]);
      ++total_steps_;
      if (++steps > fuel_) return std::nullopt;
    }
    return cur;
  }

  for (;;) {
    if (strategy == Strategy::RandomFair)
      for (std::size_t i = order.size(); i > 1; --i)
        std::swap(order[i - 1], order[rng.below(i)]);
    bool changed = false;
    for (std::size_t i : order) {
      if (auto next = rewrite_step(cur, rules_[i])) {
        cur = std::move(*next);
        changed = true;
        ++total_steps_;
        if (++steps > fuel_) return std::nullopt;
      }
    }
    if (!changed) break;
  }
  if (cacheable) memo_.emplace(v, cur);
  return cur;
}

std::optional<bool> RewriteSystem::in_congruence(const Vec& v, const Vec& w) {
  if (mode_ != RewriteMode::Symmetric)
    throw UsageError("in_congruence requires a symmetric rewrite system");
  auto nv = normal_form(v);
  if (!nv) return std::nullopt;
  auto nw = normal_form(w);
  if (!nw) return std::nullopt;
  return *nv == *nw;
}

std::optional<bool> RewriteSystem::in_precongruence(const Vec& v, const Vec& w) {
  if (mode_ != RewriteMode::Directed)
    throw UsageError("in_precongruence requires a directed rewrite system");
  auto nw = normal_form(w);
  if (!nw) return std::nullopt;
  return vec_leq(v, *nw);
}

RewriteSystem rules_from_relation(const std::vector<std::pair<Vec, Vec>>& relation,
                                  RewriteMode mode, SemiringId s, std::size_t dim,
                                  long long fuel) {
  RewriteSystem rs(s, dim, mode, fuel);
  for (const auto& [v, w] : relation) rs.add_pair(v, w);
  return rs;
}

Vec EchelonBasis::reduce(Vec v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Value& c = v[lead_[r]];
    if (c.is_zero()) continue;
    // v -= c * rows_[r]; the row's pivot is 1, so the pivot column zeroes out.
    v = vec_combine(v, vec_scale(rows_[r], negate(c)));
  }
  return v;
}

bool EchelonBasis::insert(Vec v) {
  if (v.semiring() != SemiringId::RationalField)
    throw UsageError("echelon basis requires the rational field");
  if (v.dim() != dim_) throw UsageError("vector dimension mismatch");
  v = reduce(std::move(v));
  std::size_t pivot = dim_;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (!v[i].is_zero()) {
      pivot = i;
      break;
    }
  }
  if (pivot == dim_) return false;
  Value inv = Value::from_rat(SemiringId::RationalField, Rat(1) / v[pivot].rat());
  rows_.push_back(vec_scale(v, inv));
  lead_.push_back(pivot);
  return true;
}

bool EchelonBasis::contains(Vec v) const { return vec_is_zero(reduce(std::move(v))); }

bool span_member(const Vec& u, const Generators& gens) {
  EchelonBasis basis(u.dim());
  for (const Vec& g : gens.vectors) basis.insert(g);
  return basis.contains(u);
}

bool in_congruence_ring(const Vec& v, const Vec& w,
                        const std::vector<std::pair<Vec, Vec>>& relation) {
  if (v.semiring() != SemiringId::RationalField)
    throw UsageError("in_congruence_ring requires the rational field");
  Generators gens;
  for (const auto& [a, b] : relation) gens.vectors.push_back(vec_sub(a, b));
  return span_member(vec_sub(v, w), gens);
}

}  // namespace wupto
