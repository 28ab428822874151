#include "wupto/algorithms.hpp"

#include <deque>
#include <utility>

namespace wupto {

namespace {

struct PendingPair {
  Vec left;
  Vec right;
  Word word;  // word generating this pair from the initial one
};

void require_shape(const WeightedAutomaton& a, const Vec& v) {
  if (v.semiring() != a.semiring || v.dim() != a.n)
    throw UsageError("vector does not match automaton shape");
}

// Shared worklist core of the up-to algorithms. Equivalence mode uses a
// symmetric closure and equality of outputs; inclusion mode a directed
// closure and the lattice order. An abstraction threshold, when present,
// clamps right-hand successors; seed pairs pre-load the rewrite system
// without counting into the relation.
struct UpToConfig {
  bool inclusion = false;
  std::optional<unsigned long long> abstract_threshold;
  const std::vector<std::pair<Vec, Vec>>* seed_pairs = nullptr;
};

Verdict up_to_worklist(const WeightedAutomaton& a, const Vec& v1, const Vec& v2,
                       long long fuel, long long rewrite_fuel, const UpToConfig& cfg) {
  require_shape(a, v1);
  require_shape(a, v2);
  Verdict out;
  Stats& st = out.stats;

  const bool ring = !is_lmonoid(a.semiring);
  if (ring && (cfg.inclusion || cfg.abstract_threshold || cfg.seed_pairs))
    throw UsageError("inclusion and abstraction require an l-monoid semiring");

  RewriteMode mode = cfg.inclusion ? RewriteMode::Directed : RewriteMode::Symmetric;
  std::optional<RewriteSystem> rs;
  if (!ring) {
    rs.emplace(a.semiring, a.n, mode, rewrite_fuel);
    if (cfg.seed_pairs)
      for (const auto& [v, w] : *cfg.seed_pairs) rs->add_pair(v, w);
  }
  EchelonBasis basis(a.n);  // ring path: span of pairwise differences

  std::deque<PendingPair> todo;
  todo.push_back(PendingPair{v1, v2, {}});
  std::vector<std::pair<Vec, Vec>> relation;

  while (!todo.empty()) {
    PendingPair cur = std::move(todo.front());
    todo.pop_front();
    if (static_cast<long long>(++st.pairs_processed) > fuel) {
      out.answer = Answer::FuelExhausted;
      st.relation_size = relation.size();
      if (rs) st.rewrite_steps = rs->total_steps();
      return out;
    }

    if (ring) {
      if (basis.contains(vec_sub(cur.left, cur.right))) continue;
    } else if (cfg.inclusion) {
      auto in = rs->in_precongruence(cur.left, cur.right);
      if (!in) {
        out.answer = Answer::FuelExhausted;
        st.relation_size = relation.size();
        st.rewrite_steps = rs->total_steps();
        return out;
      }
      if (*in) continue;
    } else {
      auto in = rs->in_congruence(cur.left, cur.right);
      if (!in) {
        out.answer = Answer::FuelExhausted;
        st.relation_size = relation.size();
        st.rewrite_steps = rs->total_steps();
        return out;
      }
      if (*in) continue;
    }

    Value ol = output_weight(a, cur.left);
    Value or_ = output_weight(a, cur.right);
    bool outputs_ok = cfg.inclusion ? leq(ol, or_) : ol == or_;
    if (!outputs_ok) {
      out.answer = Answer::False;
      out.witness = cur.word;
      st.relation_size = relation.size();
      if (rs) st.rewrite_steps = rs->total_steps();
      return out;
    }

    for (std::size_t s = 0; s < a.alphabet.size(); ++s) {
      Vec nl = step(a, static_cast<int>(s), cur.left);
      Vec nr = step(a, static_cast<int>(s), cur.right);
      if (cfg.abstract_threshold) nr = abstraction(nr, *cfg.abstract_threshold);
      Word w = cur.word;
      w.push_back(static_cast<int>(s));
      todo.push_back(PendingPair{std::move(nl), std::move(nr), std::move(w)});
    }

    if (ring)
      basis.insert(vec_sub(cur.left, cur.right));
    else
      rs->add_pair(cur.left, cur.right);
    relation.emplace_back(std::move(cur.left), std::move(cur.right));
  }

  out.answer = Answer::True;
  st.relation_size = relation.size();
  if (rs) st.rewrite_steps = rs->total_steps();
  return out;
}

std::vector<std::pair<Vec, Vec>> similarity_seed(const WeightedAutomaton& a,
                                                 const SimilarityRelation& sim_rel) {
  if (sim_rel.n != a.n) throw UsageError("similarity relation does not match automaton");
  std::vector<std::pair<Vec, Vec>> seed;
  for (const auto& [i, j] : sim_rel.pairs) {
    if (i == j) continue;  // reflexive pairs yield degenerate rules
    seed.emplace_back(Vec::unit(a.semiring, a.n, i), Vec::unit(a.semiring, a.n, j));
  }
  return seed;
}

}  // namespace

SimilarityRelation SimilarityRelation::identity(std::size_t n) {
  SimilarityRelation r;
  r.n = n;
  for (std::size_t i = 0; i < n; ++i) r.pairs.emplace(i, i);
  return r;
}

std::size_t SimilarityRelation::size_nonreflexive() const {
  std::size_t k = 0;
  for (const auto& [i, j] : pairs)
    if (i != j) ++k;
  return k;
}

Verdict hkc(const WeightedAutomaton& a, const Vec& v1, const Vec& v2, long long fuel,
            long long rewrite_fuel) {
  return up_to_worklist(a, v1, v2, fuel, rewrite_fuel, UpToConfig{});
}

Verdict hkp(const WeightedAutomaton& a, const Vec& v1, const Vec& v2, long long fuel,
            long long rewrite_fuel) {
  UpToConfig cfg;
  cfg.inclusion = true;
  return up_to_worklist(a, v1, v2, fuel, rewrite_fuel, cfg);
}

Verdict hkp_prime(const WeightedAutomaton& a, const Vec& v1, const Vec& v2,
                  const SimilarityRelation& sim_rel, long long fuel, long long rewrite_fuel) {
  auto seed = similarity_seed(a, sim_rel);
  UpToConfig cfg;
  cfg.inclusion = true;
  cfg.seed_pairs = &seed;
  Verdict v = up_to_worklist(a, v1, v2, fuel, rewrite_fuel, cfg);
  v.stats.sim_size = sim_rel.size_nonreflexive();
  return v;
}

Verdict hkp_a(const WeightedAutomaton& a, const Vec& v, unsigned long long threshold,
              long long fuel, long long rewrite_fuel) {
  require_shape(a, v);
  auto [ext, t] = extend_with_threshold_state(a, threshold);
  UpToConfig cfg;
  cfg.inclusion = true;
  cfg.abstract_threshold = threshold;
  return up_to_worklist(ext, Vec::unit(ext.semiring, ext.n, t), lift_with_zero(v), fuel,
                        rewrite_fuel, cfg);
}

Verdict hkp_a_prime(const WeightedAutomaton& a, const Vec& v, unsigned long long threshold,
                    long long fuel, long long rewrite_fuel) {
  require_shape(a, v);
  auto [ext, t] = extend_with_threshold_state(a, threshold);
  SimilarityRelation sim_rel = sim(ext);
  auto seed = similarity_seed(ext, sim_rel);
  UpToConfig cfg;
  cfg.inclusion = true;
  cfg.abstract_threshold = threshold;
  cfg.seed_pairs = &seed;
  Verdict out = up_to_worklist(ext, Vec::unit(ext.semiring, ext.n, t), lift_with_zero(v), fuel,
                               rewrite_fuel, cfg);
  out.stats.sim_size = sim_rel.size_nonreflexive();
  return out;
}

SimilarityRelation sim(const WeightedAutomaton& a) {
  if (!is_lmonoid(a.semiring)) throw UsageError("sim requires an l-monoid semiring");
  const std::size_t n = a.n;
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, true));

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!leq(a.output[i], a.output[j])) rel[i][j] = false;

  // successors[s][j] = step of e_j under symbol s
  std::vector<std::vector<Vec>> successors;
  for (std::size_t s = 0; s < a.alphabet.size(); ++s) {
    std::vector<Vec> row;
    row.reserve(n);
    for (std::size_t j = 0; j < n; ++j) row.push_back(step(a, static_cast<int>(s), Vec::unit(a.semiring, n, j)));
    successors.push_back(std::move(row));
  }

  // Prune any pair whose left successor is not dominated by the join of the
  // related states' successors, until a full pass holds. The dominating
  // vector depends only on (symbol, j), so it is shared across all i.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < a.alphabet.size(); ++s) {
      for (std::size_t j = 0; j < n; ++j) {
        Vec dom(a.semiring, n);
        for (std::size_t k1 = 0; k1 < n; ++k1)
          for (std::size_t k2 = 0; k2 < n; ++k2)
            if (rel[k1][k2]) dom.set(k1, combine(dom[k1], successors[s][j][k2]));
        for (std::size_t i = 0; i < n; ++i) {
          if (!rel[i][j]) continue;
          if (!vec_leq(successors[s][i], dom)) {
            rel[i][j] = false;
            changed = true;
          }
        }
      }
    }
  }

  SimilarityRelation out;
  out.n = n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (rel[i][j]) out.pairs.emplace(i, j);
  return out;
}

Verdict abk(const WeightedAutomaton& a, const Vec& v0, unsigned long long threshold) {
  require_shape(a, v0);
  if (a.semiring != SemiringId::TropicalNat)
    throw UsageError("threshold check is defined over tropical naturals");
  Verdict out;
  Stats& st = out.stats;
  std::deque<std::pair<Vec, Word>> todo;
  todo.emplace_back(v0, Word{});
  std::set<Vec> seen;
  while (!todo.empty()) {
    auto [v, word] = std::move(todo.front());
    todo.pop_front();
    ++st.pairs_processed;
    if (seen.count(v)) continue;
    if (!within_threshold(output_weight(a, v), threshold)) {
      out.answer = Answer::False;
      out.witness = std::move(word);
      st.relation_size = seen.size();
      return out;
    }
    for (std::size_t s = 0; s < a.alphabet.size(); ++s) {
      Word w = word;
      w.push_back(static_cast<int>(s));
      todo.emplace_back(abstraction(step(a, static_cast<int>(s), v), threshold), std::move(w));
    }
    seen.insert(std::move(v));
  }
  out.answer = Answer::True;
  st.relation_size = seen.size();
  return out;
}

std::string verdict_line(const Verdict& v, const WeightedAutomaton* a) {
  std::string out;
  switch (v.answer) {
    case Answer::True: out = "true"; break;
    case Answer::False: out = "false"; break;
    case Answer::FuelExhausted: out = "fuel-exhausted"; break;
  }
  if (v.answer == Answer::False && v.witness) {
    out += " witness=\"";
    if (a) {
      out += format_word(*a, *v.witness);
    } else {
      for (std::size_t i = 0; i < v.witness->size(); ++i) {
        if (i) out += " ";
        out += std::to_string((*v.witness)[i]);
      }
    }
    out += "\"";
  }
  out += " relation=" + std::to_string(v.stats.relation_size);
  out += " pairs=" + std::to_string(v.stats.pairs_processed);
  out += " rewrite-steps=" + std::to_string(v.stats.rewrite_steps);
  if (v.stats.sim_size) out += " sim=" + std::to_string(*v.stats.sim_size);
  return out;
}

}  // namespace wupto
