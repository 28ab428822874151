#include "wupto/spath.hpp"

namespace wupto {

WeightedDigraph WeightedDigraph::make(SemiringId s, Mat weights) {
  if (s != SemiringId::TropicalNat && s != SemiringId::TropicalReal)
    throw UsageError("graphs use a tropical semiring");
  if (weights.semiring() != s) throw UsageError("weight matrix semiring mismatch");
  for (std::size_t i = 0; i < weights.dim(); ++i)
    if (!weights.at(i, i).is_one()) throw UsageError("graph diagonal must be 0");
  return WeightedDigraph{s, weights.dim(), std::move(weights)};
}

RewriteSystem graph_rules(const WeightedDigraph& g, long long fuel) {
  RewriteSystem rs(g.semiring, g.n, RewriteMode::Symmetric, fuel);
  for (std::size_t i = 0; i < g.n; ++i) {
    Vec row(g.semiring, g.n);
    for (std::size_t j = 0; j < g.n; ++j) row.set(j, g.weights.at(i, j));
    // The diagonal 0 makes row = e_i join row, so this is a relation rule.
    rs.add_pair(Vec::unit(g.semiring, g.n, i), row);
  }
  return rs;
}

Vec shortest_paths(const WeightedDigraph& g, std::size_t source, Strategy strategy,
                   long long fuel) {
  if (source >= g.n) throw UsageError("source vertex out of range");
  RewriteSystem rs = graph_rules(g, fuel);
  auto nf = rs.normal_form(Vec::unit(g.semiring, g.n, source), strategy);
  if (!nf) throw UsageError("rewrite fuel exhausted during shortest paths");
  return *nf;
}

}  // namespace wupto
