#pragma once

#include "wupto/congruence.hpp"

namespace wupto {

// Directed graph with tropical edge weights; entry (i, j) is the length of
// the edge i -> j, infinity when absent, and the diagonal is 0.
struct WeightedDigraph {
  SemiringId semiring = SemiringId::TropicalReal;
  std::size_t n = 0;
  Mat weights{SemiringId::TropicalReal, 1};

  static WeightedDigraph make(SemiringId s, Mat weights);
};

// One rule per vertex: e_i rewrites to i's row of adjacent distances.
// Normal forms of unit vectors are single-source shortest path vectors.
RewriteSystem graph_rules(const WeightedDigraph& g,
                          long long fuel = kDefaultRewriteFuel);

// Distances from source to every vertex, as the normal form of e_source.
// The greedy strategy relaxes the cheapest applicable edge first.
Vec shortest_paths(const WeightedDigraph& g, std::size_t source,
                   Strategy strategy = Strategy::RoundRobin,
                   long long fuel = kDefaultRewriteFuel);

}  // namespace wupto
