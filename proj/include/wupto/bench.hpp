#pragma once

#include <iosfwd>
#include <vector>

#include "wupto/algorithms.hpp"
#include "wupto/rng.hpp"

namespace wupto {

// Random-instance shape: fully dense Bernoulli transition table over the
// tropical naturals. Every draw goes through splitmix64, so instances are
// reproducible across platforms from the seed alone.
struct GenParams {
  std::size_t n_states = 3;
  unsigned long long threshold = 10;
  std::pair<std::uint64_t, std::uint64_t> edge_prob = {9, 10};  // p of q
  std::pair<std::uint64_t, std::uint64_t> weight_range = {0, 10};
  std::pair<std::size_t, std::size_t> alphabet_range = {1, 5};
  std::uint64_t seed = 0;
};

// Automaton plus its designated initial vector (the first unit vector).
// Draw order: alphabet size; per symbol a src-major scan of the matrix,
// one Bernoulli draw per cell plus a weight draw when present. Outputs are
// all weight zero, so the threshold property measures transition
// accumulation only.
std::pair<WeightedAutomaton, Vec> gen_random(const GenParams& p);

// Family on which plain set-membership search blows up exponentially in n
// while similarity-seeded search stays linear: two unary counters of length
// n, one advanced by a, one by b, both attached to an always-live hub state
// (all weights 1, all outputs 0). States: x, x_1..x_n, y, y_1..y_n.
WeightedAutomaton exp_family(std::size_t n);

// e_x join e_y, the intended start vector of exp_family.
Vec exp_family_start(const WeightedAutomaton& a);

struct BenchRow {
  std::uint64_t seed = 0;
  std::size_t n_states = 0;
  unsigned long long threshold = 0;
  std::string algo;
  std::size_t run = 0;
  Answer verdict = Answer::True;
  double runtime_ms = 0.0;
  std::size_t relation_size = 0;
  std::optional<std::size_t> sim_size;
  bool fuel_exhausted = false;
};

struct CellSummary {
  std::size_t n_states = 0;
  unsigned long long threshold = 0;
  std::string algo;
  std::size_t runs = 0;
  std::size_t fuel_exhausted = 0;
  std::size_t true_count = 0;
  // Nearest-rank percentiles over rows that did not exhaust fuel.
  double runtime_ms_p50 = 0, runtime_ms_p90 = 0, runtime_ms_p99 = 0;
  std::size_t relation_p50 = 0, relation_p90 = 0, relation_p99 = 0;
};

struct BenchResult {
  std::vector<BenchRow> rows;
  std::vector<CellSummary> summary;
};

inline const std::vector<std::string> kBenchAlgos = {"abk", "hkpa", "hkpa-sim"};

// Runs each algorithm on runs_per_cell fresh instances per (states,
// threshold) grid cell. Instance seeds come from a splitmix64 stream over
// the master seed, in row order (cells outer, runs inner), so the rows are
// reproducible; only runtime_ms varies between invocations.
BenchResult run_bench(const std::vector<std::pair<std::size_t, unsigned long long>>& grid,
                      std::size_t runs_per_cell, const std::vector<std::string>& algos,
                      std::uint64_t master_seed);

// Nearest-rank percentile of a sorted sample: element ceil(p*n/100), 1-based.
double percentile_nearest_rank(const std::vector<double>& sorted, unsigned p);
std::size_t percentile_nearest_rank(const std::vector<std::size_t>& sorted, unsigned p);

// header: seed,n_states,threshold,algo,run,verdict,runtime_ms,relation_size,sim_size,fuel_exhausted
void write_csv(const std::vector<BenchRow>& rows, std::ostream& out);

std::string summary_text(const BenchResult& result);

}  // namespace wupto
