#include "wupto/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>
#include <sstream>

namespace wupto {

std::pair<WeightedAutomaton, Vec> gen_random(const GenParams& p) {
  if (p.n_states == 0) throw UsageError("generator needs at least one state");
  if (p.alphabet_range.first < 1 || p.alphabet_range.second < p.alphabet_range.first ||
      p.alphabet_range.second > 26)
    throw UsageError("alphabet range must satisfy 1 <= lo <= hi <= 26");
  if (p.weight_range.second < p.weight_range.first) throw UsageError("bad weight range");
  if (p.edge_prob.second == 0 || p.edge_prob.first > p.edge_prob.second)
    throw UsageError("edge probability must be a fraction p/q <= 1");

  SplitMix64 rng(p.seed);
  const SemiringId sr = SemiringId::TropicalNat;
  std::size_t alpha =
      static_cast<std::size_t>(rng.in_range(p.alphabet_range.first, p.alphabet_range.second));
  std::vector<std::string> alphabet;
  for (std::size_t i = 0; i < alpha; ++i) alphabet.emplace_back(1, static_cast<char>('a' + i));

  auto draw_weight = [&]() -> Value {
    if (!rng.bernoulli(p.edge_prob.first, p.edge_prob.second)) return Value::infinity(sr);
    return Value::from_rat(sr, Rat(rng.in_range(p.weight_range.first, p.weight_range.second)));
  };

  std::vector<Mat> trans;
  for (std::size_t s = 0; s < alpha; ++s) {
    Mat m(sr, p.n_states);
    for (std::size_t src = 0; src < p.n_states; ++src)
      for (std::size_t dst = 0; dst < p.n_states; ++dst) m.set(src, dst, draw_weight());
    trans.push_back(std::move(m));
  }
  // outputs are all weight zero: the threshold property then measures pure
  // transition accumulation, which also keeps the satisfied/violated mix at
  // small sizes from collapsing into near-certain violation
  Vec output(sr, p.n_states);
  for (std::size_t i = 0; i < p.n_states; ++i) output.set(i, Value::from_rat(sr, 0));

  WeightedAutomaton a = WeightedAutomaton::make(sr, p.n_states, std::move(alphabet),
                                                std::move(output), std::move(trans));
  Vec init = Vec::unit(sr, p.n_states, 0);
  return {std::move(a), std::move(init)};
}

WeightedAutomaton exp_family(std::size_t n) {
  if (n == 0) throw UsageError("exp_family needs n >= 1");
  const SemiringId sr = SemiringId::TropicalNat;
  const std::size_t states = 2 * n + 2;
  const std::size_t x = 0, y = n + 1;
  auto xi = [&](std::size_t i) { return x + i; };  // x_1..x_n
  auto yi = [&](std::size_t i) { return y + i; };  // y_1..y_n
  const Value w1 = Value::from_rat(sr, 1);

  Mat ta(sr, states), tb(sr, states);
  // Hub x loops on both symbols and feeds its counter on a; hub y feeds
  // its counter on b.
  ta.set(x, x, w1);
  tb.set(x, x, w1);
  ta.set(x, xi(1), w1);
  ta.set(y, y, w1);
  tb.set(y, y, w1);
  tb.set(y, yi(1), w1);
  for (std::size_t i = 1; i < n; ++i) {
    ta.set(xi(i), xi(i + 1), w1);
    tb.set(xi(i), xi(i + 1), w1);
    ta.set(yi(i), yi(i + 1), w1);
    tb.set(yi(i), yi(i + 1), w1);
  }

  Vec output(sr, states);
  for (std::size_t i = 0; i < states; ++i) output.set(i, Value::from_rat(sr, 0));
  return WeightedAutomaton::make(sr, states, {"a", "b"}, std::move(output),
                                 {std::move(ta), std::move(tb)});
}

Vec exp_family_start(const WeightedAutomaton& a) {
  if (a.n < 4 || a.n % 2 != 0) throw UsageError("not an exp_family automaton");
  std::size_t n = a.n / 2 - 1;
  return vec_combine(Vec::unit(a.semiring, a.n, 0), Vec::unit(a.semiring, a.n, n + 1));
}

namespace {

Verdict run_algo(const std::string& algo, const WeightedAutomaton& a, const Vec& init,
                 unsigned long long threshold) {
  if (algo == "abk") return abk(a, init, threshold);
  if (algo == "hkpa") return hkp_a(a, init, threshold);
  if (algo == "hkpa-sim") return hkp_a_prime(a, init, threshold);
  throw UsageError("unknown algorithm: " + algo);
}

template <typename T>
T percentile_impl(const std::vector<T>& sorted, unsigned p) {
  if (sorted.empty()) throw UsageError("percentile of empty sample");
  if (p == 0 || p > 100) throw UsageError("percentile must be in 1..100");
  std::size_t rank = (p * sorted.size() + 99) / 100;  // ceil(p*n/100)
  if (rank == 0) rank = 1;
  return sorted[rank - 1];
}

}  // namespace

double percentile_nearest_rank(const std::vector<double>& sorted, unsigned p) {
  return percentile_impl(sorted, p);
}

std::size_t percentile_nearest_rank(const std::vector<std::size_t>& sorted, unsigned p) {
  return percentile_impl(sorted, p);
}

BenchResult run_bench(const std::vector<std::pair<std::size_t, unsigned long long>>& grid,
                      std::size_t runs_per_cell, const std::vector<std::string>& algos,
                      std::uint64_t master_seed) {
  BenchResult result;
  SplitMix64 seed_stream(master_seed);
  for (const auto& [n_states, threshold] : grid) {
    for (std::size_t run = 0; run < runs_per_cell; ++run) {
      std::uint64_t seed = seed_stream.next();
      GenParams params;
      params.n_states = n_states;
      params.threshold = threshold;
      params.seed = seed;
      auto [a, init] = gen_random(params);
      for (const std::string& algo : algos) {
        auto t0 = std::chrono::steady_clock::now();
        Verdict v = run_algo(algo, a, init, threshold);
        auto t1 = std::chrono::steady_clock::now();
        BenchRow row;
        row.seed = seed;
        row.n_states = n_states;
        row.threshold = threshold;
        row.algo = algo;
        row.run = run;
        row.verdict = v.answer;
        row.runtime_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        row.relation_size = v.stats.relation_size;
        row.sim_size = v.stats.sim_size;
        row.fuel_exhausted = v.answer == Answer::FuelExhausted;
        result.rows.push_back(std::move(row));
      }
    }
  }

  for (const auto& [n_states, threshold] : grid) {
    for (const std::string& algo : algos) {
      CellSummary cell;
      cell.n_states = n_states;
      cell.threshold = threshold;
      cell.algo = algo;
      std::vector<double> times;
      std::vector<std::size_t> sizes;
      for (const BenchRow& row : result.rows) {
        if (row.n_states != n_states || row.threshold != threshold || row.algo != algo) continue;
        ++cell.runs;
        if (row.fuel_exhausted) {
          ++cell.fuel_exhausted;
          continue;
        }
        if (row.verdict == Answer::True) ++cell.true_count;
        times.push_back(row.runtime_ms);
        sizes.push_back(row.relation_size);
      }
      if (!times.empty()) {
        std::sort(times.begin(), times.end());
        std::sort(sizes.begin(), sizes.end());
        cell.runtime_ms_p50 = percentile_nearest_rank(times, 50);
        cell.runtime_ms_p90 = percentile_nearest_rank(times, 90);
        cell.runtime_ms_p99 = percentile_nearest_rank(times, 99);
        cell.relation_p50 = percentile_nearest_rank(sizes, 50);
        cell.relation_p90 = percentile_nearest_rank(sizes, 90);
        cell.relation_p99 = percentile_nearest_rank(sizes, 99);
      }
      result.summary.push_back(std::move(cell));
    }
  }
  return result;
}

namespace {

std::string format_ms(double ms) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(3);
  os << ms;
  return os.str();
}

const char* verdict_word(Answer a) {
  switch (a) {
    case Answer::True: return "true";
    case Answer::False: return "false";
    case Answer::FuelExhausted: return "fuel-exhausted";
  }
  return "?";
}

}  // namespace

void write_csv(const std::vector<BenchRow>& rows, std::ostream& out) {
  out << "seed,n_states,threshold,algo,run,verdict,runtime_ms,relation_size,sim_size,"
         "fuel_exhausted\n";
  for (const BenchRow& r : rows) {
    out << r.seed << ',' << r.n_states << ',' << r.threshold << ',' << r.algo << ',' << r.run
        << ',' << verdict_word(r.verdict) << ',' << format_ms(r.runtime_ms) << ','
        << r.relation_size << ',';
    if (r.sim_size) out << *r.sim_size;
    out << ',' << (r.fuel_exhausted ? 1 : 0) << '\n';
  }
}

std::string summary_text(const BenchResult& result) {
  std::ostringstream os;
  for (const CellSummary& c : result.summary) {
    os << "cell=" << c.n_states << ':' << c.threshold << " algo=" << c.algo << " runs=" << c.runs
       << " true=" << c.true_count << " fuel-exhausted=" << c.fuel_exhausted
       << " time-ms p50=" << format_ms(c.runtime_ms_p50) << " p90=" << format_ms(c.runtime_ms_p90)
       << " p99=" << format_ms(c.runtime_ms_p99) << " relation p50=" << c.relation_p50
       << " p90=" << c.relation_p90 << " p99=" << c.relation_p99 << '\n';
  }
  return os.str();
}

}  // namespace wupto
