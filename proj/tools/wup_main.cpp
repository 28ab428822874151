// Command line front end: equivalence, inclusion, threshold and similarity
// checks on weighted automata, plus shortest paths, instance generation and
// the benchmark harness.
//
// Exit codes: 0 = property holds / success, 1 = property refuted (witness on
// stdout), 2 = fuel exhausted, 64 = usage or parse error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "wupto/algorithms.hpp"
#include "wupto/bench.hpp"
#include "wupto/format.hpp"

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitFuel = 2;
constexpr int kExitUsage = 64;

struct GlobalOpts {
  long long fuel = wupto::kDefaultPairFuel;
  long long rewrite_fuel = wupto::kDefaultRewriteFuel;
  bool stats = false;
  bool quiet = false;
};

wupto::WeightedAutomaton load_automaton(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw wupto::UsageError("cannot open '" + path + "'");
  return wupto::parse_automaton(in);
}

wupto::WeightedDigraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw wupto::UsageError("cannot open '" + path + "'");
  return wupto::parse_graph(in);
}

void print_stats(const wupto::Verdict& v, const GlobalOpts& g) {
  if (!g.stats || g.quiet) return;
  std::cout << "relation=" << v.stats.relation_size << " pairs=" << v.stats.pairs_processed
            << " rewrite-steps=" << v.stats.rewrite_steps;
  if (v.stats.sim_size) std::cout << " sim=" << *v.stats.sim_size;
  std::cout << "\n";
}

int report(const wupto::Verdict& v, const wupto::WeightedAutomaton& a, const GlobalOpts& g) {
  switch (v.answer) {
    case wupto::Answer::True:
      if (!g.quiet) std::cout << "true\n";
      print_stats(v, g);
      return kExitTrue;
    case wupto::Answer::False:
      if (!g.quiet) {
        std::cout << "false\n";
        std::cout << wupto::format_word(a, v.witness.value_or(wupto::Word{})) << "\n";
      }
      print_stats(v, g);
      return kExitFalse;
    case wupto::Answer::FuelExhausted:
      if (!g.quiet) std::cout << "fuel-exhausted\n";
      print_stats(v, g);
      return kExitFuel;
  }
  return kExitUsage;
}

std::vector<std::pair<std::size_t, unsigned long long>> parse_grid(const std::string& text) {
  std::vector<std::pair<std::size_t, unsigned long long>> grid;
  std::string cur;
  auto flush = [&]() {
    if (cur.empty()) throw wupto::UsageError("empty grid cell in '" + text + "'");
    auto colon = cur.find(':');
    if (colon == std::string::npos)
      throw wupto::UsageError("grid cells use <states>:<threshold>, got '" + cur + "'");
    grid.emplace_back(std::stoul(cur.substr(0, colon)), std::stoull(cur.substr(colon + 1)));
    cur.clear();
  };
  for (char c : text) {
    if (c == ',')
      flush();
    else
      cur += c;
  }
  flush();
  return grid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"up-to-congruence checks for weighted automata"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--fuel", g.fuel, "max worklist pairs before giving up");
  app.add_option("--rewrite-fuel", g.rewrite_fuel, "max rewrite steps per normal form");
  app.add_flag("--stats", g.stats, "print relation/pair/step counters");
  app.add_flag("--quiet", g.quiet, "suppress stdout; exit code only");

  std::string file, left, right, vec_text, graph_file, out_file, csv_file;
  unsigned long long threshold = 0;
  std::string algo = "hkpa";
  bool use_sim = false;
  std::size_t source = 1, gen_states = 3;
  std::uint64_t seed = 0;
  std::string grid_text = "3:10";
  std::size_t runs = 100;
  std::string algos_text = "abk,hkpa,hkpa-sim";
  unsigned long long gen_threshold = 0;
  bool gen_threshold_set = false;

  CLI::App* equiv = app.add_subcommand("equiv", "are two state vectors language equivalent?");
  equiv->fallthrough();
  equiv->add_option("file", file, "automaton file")->required();
  equiv->add_option("--left", left, "vector literal")->required();
  equiv->add_option("--right", right, "vector literal")->required();

  CLI::App* incl = app.add_subcommand("incl", "is the left language included in the right?");
  incl->fallthrough();
  incl->add_option("file", file, "automaton file")->required();
  incl->add_option("--left", left, "vector literal, candidate subset")->required();
  incl->add_option("--right", right, "vector literal, candidate superset")->required();
  incl->add_flag("--sim", use_sim, "seed the closure with the similarity relation");

  CLI::App* thresh = app.add_subcommand("threshold", "does every word weigh at most T?");
  thresh->fallthrough();
  thresh->add_option("file", file, "automaton file, tropical-nat semiring")->required();
  thresh->add_option("--vec", vec_text, "initial vector literal")->required();
  thresh->add_option("--threshold", threshold, "maximum allowed word weight")->required();
  thresh->add_option("--algo", algo, "checker to run (default hkpa)")->check(CLI::IsMember({"abk", "hkpa", "hkpa-sim"}));

  CLI::App* simc = app.add_subcommand("sim", "print the similarity relation on states");
  simc->fallthrough();
  simc->add_option("file", file, "automaton file")->required();

  CLI::App* spathc = app.add_subcommand("spath", "single-source shortest paths by rewriting");
  spathc->fallthrough();
  spathc->add_option("graphfile", graph_file, "graph file")->required();
  spathc->add_option("--source", source, "1-based source vertex")->required();

  CLI::App* gen = app.add_subcommand("gen", "generate a random tropical automaton");
  gen->fallthrough();
  gen->add_option("--states", gen_states, "number of states")->required();
  auto* gt = gen->add_option("--threshold", gen_threshold, "recorded as a comment");
  gen->add_option("--seed", seed, "instance seed")->required();
  gen->add_option("--out", out_file, "write to this file instead of stdout");

  CLI::App* bench = app.add_subcommand("bench", "random-instance benchmark grid");
  bench->fallthrough();
  bench->add_option("--grid", grid_text, "cells as <states>:<threshold>, comma separated");
  bench->add_option("--runs", runs, "instances per cell");
  bench->add_option("--seed", seed, "master seed for the instance stream")->required();
  bench->add_option("--csv", csv_file, "write per-run rows to this file");
  bench->add_option("--algos", algos_text, "comma separated subset of abk,hkpa,hkpa-sim");

  try {
    app.parse(argc, argv);
    gen_threshold_set = gt->count() > 0;

    if (equiv->parsed()) {
      auto a = load_automaton(file);
      auto v1 = wupto::parse_vector(a.semiring, a.n, left);
      auto v2 = wupto::parse_vector(a.semiring, a.n, right);
      return report(wupto::hkc(a, v1, v2, g.fuel, g.rewrite_fuel), a, g);
    }

    if (incl->parsed()) {
      auto a = load_automaton(file);
      auto v1 = wupto::parse_vector(a.semiring, a.n, left);
      auto v2 = wupto::parse_vector(a.semiring, a.n, right);
      wupto::Verdict v = use_sim
                             ? wupto::hkp_prime(a, v1, v2, wupto::sim(a), g.fuel, g.rewrite_fuel)
                             : wupto::hkp(a, v1, v2, g.fuel, g.rewrite_fuel);
      return report(v, a, g);
    }

    if (thresh->parsed()) {
      auto a = load_automaton(file);
      auto v = wupto::parse_vector(a.semiring, a.n, vec_text);
      wupto::Verdict verdict;
      if (algo == "abk")
        verdict = wupto::abk(a, v, threshold);
      else if (algo == "hkpa")
        verdict = wupto::hkp_a(a, v, threshold, g.fuel, g.rewrite_fuel);
      else
        verdict = wupto::hkp_a_prime(a, v, threshold, g.fuel, g.rewrite_fuel);
      return report(verdict, a, g);
    }

    if (simc->parsed()) {
      auto a = load_automaton(file);
      wupto::SimilarityRelation rel = wupto::sim(a);
      if (!g.quiet) {
        for (const auto& [i, j] : rel.pairs)
          if (i != j) std::cout << (i + 1) << ' ' << (j + 1) << "\n";
        if (g.stats) std::cout << "sim=" << rel.size_nonreflexive() << "\n";
      }
      return kExitTrue;
    }

    if (spathc->parsed()) {
      auto graph = load_graph(graph_file);
      if (source < 1 || source > graph.n)
        throw wupto::UsageError("source must be in 1.." + std::to_string(graph.n));
      wupto::Vec d = wupto::shortest_paths(graph, source - 1, wupto::Strategy::RoundRobin,
                                           g.rewrite_fuel);
      if (!g.quiet) {
        for (std::size_t i = 0; i < d.dim(); ++i) {
          if (i) std::cout << ' ';
          std::cout << wupto::render_scalar(d[i]);
        }
        std::cout << "\n";
      }
      return kExitTrue;
    }

    if (gen->parsed()) {
      wupto::GenParams params;
      params.n_states = gen_states;
      params.seed = seed;
      if (gen_threshold_set) params.threshold = gen_threshold;
      auto [a, init] = wupto::gen_random(params);
      (void)init;  // always the first unit vector
      std::string text;
      if (gen_threshold_set)
        text += "# suggested threshold: " + std::to_string(gen_threshold) + "\n";
      text += wupto::serialize_automaton(a);
      if (out_file.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(out_file);
        if (!out) throw wupto::UsageError("cannot write '" + out_file + "'");
        out << text;
      }
      return kExitTrue;
    }

    if (bench->parsed()) {
      auto grid = parse_grid(grid_text);
      std::vector<std::string> algos;
      std::string cur;
      for (char c : algos_text + ",") {
        if (c == ',') {
          if (!cur.empty()) algos.push_back(cur);
          cur.clear();
        } else {
          cur += c;
        }
      }
      if (algos.empty()) throw wupto::UsageError("no algorithms selected");
      wupto::BenchResult result = wupto::run_bench(grid, runs, algos, seed);
      if (csv_file.empty()) {
        wupto::write_csv(result.rows, std::cout);
        if (!g.quiet) std::cerr << wupto::summary_text(result);
      } else {
        std::ofstream out(csv_file, std::ios::binary);
        if (!out) throw wupto::UsageError("cannot write '" + csv_file + "'");
        wupto::write_csv(result.rows, out);
        if (!g.quiet) std::cout << wupto::summary_text(result);
      }
      return kExitTrue;
    }
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  } catch (const wupto::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const wupto::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const wupto::UnsupportedOp& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
