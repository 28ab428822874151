#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args, bool merge_stderr = false) {
  std::string cmd = std::string(WUPTO_CLI_PATH) + " " + args;
  cmd += merge_stderr ? " 2>&1" : " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult r;
  char buf[4096];
  while (std::size_t k = fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, k);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data_file(const char* name) {
  return std::string(WUPTO_DATA_DIR) + "/" + name;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  REQUIRE(out.good());
  out << text;
}

int count_lines(const std::string& text) {
  int n = 0;
  for (char c : text)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("cli: shortest paths") {
  CliResult r = run_cli("spath " + data_file("graph3.txt") + " --source 3");
  CHECK(r.code == 0);
  CHECK(r.out == "1 4 0\n");

  r = run_cli("spath " + data_file("graph3.txt") + " --source 1");
  CHECK(r.code == 0);
  CHECK(r.out == "0 3 2\n");

  r = run_cli("spath " + data_file("graph3.txt") + " --source 9", true);
  CHECK(r.code == 64);
  CHECK(r.out.find("error:") != std::string::npos);
}

TEST_CASE("cli: equivalence and inclusion verdicts") {
  std::string f = data_file("loop1.aut");
  CHECK(run_cli("equiv " + f + " --left 0 --right 0").code == 0);

  CliResult r = run_cli("equiv " + f + " --left 0 --right 1");
  CHECK(r.code == 1);
  CHECK(r.out == "false\n\n");  // refuted by the empty word

  CHECK(run_cli("incl " + f + " --left 1 --right 0").code == 0);
  CHECK(run_cli("incl " + f + " --left 1 --right 0 --sim").code == 0);
  r = run_cli("incl " + f + " --left 0 --right 1");
  CHECK(r.code == 1);
  CHECK(r.out.substr(0, 6) == "false\n");

  r = run_cli("incl " + f + " --left 1 --right 0 --stats");
  CHECK(r.code == 0);
  CHECK(r.out.find("true\n") == 0);
  CHECK(r.out.find("relation=") != std::string::npos);
  CHECK(r.out.find(" pairs=") != std::string::npos);
  CHECK(r.out.find(" rewrite-steps=") != std::string::npos);

  r = run_cli("equiv " + f + " --left 0 --right 1 --quiet");
  CHECK(r.code == 1);
  CHECK(r.out.empty());
}

TEST_CASE("cli: threshold checks") {
  std::string f = data_file("counters_n2.aut");
  for (const char* algo : {"abk", "hkpa", "hkpa-sim"}) {
    CliResult r = run_cli("threshold " + f + " --vec unit:1+unit:4 --threshold 2 --algo " + algo);
    CHECK(r.code == 1);
    CHECK(r.out == "false\na a a\n");
  }

  write_file("cli_zero_loop.aut",
             "semiring tropical-nat\nstates 1\nalphabet a\noutput 0\ntrans a\n0\n");
  for (const char* algo : {"abk", "hkpa", "hkpa-sim"}) {
    CliResult r =
        run_cli(std::string("threshold cli_zero_loop.aut --vec 0 --threshold 5 --algo ") + algo);
    CHECK(r.code == 0);
    CHECK(r.out == "true\n");
  }

  CliResult stats =
      run_cli("threshold " + f + " --vec unit:1+unit:4 --threshold 2 --algo hkpa-sim --stats");
  CHECK(stats.code == 1);
  CHECK(stats.out.find(" sim=") != std::string::npos);

  CliResult starved = run_cli("threshold " + f + " --vec unit:1+unit:4 --threshold 2 --fuel 1");
  CHECK(starved.code == 2);
  CHECK(starved.out == "fuel-exhausted\n");

  CHECK(run_cli("threshold " + f + " --vec unit:1 --threshold 2 --algo nosuch").code == 64);
  std::remove("cli_zero_loop.aut");
}

TEST_CASE("cli: similarity listing") {
  CliResult r = run_cli("sim " + data_file("counters_n2.aut"));
  CHECK(r.code == 0);
  CHECK(r.out.find("2 1\n") != std::string::npos);  // first a-counter state below its hub
  CHECK(r.out.find("5 4\n") != std::string::npos);  // first b-counter state below its hub
  CHECK(r.out.find("1 2\n") == std::string::npos);  // hubs never sink below counters

  CliResult s = run_cli("sim " + data_file("counters_n2.aut") + " --stats");
  CHECK(s.out.find("sim=") != std::string::npos);
}

TEST_CASE("cli: parse failures exit with 64") {
  write_file("cli_bad.aut", "semiring tropical-nat\nstates 1\nalphabet a\noutput nonsense\n");
  CliResult r = run_cli("equiv cli_bad.aut --left 0 --right 0", true);
  CHECK(r.code == 64);
  CHECK(r.out.find("parse error: line 4") != std::string::npos);

  CHECK(run_cli("equiv no_such_file.aut --left 0 --right 0").code == 64);
  CHECK(run_cli("equiv " + data_file("loop1.aut") + " --left 0,0 --right 0").code == 64);
  CHECK(run_cli("nosuchcommand").code == 64);
  CHECK(run_cli("equiv").code == 64);
  std::remove("cli_bad.aut");
}

TEST_CASE("cli: generator is deterministic") {
  CliResult a = run_cli("gen --states 4 --seed 99");
  CliResult b = run_cli("gen --states 4 --seed 99");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("semiring tropical-nat\n") == 0);
  CHECK(a.out.find("states 4\n") != std::string::npos);
  CHECK(run_cli("gen --states 4 --seed 100").out != a.out);

  CliResult t = run_cli("gen --states 3 --seed 7 --threshold 12");
  CHECK(t.out.find("# suggested threshold: 12\n") == 0);

  CliResult written = run_cli("gen --states 3 --seed 7 --out cli_gen.aut");
  CHECK(written.code == 0);
  CliResult check = run_cli("threshold cli_gen.aut --vec unit:1 --threshold 10");
  CHECK((check.code == 0 || check.code == 1));
  std::remove("cli_gen.aut");
}

TEST_CASE("cli: bench grid") {
  CliResult r = run_cli("bench --grid 2:4 --runs 2 --seed 5 --csv cli_bench.csv");
  CHECK(r.code == 0);
  CHECK(r.out.find("cell=2:4 algo=abk runs=2") != std::string::npos);

  std::ifstream csv("cli_bench.csv");
  REQUIRE(csv.good());
  std::string header;
  std::getline(csv, header);
  CHECK(header ==
        "seed,n_states,threshold,algo,run,verdict,runtime_ms,relation_size,sim_size,"
        "fuel_exhausted");
  int rows = 0;
  for (std::string line; std::getline(csv, line);)
    if (!line.empty()) ++rows;
  CHECK(rows == 2 * 3);
  csv.close();
  std::remove("cli_bench.csv");

  CliResult stdout_mode = run_cli("bench --grid 2:4,3:6 --runs 1 --seed 5 --algos abk,hkpa");
  CHECK(stdout_mode.code == 0);
  CHECK(stdout_mode.out.find("seed,n_states,threshold,algo,run,") == 0);
  CHECK(count_lines(stdout_mode.out) == 1 + 2 * 2);

  CHECK(run_cli("bench --grid nonsense --runs 1 --seed 5").code == 64);
}
