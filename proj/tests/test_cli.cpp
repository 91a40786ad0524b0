#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qbound/certificates.hpp"
#include "qbound/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

using namespace qbound;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

RunResult run(const std::string& args) {
  std::string out_path = "cli_stdout.tmp";
  std::string cmd = std::string(QBOUND_BIN) + " " + args + " > " + out_path + " 2> cli_stderr.tmp";
  int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_path);
  return r;
}

}  // namespace

TEST_CASE("singleton subcommand") {
  RunResult r = run("singleton --n 5 --w 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("K <= 2") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("singleton --n 5 --w 0").exit_code == 2);
  CHECK(run("singleton --n 5").exit_code == 2);
  CHECK(run("singleton --n 5 --w 3 --bogus").exit_code == 2);
  CHECK(run("nonsense").exit_code == 2);
  CHECK(run("hamming --n 8 --w 4").exit_code == 2);  // even w rejected
}

TEST_CASE("lp subcommand") {
  RunResult r = run("lp --n 5 --w 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("K_max = 2") != std::string::npos);
  CHECK(r.out.find("witness") != std::string::npos);

  RunResult f = run("lp --n 5 --w 3 --K 3");
  CHECK(f.exit_code == 0);
  CHECK(f.out.find("infeasible") != std::string::npos);
}

TEST_CASE("deterministic output") {
  RunResult a = run("curve hamming --delta-min 0 --delta-max 0.3 --step 0.01");
  RunResult b = run("curve hamming --delta-min 0 --delta-max 0.3 --step 0.01");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  RunResult c = run("hamming --n 7 --w 3 --format json");
  RunResult d = run("hamming --n 7 --w 3 --format json");
  CHECK(c.out == d.out);
}

TEST_CASE("curve csv shape") {
  RunResult r = run("curve hamming --delta-min 0 --delta-max 0.34 --step 0.01");
  CHECK(r.exit_code == 0);
  size_t lines = 0;
  for (char ch : r.out) lines += (ch == '\n');
  CHECK(lines == 36);  // header + 35 points
  CHECK(r.out.rfind("delta,exponent,valid\n", 0) == 0);
  CHECK(r.out.find("0.010000000000,") != std::string::npos);
}

TEST_CASE("gv stays below hamming across exported files") {
  CHECK(run("curve gv --delta-min 0 --delta-max 0.3 --step 0.01 --out gv.csv").exit_code == 0);
  CHECK(run("curve hamming --delta-min 0 --delta-max 0.3 --step 0.01 --out ham.csv").exit_code == 0);
  std::ifstream g("gv.csv"), h("ham.csv");
  std::string gl, hl;
  std::getline(g, gl);
  std::getline(h, hl);
  int rows = 0;
  while (std::getline(g, gl) && std::getline(h, hl)) {
    double gd = std::strtod(gl.c_str(), nullptr);
    double ge = std::strtod(gl.c_str() + gl.find(',') + 1, nullptr);
    double hd = std::strtod(hl.c_str(), nullptr);
    double he = std::strtod(hl.c_str() + hl.find(',') + 1, nullptr);
    CHECK(gd == hd);
    CHECK(ge <= he);
    ++rows;
  }
  CHECK(rows == 31);
  std::remove("gv.csv");
  std::remove("ham.csv");
}

TEST_CASE("certificate emit and verify round-trip") {
  RunResult e = run("hamming --n 5 --w 3 --format json --out ham53.json");
  CHECK(e.exit_code == 0);
  RunResult v = run("cert verify ham53.json");
  CHECK(v.exit_code == 0);
  CHECK(v.out.find("32/15") != std::string::npos);

  RunResult s = run("singleton --n 5 --w 3 --format json --out s53.json");
  CHECK(s.exit_code == 0);
  RunResult vs = run("cert verify s53.json");
  CHECK(vs.exit_code == 0);
  CHECK(vs.out.find("2/1") != std::string::npos);

  // tampering with a coefficient must be detected
  std::string text = slurp("ham53.json");
  size_t pos = text.find("\"121/1\"");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 7, "\"-121/1\"");
  std::ofstream("tampered.json") << text;
  RunResult t = run("cert verify tampered.json");
  CHECK(t.exit_code == 1);

  RunResult missing = run("cert verify does_not_exist.json");
  CHECK(missing.exit_code == 1);

  std::remove("ham53.json");
  std::remove("s53.json");
  std::remove("tampered.json");
}

TEST_CASE("stabilizer and mixed subcommands") {
  RunResult p = run("stabilizer plotkin --n 5 --k 1");
  CHECK(p.exit_code == 0);
  CHECK(p.out.find("d <= 3") != std::string::npos);
  RunResult h = run("stabilizer hamming --n 5 --k 1");
  CHECK(h.exit_code == 0);
  CHECK(h.out.find("d <= 3") != std::string::npos);
  RunResult m = run("mixed plotkin --l 2 --n 4 --k 2");
  CHECK(m.exit_code == 0);
  CHECK(m.out.find("10/3") != std::string::npos);
}

TEST_CASE("kraw subcommand") {
  RunResult r = run("kraw --q 4 --n 5 --i 1 --x 0");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "15\n");
  RunResult j = run("kraw --q 4 --n 2 --format json");
  CHECK(j.exit_code == 0);
  CHECK(j.out.find("\"9/1\"") != std::string::npos);
}

TEST_CASE("json carries exact rationals for everything printed in text") {
  RunResult j = run("hamming --n 5 --w 3 --format json");
  CHECK(j.exit_code == 0);
  CHECK(j.out.find("\"bound\":\"32/15\"") != std::string::npos);
  CHECK(j.out.find("\"bound_on\":\"K\"") != std::string::npos);
  CHECK(j.out.find("\"225/1\"") != std::string::npos);
  RunResult lp = run("lp --n 4 --w 2 --K 4 --format json");
  CHECK(lp.exit_code == 0);
  CHECK(lp.out.find("\"feasible\":true") != std::string::npos);
  CHECK(lp.out.find("\"16/1\"") != std::string::npos);  // A_0 = K^2 exactly
}
