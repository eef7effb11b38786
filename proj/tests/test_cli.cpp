#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "cli.hpp"

using namespace econlab_cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_main(args, out, err);
  return {code, out.str(), err.str()};
}

std::string last_csv_row(const std::string& csv) {
  const auto end = csv.find_last_not_of('\n');
  return csv.substr(csv.rfind('\n', end) + 1, end - csv.rfind('\n', end));
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("parse_args builds a run config") {
  const ParseResult r = parse_args({"ramsey-steady", "--config", "baseline", "--alpha", "0.35"});
  REQUIRE(r.config);
  CHECK(r.config->subcommand == Subcommand::ramsey_steady);
  CHECK(r.config->params.at("alpha") == "0.35");
  CHECK(r.config->format == Format::text);
  CHECK_FALSE(r.config->output_path);
  const ParseResult s = parse_args({"ramsey-simulate", "--format", "svg", "-o", "x.svg"});
  REQUIRE(s.config);
  CHECK(s.config->format == Format::svg);
  CHECK(*s.config->output_path == "x.svg");
}

TEST_CASE("usage and domain errors have their own exit codes") {
  CHECK(invoke({}).code == kExitUsage);
  CHECK(invoke({}).err.find("Usage") != std::string::npos);
  const Outcome unknown = invoke({"frobnicate"});
  CHECK(unknown.code == kExitUsage);
  CHECK(unknown.err.find("frobnicate") != std::string::npos);
  const Outcome missing = invoke({"det"});
  CHECK(missing.code == kExitUsage);
  CHECK(missing.err.find("--matrix") != std::string::npos);
  const Outcome domain = invoke({"ramsey-steady", "--alpha", "1.5"});
  CHECK(domain.code == kExitDomain);
  CHECK(domain.err.find("alpha") != std::string::npos);
  CHECK(invoke({"det", "--matrix", "1,2;3"}).code == kExitUsage);
  CHECK(invoke({"det", "--matrix", "3,1;1,4", "--format", "svg"}).code == kExitUsage);
  CHECK(invoke({"ramsey-steady", "--config", "/nonexistent.cfg"}).code == kExitIo);
  CHECK(invoke({"det", "--matrix", "3,1;1,4", "-o", "/nonexistent/dir/out"}).code == kExitIo);
  CHECK(invoke({"cramer", "--matrix", "1,2;2,4", "--rhs", "1,1"}).code == kExitDomain);
  CHECK(invoke({"--help"}).code == kExitOk);
}

TEST_CASE("det prints the area") {
  const Outcome o = invoke({"det", "--matrix", "3,1;1,4"});
  CHECK(o.code == 0);
  CHECK(o.out == "11\n");
}

TEST_CASE("eig walks through the eigenbasis") {
  const Outcome o = invoke({"eig", "--matrix", "2.5,-0.5;-0.5,2.5", "--x", "1,3"});
  CHECK(o.code == 0);
  CHECK(o.out.find("eigen coordinates = (2, 1)") != std::string::npos);
  CHECK(o.out.find("stretched = (4, 3)") != std::string::npos);
  CHECK(o.out.find("A x = (1, 7)") != std::string::npos);
}

TEST_CASE("companion, taylor, crra and sphere") {
  CHECK(invoke({"companion", "--coeffs", "1,1,1", "--x", "3"}).out == "40\n");
  CHECK(invoke({"companion", "--coeffs", "1,1,1", "--x", "-1"}).out == "0\n");
  CHECK(invoke({"taylor", "--x", "0"}).out.find("cos = 1\n") != std::string::npos);
  CHECK(invoke({"crra", "--theta", "2", "--x", "1.5"}).out.find("Arrow-Pratt = 2\n") != std::string::npos);
  CHECK(invoke({"sphere", "--matrix", "3,1;1,4"}).out.find("lambda_max = 4.61803398875") != std::string::npos);
}

TEST_CASE("sphere start vector honours the seed variable") {
  ::setenv("ECON_MATH_LAB_SEED", "12345", 1);
  const Outcome a = invoke({"sphere", "--matrix", "3,1;1,4"});
  const Outcome b = invoke({"sphere", "--matrix", "3,1;1,4"});
  ::setenv("ECON_MATH_LAB_SEED", "not-a-number", 1);
  const Outcome bad = invoke({"sphere", "--matrix", "3,1;1,4"});
  ::unsetenv("ECON_MATH_LAB_SEED");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("lambda_min = 2.38196601125") != std::string::npos);
  CHECK(bad.code == kExitUsage);
}

TEST_CASE("carbon table converges to the limit") {
  const Outcome o = invoke({"carbon", "--tau-oc", "30", "--tau-ld", "30", "--f0", "10", "--d", "0.02", "--x0", "600",
                            "--t1", "200"});
  REQUIRE(o.code == 0);
  const std::string row = last_csv_row(o.out);
  const double af = std::stod(row.substr(row.rfind(',', row.rfind(',') - 1) + 1));
  CHECK(std::abs(af - 3.0 / 13.0) < 1e-3);
  CHECK(row.rfind("200,", 0) == 0);
}

TEST_CASE("ramsey subcommands") {
  const Outcome saddle = invoke({"ramsey-saddle", "--config", "baseline", "--k0-frac", "0.5"});
  CHECK(saddle.code == 0);
  CHECK(saddle.out.find("c0 linear = ") != std::string::npos);
  CHECK(saddle.out.find("c0 shooting = ") != std::string::npos);
  CHECK(saddle.out.find("relative gap = ") != std::string::npos);
  const Outcome lin = invoke({"ramsey-linearize"});
  CHECK(lin.out.find("J = [[0.04, -0.32], [-0.042, 0]]") != std::string::npos);
  const Outcome verify = invoke({"ramsey-verify", "--config", "baseline"});
  CHECK(verify.code == 0);
  CHECK(verify.out.find("15/15 checks passed") != std::string::npos);
  const Outcome sim = invoke({"ramsey-simulate", "--t1", "10"});
  CHECK(sim.code == 0);
  CHECK(sim.out.rfind("t,log_k,log_c,k,c,r,w\n", 0) == 0);
}

TEST_CASE("output file") {
  const std::string path = "cli_test_output.txt";
  REQUIRE(invoke({"det", "--matrix", "3,1;1,4", "--output", path}).code == 0);
  std::ifstream in(path);
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(content == "11\n");
  std::remove(path.c_str());
}

}
