// End-to-end checks of the installed command-line surface.  The binary path
// comes from the TERRACINI_CLI environment variable (set by CTest).
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
  const char* cli = std::getenv("TERRACINI_CLI");
  REQUIRE_MESSAGE(cli != nullptr, "TERRACINI_CLI must point at the CLI binary");
  std::string cmd = std::string("'") + cli + "' " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) output.append(buf, got);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, output};
}

}  // namespace

TEST_CASE("matroid subcommand prints rank and base count") {
  RunResult r = run_cli("matroid --builtin table1_x1");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("rank 4, 141 bases") != std::string::npos);

  RunResult x3 = run_cli("matroid --builtin table1_x3");
  CHECK(x3.output.find("rank 4, 210 bases") != std::string::npos);

  // a rank-2 toric curve given inline
  RunResult inline_spec = run_cli(R"(matroid '{"type":"toric","exponents":[[0,1,2]]}')");
  CHECK(inline_spec.exit_code == 0);
  CHECK(inline_spec.output.find("rank 2, 3 bases") != std::string::npos);
}

TEST_CASE("union-check exit codes encode the verdict") {
  CHECK(run_cli("union-check --builtin 'veronese(2,3)' -s 2").exit_code == 3);
  CHECK(run_cli("union-check --builtin coloop_extension -s 2").exit_code == 0);
  CHECK(run_cli("union-check --builtin p1xp1_23 -s 2").exit_code == 3);
  RunResult r = run_cli("union-check --builtin 'veronese(2,3)' -s 2");
  CHECK(r.output.find("NOT a Terracini union") != std::string::npos);
  CHECK(r.output.find("{z0 z1 z2 z4 z5 z7}") != std::string::npos);
}

TEST_CASE("usage and cap errors") {
  CHECK(run_cli("matroid no_such_file.json").exit_code == 2);
  CHECK(run_cli("matroid --builtin nosuchthing").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("union-check --builtin 'sym_rank_one(8)' -s 2").exit_code == 5);
  CHECK(run_cli("matroid --builtin 'veronese(2,9)' --bases").exit_code == 5);
  CHECK(run_cli("matroid --builtin 'veronese(2,3)' --prime 100").exit_code == 2);
  CHECK(run_cli("rank --builtin 'veronese(2,3)' -E z0,zz").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("rank, defect and partition subcommands") {
  RunResult r = run_cli(
      "rank --builtin 'sym_rank_one(8)' -s 2 "
      "-E a15,a16,a17,a18,a25,a26,a27,a28,a35,a36,a37,a38,a45,a46,a47,a48");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("= 12") != std::string::npos);
  CHECK(r.output.find("defect 2") != std::string::npos);

  RunResult d = run_cli("defect --builtin 'segre(4,4)' -s 2");
  CHECK(d.output.find("expected dim 14, actual dim 12") != std::string::npos);

  RunResult good = run_cli("partition --builtin 'veronese(2,3)' -s 2 -E z0,z1,z2,z4,z5,z7");
  CHECK(good.exit_code == 0);
  CHECK(good.output.find("independent in the matroid union") != std::string::npos);
  RunResult bad = run_cli("partition --builtin 'veronese(2,3)' -s 2 -E z0,z1,z2,z3,z4,z5,z6");
  CHECK(bad.exit_code == 3);
}

TEST_CASE("scan subcommand") {
  RunResult r = run_cli(R"(scan '{"type":"simplex","dim":2,"degree":3}')");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("3 pattern matches") != std::string::npos);
  CHECK(r.output.find("missing basis of the 2-secant union check") != std::string::npos);

  RunResult g = run_cli(R"(scan '{"type":"grid","box":[3,2]}')");
  CHECK(g.output.find("2 pattern matches") != std::string::npos);
}

TEST_CASE("cone subcommand reports the coloop dichotomy") {
  RunResult r = run_cli("cone --builtin coloop_extension");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("coloops: z6") != std::string::npos);
  CHECK(r.output.find("defective") != std::string::npos);
}

TEST_CASE("union-check accepts an explicit join document") {
  RunResult r = run_cli(
      R"(union-check '{"type":"join","summands":[)"
      R"({"type":"polymap","vars":["t"],"components":["t","t","t"]},)"
      R"({"type":"polymap","vars":["t"],"components":["t","0-t","2*t"]}]}')");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("TERRACINI UNION") != std::string::npos);
  // -s on an input that is already a join is a usage error
  CHECK(run_cli(R"(union-check -s 2 '{"type":"secant","s":2,"inner":)"
                R"({"type":"builtin","name":"veronese","params":{"d":3}}}')").exit_code == 2);
}

TEST_CASE("json output is byte-identical across runs and worker counts") {
  std::string base = "union-check --builtin p1xp1_23 -s 2 --output json";
  RunResult w1 = run_cli(base + " --workers 1");
  RunResult w2 = run_cli(base + " --workers 2");
  RunResult again = run_cli(base + " --workers 1");
  CHECK(w1.output == w2.output);
  CHECK(w1.output == again.output);
  CHECK(w1.output.find("\"is_terracini_union\": false") != std::string::npos);

  // different seed, same verdict: content may differ but must stay valid
  RunResult seeded = run_cli(base + " --seed 123");
  CHECK(seeded.exit_code == 3);
}

TEST_CASE("subgroup sampler via flags reproduces the special sample") {
  RunResult r = run_cli(
      "matroid --builtin p1xp1_23 -s 2 --sampler subgroup --directions '2,1;1,1' --base 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("rank 6, 486 bases") != std::string::npos);
  RunResult generic = run_cli("matroid --builtin p1xp1_23 -s 2");
  CHECK(generic.output.find("rank 6, 916 bases") != std::string::npos);
}

TEST_CASE("spec files are read from disk") {
  std::string path = "cli_test_spec.json";
  {
    std::ofstream out(path);
    out << R"({"type":"secant","s":2,"inner":{"type":"builtin","name":"veronese","params":{"n":2,"d":3}}})";
  }
  RunResult r = run_cli("matroid " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("rank 6, 207 bases") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("examples registry verifies its golden values") {
  CHECK(run_cli("examples table1").exit_code == 0);
  CHECK(run_cli("examples lines").exit_code == 0);
  RunResult r = run_cli("examples veronese-cubic");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("[ok]") != std::string::npos);
  CHECK(r.output.find("all golden values match") != std::string::npos);
  CHECK(run_cli("examples nosuch").exit_code == 2);
}
