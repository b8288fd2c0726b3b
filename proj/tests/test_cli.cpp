#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

TEST_SUITE_BEGIN("cli");

namespace {

std::string cli_path() {
  const char* p = std::getenv("SIXTERMK_CLI_BIN");
  return p ? p : "sixtermk";
}

struct RunResult {
  int status;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), n);
  int raw = pclose(pipe);
  return {WEXITSTATUS(raw), out};
}

RunResult run_cli(const std::string& args) { return run(cli_path() + " " + args); }

}  // namespace

TEST_CASE("describe prints the pinned sequence") {
  RunResult r = run_cli("describe E:2:0");
  CHECK(r.status == 0);
  CHECK(r.out ==
        "descriptor: E:2:0\n"
        "p0 = 0\n"
        "p1 = 0\n"
        "p2 = Z\n"
        "p3 = Z\n"
        "p4 = Z/2\n"
        "p5 = 0\n"
        "m0 = [] : 0 -> 0\n"
        "m1 = [] : 0 -> Z\n"
        "m2 = [[2]] : Z -> Z\n"
        "m3 = [[1]] : Z -> Z/2\n"
        "m4 = [] : Z/2 -> 0\n"
        "m5 = [] : 0 -> 0\n"
        "exact: yes\n");
}

TEST_CASE("mc six times reproduces describe byte for byte") {
  RunResult a = run_cli("mc E:2:0 --times 6");
  RunResult b = run_cli("describe E:2:0");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  // And determinism: repeated invocations are identical.
  CHECK(run_cli("describe E:2:0").out == b.out);
}

TEST_CASE("json output round trips through file:-") {
  RunResult once = run_cli("describe E:3:2 --format json");
  CHECK(once.status == 0);
  RunResult twice = run(cli_path() + " describe E:3:2 --format json | " +
                        cli_path() + " describe file:- --format json");
  CHECK(twice.status == 0);
  CHECK(once.out == twice.out);
}

TEST_CASE("table emits the expected pinned entries") {
  RunResult r = run_cli("table --n 2 --k 3");
  CHECK(r.status == 0);
  CHECK(r.out.find("table n=2 k=3") == 0);
  // H_{3,2} at column e^0 is Z/6.
  CHECK(r.out.find("H_2   Z/6") != std::string::npos);
  CHECK(r.out.find("F1_4  Z/2") != std::string::npos);
}

TEST_CASE("verify succeeds on a catalog extension") {
  RunResult r = run_cli("verify E:2:0 --mods 2 --diagrams D0,SEQ4");
  CHECK(r.status == 0);
  CHECK(r.out.find("D0: pass=54 fail=0 skip=0") != std::string::npos);
}

TEST_CASE("hom-six and hom print group literals") {
  RunResult r = run_cli("hom-six F1:0 F1:0");
  CHECK(r.status == 0);
  CHECK(r.out == "Hom_six(F1:0, F1:0) = Z\n");
  RunResult h = run_cli("hom E:2:0 E:2:0 --mods 2");
  CHECK(h.status == 0);
  CHECK(h.out == "Hom_Lambda(E:2:0, E:2:0) = Z\n");
}

TEST_CASE("solve reports provenance and exit 0") {
  RunResult r = run_cli("solve E:2:0 --mods 2");
  CHECK(r.status == 0);
  CHECK(r.out.find("H:") != std::string::npos);
  CHECK(r.out.find("R2:") != std::string::npos);
}

TEST_CASE("input errors exit with status 2") {
  CHECK(run_cli("describe Q:bad").status == 2);
  CHECK(run_cli("describe E:1:0").status == 2);
  CHECK(run_cli("frobnicate").status != 0);
}

TEST_CASE("sequence files load through file:PATH") {
  std::string path = "/tmp/sixtermk_cli_test_seq.json";
  {
    RunResult j = run_cli("describe F:4:1 --format json");
    std::ofstream out(path);
    out << j.out;
  }
  RunResult r = run_cli("describe file:" + path);
  CHECK(r.status == 0);
  CHECK(r.out.find("descriptor: F:4:1") == 0);
  CHECK(r.out.find("p4 = Z/4") != std::string::npos);
  std::remove(path.c_str());
}

TEST_SUITE_END();
