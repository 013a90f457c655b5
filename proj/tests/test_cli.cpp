#include <doctest.h>

#include <cstdio>
#include <string>

// Drives the installed binary end to end through a shell, checking output
// bytes and the exit-code contract (0 pass / 1 math failure / 2 usage).

namespace {

struct CmdResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr interleaved
};

CmdResult run_cli(const std::string& args) {
  const std::string cmd = std::string(LOCALH_CLI_PATH) + " " + args + " 2>&1";
  CmdResult res;
  FILE* f = popen(cmd.c_str(), "r");
  REQUIRE(f != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, f)) > 0) res.output.append(buf, n);
  const int rc = pclose(f);
  res.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return res;
}

CmdResult run_with_env(const std::string& env, const std::string& args) {
  const std::string cmd =
      env + " " + std::string(LOCALH_CLI_PATH) + " " + args + " 2>&1";
  CmdResult res;
  FILE* f = popen(cmd.c_str(), "r");
  REQUIRE(f != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, f)) > 0) res.output.append(buf, n);
  const int rc = pclose(f);
  res.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return res;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("xi command prints the E8 row") {
  const CmdResult r = run_cli("xi --type E8 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "E8,8,,0;44;484;784;120"));
}

TEST_CASE("xi rejects out-of-range ranks with a diagnostic") {
  const CmdResult r = run_cli("xi --type A --rank 0");
  CHECK(r.exit_code == 2);
  CHECK(contains(r.output, "n >= 1"));
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli("xi --type Z9").exit_code == 2);
  CHECK(run_cli("xi").exit_code == 2);
  CHECK(run_cli("certify --type A").exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
  CHECK(run_cli("ms-test --seq no-such-sequence --depth 3").exit_code == 2);
  CHECK(run_cli("xi --type A --ranks 5..3").exit_code == 2);
  CHECK(run_cli("xi --type H3 --rank 3").exit_code == 2);
}

TEST_CASE("local-h prints the B2 polynomial") {
  const CmdResult r = run_cli("local-h --type B --rank 2 --format json-lines");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "\"coeffs\":[\"0\",\"2\"]"));
}

TEST_CASE("certify F4 reports a real-rooted certificate") {
  const CmdResult r = run_cli("certify --type F4 --format json-lines");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "\"coeffs\":[\"0\",\"10\",\"29\",\"10\"]"));
  CHECK(contains(r.output, "\"real_rooted\":true"));
  CHECK(contains(r.output, "\"neg_inf_to_m1\":1"));
  CHECK(contains(r.output, "\"m1_to_0\":1"));
}

TEST_CASE("certify flags the zero polynomial as degenerate") {
  const CmdResult r = run_cli("certify --type D --ranks 2..2 --format json-lines");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "\"degenerate\":true"));
  CHECK(contains(r.output, "\"real_rooted\":true"));
}

TEST_CASE("certify --show-roots appends intervals") {
  const CmdResult r =
      run_cli("certify --type A --rank 4 --show-roots --format json-lines");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "\"intervals\":["));
}

TEST_CASE("ms-test explicit failure exits 1 and names the level") {
  const CmdResult r = run_cli("ms-test --explicit 1,0,1 --depth 3");
  CHECK(r.exit_code == 1);
  CHECK(contains(r.output, "n=2 FAIL"));
  CHECK(contains(r.output, "overall=FAIL"));
}

TEST_CASE("ms-test named sequences pass") {
  CHECK(run_cli("ms-test --seq reciprocal-factorial --depth 20").exit_code == 0);
  CHECK(run_cli("ms-test --seq binomial-reciprocal --param 6 --depth 12").exit_code ==
        0);
}

TEST_CASE("chebyshev command runs all four checks") {
  const CmdResult r = run_cli("chebyshev --n 10");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "recurrence-vs-closed-form PASS"));
  CHECK(contains(r.output, "reciprocal-substitution PASS"));
  CHECK(contains(r.output, "h-roots-negative-simple PASS"));
  CHECK(contains(r.output, "root-oracle-agreement PASS"));
  CHECK(run_cli("chebyshev --n 0").exit_code == 0);
  const CmdResult roots = run_cli("chebyshev --n 4 --show-roots");
  CHECK(roots.exit_code == 0);
  CHECK(contains(roots.output, "intervals ["));
}

TEST_CASE("narayana-check over a range") {
  const CmdResult r = run_cli("narayana-check --ranks 2..10 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "4,true"));
  CHECK_FALSE(contains(r.output, "false"));
}

TEST_CASE("transfer-check records agreement") {
  const CmdResult r = run_cli("transfer-check --type A --ranks 4..8 --format json-lines");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "\"agree\":true"));
  CHECK(contains(r.output, "\"matches_claim\":true"));
  CHECK_FALSE(contains(r.output, "\"agree\":false"));
  CHECK_FALSE(contains(r.output, "\"matches_claim\":false"));
  CHECK_FALSE(contains(r.output, "\"pass\":false"));
}

TEST_CASE("output bytes are identical across runs and worker counts") {
  const std::string args = "certify --type B --ranks 2..24 --format json-lines";
  const CmdResult a = run_with_env("LOCALH_JOBS=1", args);
  const CmdResult b = run_with_env("LOCALH_JOBS=4", args);
  const CmdResult c = run_with_env("LOCALH_JOBS=4", args);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(b.output == c.output);
}

TEST_CASE("--out writes the same bytes to a file") {
  const std::string path = "/tmp/localh_cli_out_test.jsonl";
  const CmdResult direct = run_cli("xi --type E7 --format json-lines");
  const CmdResult redirected =
      run_cli("xi --type E7 --format json-lines --out " + path);
  CHECK(redirected.exit_code == 0);
  CHECK(redirected.output.empty());
  FILE* f = fopen(path.c_str(), "r");
  REQUIRE(f != nullptr);
  std::string content;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, f)) > 0) content.append(buf, n);
  fclose(f);
  std::remove(path.c_str());
  CHECK(content == direct.output);
}
