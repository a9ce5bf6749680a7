#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "deltakern/kernels.hpp"

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

// Runs the delta-kernels binary (path from DELTA_KERNELS_BIN) under /bin/sh
// and captures stdout; stderr is dropped unless the caller merges it.
RunResult run_cli(const std::string& args, bool merge_stderr = false) {
  const char* bin = std::getenv("DELTA_KERNELS_BIN");
  REQUIRE(bin != nullptr);
  std::string cmd = "DELTA_KERNELS_THREADS=2 \"" + std::string(bin) + "\" " +
                    args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_config(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << body;
  out.close();
  return path.string();
}

// First "key: value" occurrence in line-oriented output.
std::string field(const std::string& out, const std::string& key) {
  const std::string tag = key + ": ";
  const size_t at = out.find(tag);
  if (at == std::string::npos) return {};
  const size_t end = out.find('\n', at);
  return out.substr(at + tag.size(), end - at - tag.size());
}

constexpr char kCsvHeader[] =
    "kernel_family,params,test_function,anchor,cutoff,computed,target,"
    "abs_error,wall_time_ms";

}  // namespace

TEST_CASE("kernel-eval prints the closed-form value") {
  // Order-0 Legendre kernel is 1/2 everywhere.
  RunResult r = run_cli(
      "kernel-eval --family legendre --n 0 --t 0.3 --x 0.3");
  CHECK(r.code == 0);
  CHECK(field(r.out, "kernel_family") == "legendre");
  CHECK(field(r.out, "value") == "0.5");

  // A Hankel-pair point must match the in-process closed form bit-for-bit
  // up to the %.17g print.
  deltakern::KernelSpec s;
  s.family = deltakern::Family::kBesselHankel;
  s.nu = 0.0;
  s.a = 1.0;
  s.R = 10.0;
  const double want = deltakern::kernel_closed(s, 2.0).value;
  r = run_cli("kernel-eval --family bessel --nu 0 --a 1 --x 2 --R 10");
  CHECK(r.code == 0);
  CHECK(std::abs(std::stod(field(r.out, "value")) - want) <= 1e-15);
}

TEST_CASE("kernel-eval usage errors exit with 2") {
  CHECK(run_cli("kernel-eval --family bogus --a 1 --x 2 --R 10").code == 2);
  // Missing --R for an integral family.
  CHECK(run_cli("kernel-eval --family bessel --a 1 --x 2").code == 2);
  // Series order must be an integer.
  CHECK(run_cli("kernel-eval --family legendre --n 2.5 --t 0 --x 0").code ==
        2);
  // Domain violation (Legendre off [-1,1]) is a config error, not numerical.
  CHECK(run_cli("kernel-eval --family legendre --n 3 --t 1.5 --x 0").code ==
        2);
}

TEST_CASE("top-level usage errors exit with 2") {
  CHECK(run_cli("").code == 2);
  CHECK(run_cli("frobnicate").code == 2);
  CHECK(run_cli("selftest bogus").code == 2);
}

TEST_CASE("converge emits deterministic JSON with ordered keys") {
  const std::string cfg = write_config("dk_cli_json.cfg",
                                       "# hankel ladder\n"
                                       "family = bessel\n"
                                       "nu = 0\n"
                                       "test_function = gauss\n"
                                       "anchor = 1.0\n"
                                       "cutoffs = 10, 20\n"
                                       "output = json\n"
                                       "seed = 7\n");
  RunResult first = run_cli("converge " + cfg);
  RunResult second = run_cli("converge " + cfg);
  CHECK(first.code == 0);
  REQUIRE(!first.out.empty());
  // Byte-identical across runs: timings are zeroed unless requested.
  CHECK(first.out == second.out);

  // Keys appear in schema order inside each object.
  const char* keys[] = {"kernel_family", "params",   "test_function",
                        "anchor",        "cutoff",   "computed",
                        "target",        "abs_error", "wall_time_ms"};
  size_t prev = 0;
  for (const char* k : keys) {
    const size_t at = first.out.find("\"" + std::string(k) + "\"", prev);
    CAPTURE(k);
    REQUIRE(at != std::string::npos);
    CHECK(at > prev);
    prev = at;
  }
  CHECK(first.out.find("\"wall_time_ms\": 0.0") != std::string::npos);

  // With timings requested the output may differ run to run.
  RunResult timed = run_cli("converge " + cfg + " --timings");
  CHECK(timed.code == 0);
}

TEST_CASE("converge emits the exact CSV header") {
  const std::string cfg = write_config("dk_cli_csv.cfg",
                                       "family = cauchy\n"
                                       "test_function = gauss\n"
                                       "anchor = 0.5\n"
                                       "cutoffs = 100, 1000\n"
                                       "output = csv\n");
  RunResult r = run_cli("converge " + cfg);
  CHECK(r.code == 0);
  REQUIRE(r.out.find('\n') != std::string::npos);
  CHECK(r.out.substr(0, r.out.find('\n')) == kCsvHeader);
  // Two data rows follow the header.
  int lines = 0;
  for (char c : r.out)
    if (c == '\n') ++lines;
  CHECK(lines == 3);
}

TEST_CASE("converge config errors exit with 2") {
  const std::string bad_key = write_config("dk_cli_badkey.cfg",
                                           "family = bessel\n"
                                           "wibble = 3\n");
  CHECK(run_cli("converge " + bad_key).code == 2);

  const std::string bad_cuts = write_config("dk_cli_badcuts.cfg",
                                            "family = bessel\n"
                                            "test_function = gauss\n"
                                            "anchor = 1\n"
                                            "cutoffs = 20, 10\n");
  CHECK(run_cli("converge " + bad_cuts).code == 2);

  const std::string bad_tf = write_config("dk_cli_badtf.cfg",
                                          "family = bessel\n"
                                          "test_function = nope\n"
                                          "anchor = 1\n"
                                          "cutoffs = 10, 20\n");
  CHECK(run_cli("converge " + bad_tf).code == 2);

  CHECK(run_cli("converge /nonexistent/path.cfg").code == 2);

  // Uncertified pairing is refused up front.
  const std::string bad_pair = write_config("dk_cli_badpair.cfg",
                                            "family = weber\n"
                                            "test_function = exp_decay\n"
                                            "anchor = 1\n"
                                            "cutoffs = 10, 20\n");
  CHECK(run_cli("converge " + bad_pair).code == 2);
}

TEST_CASE("validate-asymptotics exit codes") {
  CHECK(run_cli("validate-asymptotics --family bessel --x 1 "
                "--t-lo 20 --t-hi 200")
            .code == 0);
  // Missing the sample point for a family that needs one.
  CHECK(run_cli("validate-asymptotics --family bessel --t-lo 20 --t-hi 200")
            .code == 2);
  // Series families have no oscillatory tail to validate.
  CHECK(run_cli("validate-asymptotics --family legendre --x 1 "
                "--t-lo 20 --t-hi 200")
            .code == 2);
  RunResult weber = run_cli(
      "validate-asymptotics --family weber --a 0 --t-lo 8 --t-hi 80", true);
  // The Weber envelope error decays a full order faster than the first-order
  // band the validator checks, so this run reports a miss.
  CHECK(weber.code == 1);
  CHECK(weber.out.find("pass: no") != std::string::npos);
  const double fitted = std::stod(field(weber.out, "fitted_exponent"));
  CHECK(fitted < -1.65);
  CHECK(fitted > -2.35);
}

TEST_CASE("rl-check reports decaying probes and exits clean") {
  RunResult r = run_cli("rl-check", true);
  CHECK(r.code == 0);
  CHECK(r.out.find("[FAIL]") == std::string::npos);
  // Three probes, each with its ladder of magnitudes.
  int passes = 0;
  size_t at = 0;
  while ((at = r.out.find("[PASS]", at)) != std::string::npos) {
    ++passes;
    ++at;
  }
  CHECK(passes == 3);
  // An impossible decay demand must flip the exit code.
  CHECK(run_cli("rl-check --ratio-max 1e-15").code == 1);
}

TEST_CASE("selftest fast passes end to end") {
  RunResult r = run_cli("selftest fast", true);
  CHECK(r.code == 0);
  CHECK(r.out.find("[FAIL]") == std::string::npos);
  CHECK(r.out.find("suites passed") != std::string::npos);
}
