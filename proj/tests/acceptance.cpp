// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <sys/wait.h>

#include "json.hpp"
#include "planeprover/cli/report.hpp"
#include "planeprover/kernel/errors.hpp"

namespace {

using namespace planeprover;
using theorems::Verdict;

struct Outcome {
  int code = -1;
  std::string out;
};

Outcome run(const std::string& cmd) {
  Outcome o;
  FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
  if (!pipe) return o;
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) o.out.append(buf.data(), n);
  int status = pclose(pipe);
  o.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return o;
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

// Runs the named gtest cases; passes iff all of them ran and passed.
std::pair<bool, std::string> suite(const std::string& binary, const std::string& filter, int expected_tests) {
  Outcome o = run(quoted(binary) + " --gtest_brief=1 --gtest_filter=" + quoted(filter));
  std::string want = "[  PASSED  ] " + std::to_string(expected_tests) + " test";
  bool ok = o.code == 0 && o.out.find(want) != std::string::npos;
  return {ok, std::to_string(expected_tests) + " cases of " + filter + (ok ? "" : "\n" + o.out)};
}

std::pair<bool, std::string> full_catalog() {
  auto start = std::chrono::steady_clock::now();
  Outcome o = run(quoted(PLANEPROVER_BIN) + " --json prove --all --parallel");
  double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  cli::RunReport report;
  try {
    auto json_start = o.out.find('{');
    report = cli::report_from_json(json_start == std::string::npos ? o.out : o.out.substr(json_start));
  } catch (const Error& e) {
    return {false, std::string("no report: ") + e.what()};
  }
  int proved = 0, certificates = 0;
  double slowest = 0;
  std::string slowest_id, problems;
  for (const auto& e : report.results) {
    if (e.millis > slowest) {
      slowest = e.millis;
      slowest_id = e.id;
    }
    if (e.id == "Lehmus") {
      if (e.verdict == Verdict::certificate && e.certificate && e.certificate->divisor == "m-n") ++certificates;
      else problems += " Lehmus";
    } else if (e.verdict == Verdict::proved) {
      ++proved;
    } else {
      problems += " " + e.id + "=" + std::string(theorems::verdict_name(e.verdict));
    }
  }
  bool ok = o.code == 0 && report.results.size() == 25 && proved == 24 && certificates == 1 && slowest <= 300'000 &&
            total <= 1200;
  char detail[256];
  std::snprintf(detail, sizeof detail, "%d proved, %d certificate (divisor m-n), slowest %s %.1f s, wall %.1f s", proved,
                certificates, slowest_id.c_str(), slowest / 1000, total);
  return {ok, detail + (problems.empty() ? "" : ";" + problems)};
}

std::pair<bool, std::string> oracle_agreement() {
  std::string problems;
  int checks = 0;
  for (const auto& record : theorems::catalog()) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed, ++checks) {
      try {
        if (!theorems::numeric_spot_check(record.id, seed)) problems += " " + record.id + "@" + std::to_string(seed);
      } catch (const Error& e) {
        problems += " " + record.id + "@" + std::to_string(seed) + "(" + e.what() + ")";
      }
    }
  }
  std::map<theorems::ClaimKind, int> rejected;
  int mutations = 0;
  for (const auto& m : theorems::mutations()) {
    ++mutations;
    auto kind = theorems::find(m.id).kind;
    try {
      if (!theorems::numeric_spot_check(m.id, 11, m.site)) ++rejected[kind];
      else problems += " mutation " + m.id + "#" + std::to_string(m.site) + " accepted";
    } catch (const Error& e) {
      problems += " mutation " + m.id + "#" + std::to_string(m.site) + "(" + e.what() + ")";
    }
  }
  std::string per_kind;
  bool enough = true;
  for (const auto& record : theorems::catalog()) rejected.try_emplace(record.kind, 0);
  for (const auto& [kind, n] : rejected) {
    per_kind += " " + std::string(theorems::claim_kind_name(kind)) + "=" + std::to_string(n);
    enough = enough && n >= 3;
  }
  return {problems.empty() && enough, std::to_string(checks) + " seeded checks agree; " + std::to_string(mutations) +
                                          " mutations rejected by kind:" + per_kind + problems};
}

std::pair<bool, std::string> dsl() {
  auto [ok, detail] = suite(CLI_TEST_BIN, "RoundTrip.ParseOfPrintIsIdentityOnGeneratedScripts", 1);
  Outcome o = run(quoted(PLANEPROVER_BIN) + " check " + quoted(std::string(PLANEPROVER_SCRIPTS) + "/napoleon.geo"));
  bool napoleon = o.code == 0 && o.out.rfind("assert#1: proved", 0) == 0;
  return {ok && napoleon, "round trip on 1000 generated scripts " + std::string(ok ? "holds" : "fails") +
                              "; check napoleon.geo -> " + (napoleon ? "proved" : "'" + o.out + "'")};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<std::pair<bool, std::string>()> check;
  };
  std::vector<Criterion> criteria = {
      {"full catalog run", full_catalog},
      {"oracle agreement", oracle_agreement},
      {"kernel property suite",
       [] {
         return suite(KERNEL_TEST_BIN, "KernelProperty.*", 6);
       }},
      {"groebner suite",
       [] {
         return suite(GROEBNER_TEST_BIN,
                      "GroebnerProperty.RandomIdeals:Groebner.SoddyTangencySystem:Groebner.WorkedExample", 3);
       }},
      {"geometry identities",
       [] {
         return suite(GEOMETRY_TEST_BIN,
                      "GeometryTest.IncidencePerpendicularityCircleThrough:GeometryTest.Parametrizations:"
                      "GeometryTest.Circles:GeometryTest.Tangents",
                      4);
       }},
      {"herron radical cancellation",
       [] {
         return suite(THEOREMS_TEST_BIN, "Herron.RadicalsCancelToTheClosedForm", 1);
       }},
      {"dsl round trip and napoleon check", dsl},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    std::pair<bool, std::string> result;
    try {
      result = c.check();
    } catch (const std::exception& e) {
      result = {false, e.what()};
    }
    std::cout << (result.first ? "PASS " : "FAIL ") << c.name << ": " << result.second << std::endl;
    failures += !result.first;
  }
  return failures ? 1 : 0;
}
