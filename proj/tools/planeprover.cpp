#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "planeprover/cli/report.hpp"
#include "planeprover/kernel/budget.hpp"
#include "planeprover/kernel/errors.hpp"

namespace {

using namespace planeprover;
using cli::RunReport;
using theorems::Verdict;

constexpr int kUsage = 2;

struct Flags {
  bool json = false;
  bool trace = false;
  double timeout_sec = 300;
  std::optional<std::size_t> max_terms;
};

// Flag wins over PLANEPROVER_MAX_TERMS, which wins over the kernel default.
void apply_max_terms(const Flags& flags) {
  if (flags.max_terms) {
    kernel::set_max_terms(*flags.max_terms);
    return;
  }
  const char* env = std::getenv("PLANEPROVER_MAX_TERMS");
  if (!env || !*env) return;
  char* end = nullptr;
  unsigned long long n = std::strtoull(env, &end, 10);
  if (*end != '\0' || n == 0) {
    throw Error(Errc::invalid_argument, std::string("PLANEPROVER_MAX_TERMS must be a positive integer, got '") + env + "'");
  }
  kernel::set_max_terms(static_cast<std::size_t>(n));
}

theorems::ProveOptions prove_options(const Flags& flags, std::mutex& out_mu) {
  theorems::ProveOptions options;
  options.timeout = std::chrono::milliseconds(static_cast<long long>(flags.timeout_sec * 1000));
  if (flags.trace) {
    // With --json the report owns stdout.
    std::ostream* sink = flags.json ? &std::cerr : &std::cout;
    options.trace = [sink, &out_mu](const std::string& line) {
      std::lock_guard lock(out_mu);
      *sink << "  " << line << '\n';
    };
  }
  return options;
}

std::string summary(const cli::ReportEntry& e) {
  std::string line = e.id + ": " + std::string(theorems::verdict_name(e.verdict));
  if (e.verdict == Verdict::certificate && e.certificate) line += " (divisor " + e.certificate->divisor + ")";
  return line;
}

int emit(const RunReport& report, const Flags& flags, const std::vector<std::string>& labels = {}) {
  if (flags.json) {
    std::cout << cli::to_json(report) << '\n';
  } else {
    for (std::size_t k = 0; k < report.results.size(); ++k) {
      std::cout << summary(report.results[k]);
      if (k < labels.size()) std::cout << "  " << labels[k];
      std::cout << '\n';
    }
  }
  for (const cli::Diagnostic& d : report.diagnostics) std::cerr << d.id << ": " << d.message << '\n';
  return report.exit_code();
}

int list_command(const Flags& flags) {
  if (flags.json) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : theorems::catalog()) {
      rows.push_back({{"id", r.id},
                      {"title", r.title},
                      {"kind", theorems::claim_kind_name(r.kind)},
                      {"expected", theorems::verdict_name(r.expected)}});
    }
    std::cout << rows.dump(2) << '\n';
    return 0;
  }
  for (const auto& r : theorems::catalog()) {
    std::printf("%-32s %-15s %-12s %s\n", r.id.c_str(), std::string(theorems::claim_kind_name(r.kind)).c_str(),
                std::string(theorems::verdict_name(r.expected)).c_str(), r.title.c_str());
  }
  return 0;
}

int prove_command(const Flags& flags, const std::vector<std::string>& ids, bool all, bool parallel) {
  if (all == !ids.empty()) {
    std::cerr << "prove: give theorem ids or --all, not both\n";
    return kUsage;
  }
  if (parallel && !all) {
    std::cerr << "prove: --parallel applies to --all only\n";
    return kUsage;
  }
  for (const std::string& id : ids) theorems::find(id);  // unknown ids fail before any work

  std::mutex out_mu;
  theorems::ProveOptions options = prove_options(flags, out_mu);
  RunReport report;
  std::string request = "prove";
  if (all) {
    request += " --all";
    for (const auto& r : theorems::prove_all(parallel, options)) report.add(r);
  } else {
    for (const std::string& id : ids) {
      request += " " + id;
      report.add(theorems::prove(id, options));
    }
  }
  report.digest = cli::fnv1a_digest(request);
  return emit(report, flags);
}

int check_command(const Flags& flags, const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::not_found, "cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  cli::Script script = cli::parse_script(text.str());

  std::mutex out_mu;
  cli::RunOptions options;
  options.prove = prove_options(flags, out_mu);
  RunReport report = cli::run_script(script, options);
  std::vector<std::string> claims;
  for (const auto& st : script.statements) {
    if (st.kind == cli::Statement::Kind::assert_claim) {
      claims.push_back("(line " + std::to_string(st.line) + ") " + cli::print_expr(st.expr));
    }
  }
  return emit(report, flags, claims);
}

int oracle_command(const Flags& flags, const std::string& id, std::uint64_t seed, std::optional<int> mutation) {
  const auto& record = theorems::find(id);
  if (mutation && (*mutation < 0 || *mutation >= record.mutation_sites)) {
    std::cerr << "oracle: " << id << " has mutation sites 0.." << record.mutation_sites - 1 << '\n';
    return kUsage;
  }
  bool agrees = theorems::numeric_spot_check(id, seed, mutation);
  if (flags.json) {
    nlohmann::json doc = {{"id", record.id}, {"seed", seed}, {"holds", agrees}};
    if (mutation) doc["mutation"] = *mutation;
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << record.id << ": numeric check " << (agrees ? "holds" : "fails") << " at seed " << seed << '\n';
  }
  return agrees ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic prover for plane geometry theorems", "planeprover"};
  app.set_version_flag("--version", std::string(cli::kToolVersion));
  app.require_subcommand(1);
  app.fallthrough();

  Flags flags;
  app.add_flag("--json", flags.json, "Print machine-readable JSON");
  app.add_flag("--trace", flags.trace, "Print intermediate symbolic objects");
  app.add_option("--timeout", flags.timeout_sec, "Per-claim wall-clock budget in seconds")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-terms", flags.max_terms, "Largest polynomial a single operation may build")
      ->check(CLI::PositiveNumber);

  auto* list = app.add_subcommand("list", "List the theorem catalog");

  std::vector<std::string> ids;
  bool all = false, parallel = false;
  auto* prove = app.add_subcommand("prove", "Prove catalog theorems");
  prove->add_option("ids", ids, "Theorem ids");
  prove->add_flag("--all", all, "Prove the whole catalog");
  prove->add_flag("--parallel", parallel, "Prove catalog entries concurrently");

  std::string path;
  auto* check = app.add_subcommand("check", "Prove the assertions of a .geo script");
  check->add_option("file", path, "Script path")->required();

  std::string oracle_id;
  std::uint64_t seed = 0;
  std::optional<int> mutation;
  auto* oracle = app.add_subcommand("oracle", "Evaluate a theorem at random rational parameters");
  oracle->add_option("id", oracle_id, "Theorem id")->required();
  oracle->add_option("--seed", seed, "Random seed")->required();
  oracle->add_option("--mutation", mutation, "Falsify the theorem at this site first");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kUsage;
  }

  try {
    apply_max_terms(flags);
    if (*list) return list_command(flags);
    if (*prove) return prove_command(flags, ids, all, parallel);
    if (*check) return check_command(flags, path);
    if (*oracle) return oracle_command(flags, oracle_id, seed, mutation);
  } catch (const Error& e) {
    std::cerr << "planeprover: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
