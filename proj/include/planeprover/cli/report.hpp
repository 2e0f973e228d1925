#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "planeprover/cli/script.hpp"
#include "planeprover/theorems/theorems.hpp"

namespace planeprover::cli {

inline constexpr std::string_view kToolVersion = "planeprover 0.1.0";

// One proved (or not) claim. Serialized with exactly the fields
// id, verdict, millis, degree, nterms and, when present, certificate.
struct ReportEntry {
  std::string id;
  theorems::Verdict verdict = theorems::Verdict::error;
  double millis = 0;
  unsigned degree = 0;
  std::size_t nterms = 0;
  std::optional<theorems::Certificate> certificate;

  friend bool operator==(const ReportEntry&, const ReportEntry&) = default;
};

// Error text and oracle remarks, keyed by entry id.
struct Diagnostic {
  std::string id;
  std::string message;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

struct RunReport {
  std::string tool{kToolVersion};
  std::string digest;
  std::vector<ReportEntry> results;
  std::vector<Diagnostic> diagnostics;

  void add(const theorems::ProofResult& result);
  // 0 when every verdict is proved or certificate, 2 if any is error, else 1.
  int exit_code() const;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

// "fnv1a64:" followed by 16 lowercase hex digits.
std::string fnv1a_digest(std::string_view text);

std::string to_json(const RunReport& report, int indent = 2);
// Errc::syntax for malformed JSON or missing fields.
RunReport report_from_json(std::string_view text);

struct RunOptions {
  theorems::ProveOptions prove;
  // The numeric oracle runs once per seed; an empty list skips it.
  std::vector<std::uint64_t> oracle_seeds{1, 2, 3};
};

// Assertion k (1-based) is reported as "assert#k". Each assertion is proved
// in a fresh session that replays the declarations and lets before it.
// A symbolic verdict the oracle contradicts becomes error. The digest is
// taken over the canonical printed script.
RunReport run_script(const Script& script, const RunOptions& options = {});

}  // namespace planeprover::cli
