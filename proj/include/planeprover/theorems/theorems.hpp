#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "planeprover/geometry/geometry.hpp"

namespace planeprover::theorems {

using geometry::Geometry;
using geometry::Point;
using kernel::Scalar;
using kernel::SessionPtr;

enum class ClaimKind {
  zero_identity,
  colinearity,
  concurrency,
  concyclicity,
  equilaterality,
  tangency,
  groebner_zero,
  certificate,
};

enum class Verdict { proved, refuted, certificate, error };

std::string_view claim_kind_name(ClaimKind kind);
std::string_view verdict_name(Verdict verdict);
std::optional<Verdict> parse_verdict(std::string_view text);

using TraceSink = std::function<void(const std::string& line)>;

// Construction context handed to every theorem program. In symbolic mode
// parameters are session indeterminates; in numeric mode each parameter name
// is bound once to a random rational in [-100, 100] before any construction
// happens, so the whole program runs over constants.
class Builder {
 public:
  Builder(SessionPtr session, std::mt19937_64* numeric_rng, std::optional<int> mutation, TraceSink trace);

  bool numeric() const { return rng_ != nullptr; }
  const SessionPtr& session() const { return session_; }
  const Geometry& geo() const { return geo_; }
  Scalar x() const { return geo_.x(); }
  Scalar y() const { return geo_.y(); }

  Scalar param(const std::string& name);
  // A free point: the pair name1, name2.
  Point point(const std::string& name);
  mpq_class sample();

  // Identity unless `site` is the active mutation; then the value is shifted
  // by a fresh parameter (symbolic) or a random nonzero rational (numeric).
  // `constant` forces a rational shift in both modes.
  Scalar tweak(int site, const Scalar& v, bool constant = false);
  Point tweak(int site, const Point& p);

  void trace(const std::string& label, const Scalar& s) const;
  void trace(const std::string& label, const Point& p) const;
  void trace(const std::string& label, const std::string& text) const;

 private:
  SessionPtr session_;
  Geometry geo_;
  std::mt19937_64* rng_;
  std::optional<int> mutation_;
  TraceSink trace_;
  std::map<std::string, Scalar> bound_;
};

// Evidence attached to a verdict.
struct Certificate {
  // Zero identities: size of the objects whose difference vanished.
  unsigned degree = 0;
  unsigned parameters = 0;
  // Divisibility certificates (Lehmus).
  std::string numerator;
  std::string divisor;
  std::string cofactor;
  std::vector<std::pair<std::string, std::string>> evidence;  // sample point, cofactor value
  bool semi_rigorous = false;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

// What a theorem program produces: the claim holds iff every residual is
// identically zero. `subjects` are the objects the claim compares; they
// size the result.
struct Claim {
  ClaimKind kind = ClaimKind::zero_identity;
  std::vector<Scalar> residuals;
  std::vector<Scalar> subjects;
  std::optional<Certificate> certificate;
};

using Program = std::function<Claim(Builder&)>;

struct TheoremRecord {
  std::string id;
  std::string title;
  ClaimKind kind;
  Verdict expected;
  Program program;
  // Number of mutation sites the program exposes (sites 0..n-1).
  int mutation_sites = 0;
};

const std::vector<TheoremRecord>& catalog();
// Errc::not_found for unknown ids.
const TheoremRecord& find(std::string_view id);

struct ProofResult {
  std::string id;
  Verdict verdict = Verdict::error;
  double millis = 0;
  unsigned degree = 0;
  std::size_t nterms = 0;
  std::optional<Certificate> certificate;
  std::string message;  // error text for verdict error
};

struct ProveOptions {
  std::chrono::milliseconds timeout{300'000};
  TraceSink trace;
  std::optional<int> mutation;
};

// Never throws for kernel failures: they become verdict error. Unknown ids
// throw Errc::not_found.
ProofResult prove(std::string_view id, const ProveOptions& options = {});
// Results follow catalog order whatever `parallel` is.
std::vector<ProofResult> prove_all(bool parallel, const ProveOptions& options = {});

// Runs the program over random rational parameters and evaluates the
// residuals with eval_at. Degenerate samples are redrawn; 20 in a row raise
// Errc::unable_to_sample.
bool numeric_spot_check(std::string_view id, std::uint64_t seed, std::optional<int> mutation = std::nullopt);

// The machinery behind prove and numeric_spot_check, for programs that are
// not catalog entries (DSL assertions). `label` names the program in errors.
ProofResult prove_program(const std::string& id, const Program& program, const ProveOptions& options = {});
bool numeric_check_program(const std::string& label, const Program& program, std::uint64_t seed,
                           std::optional<int> mutation = std::nullopt);

struct Mutation {
  std::string id;
  int site;
};
// Every (theorem, site) pair whose mutated claim is false.
std::vector<Mutation> mutations();

}  // namespace planeprover::theorems
