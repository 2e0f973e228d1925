#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>

#include "planeprover/kernel/budget.hpp"
#include "planeprover/kernel/errors.hpp"
#include "planeprover/kernel/numeric.hpp"
#include "planeprover/theorems/theorems.hpp"

namespace planeprover::theorems {

using kernel::Session;

std::string_view claim_kind_name(ClaimKind kind) {
  switch (kind) {
    case ClaimKind::zero_identity: return "zero-identity";
    case ClaimKind::colinearity: return "colinearity";
    case ClaimKind::concurrency: return "concurrency";
    case ClaimKind::concyclicity: return "concyclicity";
    case ClaimKind::equilaterality: return "equilaterality";
    case ClaimKind::tangency: return "tangency";
    case ClaimKind::groebner_zero: return "groebner-zero";
    case ClaimKind::certificate: return "certificate";
  }
  return "unknown";
}

std::string_view verdict_name(Verdict verdict) {
  switch (verdict) {
    case Verdict::proved: return "proved";
    case Verdict::refuted: return "refuted";
    case Verdict::certificate: return "certificate";
    case Verdict::error: return "error";
  }
  return "unknown";
}

std::optional<Verdict> parse_verdict(std::string_view text) {
  for (Verdict v : {Verdict::proved, Verdict::refuted, Verdict::certificate, Verdict::error}) {
    if (verdict_name(v) == text) return v;
  }
  return std::nullopt;
}

namespace {

bool all_zero(const std::vector<Scalar>& residuals) {
  return std::all_of(residuals.begin(), residuals.end(), [](const Scalar& s) { return s.is_zero(); });
}

// Parameters proper: everything but x, y and the quadratic generators.
std::uint32_t parameter_support(const Scalar& s) {
  std::uint32_t mask = s.support() & ~0xFu;
  if (auto session = s.session()) mask &= ~session->generator_mask();
  return mask;
}

}  // namespace

ProofResult prove(std::string_view id, const ProveOptions& options) {
  const TheoremRecord& record = find(id);
  return prove_program(record.id, record.program, options);
}

ProofResult prove_program(const std::string& id, const Program& program, const ProveOptions& options) {
  ProofResult result;
  result.id = id;
  auto start = std::chrono::steady_clock::now();
  try {
    kernel::DeadlineScope deadline(options.timeout);
    Builder builder(Session::create(), nullptr, options.mutation, options.trace);
    Claim claim = program(builder);
    kernel::check_deadline();
    if (!all_zero(claim.residuals)) {
      result.verdict = Verdict::refuted;
    } else {
      result.verdict = claim.kind == ClaimKind::certificate ? Verdict::certificate : Verdict::proved;
    }
    std::uint32_t params = 0;
    for (const Scalar& s : claim.subjects) {
      result.degree = std::max({result.degree, s.num().total_degree(), s.den().total_degree()});
      result.nterms += s.num().size() + s.den().size();
      params |= parameter_support(s);
    }
    if (claim.certificate) {
      result.certificate = std::move(claim.certificate);
    } else if (result.verdict == Verdict::proved && claim.kind == ClaimKind::zero_identity) {
      Certificate cert;
      cert.degree = result.degree;
      cert.parameters = static_cast<unsigned>(std::popcount(params));
      result.certificate = cert;
    }
    if (result.verdict == Verdict::certificate && !result.certificate) result.verdict = Verdict::refuted;
  } catch (const Error& e) {
    result.verdict = Verdict::error;
    result.message = e.what();
  } catch (const std::bad_alloc&) {
    result.verdict = Verdict::error;
    result.message = "resource: out of memory";
  }
  result.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<ProofResult> prove_all(bool parallel, const ProveOptions& options) {
  const auto& records = catalog();
  std::vector<ProofResult> results(records.size());
  if (!parallel) {
    for (std::size_t k = 0; k < records.size(); ++k) results[k] = prove(records[k].id, options);
    return results;
  }
  std::atomic<std::size_t> next{0};
  unsigned workers = std::max(2u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(records.size()));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t k; (k = next.fetch_add(1)) < records.size();) results[k] = prove(records[k].id, options);
    });
  }
  for (auto& t : pool) t.join();
  return results;
}

namespace {

bool degenerate(Errc code) {
  switch (code) {
    case Errc::division_by_zero:
    case Errc::evaluation_pole:
    case Errc::pole:
    case Errc::degenerate_intersection:
    case Errc::degenerate_circle:
    case Errc::unsupported_orientation:
      return true;
    default:
      return false;
  }
}

}  // namespace

bool numeric_spot_check(std::string_view id, std::uint64_t seed, std::optional<int> mutation) {
  const TheoremRecord& record = find(id);
  return numeric_check_program(record.id, record.program, seed, mutation);
}

bool numeric_check_program(const std::string& label, const Program& program, std::uint64_t seed,
                           std::optional<int> mutation) {
  std::mt19937_64 rng(seed);
  int misses = 0;
  for (;;) {
    try {
      auto session = Session::create();
      Builder builder(session, &rng, mutation, nullptr);
      Claim claim = program(builder);
      // Residuals may still mention x and y (circle equations): bind them too.
      kernel::Point at{{Session::kX, builder.sample()}, {Session::kY, builder.sample()}};
      kernel::Point again{{Session::kX, builder.sample()}, {Session::kY, builder.sample()}};
      for (const Scalar& r : claim.residuals) {
        if (!kernel::eval_at(r, at).is_zero() || !kernel::eval_at(r, again).is_zero()) return false;
      }
      return true;
    } catch (const Error& e) {
      if (e.code() == Errc::no_common_point || e.code() == Errc::internal_inconsistency ||
          e.code() == Errc::not_divisible) {
        return false;
      }
      if (!degenerate(e.code())) throw;
      if (++misses >= 20) {
        throw Error(Errc::unable_to_sample, "20 consecutive degenerate samples for " + label);
      }
    }
  }
}

}  // namespace planeprover::theorems
