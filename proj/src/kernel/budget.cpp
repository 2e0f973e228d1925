#include "planeprover/kernel/budget.hpp"

#include <atomic>
#include <string>

#include "planeprover/kernel/errors.hpp"

namespace planeprover {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::malformed_scalar: return "malformed-scalar";
    case Errc::division_by_zero: return "division-by-zero";
    case Errc::unsupported_radical_division: return "unsupported-radical-division";
    case Errc::not_polynomial: return "not-polynomial";
    case Errc::nonlinear_system: return "nonlinear-system";
    case Errc::shape: return "shape";
    case Errc::not_divisible: return "not-divisible";
    case Errc::evaluation_pole: return "evaluation-pole";
    case Errc::resource: return "resource";
    case Errc::timeout: return "timeout";
    case Errc::degenerate_intersection: return "degenerate-intersection";
    case Errc::no_common_point: return "no-common-point";
    case Errc::degenerate_circle: return "degenerate-circle";
    case Errc::not_incident: return "not-incident";
    case Errc::unsupported_orientation: return "unsupported-orientation";
    case Errc::internal_inconsistency: return "internal-inconsistency";
    case Errc::pole: return "pole";
    case Errc::not_found: return "not-found";
    case Errc::unable_to_sample: return "unable-to-sample";
    case Errc::syntax: return "syntax";
    case Errc::unknown_primitive: return "unknown-primitive";
    case Errc::arity: return "arity";
    case Errc::use_before_declaration: return "use-before-declaration";
    case Errc::type: return "type";
    case Errc::invalid_argument: return "invalid-argument";
  }
  return "unknown";
}

namespace kernel {
namespace {

std::atomic<std::size_t> g_max_terms{5'000'000};
thread_local std::optional<std::chrono::steady_clock::time_point> t_deadline;
thread_local unsigned t_tick = 0;

}  // namespace

std::size_t max_terms() noexcept { return g_max_terms.load(std::memory_order_relaxed); }

void set_max_terms(std::size_t n) noexcept { g_max_terms.store(n, std::memory_order_relaxed); }

void check_term_budget(std::size_t n) {
  if (n > max_terms()) {
    throw Error(Errc::resource, "polynomial with " + std::to_string(n) +
                                    " terms exceeds the limit of " + std::to_string(max_terms()));
  }
}

DeadlineScope::DeadlineScope(std::chrono::steady_clock::duration budget) : previous_(t_deadline) {
  t_deadline = std::chrono::steady_clock::now() + budget;
}

DeadlineScope::~DeadlineScope() { t_deadline = previous_; }

void check_deadline() {
  if (!t_deadline) return;
  // steady_clock::now() is cheap but not free; sample it every 256 calls.
  if ((++t_tick & 0xFF) != 0) return;
  if (std::chrono::steady_clock::now() > *t_deadline) {
    throw Error(Errc::timeout, "wall-clock budget exhausted");
  }
}

}  // namespace kernel
}  // namespace planeprover
