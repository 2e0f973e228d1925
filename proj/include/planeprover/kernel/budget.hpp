#pragma once

#include <chrono>
#include <cstddef>
#include <optional>

namespace planeprover::kernel {

// Upper bound on the number of terms any single polynomial operation may
// produce. Defaults to 5'000'000; the CLI lets PLANEPROVER_MAX_TERMS override.
std::size_t max_terms() noexcept;
void set_max_terms(std::size_t n) noexcept;

// Throws Errc::resource when `n` exceeds max_terms().
void check_term_budget(std::size_t n);

// Cooperative wall-clock budget for the calling thread. Long-running kernel
// loops call check_deadline(); once the deadline passes it throws
// Errc::timeout. Scopes nest; the innermost one wins until it is destroyed.
class DeadlineScope {
 public:
  explicit DeadlineScope(std::chrono::steady_clock::duration budget);
  ~DeadlineScope();
  DeadlineScope(const DeadlineScope&) = delete;
  DeadlineScope& operator=(const DeadlineScope&) = delete;

 private:
  std::optional<std::chrono::steady_clock::time_point> previous_;
};

void check_deadline();

}  // namespace planeprover::kernel
