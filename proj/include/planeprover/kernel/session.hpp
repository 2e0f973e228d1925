#pragma once

#include <array>
#include <atomic>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>

#include "planeprover/kernel/monomial.hpp"

namespace planeprover::kernel {

class Poly;

enum class VarKind : std::uint8_t { geometric, parameter, imaginary_unit, sqrt3, radical };

// The indeterminate namespace of one proof. Slots 0..3 are always x, y, the
// imaginary unit `i` (i^2 -> -1) and `r3` (r3^2 -> 3). Parameters and formal
// square roots are appended on demand. Appending is serialized; reads of
// already published slots are lock-free.
class Session : public std::enable_shared_from_this<Session> {
 public:
  static constexpr Var kX{0};
  static constexpr Var kY{1};
  static constexpr Var kI{2};
  static constexpr Var kSqrt3{3};

  static std::shared_ptr<Session> create();

  ~Session();
  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;

  // Interned by name: repeated calls return the same variable.
  Var parameter(std::string_view name);
  // Always a new variable; the name is derived from `hint`.
  Var fresh_parameter(std::string_view hint);
  // Generator u with u^2 -> radicand. `radicand` must be a nonzero polynomial
  // free of quadratic generators; equal radicands share one generator.
  Var radical(const Poly& radicand);

  std::optional<Var> lookup(std::string_view name) const;
  const std::string& name(Var v) const;
  VarKind kind(Var v) const;
  bool is_generator(Var v) const { return (generator_mask() >> v.id) & 1u; }
  std::uint32_t generator_mask() const { return gen_mask_.load(std::memory_order_acquire); }
  std::uint32_t radical_mask() const { return rad_mask_.load(std::memory_order_acquire); }
  // Precondition: kind(v) == VarKind::radical.
  const Poly& radicand(Var v) const;
  std::size_t size() const { return count_.load(std::memory_order_acquire); }

 private:
  Session();
  Var append(std::string name, VarKind kind, std::unique_ptr<Poly> radicand);

  struct Slot {
    std::string name;
    VarKind kind = VarKind::parameter;
    std::unique_ptr<Poly> radicand;
  };

  mutable std::mutex mu_;
  std::array<Slot, kMaxVars> slots_;
  std::atomic<std::size_t> count_{0};
  std::atomic<std::uint32_t> gen_mask_{0};
  std::atomic<std::uint32_t> rad_mask_{0};
  unsigned fresh_counter_ = 0;
};

using SessionPtr = std::shared_ptr<Session>;

}  // namespace planeprover::kernel
