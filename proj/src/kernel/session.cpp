#include "planeprover/kernel/session.hpp"

#include "planeprover/kernel/errors.hpp"
#include "planeprover/kernel/poly.hpp"

namespace planeprover::kernel {

Session::Session() {
  append("x", VarKind::geometric, nullptr);
  append("y", VarKind::geometric, nullptr);
  append("i", VarKind::imaginary_unit, nullptr);
  append("r3", VarKind::sqrt3, nullptr);
}

Session::~Session() = default;

std::shared_ptr<Session> Session::create() { return std::shared_ptr<Session>(new Session()); }

Var Session::append(std::string name, VarKind kind, std::unique_ptr<Poly> radicand) {
  std::size_t n = count_.load(std::memory_order_relaxed);
  if (n >= kMaxVars) {
    throw Error(Errc::resource, "session holds more than " + std::to_string(kMaxVars) + " indeterminates");
  }
  Slot& slot = slots_[n];
  slot.name = std::move(name);
  slot.kind = kind;
  slot.radicand = std::move(radicand);
  if (kind == VarKind::imaginary_unit || kind == VarKind::sqrt3 || kind == VarKind::radical) {
    gen_mask_.fetch_or(1u << n, std::memory_order_release);
  }
  if (kind == VarKind::radical) rad_mask_.fetch_or(1u << n, std::memory_order_release);
  count_.store(n + 1, std::memory_order_release);
  return Var{static_cast<std::uint8_t>(n)};
}

Var Session::parameter(std::string_view name) {
  std::lock_guard lock(mu_);
  for (std::size_t k = 0; k < count_.load(std::memory_order_relaxed); ++k) {
    if (slots_[k].name == name) {
      if (slots_[k].kind != VarKind::parameter) {
        throw Error(Errc::invalid_argument, "'" + std::string(name) + "' is reserved");
      }
      return Var{static_cast<std::uint8_t>(k)};
    }
  }
  return append(std::string(name), VarKind::parameter, nullptr);
}

Var Session::fresh_parameter(std::string_view hint) {
  std::lock_guard lock(mu_);
  for (;;) {
    std::string candidate = std::string(hint) + "_" + std::to_string(++fresh_counter_);
    bool taken = false;
    for (std::size_t k = 0; k < count_.load(std::memory_order_relaxed); ++k) {
      if (slots_[k].name == candidate) taken = true;
    }
    if (!taken) return append(std::move(candidate), VarKind::parameter, nullptr);
  }
}

Var Session::radical(const Poly& radicand) {
  if (radicand.is_zero()) throw Error(Errc::invalid_argument, "square root of zero");
  if (radicand.has_generators()) {
    throw Error(Errc::unsupported_radical_division, "radicand must be free of quadratic generators");
  }
  Poly stored = radicand.with_session(nullptr);
  std::lock_guard lock(mu_);
  for (std::size_t k = 0; k < count_.load(std::memory_order_relaxed); ++k) {
    if (slots_[k].kind == VarKind::radical && *slots_[k].radicand == stored) {
      return Var{static_cast<std::uint8_t>(k)};
    }
  }
  unsigned index = 1;
  for (std::size_t k = 0; k < count_.load(std::memory_order_relaxed); ++k) {
    if (slots_[k].kind == VarKind::radical) ++index;
  }
  return append("rad" + std::to_string(index), VarKind::radical, std::make_unique<Poly>(std::move(stored)));
}

std::optional<Var> Session::lookup(std::string_view name) const {
  std::size_t n = size();
  for (std::size_t k = 0; k < n; ++k) {
    if (slots_[k].name == name) return Var{static_cast<std::uint8_t>(k)};
  }
  return std::nullopt;
}

const std::string& Session::name(Var v) const { return slots_.at(v.id).name; }

VarKind Session::kind(Var v) const { return slots_.at(v.id).kind; }

const Poly& Session::radicand(Var v) const {
  const Slot& slot = slots_.at(v.id);
  if (slot.kind != VarKind::radical) throw Error(Errc::invalid_argument, slot.name + " is not a radical");
  return *slot.radicand;
}

}  // namespace planeprover::kernel
