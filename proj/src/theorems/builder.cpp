#include "planeprover/kernel/errors.hpp"
#include "planeprover/theorems/theorems.hpp"

namespace planeprover::theorems {

Builder::Builder(SessionPtr session, std::mt19937_64* numeric_rng, std::optional<int> mutation, TraceSink trace)
    : session_(std::move(session)),
      geo_(session_),
      rng_(numeric_rng),
      mutation_(mutation),
      trace_(std::move(trace)) {}

mpq_class Builder::sample() {
  if (!rng_) throw Error(Errc::invalid_argument, "sampling needs a numeric builder");
  std::uniform_int_distribution<long> num(-100, 100), den(1, 100);
  mpq_class q;
  do {
    q = mpq_class(num(*rng_), den(*rng_));
  } while (q == 0);
  q.canonicalize();
  return q;
}

Scalar Builder::param(const std::string& name) {
  auto it = bound_.find(name);
  if (it != bound_.end()) return it->second;
  Scalar value = numeric() ? Scalar(sample()) : Scalar::variable(session_, session_->parameter(name));
  bound_.emplace(name, value);
  return value;
}

Point Builder::point(const std::string& name) { return {param(name + "1"), param(name + "2")}; }

Scalar Builder::tweak(int site, const Scalar& v, bool constant) {
  if (!mutation_ || *mutation_ != site) return v;
  if (numeric()) return v + Scalar(sample());
  if (constant) return v + Scalar(mpq_class(1, 7));
  return v + Scalar::variable(session_, session_->fresh_parameter("eps"));
}

Point Builder::tweak(int site, const Point& p) { return {tweak(site, p.x), p.y}; }

void Builder::trace(const std::string& label, const Scalar& s) const {
  if (trace_ && !numeric()) trace_(label + " = " + s.to_string());
}

void Builder::trace(const std::string& label, const Point& p) const {
  if (trace_ && !numeric()) trace_(label + " = " + p.to_string());
}
void Builder::trace(const std::string& label, const std::string& text) const {
  if (trace_ && !numeric()) trace_(label + " = " + text);
}

}  // namespace planeprover::theorems
