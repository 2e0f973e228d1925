#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "planeprover/theorems/theorems.hpp"

namespace planeprover::cli {

using geometry::Point;
using kernel::Scalar;
using theorems::Builder;
using theorems::Claim;

// Runtime value of a script expression: a Scalar or a tuple of values.
// Points are 2-tuples of Scalars.
class Value {
 public:
  Value(Scalar s) : scalar_(std::move(s)) {}  // NOLINT: scalars are values
  Value(const Point& p) : items_{Value(p.x), Value(p.y)} {}  // NOLINT
  static Value tuple(std::vector<Value> items);

  bool is_scalar() const { return scalar_.has_value(); }
  const std::vector<Value>& items() const { return items_; }

  // Errc::type naming `what` when the shape does not fit.
  const Scalar& scalar(std::string_view what) const;
  Point point(std::string_view what) const;
  std::vector<Scalar> flatten() const;

  std::string to_string() const;

 private:
  Value() = default;
  std::optional<Scalar> scalar_;
  std::vector<Value> items_;
};

Value apply_function(Builder& b, std::string_view name, const std::vector<Value>& args);
Claim apply_predicate(Builder& b, std::string_view name, const std::vector<Value>& args);

}  // namespace planeprover::cli
