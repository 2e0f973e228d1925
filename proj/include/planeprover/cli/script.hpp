#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace planeprover::cli {

// Expression tree of the construction language.
//
//   name    identifier or built-in constant (x, y, i, sqrt3); `text` holds it
//   number  non-negative integer literal; `text` holds the digits
//   call    primitive application; `text` is the primitive, `args` the operands
//   tuple   "[e1, e2, ...]" (points are 2-tuples)
//   index   "e[k]", 1-based; args[0] is e, `text` the digits of k
//   negate  "-e"
//   binary  `text` in {"+", "-", "*", "/", "^"}; for "^" args[1] is an integer
//           number whose text may carry a leading '-'
struct Expr {
  enum class Kind { name, number, call, tuple, index, negate, binary };
  Kind kind = Kind::number;
  std::string text;
  std::vector<Expr> args;

  friend bool operator==(const Expr&, const Expr&) = default;
};

struct Statement {
  enum class Kind { point, param, let, assert_claim };
  Kind kind = Kind::point;
  // point/param: the declared names; let: the single bound name.
  std::vector<std::string> names;
  // let: the bound value; assert: a call to a predicate.
  Expr expr;
  // Source position, for diagnostics only; ignored by ==.
  int line = 0;

  friend bool operator==(const Statement& a, const Statement& b) {
    return a.kind == b.kind && a.names == b.names && a.expr == b.expr;
  }
};

struct Script {
  std::vector<Statement> statements;

  std::size_t assertion_count() const;
  friend bool operator==(const Script&, const Script&) = default;
};

enum class Role { function, predicate };

struct Signature {
  std::string_view name;
  int min_args;
  int max_args;  // -1: unbounded
  Role role;
};

// Every primitive and predicate of the language, in a fixed order.
const std::vector<Signature>& signatures();
const Signature* find_signature(std::string_view name);
// Keywords, constants and primitive names; none may be declared.
bool is_reserved(std::string_view name);

// Throws Errc::syntax (with "line L, column C: expected ..."),
// Errc::unknown_primitive, Errc::arity or Errc::use_before_declaration.
Script parse_script(std::string_view text);

// Canonical text: one statement per line, binary operations fully
// parenthesized. parse_script(print_script(s)) == s.
std::string print_script(const Script& script);
std::string print_expr(const Expr& expr);

}  // namespace planeprover::cli
