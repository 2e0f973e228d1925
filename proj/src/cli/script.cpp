#include "planeprover/cli/script.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "planeprover/kernel/errors.hpp"

namespace planeprover::cli {

namespace {

constexpr int kMany = -1;

const std::vector<Signature> kSignatures = {
    {"area", 3, 3, Role::function},
    {"de_sq", 2, 2, Role::function},
    {"de_sq_g", 3, 3, Role::function},
    {"line_through", 2, 2, Role::function},
    {"slope", 2, 2, Role::function},
    {"midpoint", 2, 2, Role::function},
    {"altitude", 2, 2, Role::function},
    {"foot", 2, 2, Role::function},
    {"perp_pq", 2, 2, Role::function},
    {"perp_mid", 2, 2, Role::function},
    {"mirror_origin", 2, 2, Role::function},
    {"mirror_pt_line", 2, 2, Role::function},
    {"intersect", 2, 2, Role::function},
    {"quad", 4, 4, Role::function},
    {"concurrency_point", 2, kMany, Role::function},
    {"circle_through", 3, kMany, Role::function},
    {"center", 1, 1, Role::function},
    {"radius_sq", 1, 1, Role::function},
    {"circumcenter", 3, 3, Role::function},
    {"circumradius_sq", 3, 3, Role::function},
    {"nine_point_circle", 3, 3, Role::function},
    {"euler_line", 3, 3, Role::function},
    {"centroid", 3, 3, Role::function},
    {"orthocenter", 3, 3, Role::function},
    {"cet", 2, 2, Role::function},
    {"param_circle", 3, 3, Role::function},
    {"param_ellipse", 3, 3, Role::function},
    {"param_line", 3, 3, Role::function},
    {"tangent", 2, 2, Role::function},
    {"tangent_to_ellipse", 3, 3, Role::function},
    {"tc_ces_out", 4, 4, Role::function},
    {"touch_circles_expr", 2, 2, Role::function},
    {"touch_circle_line_expr", 2, 2, Role::function},
    {"tan_sum", 1, kMany, Role::function},
    {"standard_triangle", 2, 2, Role::function},
    {"incenter", 2, 2, Role::function},
    {"inradius_sq", 2, 2, Role::function},
    {"incircle", 2, 2, Role::function},
    {"sqrt_sum_expr", 3, 3, Role::function},
    {"de_pt_line_sq", 2, 2, Role::function},
    {"at", 2, 2, Role::function},
    {"sqrt", 1, 1, Role::function},
    {"is_zero", 1, 1, Role::predicate},
    {"equal", 2, 2, Role::predicate},
    {"incident", 2, 2, Role::predicate},
    {"colinear", 2, kMany, Role::predicate},
    {"concurrent", 2, kMany, Role::predicate},
    {"concyclic", 3, kMany, Role::predicate},
    {"equilateral", 3, 3, Role::predicate},
    {"touch_circles", 2, 2, Role::predicate},
    {"touch_circle_line", 2, 2, Role::predicate},
    {"sqrt_sum", 3, 3, Role::predicate},
};

const std::set<std::string_view> kKeywords = {"point", "param", "let", "assert"};
const std::set<std::string_view> kConstants = {"x", "y", "i", "sqrt3"};

// Session slot names outside the parameter namespace (formal radicals, sqrt 3).
bool session_owned(std::string_view name) {
  if (name.starts_with("rad") && name.size() > 3 &&
      std::all_of(name.begin() + 3, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    return true;
  }
  return name == "r3";
}

enum class Tok { ident, number, punct, end };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::end: return "end of input";
    case Tok::ident: return "identifier '" + t.text + "'";
    case Tok::number: return "number '" + t.text + "'";
    case Tok::punct: return "'" + t.text + "'";
  }
  return "?";
}

std::string where(int line, int column) {
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1, column = 1;
  std::size_t k = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t j = 0; j < n; ++j, ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };
  while (k < text.size()) {
    unsigned char c = static_cast<unsigned char>(text[k]);
    if (std::isspace(c)) {
      advance(1);
    } else if (c == '#') {
      while (k < text.size() && text[k] != '\n') advance(1);
    } else if (std::isalpha(c) || c == '_') {
      std::size_t j = k;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      out.push_back({Tok::ident, std::string(text.substr(k, j - k)), line, column});
      advance(j - k);
    } else if (std::isdigit(c)) {
      std::size_t j = k;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Tok::number, std::string(text.substr(k, j - k)), line, column});
      advance(j - k);
    } else if (std::string_view(";,()[]=+-*/^").find(static_cast<char>(c)) != std::string_view::npos) {
      out.push_back({Tok::punct, std::string(1, static_cast<char>(c)), line, column});
      advance(1);
    } else {
      throw Error(Errc::syntax, where(line, column) + ": unexpected character '" + std::string(1, static_cast<char>(c)) +
                                    "'");
    }
  }
  out.push_back({Tok::end, "", line, column});
  return out;
}

// Leading zeros would not survive printing; "007" and "7" are the same literal.
std::string canonical_digits(const std::string& digits) {
  std::size_t first = digits.find_first_not_of('0');
  return first == std::string::npos ? "0" : digits.substr(first);
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  Script script() {
    Script out;
    while (peek().kind != Tok::end) out.statements.push_back(statement());
    return out;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }
  bool at_punct(std::string_view p) const { return peek().kind == Tok::punct && peek().text == p; }

  [[noreturn]] void expected(const std::string& what) const {
    throw Error(Errc::syntax, where(peek().line, peek().column) + ": expected " + what + ", found " + describe(peek()));
  }

  void expect(std::string_view p) {
    if (!at_punct(p)) expected("'" + std::string(p) + "'");
    take();
  }

  std::string declare() {
    if (peek().kind != Tok::ident) expected("identifier");
    const Token& t = take();
    if (is_reserved(t.text)) {
      throw Error(Errc::syntax, where(t.line, t.column) + ": '" + t.text + "' is a built-in name and cannot be declared");
    }
    if (declared_.count(t.text)) {
      throw Error(Errc::syntax, where(t.line, t.column) + ": '" + t.text + "' is already declared");
    }
    return t.text;
  }

  // A point P owns the parameter names P1 and P2; a parameter must not alias them.
  void check_coordinate_clash(const Token& at, const std::string& name, Statement::Kind kind) {
    auto clash = [&](const std::string& other) {
      throw Error(Errc::syntax, where(at.line, at.column) + ": '" + name + "' collides with coordinate '" + other + "'");
    };
    if (kind == Statement::Kind::point) {
      for (const char* suffix : {"1", "2"}) {
        auto it = declared_.find(name + suffix);
        if (it != declared_.end() && it->second == Statement::Kind::param) clash(name + suffix);
      }
    }
    if (kind == Statement::Kind::param && name.size() > 1 && (name.back() == '1' || name.back() == '2')) {
      auto it = declared_.find(name.substr(0, name.size() - 1));
      if (it != declared_.end() && it->second == Statement::Kind::point) clash(name);
    }
  }

  Statement statement() {
    Statement st;
    st.line = peek().line;
    if (peek().kind != Tok::ident || !kKeywords.count(peek().text)) expected("'point', 'param', 'let' or 'assert'");
    std::string keyword = take().text;
    if (keyword == "point" || keyword == "param") {
      st.kind = keyword == "point" ? Statement::Kind::point : Statement::Kind::param;
      for (;;) {
        const Token& at = peek();
        std::string name = declare();
        check_coordinate_clash(at, name, st.kind);
        declared_.emplace(name, st.kind);
        st.names.push_back(name);
        if (!at_punct(",")) break;
        take();
      }
    } else if (keyword == "let") {
      st.kind = Statement::Kind::let;
      std::string name = declare();
      expect("=");
      st.expr = expr();
      // Declared only after its value is parsed, so a let cannot refer to itself.
      declared_.emplace(name, Statement::Kind::let);
      st.names.push_back(name);
    } else {
      st.kind = Statement::Kind::assert_claim;
      if (peek().kind != Tok::ident) expected("predicate");
      const Token& head = peek();
      const Signature* sig = find_signature(head.text);
      if (!sig) {
        if (declared_.count(head.text) || kConstants.count(head.text)) expected("predicate");
        throw Error(Errc::unknown_primitive, where(head.line, head.column) + ": unknown predicate '" + head.text + "'");
      }
      if (sig->role != Role::predicate) {
        throw Error(Errc::type, where(head.line, head.column) + ": '" + head.text + "' is not a predicate");
      }
      take();
      st.expr = call(head, *sig);
    }
    expect(";");
    return st;
  }

  Expr call(const Token& head, const Signature& sig) {
    Expr e;
    e.kind = Expr::Kind::call;
    e.text = head.text;
    expect("(");
    if (!at_punct(")")) {
      for (;;) {
        e.args.push_back(expr());
        if (!at_punct(",")) break;
        take();
      }
    }
    expect(")");
    int n = static_cast<int>(e.args.size());
    if (n < sig.min_args || (sig.max_args >= 0 && n > sig.max_args)) {
      std::string want = sig.max_args == sig.min_args ? std::to_string(sig.min_args)
                         : sig.max_args < 0         ? "at least " + std::to_string(sig.min_args)
                                                    : std::to_string(sig.min_args) + " to " + std::to_string(sig.max_args);
      throw Error(Errc::arity, where(head.line, head.column) + ": '" + e.text + "' takes " + want + " arguments, got " +
                                   std::to_string(n));
    }
    return e;
  }

  Expr expr() {
    Expr left = product();
    while (at_punct("+") || at_punct("-")) {
      std::string op = take().text;
      left = Expr{Expr::Kind::binary, op, {std::move(left), product()}};
    }
    return left;
  }

  Expr product() {
    Expr left = unary();
    while (at_punct("*") || at_punct("/")) {
      std::string op = take().text;
      left = Expr{Expr::Kind::binary, op, {std::move(left), unary()}};
    }
    return left;
  }

  Expr unary() {
    if (at_punct("-")) {
      take();
      return Expr{Expr::Kind::negate, "", {unary()}};
    }
    return power();
  }

  Expr power() {
    Expr base = postfix();
    if (!at_punct("^")) return base;
    take();
    std::string sign;
    if (at_punct("-")) {
      take();
      sign = "-";
    }
    if (peek().kind != Tok::number) expected("integer exponent");
    std::string digits = canonical_digits(take().text);
    if (digits == "0") sign.clear();
    return Expr{Expr::Kind::binary, "^", {std::move(base), Expr{Expr::Kind::number, sign + digits, {}}}};
  }

  Expr postfix() {
    Expr e = atom();
    while (at_punct("[")) {
      take();
      if (peek().kind != Tok::number) expected("index");
      const Token& t = take();
      std::string digits = canonical_digits(t.text);
      if (digits == "0") throw Error(Errc::syntax, where(t.line, t.column) + ": indices start at 1");
      expect("]");
      e = Expr{Expr::Kind::index, digits, {std::move(e)}};
    }
    return e;
  }

  Expr atom() {
    const Token& t = peek();
    if (t.kind == Tok::number) {
      take();
      return Expr{Expr::Kind::number, canonical_digits(t.text), {}};
    }
    if (at_punct("(")) {
      take();
      Expr e = expr();
      expect(")");
      return e;
    }
    if (at_punct("[")) {
      take();
      Expr e{Expr::Kind::tuple, "", {}};
      e.args.push_back(expr());
      while (at_punct(",")) {
        take();
        e.args.push_back(expr());
      }
      if (e.args.size() < 2) expected("','");
      expect("]");
      return e;
    }
    if (t.kind != Tok::ident) expected("expression");
    take();
    if (at_punct("(")) {
      const Signature* sig = find_signature(t.text);
      if (!sig) {
        if (declared_.count(t.text) || kConstants.count(t.text) || kKeywords.count(t.text)) {
          throw Error(Errc::type, where(t.line, t.column) + ": '" + t.text + "' cannot be applied");
        }
        throw Error(Errc::unknown_primitive, where(t.line, t.column) + ": unknown primitive '" + t.text + "'");
      }
      if (sig->role == Role::predicate) {
        throw Error(Errc::type, where(t.line, t.column) + ": predicate '" + t.text + "' can only be asserted");
      }
      return call(t, *sig);
    }
    if (kConstants.count(t.text) || declared_.count(t.text)) return Expr{Expr::Kind::name, t.text, {}};
    if (find_signature(t.text)) {
      throw Error(Errc::syntax, where(peek().line, peek().column) + ": expected '(' after '" + t.text + "', found " +
                                    describe(peek()));
    }
    if (kKeywords.count(t.text)) {
      throw Error(Errc::syntax, where(t.line, t.column) + ": expected expression, found keyword '" + t.text + "'");
    }
    throw Error(Errc::use_before_declaration, where(t.line, t.column) + ": '" + t.text + "' is used before it is declared");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::map<std::string, Statement::Kind> declared_;
};

void print(const Expr& e, std::string& out) {
  switch (e.kind) {
    case Expr::Kind::name:
    case Expr::Kind::number:
      out += e.text;
      return;
    case Expr::Kind::call:
    case Expr::Kind::tuple:
      out += e.kind == Expr::Kind::call ? e.text + "(" : "[";
      for (std::size_t k = 0; k < e.args.size(); ++k) {
        if (k) out += ", ";
        print(e.args[k], out);
      }
      out += e.kind == Expr::Kind::call ? ")" : "]";
      return;
    case Expr::Kind::index:
      print(e.args[0], out);
      out += "[" + e.text + "]";
      return;
    case Expr::Kind::negate:
      out += "(-";
      print(e.args[0], out);
      out += ")";
      return;
    case Expr::Kind::binary:
      out += "(";
      print(e.args[0], out);
      out += " " + e.text + " ";
      print(e.args[1], out);
      out += ")";
      return;
  }
}

}  // namespace

std::size_t Script::assertion_count() const {
  return static_cast<std::size_t>(std::count_if(statements.begin(), statements.end(), [](const Statement& s) {
    return s.kind == Statement::Kind::assert_claim;
  }));
}

const std::vector<Signature>& signatures() { return kSignatures; }

const Signature* find_signature(std::string_view name) {
  auto it = std::find_if(kSignatures.begin(), kSignatures.end(), [&](const Signature& s) { return s.name == name; });
  return it == kSignatures.end() ? nullptr : &*it;
}

bool is_reserved(std::string_view name) {
  return kKeywords.count(name) || kConstants.count(name) || find_signature(name) || session_owned(name);
}

Script parse_script(std::string_view text) { return Parser(text).script(); }

std::string print_expr(const Expr& expr) {
  std::string out;
  print(expr, out);
  return out;
}

std::string print_script(const Script& script) {
  std::string out;
  for (const Statement& st : script.statements) {
    switch (st.kind) {
      case Statement::Kind::point:
      case Statement::Kind::param:
        out += st.kind == Statement::Kind::point ? "point " : "param ";
        for (std::size_t k = 0; k < st.names.size(); ++k) out += (k ? ", " : "") + st.names[k];
        break;
      case Statement::Kind::let:
        out += "let " + st.names.at(0) + " = " + print_expr(st.expr);
        break;
      case Statement::Kind::assert_claim:
        out += "assert " + print_expr(st.expr);
        break;
    }
    out += ";\n";
  }
  return out;
}

}  // namespace planeprover::cli
