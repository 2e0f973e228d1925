#include <cstdio>
#include <map>

#include "json.hpp"

#include "planeprover/cli/report.hpp"
#include "planeprover/kernel/errors.hpp"
#include "value.hpp"

namespace planeprover::cli {

using kernel::Session;
using theorems::Verdict;

namespace {

using Env = std::map<std::string, Value>;

Value eval(const Expr& e, const Env& env, Builder& b);

Value elementwise(const Value& a, const Value& b, const std::string& op) {
  if (a.is_scalar() && b.is_scalar()) {
    const Scalar& l = a.scalar(op);
    const Scalar& r = b.scalar(op);
    if (op == "+") return l + r;
    if (op == "-") return l - r;
    if (op == "*") return l * r;
    return l / r;
  }
  // Tuples add and subtract componentwise and scale by scalars.
  bool additive = op == "+" || op == "-";
  if (additive && !a.is_scalar() && !b.is_scalar() && a.items().size() == b.items().size()) {
    std::vector<Value> items;
    for (std::size_t k = 0; k < a.items().size(); ++k) items.push_back(elementwise(a.items()[k], b.items()[k], op));
    return Value::tuple(std::move(items));
  }
  if (op == "*" && a.is_scalar() != b.is_scalar()) {
    const Value& tuple = a.is_scalar() ? b : a;
    const Value& factor = a.is_scalar() ? a : b;
    std::vector<Value> items;
    for (const Value& item : tuple.items()) items.push_back(elementwise(item, factor, op));
    return Value::tuple(std::move(items));
  }
  if (op == "/" && !a.is_scalar() && b.is_scalar()) {
    std::vector<Value> items;
    for (const Value& item : a.items()) items.push_back(elementwise(item, b, op));
    return Value::tuple(std::move(items));
  }
  throw Error(Errc::type, "operands of '" + op + "' have incompatible shapes");
}

Value negate(const Value& v) {
  if (v.is_scalar()) return -v.scalar("operand");
  std::vector<Value> items;
  for (const Value& item : v.items()) items.push_back(negate(item));
  return Value::tuple(std::move(items));
}

Value eval(const Expr& e, const Env& env, Builder& b) {
  switch (e.kind) {
    case Expr::Kind::name: {
      if (e.text == "x") return b.x();
      if (e.text == "y") return b.y();
      if (e.text == "i") return Scalar::variable(b.session(), Session::kI);
      if (e.text == "sqrt3") return Scalar::variable(b.session(), Session::kSqrt3);
      auto it = env.find(e.text);
      if (it == env.end()) throw Error(Errc::use_before_declaration, "'" + e.text + "' is not bound");
      return it->second;
    }
    case Expr::Kind::number:
      return Scalar(mpq_class(mpz_class(e.text)));
    case Expr::Kind::call: {
      std::vector<Value> args;
      for (const Expr& a : e.args) args.push_back(eval(a, env, b));
      return apply_function(b, e.text, args);
    }
    case Expr::Kind::tuple: {
      std::vector<Value> items;
      for (const Expr& a : e.args) items.push_back(eval(a, env, b));
      return Value::tuple(std::move(items));
    }
    case Expr::Kind::index: {
      Value base = eval(e.args[0], env, b);
      std::size_t k = std::stoul(e.text);
      if (base.is_scalar() || k > base.items().size()) {
        throw Error(Errc::type, "index " + e.text + " is out of range for " + print_expr(e.args[0]));
      }
      return base.items()[k - 1];
    }
    case Expr::Kind::negate:
      return negate(eval(e.args[0], env, b));
    case Expr::Kind::binary: {
      Value lhs = eval(e.args[0], env, b);
      if (e.text == "^") {
        long k = std::stol(e.args[1].text);
        if (k < -64 || k > 64) throw Error(Errc::resource, "exponent " + e.args[1].text + " is too large");
        return lhs.scalar("base of '^'").pow(static_cast<int>(k));
      }
      return elementwise(lhs, eval(e.args[1], env, b), e.text);
    }
  }
  throw Error(Errc::internal_inconsistency, "unhandled expression");
}

// Replays statements [0, stop) and evaluates the claim at `stop`. Lets at or
// after `trace_from` are traced, so every let appears once over a whole run.
theorems::Program assertion_program(const Script& script, std::size_t stop, std::size_t trace_from) {
  return [&script, stop, trace_from](Builder& b) {
    Env env;
    for (std::size_t j = 0; j < stop; ++j) {
      const Statement& st = script.statements[j];
      switch (st.kind) {
        case Statement::Kind::point:
          for (const std::string& n : st.names) env.insert_or_assign(n, Value(b.point(n)));
          break;
        case Statement::Kind::param:
          for (const std::string& n : st.names) env.insert_or_assign(n, Value(b.param(n)));
          break;
        case Statement::Kind::let: {
          Value v = eval(st.expr, env, b);
          if (j >= trace_from) b.trace(st.names[0], v.to_string());
          env.insert_or_assign(st.names[0], std::move(v));
          break;
        }
        case Statement::Kind::assert_claim:
          break;
      }
    }
    const Expr& claim = script.statements[stop].expr;
    std::vector<Value> args;
    for (const Expr& a : claim.args) args.push_back(eval(a, env, b));
    return apply_predicate(b, claim.text, args);
  };
}

using nlohmann::json;

json certificate_json(const theorems::Certificate& c) {
  json evidence = json::array();
  for (const auto& [at, value] : c.evidence) evidence.push_back({at, value});
  return {{"degree", c.degree},       {"parameters", c.parameters}, {"numerator", c.numerator},
          {"divisor", c.divisor},     {"cofactor", c.cofactor},     {"evidence", evidence},
          {"semi_rigorous", c.semi_rigorous}};
}

theorems::Certificate certificate_from(const json& j) {
  theorems::Certificate c;
  c.degree = j.at("degree").get<unsigned>();
  c.parameters = j.at("parameters").get<unsigned>();
  c.numerator = j.at("numerator").get<std::string>();
  c.divisor = j.at("divisor").get<std::string>();
  c.cofactor = j.at("cofactor").get<std::string>();
  for (const json& pair : j.at("evidence")) c.evidence.emplace_back(pair.at(0).get<std::string>(), pair.at(1).get<std::string>());
  c.semi_rigorous = j.at("semi_rigorous").get<bool>();
  return c;
}

}  // namespace

void RunReport::add(const theorems::ProofResult& r) {
  results.push_back(ReportEntry{r.id, r.verdict, r.millis, r.degree, r.nterms, r.certificate});
  if (!r.message.empty()) diagnostics.push_back(Diagnostic{r.id, r.message});
}

int RunReport::exit_code() const {
  int code = 0;
  for (const ReportEntry& e : results) {
    if (e.verdict == Verdict::error) return 2;
    if (e.verdict == Verdict::refuted) code = 1;
  }
  return code;
}

std::string fnv1a_digest(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

std::string to_json(const RunReport& report, int indent) {
  json results = json::array();
  for (const ReportEntry& e : report.results) {
    json entry = {{"id", e.id},
                  {"verdict", theorems::verdict_name(e.verdict)},
                  {"millis", e.millis},
                  {"degree", e.degree},
                  {"nterms", e.nterms}};
    if (e.certificate) entry["certificate"] = certificate_json(*e.certificate);
    results.push_back(std::move(entry));
  }
  json diagnostics = json::array();
  for (const Diagnostic& d : report.diagnostics) diagnostics.push_back({{"id", d.id}, {"message", d.message}});
  json doc = {{"tool", report.tool}, {"digest", report.digest}, {"results", results}, {"diagnostics", diagnostics}};
  return doc.dump(indent);
}

RunReport report_from_json(std::string_view text) {
  try {
    json doc = json::parse(text);
    RunReport report;
    report.tool = doc.at("tool").get<std::string>();
    report.digest = doc.at("digest").get<std::string>();
    for (const json& j : doc.at("results")) {
      ReportEntry e;
      e.id = j.at("id").get<std::string>();
      auto verdict = theorems::parse_verdict(j.at("verdict").get<std::string>());
      if (!verdict) throw Error(Errc::syntax, "unknown verdict " + j.at("verdict").dump());
      e.verdict = *verdict;
      e.millis = j.at("millis").get<double>();
      e.degree = j.at("degree").get<unsigned>();
      e.nterms = j.at("nterms").get<std::size_t>();
      if (j.contains("certificate")) e.certificate = certificate_from(j.at("certificate"));
      report.results.push_back(std::move(e));
    }
    for (const json& j : doc.at("diagnostics")) {
      report.diagnostics.push_back(Diagnostic{j.at("id").get<std::string>(), j.at("message").get<std::string>()});
    }
    return report;
  } catch (const json::exception& e) {
    throw Error(Errc::syntax, std::string("malformed report: ") + e.what());
  }
}

RunReport run_script(const Script& script, const RunOptions& options) {
  RunReport report;
  report.digest = fnv1a_digest(print_script(script));
  std::size_t trace_from = 0;
  std::size_t ordinal = 0;
  for (std::size_t k = 0; k < script.statements.size(); ++k) {
    if (script.statements[k].kind != Statement::Kind::assert_claim) continue;
    std::string id = "assert#" + std::to_string(++ordinal);
    theorems::Program program = assertion_program(script, k, trace_from);
    trace_from = k;
    theorems::ProofResult result = theorems::prove_program(id, program, options.prove);

    if (result.verdict == Verdict::proved || result.verdict == Verdict::refuted) {
      // Proved needs every seed to agree; refuted needs one seed to disagree.
      bool proved = result.verdict == Verdict::proved;
      bool contradicted = !proved && !options.oracle_seeds.empty();
      for (std::uint64_t seed : options.oracle_seeds) {
        try {
          bool holds = theorems::numeric_check_program(id, program, seed);
          if (proved && !holds) {
            contradicted = true;
            break;
          }
          if (!proved && !holds) {
            contradicted = false;
            break;
          }
        } catch (const Error& e) {
          report.diagnostics.push_back(Diagnostic{id, std::string("oracle: ") + e.what()});
          contradicted = false;
          break;
        }
      }
      if (contradicted) {
        result.message = std::string("numeric oracle contradicts the symbolic verdict ") +
                         std::string(theorems::verdict_name(result.verdict));
        result.verdict = Verdict::error;
      }
    }
    report.add(result);
  }
  return report;
}

}  // namespace planeprover::cli
