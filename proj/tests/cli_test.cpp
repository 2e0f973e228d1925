#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <set>

#include "json.hpp"
#include "planeprover/cli/report.hpp"
#include "planeprover/kernel/errors.hpp"
#include "support.hpp"

namespace {

using namespace planeprover;
using cli::Expr;
using cli::Script;
using cli::Statement;
using testing_support::Gen;
using theorems::Verdict;

Errc parse_error(const std::string& text) {
  try {
    cli::parse_script(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "parsed without error: " << text;
  return Errc::internal_inconsistency;
}

std::string parse_message(const std::string& text) {
  try {
    cli::parse_script(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

// ---------------------------------------------------------------------------
// Parser

TEST(Parse, NapoleonHasOneAssertion) {
  Script s = cli::parse_script("point A, B, C; assert equilateral(cet(A,B), cet(B,C), cet(C,A));");
  ASSERT_EQ(s.statements.size(), 2u);
  EXPECT_EQ(s.assertion_count(), 1u);
  EXPECT_EQ(s.statements[0].names, (std::vector<std::string>{"A", "B", "C"}));
  const Expr& claim = s.statements[1].expr;
  EXPECT_EQ(claim.text, "equilateral");
  ASSERT_EQ(claim.args.size(), 3u);
  EXPECT_EQ(claim.args[0].kind, Expr::Kind::call);
  EXPECT_EQ(claim.args[0].text, "cet");
}

TEST(Parse, UndeclaredPointIsUseBeforeDeclaration) {
  EXPECT_EQ(parse_error("assert is_zero(de_sq(A,A));"), Errc::use_before_declaration);
}

TEST(Parse, EmptyStatementIsSyntaxErrorWithPosition) {
  EXPECT_EQ(parse_error("point A;; "), Errc::syntax);
  std::string msg = parse_message("point A;; ");
  EXPECT_NE(msg.find("line 1, column 9"), std::string::npos) << msg;
  EXPECT_NE(msg.find("expected 'point', 'param', 'let' or 'assert'"), std::string::npos) << msg;
}

TEST(Parse, ReportsLineAndColumnOnLaterLines) {
  std::string msg = parse_message("point A;\nlet B = midpoint(A A);");
  EXPECT_NE(msg.find("line 2, column 20"), std::string::npos) << msg;
  EXPECT_NE(msg.find("expected ')'"), std::string::npos) << msg;
}

TEST(Parse, RejectsUnknownPrimitivesAndPredicates) {
  EXPECT_EQ(parse_error("point A; let B = middle(A, A);"), Errc::unknown_primitive);
  EXPECT_EQ(parse_error("point A; assert parallel(A, A);"), Errc::unknown_primitive);
}

TEST(Parse, ChecksArity) {
  EXPECT_EQ(parse_error("point A; let B = midpoint(A);"), Errc::arity);
  EXPECT_EQ(parse_error("point A, B, C; assert equilateral(A, B);"), Errc::arity);
  EXPECT_EQ(parse_error("point A, B; let c = circle_through(A, B);"), Errc::arity);
  EXPECT_NO_THROW(cli::parse_script("point A, B, C, D; let c = circle_through(A, B, C, D);"));
}

TEST(Parse, BuiltInNamesCannotBeDeclared) {
  for (const char* text : {"point midpoint;", "param x;", "let sqrt3 = 1;", "point colinear;", "param rad1;",
                           "param let;"}) {
    EXPECT_EQ(parse_error(text), Errc::syntax) << text;
  }
}

TEST(Parse, RedeclarationAndSelfReferenceAreRejected) {
  EXPECT_EQ(parse_error("point A; param A;"), Errc::syntax);
  EXPECT_EQ(parse_error("let a = a + 1;"), Errc::use_before_declaration);
}

TEST(Parse, ParameterCannotAliasPointCoordinates) {
  EXPECT_EQ(parse_error("point A; param A1;"), Errc::syntax);
  EXPECT_EQ(parse_error("param A2; point A;"), Errc::syntax);
  EXPECT_NO_THROW(cli::parse_script("point A; point A1;"));
}

TEST(Parse, PredicatesAndFunctionsStayInTheirPlace) {
  EXPECT_EQ(parse_error("point A, B; let c = colinear(A, B);"), Errc::type);
  EXPECT_EQ(parse_error("point A, B; assert midpoint(A, B);"), Errc::type);
  EXPECT_EQ(parse_error("point A; let b = A(1);"), Errc::type);
  EXPECT_EQ(parse_error("point A; let b = midpoint;"), Errc::syntax);
}

TEST(Parse, LexicalErrors) {
  EXPECT_EQ(parse_error("point A; let b = 1.5;"), Errc::syntax);
  EXPECT_EQ(parse_error("point \xC3\x84;"), Errc::syntax);
  EXPECT_EQ(parse_error("point A; let b = A[0];"), Errc::syntax);
  EXPECT_EQ(parse_error("param a; let b = a ^ a;"), Errc::syntax);
}

TEST(Parse, PrecedenceFollowsArithmetic) {
  Script s = cli::parse_script("param a, b, c; let d = -a + b * c ^ 2 - a / b;");
  EXPECT_EQ(cli::print_expr(s.statements[1].expr), "(((-a) + (b * (c ^ 2))) - (a / b))");
}

TEST(Parse, CommentsAndLayoutDoNotMatter) {
  Script a = cli::parse_script("point A,B;assert colinear(A,B,midpoint(A,B));");
  Script b = cli::parse_script("# two points\npoint A ,\n  B ;\n\nassert colinear( A , B ,\n midpoint(A,B) ) ; # done\n");
  EXPECT_EQ(a, b);
}

TEST(Parse, EverySignatureHasAnImplementation) {
  // Calling with wrong shapes must reach the implementation and fail on
  // types, never on a missing table entry.
  for (const cli::Signature& sig : cli::signatures()) {
    std::string call = std::string(sig.name) + "(";
    for (int k = 0; k < sig.min_args; ++k) call += k ? ", [[1, 2], 3]" : "[[1, 2], 3]";
    call += ")";
    std::string text = sig.role == cli::Role::predicate ? "assert " + call + ";" : "let v = " + call + "; assert is_zero(v);";
    cli::RunOptions options;
    options.oracle_seeds.clear();
    cli::RunReport r = cli::run_script(cli::parse_script(text), options);
    ASSERT_EQ(r.results.size(), 1u);
    for (const auto& d : r.diagnostics) {
      EXPECT_EQ(d.message.find("unknown_primitive"), std::string::npos) << sig.name << ": " << d.message;
    }
  }
}

// ---------------------------------------------------------------------------
// Round trip over generated scripts

class ScriptGen {
 public:
  explicit ScriptGen(std::uint64_t seed) : g_(seed) {}

  Script script() {
    declared_.clear();
    Script s;
    int n = static_cast<int>(g_.integer(1, 8));
    for (int k = 0; k < n; ++k) s.statements.push_back(statement());
    return s;
  }

 private:
  std::string identifier() {
    static const std::string head = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz_";
    static const std::string tail = head + "0123456789";
    for (;;) {
      std::string id(1, head[g_.integer(0, static_cast<long>(head.size()) - 1)]);
      long len = g_.integer(0, 4);
      for (long k = 0; k < len; ++k) id += tail[g_.integer(0, static_cast<long>(tail.size()) - 1)];
      if (!cli::is_reserved(id) && !declared_.count(id)) return id;
    }
  }

  bool clashes(const std::string& id, Statement::Kind kind) const {
    auto has = [&](const std::string& n, Statement::Kind k) {
      auto it = declared_.find(n);
      return it != declared_.end() && it->second == k;
    };
    if (kind == Statement::Kind::point) return has(id + "1", Statement::Kind::param) || has(id + "2", Statement::Kind::param);
    if (kind == Statement::Kind::param && id.size() > 1 && (id.back() == '1' || id.back() == '2')) {
      return has(id.substr(0, id.size() - 1), Statement::Kind::point);
    }
    return false;
  }

  Statement statement() {
    Statement st;
    long pick = declared_.empty() ? g_.integer(0, 1) : g_.integer(0, 3);
    if (pick <= 1) {
      st.kind = pick == 0 ? Statement::Kind::point : Statement::Kind::param;
      long n = g_.integer(1, 3);
      for (long k = 0; k < n; ++k) {
        std::string id;
        do id = identifier();
        while (clashes(id, st.kind));
        declared_.emplace(id, st.kind);
        st.names.push_back(id);
      }
    } else if (pick == 2) {
      st.kind = Statement::Kind::let;
      st.expr = expr(3);
      std::string id = identifier();
      declared_.emplace(id, Statement::Kind::let);
      st.names.push_back(id);
    } else {
      st.kind = Statement::Kind::assert_claim;
      st.expr = call(cli::Role::predicate, 3);
    }
    return st;
  }

  std::string number() {
    std::string digits = std::to_string(g_.integer(0, 9));
    if (digits != "0" && g_.coin(0.3)) digits += std::to_string(g_.integer(0, 999999));
    return digits;
  }

  Expr call(cli::Role role, int depth) {
    std::vector<const cli::Signature*> pool;
    for (const auto& sig : cli::signatures()) {
      if (sig.role == role) pool.push_back(&sig);
    }
    const cli::Signature& sig = *pool[g_.integer(0, static_cast<long>(pool.size()) - 1)];
    int hi = sig.max_args < 0 ? sig.min_args + 2 : sig.max_args;
    long n = g_.integer(sig.min_args, hi);
    Expr e{Expr::Kind::call, std::string(sig.name), {}};
    for (long k = 0; k < n; ++k) e.args.push_back(expr(depth - 1));
    return e;
  }

  Expr expr(int depth) {
    long pick = depth <= 0 ? g_.integer(0, 2) : g_.integer(0, 8);
    switch (pick) {
      case 0: {
        if (!declared_.empty() && g_.coin()) {
          auto it = declared_.begin();
          std::advance(it, g_.integer(0, static_cast<long>(declared_.size()) - 1));
          return Expr{Expr::Kind::name, it->first, {}};
        }
        static const std::array<const char*, 4> constants = {"x", "y", "i", "sqrt3"};
        return Expr{Expr::Kind::name, constants[g_.integer(0, 3)], {}};
      }
      case 1:
      case 2:
        return Expr{Expr::Kind::number, number(), {}};
      case 3:
        return call(cli::Role::function, depth);
      case 4: {
        Expr e{Expr::Kind::tuple, "", {}};
        long n = g_.integer(2, 3);
        for (long k = 0; k < n; ++k) e.args.push_back(expr(depth - 1));
        return e;
      }
      case 5:
        return Expr{Expr::Kind::index, std::to_string(g_.integer(1, 3)), {expr(depth - 1)}};
      case 6:
        return Expr{Expr::Kind::negate, "", {expr(depth - 1)}};
      default: {
        static const std::array<const char*, 5> ops = {"+", "-", "*", "/", "^"};
        std::string op = ops[g_.integer(0, 4)];
        if (op == "^") {
          long k = g_.integer(-5, 5);
          return Expr{Expr::Kind::binary, op, {expr(depth - 1), Expr{Expr::Kind::number, std::to_string(k), {}}}};
        }
        return Expr{Expr::Kind::binary, op, {expr(depth - 1), expr(depth - 1)}};
      }
    }
  }

  Gen g_;
  std::map<std::string, Statement::Kind> declared_;
};

TEST(RoundTrip, ParseOfPrintIsIdentityOnGeneratedScripts) {
  ScriptGen gen(4242);
  for (int round = 0; round < 1000; ++round) {
    Script s = gen.script();
    std::string text = cli::print_script(s);
    Script back;
    ASSERT_NO_THROW(back = cli::parse_script(text)) << text;
    ASSERT_EQ(back, s) << text;
    ASSERT_EQ(cli::print_script(back), text);
  }
}

TEST(RoundTrip, DroppingATokenNeverCrashesTheParser) {
  ScriptGen gen(99);
  Gen g(7);
  for (int round = 0; round < 1000; ++round) {
    std::string text = cli::print_script(gen.script());
    std::size_t cut = static_cast<std::size_t>(g.integer(0, static_cast<long>(text.size()) - 1));
    std::string damaged = text.substr(0, cut) + text.substr(cut + 1);
    try {
      cli::parse_script(damaged);
    } catch (const Error& e) {
      std::set<Errc> allowed = {Errc::syntax, Errc::unknown_primitive, Errc::arity, Errc::use_before_declaration,
                                Errc::type};
      ASSERT_TRUE(allowed.count(e.code())) << e.what() << "\n" << damaged;
    }
  }
}

// ---------------------------------------------------------------------------
// Running scripts

cli::RunReport run(const std::string& text, cli::RunOptions options = {}) {
  return cli::run_script(cli::parse_script(text), options);
}

TEST(Run, NapoleonProves) {
  auto r = run("point A, B, C; assert equilateral(cet(A,B), cet(B,C), cet(C,A));");
  ASSERT_EQ(r.results.size(), 1u);
  EXPECT_EQ(r.results[0].id, "assert#1");
  EXPECT_EQ(r.results[0].verdict, Verdict::proved);
  EXPECT_TRUE(r.diagnostics.empty());
  EXPECT_EQ(r.tool, "planeprover 0.1.0");
}

TEST(Run, IncenterTranscriptionProves) {
  auto r = run("param m, n; let T = standard_triangle(m, n); let C = T[3];"
               "assert concurrent(y - m*x, y + n*x - n, y - C[2] - (x - C[1]) * tan_sum(m, 1/n));");
  ASSERT_EQ(r.results.size(), 1u);
  EXPECT_EQ(r.results[0].verdict, Verdict::proved);
}

TEST(Run, MidpointEqualToEndpointIsRefuted) {
  auto r = run("point A, B; assert equal(midpoint(A, B), A);");
  ASSERT_EQ(r.results.size(), 1u);
  EXPECT_EQ(r.results[0].verdict, Verdict::refuted);
  EXPECT_EQ(r.exit_code(), 1);
}

TEST(Run, DegenerateConstructionIsAnError) {
  auto r = run("point A; assert is_zero(slope(A, A));");
  ASSERT_EQ(r.results.size(), 1u);
  EXPECT_EQ(r.results[0].verdict, Verdict::error);
  ASSERT_EQ(r.diagnostics.size(), 1u);
  EXPECT_NE(r.diagnostics[0].message.find("pole"), std::string::npos);
  EXPECT_EQ(r.exit_code(), 2);
}

TEST(Run, TypeErrorsAreReportedPerAssertion) {
  auto r = run("point A, B; param t; assert is_zero(de_sq(A, t)); assert equal(de_sq(A, B), de_sq(B, A));");
  ASSERT_EQ(r.results.size(), 2u);
  EXPECT_EQ(r.results[0].verdict, Verdict::error);
  EXPECT_EQ(r.results[1].verdict, Verdict::proved);
}

TEST(Run, EulerLineScriptMixesVerdicts) {
  auto r = run("point A, B, C; let G = centroid(A, B, C); let H = orthocenter(A, B, C);"
               "let O = circumcenter(A, B, C); assert colinear(G, H, O); assert equal(G, (A + B + C) / 3);"
               "assert equal(de_sq(A, B), de_sq(A, C));");
  ASSERT_EQ(r.results.size(), 3u);
  EXPECT_EQ(r.results[0].verdict, Verdict::proved);
  EXPECT_EQ(r.results[1].verdict, Verdict::proved);
  EXPECT_EQ(r.results[2].verdict, Verdict::refuted);
}

TEST(Run, SquareRootsSquareBack) {
  auto r = run("param a, b; let s = sqrt(a^2 + b^2); assert equal(s * s, a^2 + b^2); assert equal(sqrt(4 * a^2) ^ 2, 4*a^2);");
  ASSERT_EQ(r.results.size(), 2u);
  EXPECT_EQ(r.results[0].verdict, Verdict::proved);
  EXPECT_EQ(r.results[1].verdict, Verdict::proved);
}

TEST(Run, IncidenceAndTangency) {
  auto r = run("point O; param R, t; let c = (x - O[1])^2 + (y - O[2])^2 - R^2; let P = param_circle(O, R, t);"
               "assert incident(P, c); assert touch_circle_line(c, tangent(c, P));");
  ASSERT_EQ(r.results.size(), 2u);
  EXPECT_EQ(r.results[0].verdict, Verdict::proved);
  EXPECT_EQ(r.results[1].verdict, Verdict::proved);
}

TEST(Run, TraceShowsEachLetOnce) {
  std::vector<std::string> lines;
  cli::RunOptions options;
  options.prove.trace = [&](const std::string& line) { lines.push_back(line); };
  run("point A, B; let M = midpoint(A, B); assert colinear(A, B, M); let N = midpoint(A, M);"
      "assert colinear(A, M, N);",
      options);
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0], "M = [1/2*A1+1/2*B1, 1/2*A2+1/2*B2]");
  EXPECT_EQ(lines[1].rfind("N = [", 0), 0u);
}

TEST(Run, DigestDependsOnCanonicalTextOnly) {
  auto a = run("point A,B; assert equal(A,A);");
  auto b = run("# same\npoint A, B;\nassert equal(A, A);");
  auto c = run("point A,B; assert equal(B,B);");
  EXPECT_EQ(a.digest, b.digest);
  EXPECT_NE(a.digest, c.digest);
}

TEST(Digest, MatchesPublishedFnv1aVectors) {
  EXPECT_EQ(cli::fnv1a_digest(""), "fnv1a64:cbf29ce484222325");
  EXPECT_EQ(cli::fnv1a_digest("a"), "fnv1a64:af63dc4c8601ec8c");
  EXPECT_EQ(cli::fnv1a_digest("foobar"), "fnv1a64:85944171f73967e8");
}

// ---------------------------------------------------------------------------
// JSON

cli::RunReport random_report(Gen& g) {
  cli::RunReport r;
  r.digest = cli::fnv1a_digest(std::to_string(g.integer(0, 1 << 30)));
  long n = g.integer(0, 5);
  for (long k = 0; k < n; ++k) {
    cli::ReportEntry e;
    e.id = "entry \"" + std::to_string(k) + "\"\n\xC3\xA9";
    e.verdict = static_cast<Verdict>(g.integer(0, 3));
    e.millis = std::ldexp(static_cast<double>(g.integer(0, 1L << 40)), static_cast<int>(g.integer(-40, 0)));
    e.degree = static_cast<unsigned>(g.integer(0, 100));
    e.nterms = static_cast<std::size_t>(g.integer(0, 1L << 40));
    if (g.coin()) {
      theorems::Certificate c;
      c.degree = static_cast<unsigned>(g.integer(0, 50));
      c.parameters = static_cast<unsigned>(g.integer(0, 20));
      if (g.coin()) {
        c.numerator = "m^2 - n^2";
        c.divisor = "m - n";
        c.cofactor = "m + n";
        for (long j = g.integer(0, 3); j > 0; --j) c.evidence.emplace_back(g.rational().get_str(), g.rational().get_str());
        c.semi_rigorous = true;
      }
      e.certificate = c;
    }
    r.results.push_back(e);
    if (g.coin(0.3)) r.diagnostics.push_back({e.id, "timeout: \t budget"});
  }
  return r;
}

TEST(Json, RandomReportsRoundTrip) {
  Gen g(31337);
  for (int round = 0; round < 1000; ++round) {
    cli::RunReport r = random_report(g);
    ASSERT_EQ(cli::report_from_json(cli::to_json(r)), r);
    ASSERT_EQ(cli::report_from_json(cli::to_json(r, -1)), r);
  }
}

TEST(Json, EntriesUseTheFixedSchema) {
  auto r = run("point A, B; assert equal(de_sq(A, B), de_sq(B, A)); assert equal(A, B);");
  auto doc = nlohmann::json::parse(cli::to_json(r));
  ASSERT_EQ(doc.at("results").size(), 2u);
  std::set<std::string> with_cert = {"id", "verdict", "millis", "degree", "nterms", "certificate"};
  std::set<std::string> without = {"id", "verdict", "millis", "degree", "nterms"};
  for (const auto& entry : doc.at("results")) {
    std::set<std::string> keys;
    for (const auto& [k, v] : entry.items()) keys.insert(k);
    EXPECT_TRUE(keys == with_cert || keys == without);
  }
  EXPECT_EQ(doc["results"][0]["verdict"], "proved");
  EXPECT_EQ(doc["results"][1]["verdict"], "refuted");
  EXPECT_EQ(cli::report_from_json(cli::to_json(r)), r);
}

TEST(Json, MalformedReportsAreSyntaxErrors) {
  for (const char* text : {"", "{", "{\"tool\": 1}", "{\"tool\":\"t\",\"digest\":\"d\",\"results\":[{\"id\":\"a\"}],"
                                                    "\"diagnostics\":[]}"}) {
    try {
      cli::report_from_json(text);
      ADD_FAILURE() << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::syntax);
    }
  }
}

// ---------------------------------------------------------------------------
// The executable

struct Outcome {
  int code;
  std::string out;
};

Outcome invoke(const std::string& args, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + "\"" PLANEPROVER_BIN "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string script(const char* name) { return std::string("\"") + PLANEPROVER_SCRIPTS + "/" + name + "\""; }

TEST(Executable, ProveNapoleon) {
  Outcome o = invoke("prove Napoleon");
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.out, "Napoleon: proved\n");
}

TEST(Executable, LehmusIsACertificateWithExitZero) {
  Outcome o = invoke("prove Lehmus");
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.out.rfind("Lehmus: certificate", 0), 0u) << o.out;
}

TEST(Executable, ExitCodeMatrix) {
  struct Row {
    std::string args;
    int code;
  };
  std::vector<Row> rows = {
      {"prove Napoleon Ceva", 0},
      {"check " + script("napoleon.geo"), 0},
      {"check " + script("incenter.geo"), 0},
      {"check " + script("midpoint_refuted.geo"), 1},
      {"check " + script("mixed.geo"), 1},
      {"check " + script("degenerate.geo"), 2},
      {"check " + script("syntax_error.geo"), 2},
      {"check " + script("no_such_file.geo"), 2},
      {"prove NoSuchTheorem", 2},
      {"prove Napoleon NoSuchTheorem", 2},
      {"prove", 2},
      {"prove --all Napoleon", 2},
      {"prove Napoleon --parallel", 2},
      {"frobnicate", 2},
      {"prove Napoleon --frobnicate", 2},
      {"", 2},
      {"oracle Napoleon --seed 3", 0},
      {"oracle Napoleon --seed 3 --mutation 0", 1},
      {"oracle Napoleon --seed 3 --mutation 99", 2},
      {"oracle Napoleon", 2},
      {"prove NinePointCircleExists --timeout 0.001", 2},
      {"prove Menelaus --max-terms 20", 2},
      {"list", 0},
  };
  for (const Row& row : rows) EXPECT_EQ(invoke(row.args).code, row.code) << row.args;
}

TEST(Executable, EnvironmentCapsTermsAndFlagOverridesIt) {
  EXPECT_EQ(invoke("prove Menelaus", "PLANEPROVER_MAX_TERMS=20").code, 2);
  EXPECT_EQ(invoke("prove Menelaus --max-terms 5000000", "PLANEPROVER_MAX_TERMS=20").code, 0);
  EXPECT_EQ(invoke("prove Menelaus", "PLANEPROVER_MAX_TERMS=lots").code, 2);
}

TEST(Executable, JsonOutputIsValidAndStable) {
  Outcome a = invoke("prove Napoleon Lehmus Ceva --json");
  Outcome b = invoke("--json prove Napoleon Lehmus Ceva");
  ASSERT_EQ(a.code, 0);
  ASSERT_EQ(b.code, 0);
  auto ra = cli::report_from_json(a.out), rb = cli::report_from_json(b.out);
  ASSERT_EQ(ra.results.size(), 3u);
  EXPECT_EQ(ra.digest, rb.digest);
  for (std::size_t k = 0; k < 3; ++k) {
    EXPECT_EQ(ra.results[k].id, rb.results[k].id);
    EXPECT_EQ(ra.results[k].verdict, rb.results[k].verdict);
    EXPECT_EQ(ra.results[k].certificate, rb.results[k].certificate);
  }
  EXPECT_EQ(ra.results[1].verdict, Verdict::certificate);
  EXPECT_EQ(ra.results[1].certificate->divisor, "m-n");
}

TEST(Executable, TraceListsConstructedObjects) {
  Outcome o = invoke("prove Napoleon --trace");
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("  CET(A,B) = ["), std::string::npos) << o.out;
  EXPECT_NE(o.out.find("Napoleon: proved"), std::string::npos);

  Outcome s = invoke("check --trace " + script("incenter.geo"));
  EXPECT_EQ(s.code, 0);
  EXPECT_NE(s.out.find("  T = [[0, 0], [1, 0], ["), std::string::npos) << s.out;
}

TEST(Executable, ListShowsTheWholeCatalog) {
  Outcome o = invoke("list --json");
  ASSERT_EQ(o.code, 0);
  auto rows = nlohmann::json::parse(o.out);
  EXPECT_EQ(rows.size(), theorems::catalog().size());
  EXPECT_EQ(rows[0].at("id"), theorems::catalog()[0].id);
}

}  // namespace
