#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "trinary/error.hpp"
#include "trinary/expr.hpp"

using namespace trinary::expr;
using trinary::k3::Trit;

namespace {

Trit eval_text(const std::string& text, const Bindings& b = {}) { return eval(parse(text), b); }

std::size_t error_position(const std::string& text) {
  try {
    parse(text);
  } catch (const trinary::ParseError& e) {
    return e.position();
  }
  FAIL("expected a parse error for: " << text);
  return 0;
}

// Random well-formed source text with noisy spacing, keyword case and
// redundant parentheses.
class SourceGen {
 public:
  explicit SourceGen(unsigned seed) : rng_(seed) {}

  std::string expression(int depth) {
    const int pick = depth <= 0 ? 3 : std::uniform_int_distribution<int>(0, 5)(rng_);
    switch (pick) {
      case 0:
        return expression(depth - 1) + sp() + kw("OR") + sp() + expression(depth - 1);
      case 1:
        return factor(depth - 1) + sp() + kw("AND") + sp() + factor(depth - 1);
      case 2:
        return kw("NOT") + " " + factor(depth - 1);
      default:
        return factor(depth - 1);
    }
  }

 private:
  std::string factor(int depth) {
    if (depth > 0 && coin()) return "(" + sp() + expression(depth - 1) + sp() + ")";
    switch (std::uniform_int_distribution<int>(0, 5)(rng_)) {
      case 0:
        return kw(pick({"TRUE", "FALSE", "UNKNOWN"}));
      case 1:
      case 2:
        return pick({"a", "b", "c", "x1", "flag_2"});
      default:
        return operand() + sp() + pick({"=", "<>"}) + sp() + operand();
    }
  }

  std::string operand() {
    switch (std::uniform_int_distribution<int>(0, 2)(rng_)) {
      case 0:
        return std::to_string(std::uniform_int_distribution<int>(-20, 20)(rng_));
      case 1:
        return kw("NULL");
      default:
        return pick({"$p", "$q", "$val"});
    }
  }

  std::string kw(std::string word) {
    for (char& c : word) {
      if (coin()) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return word;
  }
  std::string sp() { return coin() ? " " : "  "; }
  bool coin() { return std::uniform_int_distribution<int>(0, 1)(rng_) == 1; }
  std::string pick(std::initializer_list<const char*> options) {
    const auto i = std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng_);
    return *(options.begin() + static_cast<std::ptrdiff_t>(i));
  }

  std::mt19937 rng_;
};

}  // namespace

TEST_CASE("precedence") {
  const Expr e = parse("NOT x AND y");
  CHECK(e == Expr::make_and(Expr::make_not(Expr::make_var("x")), Expr::make_var("y")));

  CHECK(parse("a OR b AND c") ==
        Expr::make_or(Expr::make_var("a"), Expr::make_and(Expr::make_var("b"), Expr::make_var("c"))));
  CHECK(parse("(a OR b) AND c") ==
        Expr::make_and(Expr::make_or(Expr::make_var("a"), Expr::make_var("b")), Expr::make_var("c")));
  CHECK(parse("a AND b AND c") ==
        Expr::make_and(Expr::make_and(Expr::make_var("a"), Expr::make_var("b")), Expr::make_var("c")));
  CHECK(parse("NOT NOT a") == Expr::make_not(Expr::make_not(Expr::make_var("a"))));
}

TEST_CASE("atoms and comparisons") {
  CHECK(parse("NULL = NULL") == Expr::make_compare(NullLiteral{}, CompareOp::Equal, NullLiteral{}));
  CHECK(parse("$v <> -3") == Expr::make_compare(DataVar{"v"}, CompareOp::NotEqual, std::int64_t{-3}));
  CHECK(parse("true") == Expr::make_const(Trit::True));
  CHECK(parse("False") == Expr::make_const(Trit::False));
  CHECK(parse("uNkNoWn") == Expr::make_const(Trit::Unknown));
  CHECK(parse("not a or B") == Expr::make_or(Expr::make_not(Expr::make_var("a")), Expr::make_var("B")));
  CHECK_FALSE(parse("a") == parse("b"));
  CHECK_FALSE(parse("1 = 2") == parse("1 <> 2"));
}

TEST_CASE("syntax and lexical errors carry positions") {
  CHECK(error_position("x AND") == 5);
  CHECK(error_position("") == 0);
  CHECK(error_position("a # b") == 2);
  CHECK(error_position("(a OR b") == 7);
  CHECK(error_position("a b") == 2);
  CHECK(error_position("1 < 2") == 2);
  CHECK(error_position("$ = 1") == 0);
  CHECK(error_position("3 = x") == 4);
  CHECK(error_position("x = 3") == 2);
  CHECK(error_position("12a = 1") == 2);
  CHECK(error_position("99999999999999999999 = 1") == 0);
  CHECK(error_position("NULL") == 4);
  CHECK(error_position("a AND )") == 6);
  CHECK(error_position("_a") == 0);

  try {
    parse("x AND");
  } catch (const trinary::ParseError& e) {
    CHECK(std::string(e.what()).find("end of input") != std::string::npos);
  }
}

TEST_CASE("evaluation") {
  CHECK(eval_text("NULL = NULL") == Trit::Unknown);
  CHECK(eval_text("NULL <> NULL") == Trit::Unknown);
  CHECK(eval_text("x OR NOT x", {{{"x", Trit::Unknown}}, {}}) == Trit::Unknown);
  CHECK(eval_text("3 = 3 AND NOT (2 <> 2)") == Trit::True);
  CHECK(eval_text("1 = 2") == Trit::False);
  CHECK(eval_text("FALSE AND UNKNOWN") == Trit::False);
  CHECK(eval_text("TRUE OR UNKNOWN") == Trit::True);

  Bindings b;
  b.data["p"] = 5;
  b.data["q"] = std::nullopt;
  CHECK(eval_text("$p = 5", b) == Trit::True);
  CHECK(eval_text("$p <> 5", b) == Trit::False);
  CHECK(eval_text("$q = 5", b) == Trit::Unknown);
  CHECK(eval_text("$q = $q", b) == Trit::Unknown);
  CHECK(eval_text("$q = $p OR TRUE", b) == Trit::True);
}

TEST_CASE("unbound names are errors") {
  try {
    eval_text("a AND TRUE");
    FAIL("expected EvalError");
  } catch (const trinary::EvalError& e) {
    CHECK(std::string(e.what()).find("a") != std::string::npos);
  }
  try {
    eval_text("$missing = 1");
    FAIL("expected EvalError");
  } catch (const trinary::EvalError& e) {
    CHECK(std::string(e.what()).find("$missing") != std::string::npos);
  }
}

TEST_CASE("NULL contagion") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<std::int64_t> val(-1000, 1000);
  for (int i = 0; i < 500; ++i) {
    Bindings b;
    b.data["v"] = val(rng);
    const std::string other = std::to_string(val(rng));
    for (const char* op : {"=", "<>"}) {
      REQUIRE(eval_text("NULL " + std::string(op) + " " + other, b) == Trit::Unknown);
      REQUIRE(eval_text(other + " " + op + " NULL", b) == Trit::Unknown);
      REQUIRE(eval_text("$v " + std::string(op) + " NULL", b) == Trit::Unknown);
      REQUIRE(eval_text("NULL " + std::string(op) + " $v", b) == Trit::Unknown);
    }
  }
}

TEST_CASE("truth tables") {
  const auto not_a = truth_table(parse("NOT a"));
  CHECK(not_a.variables == std::vector<std::string>{"a"});
  REQUIRE(not_a.rows.size() == 3);
  CHECK(not_a.rows[0].result == Trit::True);
  CHECK(not_a.rows[1].result == Trit::Unknown);
  CHECK(not_a.rows[2].result == Trit::False);

  const auto and_ab = truth_table(parse("a AND b"));
  REQUIRE(and_ab.rows.size() == 9);
  for (const auto& row : and_ab.rows) {
    CHECK(trinary::k3::to_int(row.result) ==
          std::min(trinary::k3::to_int(row.assignment[0]), trinary::k3::to_int(row.assignment[1])));
  }
  CHECK(and_ab.rows[1].assignment == std::vector<Trit>{Trit::False, Trit::Unknown});

  const auto lem = truth_table(parse("a OR NOT a"));
  REQUIRE(lem.rows.size() == 3);
  CHECK(lem.rows[0].result == Trit::True);
  CHECK(lem.rows[1].result == Trit::Unknown);
  CHECK(lem.rows[2].result == Trit::True);

  CHECK(truth_table(parse("b OR a AND b")).variables == std::vector<std::string>{"b", "a"});
  CHECK(truth_table(parse("c AND b AND a")).rows.size() == 27);
  CHECK(truth_table(parse("TRUE")).rows.size() == 1);
  CHECK(truth_table(parse("NULL = 1 OR a")).rows.size() == 3);
  CHECK_THROWS_AS(truth_table(parse("$x = 1 OR a")), trinary::DomainError);
}

TEST_CASE("pretty-print round trip") {
  std::vector<std::string> corpus{
      "NOT x AND y", "a OR b AND c", "(a OR b) AND c", "NOT (a AND NOT b)", "NULL = NULL",
      "$x <> 3 OR NOT ($y = NULL)", "TRUE AND unknown OR false", "not not not a",
      "a AND (b OR (c AND (d OR e)))", "-5 = $z",
  };
  SourceGen gen(2024);
  for (int i = 0; i < 120; ++i) corpus.push_back(gen.expression(4));
  REQUIRE(corpus.size() >= 50);

  for (const auto& src : corpus) {
    CAPTURE(src);
    const Expr first = parse(src);
    const std::string printed = to_string(first);
    const Expr second = parse(printed);
    REQUIRE(first == second);
    REQUIRE(to_string(second) == printed);
  }
}

TEST_CASE("variable listing") {
  const auto e = parse("b AND $v = 1 OR a AND $w <> $v OR b");
  CHECK(trit_variables(e) == std::vector<std::string>{"b", "a"});
  CHECK(data_variables(e) == std::vector<std::string>{"v", "w"});
}
