#include "trinary/expr.hpp"

#include <algorithm>

#include "trinary/error.hpp"

namespace trinary::expr {
namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

std::string operand_string(const Operand& o) {
  return std::visit(Overloaded{
                        [](std::int64_t v) { return std::to_string(v); },
                        [](const NullLiteral&) { return std::string("NULL"); },
                        [](const DataVar& v) { return "$" + v.name; },
                    },
                    o);
}

DataValue resolve(const Operand& o, const Bindings& b) {
  return std::visit(Overloaded{
                        [](std::int64_t v) -> DataValue { return v; },
                        [](const NullLiteral&) -> DataValue { return std::nullopt; },
                        [&b](const DataVar& v) -> DataValue {
                          const auto it = b.data.find(v.name);
                          if (it == b.data.end()) throw EvalError("unbound data variable $" + v.name);
                          return it->second;
                        },
                    },
                    o);
}

void collect(const Expr& e, std::vector<std::string>& trits, std::vector<std::string>& data) {
  auto add = [](std::vector<std::string>& out, const std::string& name) {
    if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
  };
  std::visit(Overloaded{
                 [&](const NotNode& n) { collect(n.child, trits, data); },
                 [&](const AndNode& n) {
                   collect(n.lhs, trits, data);
                   collect(n.rhs, trits, data);
                 },
                 [&](const OrNode& n) {
                   collect(n.lhs, trits, data);
                   collect(n.rhs, trits, data);
                 },
                 [&](const VarNode& n) { add(trits, n.name); },
                 [](const ConstNode&) {},
                 [&](const CompareNode& n) {
                   for (const Operand* o : {&n.lhs, &n.rhs}) {
                     if (const auto* v = std::get_if<DataVar>(o)) add(data, v->name);
                   }
                 },
             },
             e.node());
}

}  // namespace

Expr Expr::make_not(Expr child) { return Expr(std::make_shared<const Node>(NotNode{std::move(child)})); }
Expr Expr::make_and(Expr lhs, Expr rhs) {
  return Expr(std::make_shared<const Node>(AndNode{std::move(lhs), std::move(rhs)}));
}
Expr Expr::make_or(Expr lhs, Expr rhs) {
  return Expr(std::make_shared<const Node>(OrNode{std::move(lhs), std::move(rhs)}));
}
Expr Expr::make_var(std::string name) { return Expr(std::make_shared<const Node>(VarNode{std::move(name)})); }
Expr Expr::make_const(k3::Trit value) { return Expr(std::make_shared<const Node>(ConstNode{value})); }
Expr Expr::make_compare(Operand lhs, CompareOp op, Operand rhs) {
  return Expr(std::make_shared<const Node>(CompareNode{std::move(lhs), op, std::move(rhs)}));
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  if (a.node().index() != b.node().index()) return false;
  return std::visit(Overloaded{
                        [&](const NotNode& x) { return x.child == std::get<NotNode>(b.node()).child; },
                        [&](const AndNode& x) {
                          const auto& y = std::get<AndNode>(b.node());
                          return x.lhs == y.lhs && x.rhs == y.rhs;
                        },
                        [&](const OrNode& x) {
                          const auto& y = std::get<OrNode>(b.node());
                          return x.lhs == y.lhs && x.rhs == y.rhs;
                        },
                        [&](const VarNode& x) { return x.name == std::get<VarNode>(b.node()).name; },
                        [&](const ConstNode& x) { return x.value == std::get<ConstNode>(b.node()).value; },
                        [&](const CompareNode& x) {
                          const auto& y = std::get<CompareNode>(b.node());
                          return x.op == y.op && x.lhs == y.lhs && x.rhs == y.rhs;
                        },
                    },
                    a.node());
}

std::string to_string(const Expr& e) {
  return std::visit(Overloaded{
                        [](const NotNode& n) { return "NOT " + to_string(n.child); },
                        [](const AndNode& n) { return "(" + to_string(n.lhs) + " AND " + to_string(n.rhs) + ")"; },
                        [](const OrNode& n) { return "(" + to_string(n.lhs) + " OR " + to_string(n.rhs) + ")"; },
                        [](const VarNode& n) { return n.name; },
                        [](const ConstNode& n) {
                          switch (n.value) {
                            case k3::Trit::True:
                              return std::string("TRUE");
                            case k3::Trit::False:
                              return std::string("FALSE");
                            default:
                              return std::string("UNKNOWN");
                          }
                        },
                        [](const CompareNode& n) {
                          return "(" + operand_string(n.lhs) + (n.op == CompareOp::Equal ? " = " : " <> ") +
                                 operand_string(n.rhs) + ")";
                        },
                    },
                    e.node());
}

k3::Trit eval(const Expr& e, const Bindings& bindings) {
  return std::visit(Overloaded{
                        [&](const NotNode& n) { return k3::k3_not(eval(n.child, bindings)); },
                        [&](const AndNode& n) { return k3::k3_and(eval(n.lhs, bindings), eval(n.rhs, bindings)); },
                        [&](const OrNode& n) { return k3::k3_or(eval(n.lhs, bindings), eval(n.rhs, bindings)); },
                        [&](const VarNode& n) {
                          const auto it = bindings.trits.find(n.name);
                          if (it == bindings.trits.end()) throw EvalError("unbound variable " + n.name);
                          return it->second;
                        },
                        [](const ConstNode& n) { return n.value; },
                        [&](const CompareNode& n) {
                          const DataValue lhs = resolve(n.lhs, bindings);
                          const DataValue rhs = resolve(n.rhs, bindings);
                          if (!lhs || !rhs) return k3::Trit::Unknown;
                          const bool equal = *lhs == *rhs;
                          return (equal == (n.op == CompareOp::Equal)) ? k3::Trit::True : k3::Trit::False;
                        },
                    },
                    e.node());
}

std::vector<std::string> trit_variables(const Expr& e) {
  std::vector<std::string> trits, data;
  collect(e, trits, data);
  return trits;
}

std::vector<std::string> data_variables(const Expr& e) {
  std::vector<std::string> trits, data;
  collect(e, trits, data);
  return data;
}

TruthTable truth_table(const Expr& e) {
  std::vector<std::string> vars, data;
  collect(e, vars, data);
  if (!data.empty()) {
    throw DomainError("truth table needs trit variables only; found data variable $" + data.front());
  }

  TruthTable table{vars, {}};
  std::size_t rows = 1;
  for (std::size_t i = 0; i < vars.size(); ++i) rows *= 3;
  table.rows.reserve(rows);

  std::vector<std::size_t> digits(vars.size(), 0);
  Bindings bindings;
  for (std::size_t r = 0; r < rows; ++r) {
    TruthRow row{{}, k3::Trit::Unknown};
    row.assignment.reserve(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
      const k3::Trit t = k3::kAllTrits[digits[i]];
      row.assignment.push_back(t);
      bindings.trits[vars[i]] = t;
    }
    row.result = eval(e, bindings);
    table.rows.push_back(std::move(row));
    // Odometer step; the last variable varies fastest.
    for (std::size_t i = vars.size(); i-- > 0;) {
      if (++digits[i] < 3) break;
      digits[i] = 0;
    }
  }
  return table;
}

}  // namespace trinary::expr
