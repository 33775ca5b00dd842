#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "trinary/k3.hpp"

namespace trinary::expr {

struct NullLiteral {
  friend bool operator==(const NullLiteral&, const NullLiteral&) = default;
};

/// A '$'-prefixed data variable; `name` excludes the '$'.
struct DataVar {
  std::string name;
  friend bool operator==(const DataVar&, const DataVar&) = default;
};

using Operand = std::variant<std::int64_t, NullLiteral, DataVar>;

enum class CompareOp { Equal, NotEqual };

class Expr;

struct NotNode;
struct AndNode;
struct OrNode;
struct VarNode {
  std::string name;
};
struct ConstNode {
  k3::Trit value;
};
struct CompareNode {
  Operand lhs;
  CompareOp op;
  Operand rhs;
};

/// Immutable expression tree with shared, read-only nodes; cheap to copy.
class Expr {
 public:
  using Node = std::variant<NotNode, AndNode, OrNode, VarNode, ConstNode, CompareNode>;

  static Expr make_not(Expr child);
  static Expr make_and(Expr lhs, Expr rhs);
  static Expr make_or(Expr lhs, Expr rhs);
  static Expr make_var(std::string name);
  static Expr make_const(k3::Trit value);
  static Expr make_compare(Operand lhs, CompareOp op, Operand rhs);

  const Node& node() const;

  /// Structural equality.
  friend bool operator==(const Expr& a, const Expr& b);

 private:
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct NotNode {
  Expr child;
};
struct AndNode {
  Expr lhs, rhs;
};
struct OrNode {
  Expr lhs, rhs;
};

inline const Expr::Node& Expr::node() const { return *node_; }

/// Integer data value, or NULL when empty.
using DataValue = std::optional<std::int64_t>;

struct Bindings {
  std::map<std::string, k3::Trit> trits;
  std::map<std::string, DataValue> data;
};

/// Grammar, loosest binding first:
///   expr    := term (OR term)*
///   term    := factor (AND factor)*
///   factor  := NOT factor | '(' expr ')' | atom
///   atom    := TRUE | FALSE | UNKNOWN | identifier | operand ('=' | '<>') operand
///   operand := integer | NULL | '$' identifier
/// Keywords are case-insensitive. Throws ParseError.
Expr parse(std::string_view text);

/// Fully parenthesised source text that parses back to the same tree.
std::string to_string(const Expr& e);

/// Kleene evaluation. Any comparison with a NULL side is Unknown, including
/// NULL = NULL. Throws EvalError for unbound names.
k3::Trit eval(const Expr& e, const Bindings& bindings);

/// Trit variables in order of first appearance.
std::vector<std::string> trit_variables(const Expr& e);
std::vector<std::string> data_variables(const Expr& e);

struct TruthRow {
  std::vector<k3::Trit> assignment;  // aligned with TruthTable::variables
  k3::Trit result;
};

struct TruthTable {
  std::vector<std::string> variables;
  std::vector<TruthRow> rows;
};

/// All 3^k assignments, first variable slowest, values in order -1, 0, +1.
/// Throws DomainError when the expression references data variables.
TruthTable truth_table(const Expr& e);

}  // namespace trinary::expr
