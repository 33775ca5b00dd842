#include <cctype>
#include <charconv>
#include <string>

#include "trinary/error.hpp"
#include "trinary/expr.hpp"

namespace trinary::expr {
namespace {

enum class Tok { Ident, Integer, Data, True, False, Unknown, Null, Not, And, Or, LParen, RParen, Eq, Neq, End };

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
  std::int64_t number = 0;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::End:
      return "end of input";
    case Tok::Ident:
      return "identifier '" + t.text + "'";
    case Tok::Data:
      return "data variable '$" + t.text + "'";
    default:
      return "'" + t.text + "'";
  }
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::string upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    const std::size_t start = pos_;
    if (pos_ >= src_.size()) return {Tok::End, start, ""};

    const char c = src_[pos_];
    if (c == '(') return single(Tok::LParen);
    if (c == ')') return single(Tok::RParen);
    if (c == '=') return single(Tok::Eq);
    if (c == '<') {
      if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
        pos_ += 2;
        return {Tok::Neq, start, "<>"};
      }
      throw ParseError(start, "unexpected character '<' (did you mean '<>'?)");
    }
    if (c == '$') {
      ++pos_;
      if (pos_ >= src_.size() || !ident_start(src_[pos_])) {
        throw ParseError(start, "'$' must be followed by an identifier");
      }
      return {Tok::Data, start, std::string(identifier())};
    }
    if (digit(c) || (c == '-' && pos_ + 1 < src_.size() && digit(src_[pos_ + 1]))) {
      ++pos_;
      while (pos_ < src_.size() && digit(src_[pos_])) ++pos_;
      const std::string_view text = src_.substr(start, pos_ - start);
      if (pos_ < src_.size() && ident_char(src_[pos_])) {
        throw ParseError(pos_, "malformed integer literal");
      }
      std::int64_t value = 0;
      const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
      if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw ParseError(start, "integer literal out of range: " + std::string(text));
      }
      return {Tok::Integer, start, std::string(text), value};
    }
    if (ident_start(c)) {
      const std::string_view word = identifier();
      const std::string kw = upper(word);
      Tok kind = Tok::Ident;
      if (kw == "TRUE") kind = Tok::True;
      else if (kw == "FALSE") kind = Tok::False;
      else if (kw == "UNKNOWN") kind = Tok::Unknown;
      else if (kw == "NULL") kind = Tok::Null;
      else if (kw == "NOT") kind = Tok::Not;
      else if (kw == "AND") kind = Tok::And;
      else if (kw == "OR") kind = Tok::Or;
      return {kind, start, std::string(word)};
    }
    throw ParseError(start, std::string("unexpected character '") + c + "'");
  }

 private:
  Token single(Tok kind) {
    const std::size_t start = pos_++;
    return {kind, start, std::string(1, src_[start])};
  }

  std::string_view identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && ident_char(src_[pos_])) ++pos_;
    return src_.substr(start, pos_ - start);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lexer_(src) { advance(); }

  Expr parse_all() {
    Expr e = expression();
    if (cur_.kind != Tok::End) throw ParseError(cur_.pos, "unexpected trailing " + describe(cur_));
    return e;
  }

 private:
  void advance() { cur_ = lexer_.next(); }

  Expr expression() {
    Expr lhs = term();
    while (cur_.kind == Tok::Or) {
      advance();
      lhs = Expr::make_or(std::move(lhs), term());
    }
    return lhs;
  }

  Expr term() {
    Expr lhs = factor();
    while (cur_.kind == Tok::And) {
      advance();
      lhs = Expr::make_and(std::move(lhs), factor());
    }
    return lhs;
  }

  Expr factor() {
    switch (cur_.kind) {
      case Tok::Not:
        advance();
        return Expr::make_not(factor());
      case Tok::LParen: {
        advance();
        Expr inner = expression();
        if (cur_.kind != Tok::RParen) throw ParseError(cur_.pos, "expected ')', found " + describe(cur_));
        advance();
        return inner;
      }
      default:
        return atom();
    }
  }

  Expr atom() {
    switch (cur_.kind) {
      case Tok::True:
        advance();
        return Expr::make_const(k3::Trit::True);
      case Tok::False:
        advance();
        return Expr::make_const(k3::Trit::False);
      case Tok::Unknown:
        advance();
        return Expr::make_const(k3::Trit::Unknown);
      case Tok::Ident: {
        std::string name = cur_.text;
        advance();
        return Expr::make_var(std::move(name));
      }
      case Tok::Integer:
      case Tok::Null:
      case Tok::Data:
        return comparison();
      default:
        throw ParseError(cur_.pos, "expected an expression, found " + describe(cur_));
    }
  }

  Expr comparison() {
    Operand lhs = operand();
    CompareOp op;
    if (cur_.kind == Tok::Eq) {
      op = CompareOp::Equal;
    } else if (cur_.kind == Tok::Neq) {
      op = CompareOp::NotEqual;
    } else {
      throw ParseError(cur_.pos, "expected '=' or '<>', found " + describe(cur_));
    }
    advance();
    Operand rhs = operand();
    return Expr::make_compare(std::move(lhs), op, std::move(rhs));
  }

  Operand operand() {
    Operand out;
    switch (cur_.kind) {
      case Tok::Integer:
        out = cur_.number;
        break;
      case Tok::Null:
        out = NullLiteral{};
        break;
      case Tok::Data:
        out = DataVar{cur_.text};
        break;
      default:
        throw ParseError(cur_.pos, "expected an integer, NULL or $variable, found " + describe(cur_));
    }
    advance();
    return out;
  }

  Lexer lexer_;
  Token cur_{Tok::End, 0, ""};
};

}  // namespace

Expr parse(std::string_view text) { return Parser(text).parse_all(); }

}  // namespace trinary::expr
