#pragma once

// Small expression language for parameterized catalog data:
//   arithmetic  "u+1", "2u", "-w", "u*v", "|u|", "k1", "(u-1)/2", "a^2"
//   conditions  "0 < |u| < 1", "u*v != 0 && -1 <= u < v < 1", "!(u == 0)"

#include "liealg/rational.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace liealg {

using Env = std::map<std::string, Rational>;

namespace detail {

struct ExprNode {
  enum class Kind { Number, Symbol, Neg, Add, Sub, Mul, Div, Pow, Abs };
  Kind kind;
  Rational value;
  std::string name;
  int exponent = 0;
  std::shared_ptr<const ExprNode> lhs, rhs;
};

struct CondNode {
  enum class Kind { Compare, And, Or, Not, True };
  Kind kind;
  // Compare: chain operands[0] ops[0] operands[1] ops[1] ...
  std::vector<std::shared_ptr<const ExprNode>> operands;
  std::vector<std::string> ops;
  std::shared_ptr<const CondNode> lhs, rhs;
};

}  // namespace detail

class Expr {
 public:
  Expr() : Expr(Rational(0)) {}
  explicit Expr(const Rational& value) : text_(to_string(value)) {
    auto n = std::make_shared<detail::ExprNode>();
    n->kind = detail::ExprNode::Kind::Number;
    n->value = value;
    root_ = std::move(n);
  }

  static Expr parse(std::string_view text);

  Rational eval(const Env& env) const { return eval(*root_, env); }

  /// Free symbols referenced by the expression.
  std::set<std::string> symbols() const {
    std::set<std::string> out;
    collect(*root_, out);
    return out;
  }

  bool is_constant() const { return symbols().empty(); }
  const std::string& text() const noexcept { return text_; }

 private:
  friend class ExprParser;
  friend class Condition;
  Expr(std::shared_ptr<const detail::ExprNode> root, std::string text)
      : root_(std::move(root)), text_(std::move(text)) {}

  static Rational eval(const detail::ExprNode& n, const Env& env) {
    using K = detail::ExprNode::Kind;
    switch (n.kind) {
      case K::Number: return n.value;
      case K::Symbol: {
        auto it = env.find(n.name);
        if (it == env.end()) throw Error("unbound symbol '" + n.name + "'");
        return it->second;
      }
      case K::Neg: return -eval(*n.lhs, env);
      case K::Add: return eval(*n.lhs, env) + eval(*n.rhs, env);
      case K::Sub: return eval(*n.lhs, env) - eval(*n.rhs, env);
      case K::Mul: return eval(*n.lhs, env) * eval(*n.rhs, env);
      case K::Div: {
        const Rational d = eval(*n.rhs, env);
        if (d == 0) throw Error("division by zero");
        return eval(*n.lhs, env) / d;
      }
      case K::Pow: {
        const Rational base = eval(*n.lhs, env);
        Rational r = 1;
        for (int i = 0; i < std::abs(n.exponent); ++i) r *= base;
        if (n.exponent < 0) {
          if (r == 0) throw Error("division by zero");
          r = 1 / r;
        }
        return r;
      }
      case K::Abs: {
        const Rational v = eval(*n.lhs, env);
        return v < 0 ? Rational(-v) : v;
      }
    }
    throw Error("corrupt expression");
  }

  static void collect(const detail::ExprNode& n, std::set<std::string>& out) {
    if (n.kind == detail::ExprNode::Kind::Symbol) out.insert(n.name);
    if (n.lhs) collect(*n.lhs, out);
    if (n.rhs) collect(*n.rhs, out);
  }

  std::shared_ptr<const detail::ExprNode> root_;
  std::string text_;
};

class Condition {
 public:
  Condition() {
    auto n = std::make_shared<detail::CondNode>();
    n->kind = detail::CondNode::Kind::True;
    root_ = std::move(n);
  }

  static Condition parse(std::string_view text);

  bool eval(const Env& env) const { return eval(*root_, env); }
  const std::string& text() const noexcept { return text_; }

 private:
  friend class ExprParser;
  Condition(std::shared_ptr<const detail::CondNode> root, std::string text)
      : root_(std::move(root)), text_(std::move(text)) {}

  static bool eval(const detail::CondNode& n, const Env& env) {
    using K = detail::CondNode::Kind;
    switch (n.kind) {
      case K::True: return true;
      case K::Not: return !eval(*n.lhs, env);
      case K::And: return eval(*n.lhs, env) && eval(*n.rhs, env);
      case K::Or: return eval(*n.lhs, env) || eval(*n.rhs, env);
      case K::Compare: {
        Rational left = Expr::eval(*n.operands[0], env);
        for (std::size_t i = 0; i < n.ops.size(); ++i) {
          const Rational right = Expr::eval(*n.operands[i + 1], env);
          const std::string& op = n.ops[i];
          const bool holds = op == "<"    ? left < right
                             : op == "<=" ? left <= right
                             : op == ">"  ? left > right
                             : op == ">=" ? left >= right
                             : op == "==" ? left == right
                                          : left != right;
          if (!holds) return false;
          left = right;
        }
        return true;
      }
    }
    throw Error("corrupt condition");
  }

  std::shared_ptr<const detail::CondNode> root_;
  std::string text_;
};

/// Recursive-descent parser shared by Expr and Condition.
class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : s_(text) {}

  Expr expr() {
    auto root = sum();
    expect_end();
    return Expr(std::move(root), std::string(s_));
  }

  Condition condition() {
    auto root = disjunction();
    expect_end();
    return Condition(std::move(root), std::string(s_));
  }

 private:
  using ENode = std::shared_ptr<const detail::ExprNode>;
  using CNode = std::shared_ptr<const detail::CondNode>;
  using EK = detail::ExprNode::Kind;
  using CK = detail::CondNode::Kind;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " in '" + std::string(s_) + "'", pos_);
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(std::string_view tok) {
    skip_ws();
    if (s_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }
  void expect_end() {
    if (!at_end()) fail("unexpected trailing input");
  }

  static ENode binary(EK kind, ENode l, ENode r) {
    auto n = std::make_shared<detail::ExprNode>();
    n->kind = kind;
    n->lhs = std::move(l);
    n->rhs = std::move(r);
    return n;
  }

  ENode sum() {
    ENode left = term();
    for (;;) {
      if (accept("+")) left = binary(EK::Add, left, term());
      else if (peek() == '-') {
        ++pos_;
        left = binary(EK::Sub, left, term());
      } else
        return left;
    }
  }

  ENode term() {
    ENode left = unary();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        left = binary(EK::Mul, left, unary());
      } else if (c == '/') {
        ++pos_;
        left = binary(EK::Div, left, unary());
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '(') {
        left = binary(EK::Mul, left, power());  // implicit product, e.g. "2u"
      } else {
        return left;
      }
    }
  }

  ENode unary() {
    if (peek() == '-') {
      ++pos_;
      auto n = std::make_shared<detail::ExprNode>();
      n->kind = EK::Neg;
      n->lhs = unary();
      return n;
    }
    if (peek() == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  ENode power() {
    ENode base = primary();
    if (accept("^")) {
      skip_ws();
      bool negative = false;
      if (peek() == '-') {
        negative = true;
        ++pos_;
      }
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected integer exponent");
      auto n = std::make_shared<detail::ExprNode>();
      n->kind = EK::Pow;
      n->lhs = std::move(base);
      n->exponent = std::stoi(std::string(s_.substr(start, pos_ - start))) * (negative ? -1 : 1);
      return n;
    }
    return base;
  }

  ENode primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      ENode inner = sum();
      expect(")");
      return inner;
    }
    if (c == '|') {
      ++pos_;
      auto n = std::make_shared<detail::ExprNode>();
      n->kind = EK::Abs;
      n->lhs = sum();
      expect("|");
      return n;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.'))
        ++pos_;
      auto n = std::make_shared<detail::ExprNode>();
      n->kind = EK::Number;
      n->value = parse_rational(s_.substr(start, pos_ - start));
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      auto n = std::make_shared<detail::ExprNode>();
      n->kind = EK::Symbol;
      n->name = std::string(s_.substr(start, pos_ - start));
      return n;
    }
    fail("expected a number, symbol, '(' or '|'");
  }

  CNode disjunction() {
    CNode left = conjunction();
    while (accept("||")) {
      auto n = std::make_shared<detail::CondNode>();
      n->kind = CK::Or;
      n->lhs = left;
      n->rhs = conjunction();
      left = n;
    }
    return left;
  }

  CNode conjunction() {
    CNode left = negation();
    while (accept("&&")) {
      auto n = std::make_shared<detail::CondNode>();
      n->kind = CK::And;
      n->lhs = left;
      n->rhs = negation();
      left = n;
    }
    return left;
  }

  CNode negation() {
    skip_ws();
    if (peek() == '!' && s_.substr(pos_, 2) != "!=") {
      ++pos_;
      auto n = std::make_shared<detail::CondNode>();
      n->kind = CK::Not;
      n->lhs = negation();
      return n;
    }
    if (peek() == '(') {
      // Either a parenthesized condition or an arithmetic operand; try the former.
      const std::size_t save = pos_;
      try {
        ++pos_;
        CNode inner = disjunction();
        expect(")");
        const char next = peek();
        if (next == '\0' || next == ')' || s_.substr(pos_, 2) == "&&" || s_.substr(pos_, 2) == "||")
          return inner;
      } catch (const ParseError&) {
      }
      pos_ = save;
    }
    return comparison();
  }

  CNode comparison() {
    auto n = std::make_shared<detail::CondNode>();
    n->kind = CK::Compare;
    n->operands.push_back(sum());
    for (;;) {
      std::string op;
      for (std::string_view candidate : {"<=", ">=", "==", "!=", "<", ">"})
        if (accept(candidate)) {
          op = candidate;
          break;
        }
      if (op.empty()) break;
      n->ops.push_back(op);
      n->operands.push_back(sum());
    }
    if (n->ops.empty()) fail("expected a comparison operator");
    return n;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

inline Expr Expr::parse(std::string_view text) { return ExprParser(text).expr(); }
inline Condition Condition::parse(std::string_view text) { return ExprParser(text).condition(); }

}  // namespace liealg
