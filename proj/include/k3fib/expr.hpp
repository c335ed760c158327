#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>

#include "k3fib/errors.hpp"
#include "k3fib/polynomial.hpp"
#include "k3fib/rational.hpp"
#include "k3fib/rational_function.hpp"

namespace k3fib {

// ---------------------------------------------------------------------------
// Lifting rationals into towers of rational-function fields
// ---------------------------------------------------------------------------

template <class F>
struct FieldFrom;

template <>
struct FieldFrom<BigRational> {
  static BigRational from(const BigRational& q) { return q; }
};

template <class G>
struct FieldFrom<RationalFunction<G>> {
  static RationalFunction<G> from(const BigRational& q) {
    return RationalFunction<G>(Polynomial<G>::constant(FieldFrom<G>::from(q)));
  }
};

template <class F>
F lift_to(const BigRational& q) {
  return FieldFrom<F>::from(q);
}

// ---------------------------------------------------------------------------
// Symbolic expressions
// ---------------------------------------------------------------------------

// Immutable expression tree over integer literals and single-letter variables.
// Built either programmatically or by parse_expr, and evaluated in any field
// that BigRational embeds into (rational functions, nested towers, ...).
class Ex {
 public:
  Ex() : n_(std::make_shared<const Node>(Node{Op::Num, BigRational(0), 0, 0, nullptr, nullptr})) {}

  static Ex num(const BigRational& q) {
    Ex e;
    e.n_ = std::make_shared<const Node>(Node{Op::Num, q, 0, 0, nullptr, nullptr});
    return e;
  }
  static Ex num(long v) { return num(BigRational(v)); }
  static Ex var(char name) {
    Ex e;
    e.n_ = std::make_shared<const Node>(Node{Op::Var, BigRational(0), name, 0, nullptr, nullptr});
    return e;
  }

  friend Ex operator+(const Ex& a, const Ex& b) { return binary(Op::Add, a, b); }
  friend Ex operator-(const Ex& a, const Ex& b) { return binary(Op::Sub, a, b); }
  friend Ex operator*(const Ex& a, const Ex& b) { return binary(Op::Mul, a, b); }
  friend Ex operator/(const Ex& a, const Ex& b) { return binary(Op::Div, a, b); }
  friend Ex operator-(const Ex& a) {
    Ex e;
    e.n_ = std::make_shared<const Node>(Node{Op::Neg, BigRational(0), 0, 0, a.n_, nullptr});
    return e;
  }
  friend Ex pow(const Ex& a, int k) {
    if (k < 0) throw ParseError("negative exponent in expression");
    Ex e;
    e.n_ = std::make_shared<const Node>(Node{Op::Pow, BigRational(0), 0, k, a.n_, nullptr});
    return e;
  }

  template <class F>
  F eval(const std::map<char, F>& env) const {
    return eval_node<F>(n_.get(), env);
  }

 private:
  enum class Op { Num, Var, Add, Sub, Mul, Div, Neg, Pow };
  struct Node {
    Op op;
    BigRational value;
    char name;
    int exponent;
    std::shared_ptr<const Node> a, b;
  };
  std::shared_ptr<const Node> n_;

  static Ex binary(Op op, const Ex& a, const Ex& b) {
    Ex e;
    e.n_ = std::make_shared<const Node>(Node{op, BigRational(0), 0, 0, a.n_, b.n_});
    return e;
  }

  template <class F>
  static F eval_node(const Node* n, const std::map<char, F>& env) {
    switch (n->op) {
      case Op::Num: return lift_to<F>(n->value);
      case Op::Var: {
        auto it = env.find(n->name);
        if (it == env.end()) {
          throw UnknownFunction("unbound variable '" + std::string(1, n->name) + "'");
        }
        return it->second;
      }
      case Op::Add: return eval_node<F>(n->a.get(), env) + eval_node<F>(n->b.get(), env);
      case Op::Sub: return eval_node<F>(n->a.get(), env) - eval_node<F>(n->b.get(), env);
      case Op::Mul: return eval_node<F>(n->a.get(), env) * eval_node<F>(n->b.get(), env);
      case Op::Div: {
        F d = eval_node<F>(n->b.get(), env);
        if (d.is_zero()) throw DivisionByZero("division by zero in expression");
        return eval_node<F>(n->a.get(), env) / d;
      }
      case Op::Neg: return lift_to<F>(BigRational(0)) - eval_node<F>(n->a.get(), env);
      case Op::Pow: {
        F base = eval_node<F>(n->a.get(), env);
        F r = lift_to<F>(BigRational(1));
        F b = base;
        int k = n->exponent;
        while (k > 0) {
          if (k & 1) r = r * b;
          b = b * b;
          k >>= 1;
        }
        return r;
      }
    }
    throw InternalError("unhandled expression node");
  }
};

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------
//
// Grammar (whitespace ignored):
//   expr   :=  ['+'|'-'] term  (('+'|'-') term)*
//   term   :=  factor (('*'|'/') factor | factor)*      -- juxtaposition = *
//   factor :=  atom ['^' uint]
//   atom   :=  uint | letter | '(' expr ')'
//
// Variables are single lowercase letters, so "2592a^2bd^3" reads as
// 2592 * a^2 * b * d^3.  Division binds like multiplication and associates
// left, so "1/2t" is (1/2)*t.

namespace expr_detail {

class Parser {
 public:
  explicit Parser(const std::string& text) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) s_ += c;
    }
  }

  Ex run() {
    if (s_.empty()) throw ParseError("empty expression");
    Ex e = expr();
    if (pos_ != s_.size()) {
      throw ParseError("trailing input near '" + s_.substr(pos_) + "'");
    }
    return e;
  }

 private:
  std::string s_;
  std::size_t pos_ = 0;

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char take() { return s_[pos_++]; }

  bool starts_atom() const {
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) ||
           (std::islower(static_cast<unsigned char>(c)) != 0) || c == '(';
  }

  unsigned parse_uint() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      throw ParseError("expected a number at position " + std::to_string(pos_));
    }
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) digits += take();
    if (digits.size() > 9) {
      return static_cast<unsigned>(BigRational::from_string(digits).num().get_ui());
    }
    return static_cast<unsigned>(std::stoul(digits));
  }

  Ex atom() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (std::isdigit(static_cast<unsigned char>(peek()))) digits += take();
      return Ex::num(BigRational::from_string(digits));
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      take();
      return Ex::var(c);
    }
    if (c == '(') {
      take();
      Ex e = expr();
      if (peek() != ')') throw ParseError("missing ')'");
      take();
      return e;
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "' at position " +
                     std::to_string(pos_));
  }

  Ex factor() {
    Ex base = atom();
    if (peek() == '^') {
      take();
      base = pow(base, static_cast<int>(parse_uint()));
    }
    return base;
  }

  Ex term() {
    Ex e = factor();
    while (true) {
      char c = peek();
      if (c == '*') {
        take();
        e = e * factor();
      } else if (c == '/') {
        take();
        e = e / factor();
      } else if (starts_atom()) {
        e = e * factor();
      } else {
        break;
      }
    }
    return e;
  }

  Ex expr() {
    bool neg = false;
    if (peek() == '+' || peek() == '-') neg = take() == '-';
    Ex e = term();
    if (neg) e = -e;
    while (peek() == '+' || peek() == '-') {
      bool minus = take() == '-';
      Ex t = term();
      e = minus ? e - t : e + t;
    }
    return e;
  }
};

}  // namespace expr_detail

inline Ex parse_expr(const std::string& text) { return expr_detail::Parser(text).run(); }

// ---------------------------------------------------------------------------
// Convenience evaluators
// ---------------------------------------------------------------------------

// Evaluates `text` in Q(var) with the remaining letters bound to numbers.
inline RationalFunction<BigRational> rf_in(const std::string& text, char var,
                                           const std::map<char, BigRational>& nums = {}) {
  using RF = RationalFunction<BigRational>;
  std::map<char, RF> env;
  for (const auto& [k, v] : nums) env[k] = RF(v);
  env[var] = RF::x();
  return parse_expr(text).eval<RF>(env);
}

// Same, but requires the result to be a polynomial in var.
inline Polynomial<BigRational> poly_in(const std::string& text, char var,
                                       const std::map<char, BigRational>& nums = {}) {
  RationalFunction<BigRational> r = rf_in(text, var, nums);
  if (!r.is_polynomial()) {
    throw ParseError("expression is not polynomial in '" + std::string(1, var) + "'");
  }
  return r.poly();
}

}  // namespace k3fib
