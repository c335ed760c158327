#pragma once

#include <string>
#include <utility>

#include "k3fib/errors.hpp"
#include "k3fib/polynomial.hpp"

namespace k3fib {

// Field of fractions of Polynomial<F>.  Canonical form: gcd(num, den) = 1 and
// den monic; zero is 0/1.  Nesting RationalFunction<RationalFunction<F>>
// realizes iterated function fields such as Q(u)(v).
template <class F>
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Polynomial<F>::one()) {}
  RationalFunction(int n)  // NOLINT: implicit by design
      : num_(Polynomial<F>::constant(F(n))), den_(Polynomial<F>::one()) {}
  RationalFunction(const F& a)  // NOLINT: implicit by design
      : num_(Polynomial<F>::constant(a)), den_(Polynomial<F>::one()) {}
  RationalFunction(const Polynomial<F>& p)  // NOLINT: implicit by design
      : num_(p), den_(Polynomial<F>::one()) {}
  RationalFunction(Polynomial<F> num, Polynomial<F> den)
      : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    reduce();
  }

  static RationalFunction zero() { return RationalFunction(); }
  static RationalFunction one() { return RationalFunction(1); }
  // The generator of F(x).
  static RationalFunction x() { return RationalFunction(Polynomial<F>::x()); }

  const Polynomial<F>& num() const { return num_; }
  const Polynomial<F>& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  Polynomial<F> poly() const {
    if (!is_polynomial()) throw K3fibError("rational function is not a polynomial");
    return num_;
  }
  F constant_value() const {
    if (!is_constant()) throw K3fibError("rational function is not a constant");
    if (num_.is_zero()) return F(0);
    return num_.coeff(0) / den_.coeff(0);
  }

  RationalFunction operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
  }
  RationalFunction operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  RationalFunction operator-(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  }
  RationalFunction operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
  }
  RationalFunction operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw DivisionByZero("rational function division by zero");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
  }
  RationalFunction& operator+=(const RationalFunction& o) { *this = *this + o; return *this; }
  RationalFunction& operator-=(const RationalFunction& o) { *this = *this - o; return *this; }
  RationalFunction& operator*=(const RationalFunction& o) { *this = *this * o; return *this; }
  RationalFunction& operator/=(const RationalFunction& o) { *this = *this / o; return *this; }

  bool operator==(const RationalFunction& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  RationalFunction inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero rational function");
    return RationalFunction(den_, num_);
  }

  RationalFunction pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    RationalFunction r = one(), b = *this;
    unsigned long u = static_cast<unsigned long>(e);
    while (u > 0) {
      if (u & 1ul) r = r * b;
      b = b * b;
      u >>= 1ul;
    }
    return r;
  }

  // Evaluation at a point of F; throws DivisionByZero at a pole.
  F eval(const F& x0) const {
    F d = den_.eval(x0);
    if (d.is_zero()) throw DivisionByZero("evaluation at a pole");
    return num_.eval(x0) / d;
  }

  std::string to_string(const std::string& var = "t") const {
    if (is_polynomial()) return num_.to_string(var);
    std::string ns = num_.to_string(var);
    std::string ds = den_.to_string(var);
    auto wrap = [](const std::string& s) {
      return s.find_first_of("+-*/^ ") == std::string::npos ? s : "(" + s + ")";
    };
    return wrap(ns) + "/" + wrap(ds);
  }

 private:
  Polynomial<F> num_, den_;

  void reduce() {
    if (num_.is_zero()) {
      den_ = Polynomial<F>::one();
      return;
    }
    Polynomial<F> g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
    F l = den_.lc();
    if (!(l == F(1))) {
      num_ = num_ / l;
      den_ = den_ / l;
    }
  }
};

// Content normalization for polynomials whose coefficients are rational
// functions: rescale by a scalar so that all coefficients become polynomials
// with trivial common numerator gcd.  Keeps gcd chains over towers like
// Q(t)[x] from accumulating enormous nested fractions.
template <class F>
struct FieldOps<RationalFunction<F>> {
  static int compare(const RationalFunction<F>& a, const RationalFunction<F>& b) {
    int c = poly_compare(a.num(), b.num());
    if (c != 0) return c;
    return poly_compare(a.den(), b.den());
  }
  static void normalize_content(Polynomial<RationalFunction<F>>& p) {
    if (p.is_zero()) return;
    Polynomial<F> den_lcm = Polynomial<F>::one();
    for (const auto& a : p.coeffs()) {
      if (a.is_zero()) continue;
      den_lcm = poly_lcm(den_lcm, a.den());
    }
    Polynomial<F> num_gcd = Polynomial<F>::zero();
    for (const auto& a : p.coeffs()) {
      if (a.is_zero()) continue;
      // After clearing denominators the coefficient is num * (den_lcm / den).
      num_gcd = poly_gcd(num_gcd, a.num() * (den_lcm / a.den()));
    }
    if (num_gcd.is_zero()) num_gcd = Polynomial<F>::one();
    RationalFunction<F> scale(den_lcm, num_gcd);
    Polynomial<RationalFunction<F>> q = p * scale;
    p = q;
  }
};

// Horner evaluation of a polynomial at a rational function of the same
// coefficient field.
template <class F>
RationalFunction<F> eval_poly_at(const Polynomial<F>& p, const RationalFunction<F>& x0) {
  RationalFunction<F> r = RationalFunction<F>::zero();
  for (int i = p.degree(); i >= 0; --i) {
    r = r * x0 + RationalFunction<F>(p.coeff(i));
  }
  return r;
}

}  // namespace k3fib
