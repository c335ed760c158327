#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "k3fib/errors.hpp"

namespace k3fib {

// Arbitrary-precision rational number.  Thin wrapper around GMP's mpq_class
// that fixes a canonical representation (reduced, positive denominator) and
// adds the exact-power predicates the lattice and isomorphism tests need.
class BigRational {
 public:
  BigRational() : v_(0) {}
  BigRational(int n) : v_(n) {}          // NOLINT: implicit by design
  BigRational(long n) : v_(n) {}         // NOLINT: implicit by design
  BigRational(long num, long den) : v_(num, den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    v_.canonicalize();
  }
  explicit BigRational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
  explicit BigRational(const mpz_class& n) : v_(n) {}

  static BigRational zero() { return BigRational(0); }
  static BigRational one() { return BigRational(1); }

  // Parses "p", "-p", "p/q".  Whitespace is not accepted.
  static BigRational from_string(const std::string& s) {
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0) {
      throw ParseError("bad rational literal '" + s + "'");
    }
    if (q.get_den() == 0) throw DivisionByZero("rational with zero denominator");
    q.canonicalize();
    return BigRational(q);
  }

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  BigRational operator-() const { return BigRational(mpq_class(-v_)); }
  BigRational operator+(const BigRational& o) const { return BigRational(mpq_class(v_ + o.v_)); }
  BigRational operator-(const BigRational& o) const { return BigRational(mpq_class(v_ - o.v_)); }
  BigRational operator*(const BigRational& o) const { return BigRational(mpq_class(v_ * o.v_)); }
  BigRational operator/(const BigRational& o) const {
    if (o.is_zero()) throw DivisionByZero("rational division by zero");
    return BigRational(mpq_class(v_ / o.v_));
  }
  BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
  BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
  BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }
  BigRational& operator/=(const BigRational& o) { *this = *this / o; return *this; }

  bool operator==(const BigRational& o) const { return v_ == o.v_; }
  bool operator!=(const BigRational& o) const { return v_ != o.v_; }
  bool operator<(const BigRational& o) const { return v_ < o.v_; }
  bool operator<=(const BigRational& o) const { return v_ <= o.v_; }
  bool operator>(const BigRational& o) const { return v_ > o.v_; }
  bool operator>=(const BigRational& o) const { return v_ >= o.v_; }

  BigRational inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return BigRational(mpq_class(1 / v_));
  }

  BigRational abs() const { return BigRational(mpq_class(::abs(v_))); }

  BigRational pow(long e) const {
    if (e == 0) return one();
    if (is_zero()) {
      if (e < 0) throw DivisionByZero("zero to a negative power");
      return zero();
    }
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    mpq_class q(n, d);
    if (e < 0) q = 1 / q;
    q.canonicalize();
    return BigRational(q);
  }

  // Exact square root, if this is the square of a rational.
  std::optional<BigRational> sqrt_exact() const {
    return nth_root_exact(2);
  }

  // Exact k-th root, if this is the k-th power of a rational.  For even k the
  // value must be non-negative; for odd k negative values are allowed.
  std::optional<BigRational> nth_root_exact(unsigned k) const {
    if (k == 0) throw K3fibError("0-th root undefined");
    if (is_zero()) return zero();
    const bool neg = sign() < 0;
    if (neg && k % 2 == 0) return std::nullopt;
    mpz_class an = ::abs(num());
    mpz_class ad = den();
    mpz_class rn, rd;
    if (mpz_root(rn.get_mpz_t(), an.get_mpz_t(), k) == 0) return std::nullopt;
    if (mpz_root(rd.get_mpz_t(), ad.get_mpz_t(), k) == 0) return std::nullopt;
    if (neg) rn = -rn;
    mpq_class q(rn, rd);
    q.canonicalize();
    return BigRational(q);
  }

  bool is_perfect_nth_power(unsigned k) const { return nth_root_exact(k).has_value(); }

  std::string to_string() const { return v_.get_str(); }

 private:
  mpq_class v_;
};

inline BigRational operator*(long a, const BigRational& b) { return BigRational(a) * b; }
inline BigRational operator+(long a, const BigRational& b) { return BigRational(a) + b; }
inline BigRational operator-(long a, const BigRational& b) { return BigRational(a) - b; }

}  // namespace k3fib
