#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "k3fib/errors.hpp"
#include "k3fib/rational.hpp"

namespace k3fib {

template <class F>
class Polynomial;

// Customization point used by gcd chains to rescale intermediate remainders
// by a nonzero scalar, keeping coefficient growth under control.  The default
// does nothing; the specializations for BigRational and RationalFunction
// clear denominators and divide out common content.
template <class F>
struct FieldOps {
  static void normalize_content(Polynomial<F>&) {}
  // Deterministic three-way comparison for canonical ordering of outputs.
  static int compare(const F& a, const F& b) {
    const std::string sa = a.to_string(), sb = b.to_string();
    return sa < sb ? -1 : (sa == sb ? 0 : 1);
  }
};

// Canonical polynomial ordering: by degree, then coefficients from the top.
template <class F>
int poly_compare(const Polynomial<F>& p, const Polynomial<F>& q) {
  if (p.degree() != q.degree()) return p.degree() < q.degree() ? -1 : 1;
  for (int i = p.degree(); i >= 0; --i) {
    int c = FieldOps<F>::compare(p.coeff(i), q.coeff(i));
    if (c != 0) return c;
  }
  return 0;
}

// Dense univariate polynomial with coefficients in a field F (or, for the
// tensor constructions, a ring such as Polynomial<G> — operations that need
// coefficient division are only instantiated where used).
//
// Invariant: the coefficient vector is empty (the zero polynomial) or has a
// nonzero leading entry.  degree() of the zero polynomial is kNegInf.
template <class F>
class Polynomial {
 public:
  using Coeff = F;
  static constexpr int kNegInf = std::numeric_limits<int>::min() / 4;

  Polynomial() = default;
  explicit Polynomial(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
  explicit Polynomial(int n) : Polynomial(constant(F(n))) {}

  static Polynomial zero() { return Polynomial(); }
  static Polynomial one() { return constant(F(1)); }
  static Polynomial constant(const F& a) {
    Polynomial p;
    p.c_.push_back(a);
    p.trim();
    return p;
  }
  // The generator of F[x].
  static Polynomial x() {
    Polynomial p;
    p.c_ = {F(0), F(1)};
    return p;
  }
  // x - r.
  static Polynomial x_minus(const F& r) {
    Polynomial p;
    p.c_ = {F(0) - r, F(1)};
    p.trim();
    return p;
  }
  static Polynomial from_coeffs(std::initializer_list<F> coeffs) {
    return Polynomial(std::vector<F>(coeffs));
  }

  int degree() const { return c_.empty() ? kNegInf : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  F coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return F(0);
    return c_[static_cast<std::size_t>(i)];
  }
  F lc() const { return c_.empty() ? F(0) : c_.back(); }
  const std::vector<F>& coeffs() const { return c_; }

  void set_coeff(int i, const F& a) {
    if (i < 0) throw K3fibError("negative coefficient index");
    if (i >= static_cast<int>(c_.size())) c_.resize(static_cast<std::size_t>(i) + 1, F(0));
    c_[static_cast<std::size_t>(i)] = a;
    trim();
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& a : r.c_) a = F(0) - a;
    return r;
  }

  Polynomial operator+(const Polynomial& o) const {
    Polynomial r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), F(0));
    for (std::size_t i = 0; i < r.c_.size(); ++i) {
      if (i < c_.size()) r.c_[i] += c_[i];
      if (i < o.c_.size()) r.c_[i] += o.c_[i];
    }
    r.trim();
    return r;
  }
  Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

  Polynomial operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return zero();
    Polynomial r;
    r.c_.assign(c_.size() + o.c_.size() - 1, F(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j) {
        if (o.c_[j].is_zero()) continue;
        r.c_[i + j] += c_[i] * o.c_[j];
      }
    }
    r.trim();
    return r;
  }

  Polynomial operator*(const F& s) const {
    if (s.is_zero()) return zero();
    Polynomial r = *this;
    for (auto& a : r.c_) a = a * s;
    r.trim();
    return r;
  }
  Polynomial operator/(const F& s) const {
    if (s.is_zero()) throw DivisionByZero("polynomial divided by zero scalar");
    Polynomial r = *this;
    for (auto& a : r.c_) a = a / s;
    r.trim();
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) { *this = *this + o; return *this; }
  Polynomial& operator-=(const Polynomial& o) { *this = *this - o; return *this; }
  Polynomial& operator*=(const Polynomial& o) { *this = *this * o; return *this; }

  bool operator==(const Polynomial& o) const { return c_ == o.c_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // Multiply by x^k.
  Polynomial shifted_up(int k) const {
    if (k < 0) throw K3fibError("negative shift");
    if (is_zero() || k == 0) return *this;
    Polynomial r;
    r.c_.assign(c_.size() + static_cast<std::size_t>(k), F(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i + static_cast<std::size_t>(k)] = c_[i];
    return r;
  }

  Polynomial pow(unsigned e) const {
    Polynomial r = one();
    Polynomial b = *this;
    while (e > 0) {
      if (e & 1u) r = r * b;
      b = b * b;
      e >>= 1u;
    }
    return r;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return zero();
    Polynomial r;
    r.c_.resize(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) {
      r.c_[i - 1] = c_[i] * F(static_cast<int>(i));
    }
    r.trim();
    return r;
  }

  F eval(const F& x0) const {
    F r(0);
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x0 + c_[i];
    return r;
  }

  // Substitutes another polynomial for the variable (Horner).
  Polynomial compose(const Polynomial& g) const {
    Polynomial r = zero();
    for (std::size_t i = c_.size(); i-- > 0;) r = r * g + constant(c_[i]);
    return r;
  }

  Polynomial monic() const {
    if (is_zero()) return zero();
    return *this / lc();
  }

  // Quotient and remainder; requires a field of coefficients.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& b) const {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    Polynomial q = zero(), r = *this;
    const int db = b.degree();
    const F inv_lc = F(1) / b.lc();
    while (!r.is_zero() && r.degree() >= db) {
      const int k = r.degree() - db;
      const F c = r.lc() * inv_lc;
      q.set_coeff(k, q.coeff(k) + c);
      r -= (b * c).shifted_up(k);
    }
    return {q, r};
  }

  Polynomial operator%(const Polynomial& b) const { return divmod(b).second; }

  // Exact division; throws if the remainder is nonzero.
  Polynomial div_exact(const Polynomial& b) const {
    auto [q, r] = divmod(b);
    if (!r.is_zero()) throw InternalError("inexact polynomial division");
    return q;
  }
  Polynomial operator/(const Polynomial& b) const { return div_exact(b); }

  std::string to_string(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i].is_zero()) continue;
      std::string cs = c_[i].to_string();
      bool neg = false;
      if (!cs.empty() && cs[0] == '-' && cs.find_first_of("+-", 1) == std::string::npos &&
          cs.find_first_of("()") == std::string::npos) {
        neg = true;
        cs = cs.substr(1);
      }
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      const bool atomic = cs.find_first_of("+-*/^ ") == std::string::npos;
      std::string body;
      if (i == 0) {
        body = atomic ? cs : "(" + cs + ")";
      } else {
        std::string xs = (i == 1) ? var : var + "^" + std::to_string(i);
        if (cs == "1") {
          body = xs;
        } else {
          body = (atomic ? cs : "(" + cs + ")") + "*" + xs;
        }
      }
      out += body;
    }
    return out;
  }

 private:
  std::vector<F> c_;

  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
};

template <>
struct FieldOps<BigRational> {
  static int compare(const BigRational& a, const BigRational& b) {
    return a < b ? -1 : (a == b ? 0 : 1);
  }
  // Rescales to the integer-primitive representative (content 1, positive
  // leading coefficient is NOT forced — only proportionality matters).
  static void normalize_content(Polynomial<BigRational>& p) {
    if (p.is_zero()) return;
    mpz_class den_lcm = 1, num_gcd = 0;
    for (const auto& a : p.coeffs()) {
      if (a.is_zero()) continue;
      mpz_class d = a.den();
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    Polynomial<BigRational> q = p * BigRational(mpz_class(den_lcm));
    for (const auto& a : q.coeffs()) {
      if (a.is_zero()) continue;
      mpz_class n = a.num();
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
    if (num_gcd > 1) q = q / BigRational(mpz_class(num_gcd));
    p = q;
  }
};

template <class F>
Polynomial<F> poly_gcd(const Polynomial<F>& a, const Polynomial<F>& b) {
  Polynomial<F> A = a, B = b;
  FieldOps<F>::normalize_content(A);
  FieldOps<F>::normalize_content(B);
  while (!B.is_zero()) {
    Polynomial<F> R = A % B;
    FieldOps<F>::normalize_content(R);
    A = B;
    B = R;
  }
  return A.monic();
}

template <class F>
Polynomial<F> poly_lcm(const Polynomial<F>& a, const Polynomial<F>& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial<F>::zero();
  return ((a * b) / poly_gcd(a, b)).monic();
}

// f = unit * prod layers[i].first ^ layers[i].second, with monic squarefree
// pairwise-coprime layer polynomials and strictly increasing multiplicities.
template <class F>
struct SquarefreeDecomposition {
  F unit = F(1);
  std::vector<std::pair<Polynomial<F>, int>> layers;

  Polynomial<F> reassemble() const {
    Polynomial<F> r = Polynomial<F>::constant(unit);
    for (const auto& [g, m] : layers) r = r * g.pow(static_cast<unsigned>(m));
    return r;
  }
  // Product of the layer polynomials (the radical).
  Polynomial<F> radical() const {
    Polynomial<F> r = Polynomial<F>::one();
    for (const auto& [g, m] : layers) r = r * g;
    return r;
  }
  // Product of g^(m mod 2): the squarefree residue left after removing the
  // largest square factor.
  Polynomial<F> odd_part() const {
    Polynomial<F> r = Polynomial<F>::one();
    for (const auto& [g, m] : layers) {
      if (m % 2 == 1) r = r * g;
    }
    return r;
  }
  // Product of g^(m div 2): input = unit * odd_part * square_root_part^2.
  Polynomial<F> square_root_part() const {
    Polynomial<F> r = Polynomial<F>::one();
    for (const auto& [g, m] : layers) {
      if (m / 2 > 0) r = r * g.pow(static_cast<unsigned>(m / 2));
    }
    return r;
  }
};

// Yun's squarefree decomposition (characteristic zero).
template <class F>
SquarefreeDecomposition<F> squarefree_decompose(const Polynomial<F>& f) {
  if (f.is_zero()) throw ZeroPolynomial("squarefree decomposition of 0");
  SquarefreeDecomposition<F> out;
  out.unit = f.lc();
  Polynomial<F> fm = f.monic();
  if (fm.is_constant()) return out;
  Polynomial<F> df = fm.derivative();
  Polynomial<F> u = poly_gcd(fm, df);
  Polynomial<F> v = fm / u;
  Polynomial<F> w = df / u;
  int k = 1;
  while (v.degree() > 0) {
    Polynomial<F> z = w - v.derivative();
    Polynomial<F> h = poly_gcd(v, z);
    if (h.degree() > 0) out.layers.emplace_back(h, k);
    v = v / h;
    w = z / h;
    ++k;
  }
  return out;
}

// Smallest set of monic, squarefree, pairwise-coprime polynomials such that
// every input factors (up to a scalar) as a product of powers of basis
// elements.  Inputs must be nonzero; constants contribute nothing.
template <class F>
std::vector<Polynomial<F>> coprime_basis(const std::vector<Polynomial<F>>& fs) {
  std::vector<Polynomial<F>> work;
  for (const auto& f : fs) {
    if (f.is_zero()) throw ZeroPolynomial("coprime basis of a zero polynomial");
    if (f.is_constant()) continue;
    // Every squarefree layer enters separately: factors sharing a radical but
    // not a multiplicity must end up in different basis elements, or inputs
    // would not have a well-defined order along each basis element.
    for (const auto& [g, m] : squarefree_decompose(f).layers) work.push_back(g);
  }
  std::vector<Polynomial<F>> basis;
  while (!work.empty()) {
    Polynomial<F> w = work.back();
    work.pop_back();
    for (std::size_t i = 0; i < basis.size() && !w.is_constant(); ++i) {
      Polynomial<F> g = poly_gcd(w, basis[i]);
      if (g.degree() <= 0) continue;
      if (g.degree() == basis[i].degree()) {
        w = w / basis[i];
      } else {
        Polynomial<F> rest = basis[i] / g;
        basis[i] = g;
        work.push_back(rest);
        w = w / g;
      }
    }
    if (!w.is_constant()) basis.push_back(w.monic());
  }
  std::sort(basis.begin(), basis.end(),
            [](const Polynomial<F>& p, const Polynomial<F>& q) {
              return poly_compare(p, q) < 0;
            });
  return basis;
}

// Resultant via the Euclidean polynomial remainder sequence.
template <class F>
F resultant(const Polynomial<F>& f0, const Polynomial<F>& g0) {
  Polynomial<F> f = f0, g = g0;
  if (f.is_zero() || g.is_zero()) return F(0);
  F acc(1);
  bool negate = false;
  while (true) {
    if (g.degree() <= 0) {
      // res(f, const c) = c^deg f.
      F base = g.coeff(0);
      F r(1);
      for (int i = 0; i < std::max(f.degree(), 0); ++i) r = r * base;
      r = r * acc;
      return negate ? F(0) - r : r;
    }
    if (f.degree() < g.degree()) {
      if ((f.degree() % 2 != 0) && (g.degree() % 2 != 0)) negate = !negate;
      std::swap(f, g);
      continue;
    }
    Polynomial<F> r = f % g;
    if (r.is_zero()) return F(0);
    // res(f,g) = (-1)^(df*dg) lc(g)^(df-dr) res(g,r).
    const int df = f.degree(), dg = g.degree(), dr = r.degree();
    if ((df % 2 != 0) && (dg % 2 != 0)) negate = !negate;
    F base = g.lc();
    for (int i = 0; i < df - std::max(dr, 0); ++i) acc = acc * base;
    f = g;
    g = r;
  }
}

// Lagrange interpolation through distinct nodes.
template <class F>
Polynomial<F> interpolate(const std::vector<std::pair<F, F>>& points) {
  Polynomial<F> r = Polynomial<F>::zero();
  for (std::size_t i = 0; i < points.size(); ++i) {
    Polynomial<F> term = Polynomial<F>::one();
    F denom(1);
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (i == j) continue;
      term = term * Polynomial<F>::x_minus(points[j].first);
      denom = denom * (points[i].first - points[j].first);
    }
    r += term * (points[i].second / denom);
  }
  return r;
}

}  // namespace k3fib
