#pragma once

#include <string>
#include <utility>

#include "k3fib/errors.hpp"
#include "k3fib/polynomial.hpp"
#include "k3fib/rational_function.hpp"

namespace k3fib {

// A place of the projective line over the coefficient field F: either a monic
// squarefree polynomial (a Galois bundle of finite points — degree 1 means a
// single rational point) or the point at infinity.
template <class F>
class Place {
 public:
  enum class Kind { Finite, Infinity };

  static Place finite(const Polynomial<F>& p) {
    if (p.is_zero()) throw ZeroPolynomial("finite place from zero polynomial");
    Polynomial<F> m = p.monic();
    if (m.degree() < 1) throw K3fibError("finite place needs a nonconstant polynomial");
    if (poly_gcd(m, m.derivative()).degree() != 0) {
      throw NonSquarefreePlace(m.to_string());
    }
    Place pl;
    pl.kind_ = Kind::Finite;
    pl.poly_ = m;
    return pl;
  }
  // Convenience: the place t = r.
  static Place at(const F& r) { return finite(Polynomial<F>::x_minus(r)); }
  static Place infinity() {
    Place pl;
    pl.kind_ = Kind::Infinity;
    return pl;
  }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  const Polynomial<F>& poly() const { return poly_; }
  int degree() const { return is_finite() ? poly_.degree() : 1; }

  std::string to_string(const std::string& var = "t") const {
    if (!is_finite()) return "infinity";
    if (poly_.degree() == 1) {
      F root = F(0) - poly_.coeff(0);
      return var + "=" + root.to_string();
    }
    return "poly: " + poly_.to_string(var);
  }

  bool operator==(const Place& o) const {
    if (kind_ != o.kind_) return false;
    return !is_finite() || poly_ == o.poly_;
  }
  bool operator!=(const Place& o) const { return !(*this == o); }
  bool operator<(const Place& o) const {
    if (is_finite() != o.is_finite()) return is_finite();  // finite sorts first
    if (!is_finite()) return false;
    return poly_compare(poly_, o.poly_) < 0;
  }

 private:
  Kind kind_ = Kind::Infinity;
  Polynomial<F> poly_;
};

// Order of vanishing of a nonzero polynomial at a place.  At infinity the
// polynomial is treated as the dehomogenization of a form of degree `weight`,
// so the order is weight - deg.
template <class F>
int valuation(const Polynomial<F>& f, const Place<F>& place, int weight = 0) {
  if (f.is_zero()) throw ZeroPolynomial("valuation of the zero polynomial");
  if (!place.is_finite()) return weight - f.degree();
  int v = 0;
  Polynomial<F> r = f;
  while (true) {
    auto [q, rem] = r.divmod(place.poly());
    if (!rem.is_zero()) return v;
    r = q;
    ++v;
  }
}

// Valuation together with a uniformity flag: for a bundle place of degree > 1
// the reported order is the minimum over the bundle, and `uniform` is true
// exactly when every point of the bundle realizes that same order (i.e. the
// cofactor is coprime to the bundle polynomial).
template <class F>
std::pair<int, bool> valuation_with_uniformity(const Polynomial<F>& f, const Place<F>& place,
                                               int weight = 0) {
  if (f.is_zero()) throw ZeroPolynomial("valuation of the zero polynomial");
  if (!place.is_finite()) return {weight - f.degree(), true};
  int v = 0;
  Polynomial<F> r = f;
  while (true) {
    auto [q, rem] = r.divmod(place.poly());
    if (!rem.is_zero()) break;
    r = q;
    ++v;
  }
  bool uniform = true;
  if (place.poly().degree() > 1) {
    uniform = poly_gcd(r, place.poly()).degree() == 0;
  }
  return {v, uniform};
}

template <class F>
int valuation(const RationalFunction<F>& f, const Place<F>& place, int weight = 0) {
  if (f.is_zero()) throw ZeroPolynomial("valuation of the zero rational function");
  if (!place.is_finite()) {
    return weight - f.num().degree() + f.den().degree();
  }
  return valuation(f.num(), place) - valuation(f.den(), place);
}

}  // namespace k3fib
