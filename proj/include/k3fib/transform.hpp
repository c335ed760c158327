#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "k3fib/errors.hpp"
#include "k3fib/weierstrass.hpp"

namespace k3fib {

// ---------------------------------------------------------------------------
// Weierstrass isomorphisms (x, y) = (u^2 x' + r, u^3 y' + s u^2 x' + w)
// ---------------------------------------------------------------------------

template <class F>
struct Isomorphism {
  RationalFunction<F> u = RationalFunction<F>::one();
  RationalFunction<F> r, s, w;

  static Isomorphism identity() { return {}; }
  static Isomorphism rescale(RationalFunction<F> u0) {
    Isomorphism iso;
    iso.u = std::move(u0);
    return iso;
  }
  static Isomorphism translate_x(RationalFunction<F> r0) {
    Isomorphism iso;
    iso.r = std::move(r0);
    return iso;
  }

  Isomorphism inverse() const {
    Isomorphism inv;
    inv.u = u.inverse();
    inv.r = -(r / (u * u));
    inv.s = -(s / u);
    inv.w = (r * s - w) / (u * u * u);
    return inv;
  }
};

// First `a`, then `b`: the substitution of b is applied to the primed
// coordinates of a.
template <class F>
Isomorphism<F> compose(const Isomorphism<F>& a, const Isomorphism<F>& b) {
  Isomorphism<F> c;
  c.u = a.u * b.u;
  c.r = a.r + a.u * a.u * b.r;
  c.s = a.s + a.u * b.s;
  c.w = a.w + a.u * a.u * a.u * b.w + a.s * a.u * a.u * b.r;
  return c;
}

// Transported coefficients.  Throws if a transported coefficient fails to be
// polynomial (the isomorphism leaves the integral model class).
template <class F>
WeierstrassModel<F> apply_isomorphism(const WeierstrassModel<F>& m, const Isomorphism<F>& iso) {
  using RF = RationalFunction<F>;
  if (iso.u.is_zero()) throw DivisionByZero("isomorphism with u = 0");
  const RF u = iso.u, r = iso.r, s = iso.s, w = iso.w;
  const RF a1(m.a1), a2(m.a2), a3(m.a3), a4(m.a4), a6(m.a6);
  const RF two(Polynomial<F>::constant(F(2))), three(Polynomial<F>::constant(F(3)));

  RF u2 = u * u, u3 = u2 * u, u4 = u2 * u2, u6 = u3 * u3;
  RF A1 = (a1 + two * s) / u;
  RF A2 = (a2 - s * a1 + three * r - s * s) / u2;
  RF A3 = (a3 + r * a1 + two * w) / u3;
  RF A4 = (a4 - s * a3 + two * r * a2 - (w + r * s) * a1 + three * r * r - two * s * w) / u4;
  RF A6 = (a6 + r * a4 + r * r * a2 + r * r * r - w * a3 - w * w - r * w * a1) / u6;
  for (const RF* p : {&A1, &A2, &A3, &A4, &A6}) {
    if (!p->is_polynomial()) {
      throw K3fibError("isomorphism does not preserve polynomial coefficients");
    }
  }
  return WeierstrassModel<F>::make(A1.poly(), A2.poly(), A3.poly(), A4.poly(), A6.poly());
}

// (u, r, s, w) = (1/2, 0, -a1/2, -a3/2): kills a1 and a3, giving
// y^2 = x^3 + b2 x^2 + 8 b4 x + 16 b6 with the same fiber geometry.
template <class F>
std::pair<WeierstrassModel<F>, Isomorphism<F>> long_to_short(const WeierstrassModel<F>& m) {
  using RF = RationalFunction<F>;
  Isomorphism<F> iso;
  iso.u = RF(Polynomial<F>::constant(F(1)), Polynomial<F>::constant(F(2)));
  iso.s = -(RF(m.a1) / RF(Polynomial<F>::constant(F(2))));
  iso.w = -(RF(m.a3) / RF(Polynomial<F>::constant(F(2))));
  return {apply_isomorphism(m, iso), iso};
}

// ---------------------------------------------------------------------------
// Short models with coefficients in an abstract field K
// ---------------------------------------------------------------------------

// y^2 = x^3 + a2 x^2 + a4 x + a6 with a_i in a field K (e.g. K = Q(s)).
template <class K>
struct QuarticModel {
  K a2{0}, a4{0}, a6{0};
};

template <class K>
struct ShortInvariants {
  K c4{0}, c6{0}, delta{0};
};

template <class K>
ShortInvariants<K> short_invariants(const K& a2, const K& a4, const K& a6) {
  ShortInvariants<K> inv;
  inv.c4 = K(16) * a2 * a2 - K(48) * a4;
  inv.c6 = K(-64) * a2 * a2 * a2 + K(288) * a2 * a4 - K(864) * a6;
  inv.delta = (inv.c4 * inv.c4 * inv.c4 - inv.c6 * inv.c6) / K(1728);
  return inv;
}

template <class K>
ShortInvariants<K> short_invariants(const QuarticModel<K>& m) {
  return short_invariants(m.a2, m.a4, m.a6);
}

// Embeds a short model with constant coefficients as a Weierstrass model over
// K[t] (all coefficients constant); handy for j-comparisons.
template <class K>
WeierstrassModel<K> to_constant_model(const QuarticModel<K>& m) {
  using P = Polynomial<K>;
  return WeierstrassModel<K>::make(P::zero(), P::constant(m.a2), P::zero(), P::constant(m.a4),
                                   P::constant(m.a6));
}

// ---------------------------------------------------------------------------
// Square absorption: p = taken^2 * reduced with reduced of minimal degree
// ---------------------------------------------------------------------------

template <class F>
struct AbsorbResult {
  Polynomial<F> reduced;  // the squarefree-up-to-unit leftover
  Polynomial<F> taken;    // monic; p == taken^2 * reduced
};

template <class F>
AbsorbResult<F> absorb_squares(const Polynomial<F>& p) {
  if (p.is_zero()) throw ZeroPolynomial("absorb_squares of zero");
  auto dec = squarefree_decompose(p);
  AbsorbResult<F> out;
  out.taken = Polynomial<F>::one();
  out.reduced = Polynomial<F>::constant(dec.unit);
  for (const auto& [g, e] : dec.layers) {
    for (int k = 0; k < e / 2; ++k) out.taken = out.taken * g;
    if (e % 2 != 0) out.reduced = out.reduced * g;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Quartic / cubic curves y^2 = q(x) to Weierstrass form
// ---------------------------------------------------------------------------

// The degree-4 Jacobian: y^2 = a x^4 + b x^3 + c x^2 + d x + e maps to
// Y^2 = X^3 - 27 I X - 27 J with the classical quartic invariants I, J.
template <class K>
QuarticModel<K> quartic_jacobian(const Polynomial<K>& q) {
  if (q.degree() != 4) throw WrongDegree("jacobian needs a degree-4 polynomial");
  const K a = q.coeff(4), b = q.coeff(3), c = q.coeff(2), d = q.coeff(1), e = q.coeff(0);
  K I = K(12) * a * e - K(3) * b * d + c * c;
  K J = K(72) * a * c * e + K(9) * b * c * d - K(27) * a * d * d - K(27) * b * b * e -
        K(2) * c * c * c;
  QuarticModel<K> m;
  m.a4 = K(-27) * I;
  m.a6 = K(-27) * J;
  return m;
}

// y^2 = q(x) with deg q in {3,4}; q must be squarefree.  A known rational
// root of a quartic (or a vanishing constant term) routes through the
// root-at-infinity reduction, which yields an exact model with a rational
// map; otherwise the Jacobian invariants are used.
template <class K>
QuarticModel<K> quartic_to_weierstrass(const Polynomial<K>& q,
                                       std::optional<K> known_root = std::nullopt) {
  if (q.is_zero()) throw ZeroPolynomial("quartic_to_weierstrass of zero");
  const int d = q.degree();
  if (d < 3 || d > 4) throw WrongDegree("expected degree 3 or 4, got " + std::to_string(d));
  if (poly_gcd(q, q.derivative()).degree() != 0) {
    throw NotSquarefree("multiple roots in the right-hand quartic");
  }
  if (d == 3) {
    const K k3 = q.coeff(3), k2 = q.coeff(2), k1 = q.coeff(1), k0 = q.coeff(0);
    QuarticModel<K> m;
    m.a2 = k2;
    m.a4 = k1 * k3;
    m.a6 = k0 * k3 * k3;
    return m;
  }
  std::optional<K> root = known_root;
  if (!root && q.coeff(0) == K(0)) root = K(0);
  if (!root) return quartic_jacobian(q);

  Polynomial<K> shifted = q.compose(Polynomial<K>::from_coeffs({*root, K(1)}));
  if (!(shifted.coeff(0) == K(0))) throw K3fibError("claimed root does not vanish");
  // y^2 = x * (cubic): substituting x -> 1/X, y -> Y/X^2 reverses the
  // coefficient list into a genuine cubic.
  Polynomial<K> rev = Polynomial<K>::from_coeffs(
      {shifted.coeff(4), shifted.coeff(3), shifted.coeff(2), shifted.coeff(1)});
  return quartic_to_weierstrass(rev);
}

// ---------------------------------------------------------------------------
// Plane cubic with a smooth rational point
// ---------------------------------------------------------------------------

template <class K>
struct CubicPointResult {
  QuarticModel<K> model;
  Polynomial<K> disc_quartic;  // the full discriminant quartic in the slope
  Polynomial<K> absorbed;      // square factor taken out before conversion
};

// C(u, v) = 0 a (total degree 3) affine cubic through (u0, v0), given as a
// polynomial in v with polynomial-in-u coefficients.  Lines of slope s
// through the point cut out the residual intersection; its discriminant is a
// quartic in s, converted to Weierstrass form.
template <class K>
CubicPointResult<K> cubic_with_point_to_weierstrass(const Polynomial<Polynomial<K>>& C,
                                                    const K& u0, const K& v0) {
  using Ps = Polynomial<K>;       // polynomials in the slope
  using Rho = Polynomial<Ps>;     // polynomials in the line parameter

  int total = Polynomial<K>::kNegInf;
  for (int j = 0; j <= std::max(C.degree(), 0); ++j) {
    const Ps& cj = C.coeff(j);
    if (!cj.is_zero()) total = std::max(total, j + cj.degree());
  }
  if (total != 3) throw WrongDegree("total degree must be 3");

  // u = u0 + rho, v = v0 + s*rho.
  Rho U = Rho::from_coeffs({Ps::constant(u0), Ps::one()});
  Rho V = Rho::from_coeffs({Ps::constant(v0), Ps::x()});

  Rho value = Rho::zero();
  for (int j = C.degree(); j >= 0; --j) {
    const Ps& cj = C.coeff(j);
    Rho cj_at_U = Rho::zero();
    for (int i = cj.degree(); i >= 0; --i) {
      cj_at_U = cj_at_U * U + Rho::constant(Ps::constant(cj.coeff(i)));
    }
    value = value * V + cj_at_U;
  }

  if (!value.coeff(0).is_zero()) throw K3fibError("the point does not lie on the cubic");
  Ps C1 = value.coeff(1), C2 = value.coeff(2), C3 = value.coeff(3);
  if (C1.is_zero()) throw SingularPoint("both partial derivatives vanish at the base point");
  Ps h = C2 * C2 - C1 * C3 * Ps::constant(K(4));
  if (h.is_zero()) throw SingularPoint("degenerate pencil through the base point");

  CubicPointResult<K> out;
  out.disc_quartic = h;
  auto absorbed = absorb_squares(h);
  out.absorbed = absorbed.taken;
  out.model = quartic_to_weierstrass(absorbed.reduced);
  return out;
}

// ---------------------------------------------------------------------------
// n-th power tests and the isomorphism decision over Q(t)
// ---------------------------------------------------------------------------

// Exact test for f = g^n with g in Q(t).
inline bool is_nth_power(const RationalFunction<BigRational>& f, unsigned n) {
  if (f.is_zero()) return true;
  auto exponents_ok = [&](const Polynomial<BigRational>& p) {
    for (const auto& [g, e] : squarefree_decompose(p).layers) {
      if (e % static_cast<int>(n) != 0) return false;
    }
    return true;
  };
  if (!exponents_ok(f.num()) || !exponents_ok(f.den())) return false;
  BigRational scalar = f.num().lc() / f.den().lc();
  return scalar.is_perfect_nth_power(n);
}

// Existence of a Q(t)-isomorphism between the elliptic surfaces.
inline bool isomorphic(const WeierstrassModel<BigRational>& m1,
                       const WeierstrassModel<BigRational>& m2) {
  using RF = RationalFunction<BigRational>;
  auto i1 = invariants(m1), i2 = invariants(m2);
  if (i1.j != i2.j) return false;
  if (i1.c4.is_zero()) {
    // j = 0: twists classified by c6 ratios modulo sixth powers.
    return is_nth_power(RF(i1.c6, i2.c6), 6);
  }
  if (i1.c6.is_zero()) {
    // j = 1728: fourth powers of the c4 ratio.
    return is_nth_power(RF(i1.c4, i2.c4), 4);
  }
  // Generic j: u^2 = (c6 c4') / (c4 c6'); u^4 = c4/c4' follows from j1 = j2.
  RF q(i1.c6 * i2.c4, i1.c4 * i2.c6);
  return is_nth_power(q, 2);
}

// ---------------------------------------------------------------------------
// Transform chains (bookkeeping for derivations)
// ---------------------------------------------------------------------------

struct ChainStep {
  std::string kind;  // e.g. "affine", "invert", "project", "complete-square"
  std::vector<std::pair<std::string, std::string>> params;
};

template <class F>
struct TransformChain {
  std::optional<Isomorphism<F>> iso;  // set when the chain is one model isomorphism
  std::vector<ChainStep> steps;

  bool is_pure_isomorphism() const { return iso.has_value() && steps.empty(); }
  const Isomorphism<F>& as_ursw() const {
    if (!iso) throw K3fibError("chain is not a plain isomorphism");
    return *iso;
  }
};

}  // namespace k3fib
