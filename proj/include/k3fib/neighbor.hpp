#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "k3fib/errors.hpp"
#include "k3fib/places.hpp"
#include "k3fib/polynomial.hpp"
#include "k3fib/rational.hpp"
#include "k3fib/rational_function.hpp"
#include "k3fib/transform.hpp"
#include "k3fib/weierstrass.hpp"

namespace k3fib {

// ---------------------------------------------------------------------------
// Globally minimal short model from (c4, c6) over F(s)
// ---------------------------------------------------------------------------
//
// Builds y^2 = x^3 + A x + B with (A, B) = (-27 c4, -54 c6) -- the u = 1/6
// rescaling of the given invariants, so j and all fiber types are preserved
// exactly -- then clears denominators (A by d^4, B by d^6) and removes every
// common factor g^(4e), g^(6e) with e = min(floor(v_g A / 4), floor(v_g B / 6)).
// The bundle degree n is the least one admitting the reduced coefficients.

template <class F>
WeierstrassModel<F> global_minimal_model(const RationalFunction<F>& c4,
                                         const RationalFunction<F>& c6) {
  using P = Polynomial<F>;
  using RF = RationalFunction<F>;

  RF a_rf = RF(F(-27)) * c4;
  RF b_rf = RF(F(-54)) * c6;
  if (a_rf.is_zero() && b_rf.is_zero()) {
    throw SingularSurface("c4 and c6 both vanish");
  }

  P d = poly_lcm(a_rf.den(), b_rf.den());
  RF dd(d);
  P A = (a_rf * dd.pow(4)).poly();
  P B = (b_rf * dd.pow(6)).poly();

  auto layers_of = [](const P& p) {
    std::vector<P> out;
    if (p.is_zero() || p.degree() < 1) return out;
    for (const auto& [g, e] : squarefree_decompose(p).layers) {
      (void)e;
      if (g.degree() >= 1) out.push_back(g);
    }
    return out;
  };

  std::vector<P> candidates;
  if (A.is_zero()) {
    candidates = layers_of(B);
  } else if (B.is_zero()) {
    candidates = layers_of(A);
  } else {
    candidates = layers_of(poly_gcd(A, B));
  }
  for (const P& g : coprime_basis(candidates)) {
    Place<F> v = Place<F>::finite(g);
    int va = A.is_zero() ? 1 << 20 : valuation(A, v);
    int vb = B.is_zero() ? 1 << 20 : valuation(B, v);
    int e = std::min(va / 4, vb / 6);
    if (e < 1) continue;
    for (int k = 0; k < 4 * e && !A.is_zero(); ++k) A = A / g;
    for (int k = 0; k < 6 * e && !B.is_zero(); ++k) B = B / g;
  }

  int n = 1;
  if (!A.is_zero()) n = std::max(n, (A.degree() + 3) / 4);
  if (!B.is_zero()) n = std::max(n, (B.degree() + 5) / 6);
  return WeierstrassModel<F>::short_model(P::zero(), A, B, n);
}

template <class F>
WeierstrassModel<F> global_minimal_model(const WeierstrassModel<F>& m) {
  ModelInvariants<F> inv = invariants(m);
  return global_minimal_model<F>(RationalFunction<F>(inv.c4), RationalFunction<F>(inv.c6));
}

// ---------------------------------------------------------------------------
// The 2-neighbor step
// ---------------------------------------------------------------------------
//
// Input: a model over F(t) and a new elliptic parameter s of the form
//   s = A(t) + B(t) x                    (divisor 2O)
//   s = A(t) + B(t) (y + y0)/(x - x0)    (divisor O + P, P = (x0, y0))
//   s = A(t) + B(t) y/x                  (divisor O + T, T 2-torsion, at (0,0)
//                                         after translating by torsion_x)
// Output: the globally minimal Weierstrass model of the induced genus-one
// fibration over F(s).

enum class NeighborCase { TwoO, OPlusP, OPlusT };

template <class F>
struct NeighborSpec {
  NeighborCase kase = NeighborCase::TwoO;
  RationalFunction<F> A, B;  // functions of t
  // O + P only: the section P = (x0, y0).
  RationalFunction<F> px, py;
  // O + T only: x-coordinate of the 2-torsion point T (0 when already at the
  // origin); the engine translates x so that T becomes (0, 0).
  RationalFunction<F> torsion_x;
};

namespace neighbor_detail {

// Transpose Polynomial-in-s-with-t-polynomial-coefficients into
// Polynomial-in-t-with-s-polynomial-coefficients.
template <class F>
Polynomial<Polynomial<F>> transpose(const Polynomial<Polynomial<F>>& h) {
  using P = Polynomial<F>;
  if (h.is_zero()) return Polynomial<P>::zero();
  int dt = 0;
  for (int j = 0; j <= h.degree(); ++j) {
    if (!h.coeff(j).is_zero()) dt = std::max(dt, h.coeff(j).degree());
  }
  std::vector<P> rows;
  for (int i = 0; i <= dt; ++i) {
    std::vector<F> row;
    for (int j = 0; j <= h.degree(); ++j) {
      row.push_back(h.coeff(j).is_zero() || h.coeff(j).degree() < i ? F(0)
                                                                    : h.coeff(j).coeff(i));
    }
    rows.push_back(P(row));
  }
  return Polynomial<P>(rows);
}

}  // namespace neighbor_detail

template <class F>
WeierstrassModel<F> two_neighbor(const WeierstrassModel<F>& m_in, const NeighborSpec<F>& spec) {
  using P = Polynomial<F>;
  using RF = RationalFunction<F>;
  using PRF = Polynomial<RF>;

  if (spec.B.is_zero()) throw NotJacobianCase("B must be nonzero");

  WeierstrassModel<F> m = m_in;
  if (!m.is_short()) m = long_to_short(m).first;
  const RF a2(m.a2), a4(m.a4), a6(m.a6);

  // The numerator polynomial in s.  Coefficients live in F(t).
  PRF H;
  if (spec.kase == NeighborCase::TwoO) {
    // x = (s - A)/B; multiply the cubic by B^4, y -> B^2 y.
    PRF xs = (PRF::x() + PRF::constant(RF(0) - spec.A)) * spec.B.inverse();
    H = xs * xs * xs + xs * xs * a2 + xs * a4 + PRF::constant(a6);
    RF b4 = spec.B.pow(4);
    H = H * b4;
  } else if (spec.kase == NeighborCase::OPlusT) {
    // Translate T to the origin, then y/x = (s - A)/B =: W; dividing the
    // curve equation by x leaves a quadratic in x whose square completion is
    // Y^2 = (a2' - W^2)^2 - 4 a4'.
    const RF xt = spec.torsion_x;
    RF a2t = a2 + RF(3) * xt;
    RF a4t = a4 + RF(2) * a2 * xt + RF(3) * xt * xt;
    RF a6t = a6 + a4 * xt + a2 * xt * xt + xt * xt * xt;
    if (!a6t.is_zero()) throw NotJacobianCase("T is not a 2-torsion point of the model");
    PRF W = (PRF::x() + PRF::constant(RF(0) - spec.A)) * spec.B.inverse();
    PRF q1 = PRF::constant(a2t) - W * W;
    H = q1 * q1 - PRF::constant(RF(4) * a4t);
  } else {
    // O + P: (y + y0)/(x - x0) = (s - A)/B =: W.  Dividing off (x - x0)
    // leaves x^2 + q1 x + q0 = 0 with
    //   q1 = (a2 + x0) - W^2,  q0 = (x0^2 + a2 x0 + a4) + W^2 x0 + 2 y0 W,
    // so Y^2 = q1^2 - 4 q0.
    const RF x0 = spec.px, y0 = spec.py;
    if (y0 * y0 != x0 * x0 * x0 + a2 * x0 * x0 + a4 * x0 + a6) {
      throw NotJacobianCase("P does not lie on the model");
    }
    PRF W = (PRF::x() + PRF::constant(RF(0) - spec.A)) * spec.B.inverse();
    PRF q1 = PRF::constant(a2 + x0) - W * W;
    PRF q0 = W * W * x0 + W * (RF(2) * y0) + PRF::constant(x0 * x0 + a2 * x0 + a4);
    H = q1 * q1 - q0 * RF(4);
  }
  if (H.is_zero()) throw NotJacobianCase("degenerate substitution");

  // Clear t-denominators by a square, then split off the t-content.
  P L = P::one();
  for (int j = 0; j <= H.degree(); ++j) {
    if (!H.coeff(j).is_zero()) L = poly_lcm(L, H.coeff(j).den());
  }
  RF l2 = RF(L) * RF(L);
  std::vector<P> scoeffs;
  for (int j = 0; j <= H.degree(); ++j) {
    RF c = H.coeff(j) * l2;
    if (!c.is_polynomial()) throw InternalError("denominator clearing failed");
    scoeffs.push_back(c.poly());
  }

  P content = P::zero();
  for (const P& c : scoeffs) {
    if (c.is_zero()) continue;
    content = content.is_zero() ? c : poly_gcd(content, c);
  }
  if (content.is_zero()) throw NotJacobianCase("degenerate substitution");
  auto cdec = squarefree_decompose(content);
  P odd = cdec.odd_part();
  std::vector<P> reduced;
  for (P c : scoeffs) {
    if (!c.is_zero()) c = (c / content) * odd;
    reduced.push_back(c);
  }

  // View as a polynomial in t over F(s), absorb square factors, and demand a
  // cubic or quartic.
  Polynomial<P> ht = neighbor_detail::transpose(Polynomial<P>(reduced));
  std::vector<RF> tcoeffs;
  for (int i = 0; i <= ht.degree(); ++i) tcoeffs.push_back(RF(ht.coeff(i)));
  Polynomial<RF> hq(tcoeffs);
  Polynomial<RF> cleaned = absorb_squares(hq).reduced;
  if (cleaned.degree() < 3 || cleaned.degree() > 4) {
    throw DegreeOverflow("degree " + std::to_string(cleaned.degree()) +
                         " in t after absorbing squares; expected 3 or 4");
  }

  QuarticModel<RF> qm = quartic_to_weierstrass(cleaned);
  ShortInvariants<RF> inv = short_invariants(qm);
  return global_minimal_model<F>(inv.c4, inv.c6);
}

// ---------------------------------------------------------------------------
// Linear parameter fitting
// ---------------------------------------------------------------------------
//
// The numerator of a parameter template is x_scale * x + sum_i A_i t^i with
// unknown rational A_i.  Substituting a section's x-path turns each vanishing
// constraint into linear conditions:
//   finite place p, order k:   numerator = 0 mod p^k
//   infinity, weight w, order k: coefficients of t^(w-k+1..) vanish.
// The exact linear system is solved over F; unknowns pinned by the system are
// returned in `solved`, the rest in `free_indices`.  Underdetermined is
// raised only when the constraints pin nothing at all.

template <class F>
struct FitConstraint {
  Place<F> place = Place<F>::infinity();
  Polynomial<F> x_path;
  int order = 1;
  int weight = 0;  // infinity only: homogenization weight of the numerator
};

template <class F>
struct ParameterTemplate {
  Polynomial<F> x_scale = Polynomial<F>::one();
  std::vector<int> unknowns;  // indices i of the unknown A_i
  std::vector<FitConstraint<F>> constraints;
};

template <class F>
struct FitResult {
  std::map<int, F> solved;
  std::vector<int> free_indices;
};

template <class F>
FitResult<F> fit_parameter(const WeierstrassModel<F>& m, const ParameterTemplate<F>& tmpl) {
  (void)m;
  using P = Polynomial<F>;
  const std::size_t ncols = tmpl.unknowns.size();

  // Rows: ncols coefficients then the right-hand side.
  std::vector<std::vector<F>> rows;
  auto add_row = [&](std::vector<F> row) {
    for (const F& x : row) {
      if (!(x == F(0))) {
        rows.push_back(std::move(row));
        return;
      }
    }
  };

  for (const auto& c : tmpl.constraints) {
    P fixed = tmpl.x_scale * c.x_path;
    if (c.place.is_finite()) {
      P pk = P::one();
      for (int i = 0; i < c.order; ++i) pk = pk * c.place.poly();
      P rem_fixed = fixed % pk;
      std::vector<P> cols;
      for (int u : tmpl.unknowns) cols.push_back(P::x().pow(static_cast<unsigned>(u)) % pk);
      for (int d = 0; d < pk.degree(); ++d) {
        std::vector<F> row;
        for (std::size_t j = 0; j < ncols; ++j) {
          row.push_back(cols[j].is_zero() || cols[j].degree() < d ? F(0) : cols[j].coeff(d));
        }
        row.push_back(rem_fixed.is_zero() || rem_fixed.degree() < d ? F(0)
                                                                    : F(0) - rem_fixed.coeff(d));
        add_row(std::move(row));
      }
    } else {
      int top = fixed.is_zero() ? 0 : fixed.degree();
      for (int u : tmpl.unknowns) top = std::max(top, u);
      for (int d = c.weight - c.order + 1; d <= top; ++d) {
        if (d < 0) continue;
        std::vector<F> row;
        for (std::size_t j = 0; j < ncols; ++j) {
          row.push_back(tmpl.unknowns[j] == d ? F(1) : F(0));
        }
        row.push_back(fixed.is_zero() || fixed.degree() < d ? F(0) : F(0) - fixed.coeff(d));
        add_row(std::move(row));
      }
    }
  }

  // Exact Gauss-Jordan elimination.
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t sel = rank;
    while (sel < rows.size() && rows[sel][col] == F(0)) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    F inv = rows[rank][col].inverse();
    for (auto& x : rows[rank]) x = x * inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == F(0)) continue;
      F f = rows[r][col];
      for (std::size_t j = 0; j <= ncols; ++j) rows[r][j] = rows[r][j] - f * rows[rank][j];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (std::size_t r = rank; r < rows.size(); ++r) {
    if (!(rows[r][ncols] == F(0))) {
      throw Inconsistent("vanishing constraints admit no solution");
    }
  }

  std::vector<bool> is_pivot(ncols, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;

  FitResult<F> out;
  for (std::size_t r = 0; r < rank; ++r) {
    std::size_t col = pivot_col[r];
    bool entangled = false;
    for (std::size_t j = 0; j < ncols; ++j) {
      if (j != col && !(rows[r][j] == F(0))) entangled = true;
    }
    if (!entangled) out.solved[tmpl.unknowns[col]] = rows[r][ncols];
  }
  for (std::size_t j = 0; j < ncols; ++j) {
    if (out.solved.find(tmpl.unknowns[j]) == out.solved.end()) {
      out.free_indices.push_back(tmpl.unknowns[j]);
    }
  }
  if (!tmpl.unknowns.empty() && out.solved.empty()) {
    throw Underdetermined("no coefficient is pinned by the constraints");
  }
  return out;
}

}  // namespace k3fib
