#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "k3fib/catalog.hpp"
#include "k3fib/errors.hpp"
#include "k3fib/expr.hpp"
#include "k3fib/neighbor.hpp"
#include "k3fib/polynomial.hpp"
#include "k3fib/rational.hpp"
#include "k3fib/rational_function.hpp"
#include "k3fib/transform.hpp"
#include "k3fib/weierstrass.hpp"

namespace k3fib {

// ---------------------------------------------------------------------------
// The six-lines surface
// ---------------------------------------------------------------------------
//
// The surface is the double plane w^2 = u(u-1)v(v-1)(au+bv-1)(cu+dv-1): six
// lines L1: u=0, L2: u=1, L3: v=0, L4: v=1, L5: au+bv=1, L6: cu+dv=1.  A
// parameter tuple is generic when the 15 pairwise intersection points exist,
// are pairwise distinct, avoid every third line, and the finitely many
// denominator factors used by the catalog are nonzero.

using SixLinesConfig = Params;

inline const char* six_lines_product() { return "u(u-1)v(v-1)(au+bv-1)(cu+dv-1)"; }

struct GenericityReport {
  bool generic = true;
  std::vector<std::string> violations;
};

inline GenericityReport genericity_check(const SixLinesConfig& cfg) {
  using Vec = std::array<BigRational, 3>;  // line [p, q, r]: p*u + q*v + r = 0
  GenericityReport rep;
  auto flag = [&](std::string msg) {
    rep.generic = false;
    rep.violations.push_back(std::move(msg));
  };

  const std::array<Vec, 6> lines = {
      Vec{1, 0, 0},  Vec{1, 0, -1}, Vec{0, 1, 0},
      Vec{0, 1, -1}, Vec{cfg.a, cfg.b, -1}, Vec{cfg.c, cfg.d, -1}};

  auto cross = [](const Vec& x, const Vec& y) {
    return Vec{x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2],
               x[0] * y[1] - x[1] * y[0]};
  };
  auto dot = [](const Vec& x, const Vec& y) {
    return x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
  };
  auto is_zero = [](const Vec& x) {
    return x[0] == BigRational(0) && x[1] == BigRational(0) && x[2] == BigRational(0);
  };

  // Intersection points P(i,j) = L_i x L_j in homogeneous (u, v, 1)-coords;
  // the third slot of the cross product is the coefficient of the line at
  // infinity, so P is at infinity iff slot 2 of the point vector vanishes.
  std::map<std::pair<int, int>, Vec> points;
  for (int i = 0; i < 6; ++i) {
    for (int j = i + 1; j < 6; ++j) {
      Vec p = cross(lines[i], lines[j]);
      if (is_zero(p)) {
        flag("lines " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
             " coincide");
        continue;
      }
      points[{i, j}] = p;
      bool at_infinity = p[2] == BigRational(0);
      bool expected_at_infinity = (i == 0 && j == 1) || (i == 2 && j == 3);
      if (at_infinity != expected_at_infinity) {
        flag("P(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
             (at_infinity ? ") escapes to infinity" : ") fails to be at infinity"));
      }
      for (int k = 0; k < 6; ++k) {
        if (k == i || k == j) continue;
        if (dot(p, lines[k]) == BigRational(0)) {
          flag("P(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
               ") lies on line " + std::to_string(k + 1));
        }
      }
    }
  }
  for (auto it = points.begin(); it != points.end(); ++it) {
    for (auto jt = std::next(it); jt != points.end(); ++jt) {
      if (is_zero(cross(it->second, jt->second))) {
        flag("P(" + std::to_string(it->first.first + 1) + "," +
             std::to_string(it->first.second + 1) + ") coincides with P(" +
             std::to_string(jt->first.first + 1) + "," +
             std::to_string(jt->first.second + 1) + ")");
      }
    }
  }

  std::map<char, BigRational> env = param_env(cfg);
  for (const char* f : genericity_factors()) {
    RationalFunction<BigRational> val = rf_in(f, 't', env);
    if (val.is_zero()) flag(std::string("genericity factor '") + f + "' vanishes");
  }
  return rep;
}

// ---------------------------------------------------------------------------
// The classical method: eliminate a plane variable
// ---------------------------------------------------------------------------
//
// The elliptic parameter is t = N/D on the plane.  Arithmetic runs in the
// tower Q(t)(r)(z): t innermost, r the plane variable that survives into the
// genus-one equation, z the variable eliminated first.  For the w-routes the
// relation w = t*g removes w instead, and z = v is then either solved
// quadratically (discriminant) or kept, leaving a plane cubic.

namespace sixlines_detail {

using K = RationalFunction<BigRational>;  // Q(t)
using L = RationalFunction<K>;            // Q(t)(r)
using M = RationalFunction<L>;            // Q(t)(r)(z)

inline L t_in_L() { return L(Polynomial<K>::constant(K::x())); }

inline std::map<char, M> tower_env(char solve_var, char rest_var, const Params& p) {
  std::map<char, M> env;
  for (const auto& [k, v] : param_env(p)) env[k] = lift_to<M>(v);
  env[solve_var] = M::x();
  env[rest_var] = M(Polynomial<L>::constant(L::x()));
  return env;
}

// Evaluates a division-free expression to a z-polynomial with coefficients
// in Q(t)(r).
inline Polynomial<L> as_z_poly(const std::string& text, const std::map<char, M>& env) {
  M val = parse_expr(text).eval<M>(env);
  if (!val.is_polynomial()) {
    throw InternalError("expected a polynomial while eliminating: " + text);
  }
  return val.poly();
}

// y^2 = (rational function of r) made integral: multiply through by the
// square of the denominator, i.e. keep the square class num * den.
inline Polynomial<K> square_class_numden(const L& value) {
  if (value.is_zero()) throw ZeroPolynomial("vanishing genus-one right-hand side");
  return value.num() * value.den();
}

inline Polynomial<K> cleaned_quartic(const Polynomial<K>& hq) {
  Polynomial<K> cleaned = absorb_squares(hq).reduced;
  if (cleaned.degree() > 4) {
    throw HigherGenus("degree " + std::to_string(cleaned.degree()) +
                      " after absorbing squares; the parameter is not elliptic");
  }
  if (cleaned.degree() < 3) {
    throw WrongDegree("degree " + std::to_string(cleaned.degree()) +
                      " after absorbing squares");
  }
  return cleaned;
}

inline WeierstrassModel<BigRational> quartic_chain(const Polynomial<K>& cleaned) {
  QuarticModel<K> qm = quartic_to_weierstrass(cleaned);
  ShortInvariants<K> inv = short_invariants(qm);
  return global_minimal_model<BigRational>(inv.c4, inv.c6);
}

}  // namespace sixlines_detail

// The genus-one equation the elimination produces, before Weierstrass
// conversion: either y^2 = quartic(r) over Q(t), or a plane cubic C(u,v) = 0
// over Q(t) (v-outer, u-inner).
struct GenusOneEquation {
  char var = 'u';
  std::optional<Polynomial<RationalFunction<BigRational>>> quartic;
  std::optional<Polynomial<Polynomial<RationalFunction<BigRational>>>> cubic;
};

inline GenusOneEquation classical_eliminate(const CatalogEntry& e, const Params& p) {
  namespace sd = sixlines_detail;
  using sd::K;
  using sd::L;
  using sd::M;

  if (e.route == ClassicalRoute::None) {
    throw K3fibError(std::string("class ") + e.id + " has no classical route");
  }

  GenusOneEquation out;

  if (e.route == ClassicalRoute::Linear) {
    const char z = e.solve_var;
    const char r = (z == 'u') ? 'v' : 'u';
    out.var = r;
    std::map<char, M> env = sd::tower_env(z, r, p);

    M par = parse_expr(e.param).eval<M>(env);
    Polynomial<L> equation = par.den() * sd::t_in_L() - par.num();
    if (equation.degree() != 1) {
      throw NotLinearlySolvable(std::string(1, z) +
                                " does not occur linearly in the parameter relation");
    }
    L alpha = equation.coeff(1);
    L beta = L(0) - equation.coeff(0);

    Polynomial<L> pi = sd::as_z_poly(six_lines_product(), env);
    const int dz = pi.degree();
    L h = L(0);
    for (int k = dz; k >= 0; --k) h = h * alpha + pi.coeff(k) * beta.pow(static_cast<unsigned>(k));
    // h = sum_k pi_k beta^k alpha^(dz-k) = alpha^dz * Pi(z = beta/alpha); keep
    // the right-hand side in the square class of w^2 by an even alpha-power.
    if (dz % 2 != 0) h = h * alpha;
    out.quartic = sd::cleaned_quartic(sd::square_class_numden(h));
    return out;
  }

  // w-routes: parameter t = w/g, so w = t*g and t^2 g^2 = Pi.  Divide both
  // sides by G0 = gcd(g^2, Pi): the curve is C = t^2 (g^2/G0) - Pi/G0 = 0.
  const char z = 'v';
  const char r = 'u';
  out.var = r;
  std::map<char, M> env = sd::tower_env(z, r, p);

  Polynomial<L> g = sd::as_z_poly(e.wg, env);
  Polynomial<L> g2 = g * g;
  Polynomial<L> pi = sd::as_z_poly(six_lines_product(), env);
  Polynomial<L> g0 = poly_gcd(g2, pi);
  Polynomial<L> g2r = g2 / g0;
  Polynomial<L> pir = pi / g0;
  L t2 = sd::t_in_L() * sd::t_in_L();
  Polynomial<L> curve = g2r * t2 - pir;

  if (e.route == ClassicalRoute::WQuadratic) {
    if (curve.degree() != 2) {
      throw NotLinearlySolvable("the reduced parameter relation is not quadratic in v");
    }
    L disc = curve.coeff(1) * curve.coeff(1) -
             L(4) * curve.coeff(2) * curve.coeff(0);
    out.quartic = sd::cleaned_quartic(sd::square_class_numden(disc));
    return out;
  }

  // WCubic: the curve itself is a plane cubic over Q(t).
  std::vector<Polynomial<K>> coeffs;
  for (int k = 0; k <= std::max(curve.degree(), 0); ++k) {
    const L& c = curve.coeff(k);
    if (!c.is_polynomial()) {
      throw InternalError("cubic coefficient is not polynomial in the plane variable");
    }
    coeffs.push_back(c.poly());
  }
  out.cubic = Polynomial<Polynomial<K>>(std::move(coeffs));
  return out;
}

// Visible axis intersections of the class 1.3 cubic, used as candidate base
// points for the Weierstrass conversion.
inline std::vector<std::pair<RationalFunction<BigRational>, RationalFunction<BigRational>>>
wcubic_point_candidates(const Params& p) {
  using K = sixlines_detail::K;
  std::vector<std::pair<K, K>> pts = {{K(0), K(0)}, {K(0), K(1)}};
  if (!(p.a == BigRational(0))) pts.push_back({K(BigRational(1) / p.a), K(0)});
  if (!(p.c == BigRational(0))) pts.push_back({K(BigRational(1) / p.c), K(0)});
  return pts;
}

// Full chain from the catalog's elliptic parameter to a minimal Weierstrass
// model over Q[t].  For the cubic route, `point_index` selects one candidate
// base point; -1 tries them in order and keeps the first smooth one.
inline WeierstrassModel<BigRational> classical_model(const CatalogEntry& e, const Params& p,
                                                     int point_index = -1) {
  namespace sd = sixlines_detail;
  using sd::K;

  GenusOneEquation eq = classical_eliminate(e, p);
  if (eq.quartic) return sd::quartic_chain(*eq.quartic);

  const auto candidates = wcubic_point_candidates(p);
  std::string failures;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (point_index >= 0 && static_cast<std::size_t>(point_index) != i) continue;
    try {
      CubicPointResult<K> res =
          cubic_with_point_to_weierstrass(*eq.cubic, candidates[i].first, candidates[i].second);
      ShortInvariants<K> inv = short_invariants(res.model);
      return global_minimal_model<BigRational>(inv.c4, inv.c6);
    } catch (const K3fibError& err) {
      failures += std::string(failures.empty() ? "" : "; ") + err.what();
    }
  }
  throw SingularPoint("no usable base point on the cubic: " + failures);
}

// ---------------------------------------------------------------------------
// Printed double expressions: cross checks in Q(u)(v)
// ---------------------------------------------------------------------------
//
// Class 2.7 prints both a Weierstrass model in (t, x, y) and the inverse maps
// x(u, v), y(u, v); class 2.10 prints its parameter both as s(t, x) and as a
// (u, v)-expression.  These are exact identities in the function field of the
// double plane and are verified in the bivariate tower Q(u)(v).

namespace sixlines_detail {

inline constexpr const char* x27_text =
    R"__(t(bt-dt-1)(bt+ct-t-1)(abt-bct-a+1)/(u-1))__";

// y = w * cof27; only the square enters the identity below.
inline constexpr const char* cof27_text =
    R"__(t(bt-dt-1)(bt+ct-t-1)(abt-bct-a+1)(u-bt)^2/(u(cu-1)(u-1)^2))__";

inline constexpr const char* s210_text =
    R"__(((ad-bc)x-a(ad-bc+b-d)t+a(c+b-1)(ad-bc+b-d)t^2)/(t((ad-bc)t+1)((b+c-1)t-1)))__";

inline constexpr const char* den210_text =
    R"__((u-1)((ad-bc)uv+cu+bv-1)(cu+bv-1))__";

using L2 = RationalFunction<RationalFunction<BigRational>>;  // Q(u)(v)

inline std::map<char, L2> plane_env(const Params& p) {
  using K2 = RationalFunction<BigRational>;
  std::map<char, L2> env;
  for (const auto& [k, v] : param_env(p)) env[k] = lift_to<L2>(v);
  env['u'] = L2(Polynomial<K2>::constant(K2::x()));
  env['v'] = L2::x();
  return env;
}

}  // namespace sixlines_detail

inline bool cross_identity_checks(const std::string& class_id, const Params& p) {
  namespace sd = sixlines_detail;
  using sd::L2;

  if (class_id != "2.7" && class_id != "2.10") return true;

  const CatalogEntry& e27 = catalog_entry("2.7");
  std::map<char, L2> env = sd::plane_env(p);
  L2 t27 = parse_expr(e27.param).eval<L2>(env);
  env['t'] = t27;

  if (class_id == "2.7") {
    // w^2 cof^2 = (x - r1)(x - r2)(x - r3) with w^2 the six-line product.
    L2 x = parse_expr(sd::x27_text).eval<L2>(env);
    L2 cof = parse_expr(sd::cof27_text).eval<L2>(env);
    L2 pi = parse_expr(six_lines_product()).eval<L2>(env);
    L2 lhs = pi * cof * cof;
    L2 rhs = lift_to<L2>(BigRational(1));
    for (const char* root :
         {e27.split->r1, e27.split->r2, e27.split->r3}) {
      rhs = rhs * (x - parse_expr(root).eval<L2>(env));
    }
    if (!(lhs == rhs)) {
      throw IdentityFails("the printed (u,v)-maps of class 2.7 do not satisfy its model");
    }
    return true;
  }

  // class 2.10: s(t(u,v), x(u,v)) equals the printed g/den expression.
  env['x'] = parse_expr(sd::x27_text).eval<L2>(env);
  L2 lhs = parse_expr(sd::s210_text).eval<L2>(env);
  L2 rhs = parse_expr(catalog_text::g210).eval<L2>(env) /
           parse_expr(sd::den210_text).eval<L2>(env);
  if (!(lhs == rhs)) {
    throw IdentityFails("the printed (u,v)-form of the class 2.10 parameter disagrees "
                        "with its (t,x)-form");
  }
  return true;
}

}  // namespace k3fib
