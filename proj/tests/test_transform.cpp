#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "k3fib/transform.hpp"

using k3fib::BigRational;
using k3fib::Isomorphism;
using k3fib::Polynomial;
using k3fib::QuarticModel;
using k3fib::RationalFunction;
using k3fib::WeierstrassModel;

using Q = BigRational;
using PolyQ = Polynomial<Q>;
using RFQ = RationalFunction<Q>;
using Model = WeierstrassModel<Q>;

namespace {

PolyQ T() { return PolyQ::x(); }
PolyQ C(long v) { return PolyQ::constant(Q(v)); }

PolyQ random_poly(std::mt19937& rng, int max_deg, int max_abs = 5) {
  std::uniform_int_distribution<int> deg_d(0, max_deg);
  std::uniform_int_distribution<int> coeff_d(-max_abs, max_abs);
  int d = deg_d(rng);
  std::vector<Q> coeffs;
  for (int i = 0; i <= d; ++i) coeffs.emplace_back(coeff_d(rng));
  return PolyQ(std::move(coeffs));
}

Model random_nonsingular_long_model(std::mt19937& rng) {
  for (;;) {
    Model m;
    try {
      m = Model::make(random_poly(rng, 1), random_poly(rng, 2), random_poly(rng, 3),
                      random_poly(rng, 4), random_poly(rng, 6));
    } catch (const k3fib::K3fibError&) {
      continue;
    }
    try {
      k3fib::invariants(m);
      return m;
    } catch (const k3fib::SingularSurface&) {
    }
  }
}

}  // namespace

TEST_CASE("quartic conversion: fixed examples") {
  SECTION("y^2 = t^4 + 1 becomes Y^2 = X^3 - 324 X") {
    PolyQ q = T().pow(4) + C(1);
    auto m = k3fib::quartic_to_weierstrass(q);
    CHECK(m.a2 == Q(0));
    CHECK(m.a4 == Q(-324));
    CHECK(m.a6 == Q(0));
  }
  SECTION("cubic leading-coefficient clearing") {
    // y^2 = 2x^3 + 3x^2 + 4x + 5 -> Y^2 = X^3 + 3X^2 + 8X + 20
    PolyQ q = PolyQ::from_coeffs({Q(5), Q(4), Q(3), Q(2)});
    auto m = k3fib::quartic_to_weierstrass(q);
    CHECK(m.a2 == Q(3));
    CHECK(m.a4 == Q(8));
    CHECK(m.a6 == Q(20));
  }
  SECTION("vanishing constant term auto-detects the root") {
    PolyQ q = T() * (T().pow(3) + C(2) * T() + C(1));
    auto with_auto = k3fib::quartic_to_weierstrass(q);
    auto with_root = k3fib::quartic_to_weierstrass(q, std::optional<Q>(Q(0)));
    CHECK(with_auto.a2 == with_root.a2);
    CHECK(with_auto.a4 == with_root.a4);
    CHECK(with_auto.a6 == with_root.a6);
  }
  SECTION("rejections") {
    CHECK_THROWS_AS(k3fib::quartic_to_weierstrass(T() * T() + C(1)), k3fib::WrongDegree);
    CHECK_THROWS_AS(k3fib::quartic_to_weierstrass(T().pow(5) + C(1)), k3fib::WrongDegree);
    CHECK_THROWS_AS(k3fib::quartic_to_weierstrass(T() * T() * (T() * T() + C(1))),
                    k3fib::NotSquarefree);
    CHECK_THROWS_AS(k3fib::quartic_to_weierstrass(PolyQ::zero()), k3fib::ZeroPolynomial);
    CHECK_THROWS_AS(k3fib::quartic_to_weierstrass(T().pow(4) + C(1), std::optional<Q>(Q(1))),
                    k3fib::K3fibError);
  }
}

TEST_CASE("root path and jacobian path agree up to isomorphism") {
  std::mt19937 rng(58102);
  std::uniform_int_distribution<int> small(-4, 4);
  int done = 0;
  while (done < 100) {
    Q r0(small(rng));
    PolyQ cubic = PolyQ::from_coeffs(
        {Q(small(rng)), Q(small(rng)), Q(small(rng)), Q(small(rng) == 0 ? 1 : small(rng))});
    if (cubic.degree() != 3) continue;
    PolyQ q = (T() - PolyQ::constant(r0)) * cubic;
    if (k3fib::poly_gcd(q, q.derivative()).degree() != 0) continue;
    auto via_root = k3fib::quartic_to_weierstrass(q, std::optional<Q>(r0));
    auto via_jac = k3fib::quartic_jacobian(q);
    auto inv_root = k3fib::short_invariants(via_root);
    auto inv_jac = k3fib::short_invariants(via_jac);
    if (inv_root.delta == Q(0) || inv_jac.delta == Q(0)) continue;
    CHECK(k3fib::isomorphic(k3fib::to_constant_model(via_root), k3fib::to_constant_model(via_jac)));
    ++done;
  }
}

TEST_CASE("isomorphism transport of coefficients and invariants") {
  std::mt19937 rng(77015);
  const Q us[] = {Q(1), Q(2), Q(-1), Q(1, 2), Q(3), Q(-2, 3)};
  for (int iter = 0; iter < 60; ++iter) {
    Model m = random_nonsingular_long_model(rng);
    Isomorphism<Q> iso;
    iso.u = RFQ(PolyQ::constant(us[static_cast<std::size_t>(iter) % 6]));
    iso.r = RFQ(random_poly(rng, 2));
    iso.s = RFQ(random_poly(rng, 1));
    iso.w = RFQ(random_poly(rng, 2));
    Model m2 = k3fib::apply_isomorphism(m, iso);

    auto i1 = k3fib::invariants(m);
    auto i2 = k3fib::invariants(m2);
    RFQ u = iso.u;
    CHECK(RFQ(i2.c4) == RFQ(i1.c4) / u.pow(4));
    CHECK(RFQ(i2.c6) == RFQ(i1.c6) / u.pow(6));
    CHECK(RFQ(i2.delta) == RFQ(i1.delta) / u.pow(12));
    CHECK(i2.j == i1.j);
    CHECK(k3fib::isomorphic(m, m2));

    // Round trip through the inverse recovers the model exactly.
    Model back = k3fib::apply_isomorphism(m2, iso.inverse());
    CHECK(back.a1 == m.a1);
    CHECK(back.a2 == m.a2);
    CHECK(back.a3 == m.a3);
    CHECK(back.a4 == m.a4);
    CHECK(back.a6 == m.a6);
  }
}

TEST_CASE("composition matches sequential application") {
  std::mt19937 rng(90210);
  for (int iter = 0; iter < 40; ++iter) {
    Model m = random_nonsingular_long_model(rng);
    Isomorphism<Q> a, b;
    a.u = RFQ(PolyQ::constant(Q(iter % 2 == 0 ? 2 : 1)));
    a.r = RFQ(random_poly(rng, 1));
    a.s = RFQ(random_poly(rng, 1));
    a.w = RFQ(random_poly(rng, 1));
    b.u = RFQ(PolyQ::constant(Q(1, 2)));
    b.r = RFQ(random_poly(rng, 1));
    b.s = RFQ(random_poly(rng, 1));
    b.w = RFQ(random_poly(rng, 1));
    Model seq = k3fib::apply_isomorphism(k3fib::apply_isomorphism(m, a), b);
    Model combined = k3fib::apply_isomorphism(m, k3fib::compose(a, b));
    CHECK(seq.a1 == combined.a1);
    CHECK(seq.a2 == combined.a2);
    CHECK(seq.a3 == combined.a3);
    CHECK(seq.a4 == combined.a4);
    CHECK(seq.a6 == combined.a6);
  }
}

TEST_CASE("long_to_short kills a1 and a3") {
  std::mt19937 rng(31337);
  for (int iter = 0; iter < 25; ++iter) {
    Model m = random_nonsingular_long_model(rng);
    auto [shorted, iso] = k3fib::long_to_short(m);
    CHECK(shorted.a1.is_zero());
    CHECK(shorted.a3.is_zero());
    auto inv = k3fib::invariants(m);
    CHECK(shorted.a2 == inv.b2);
    CHECK(shorted.a4 == inv.b4 * Q(8));
    CHECK(shorted.a6 == inv.b6 * Q(16));
    CHECK(k3fib::isomorphic(m, shorted));
  }
}

TEST_CASE("classification is invariant under isomorphism") {
  // Criterion-style property: transported models classify identically.
  std::mt19937 rng(46013);
  int done = 0;
  while (done < 20) {
    Model m = random_nonsingular_long_model(rng);
    if (m.a6.degree() < 5) continue;  // keep the inferred degree stable
    auto [shorted, iso] = k3fib::long_to_short(m);
    if (shorted.n != m.n) continue;
    try {
      auto c1 = k3fib::fiber_configuration(m);
      auto c2 = k3fib::fiber_configuration(shorted);
      CHECK(c1.type_counts() == c2.type_counts());
      CHECK(c1.euler_sum() == c2.euler_sum());
    } catch (const k3fib::AmbiguousBundle&) {
      continue;  // rare split-needed layouts are exercised elsewhere
    }
    ++done;
  }
}

TEST_CASE("isomorphic distinguishes twists") {
  Model m = Model::short_model(PolyQ::zero(), C(1), C(1));
  SECTION("rescaling by a unit is an isomorphism") {
    Isomorphism<Q> iso = Isomorphism<Q>::rescale(RFQ(C(2)));
    Model m2 = k3fib::apply_isomorphism(m, iso);
    CHECK(k3fib::isomorphic(m, m2));
  }
  SECTION("the quadratic twist by t is not isomorphic over Q(t)") {
    Model tw = Model::short_model(PolyQ::zero(), T().pow(2), T().pow(3));
    CHECK_FALSE(k3fib::isomorphic(m, tw));
  }
  SECTION("the twist by t^2 is the isomorphism u = t") {
    Model tw = Model::short_model(PolyQ::zero(), T().pow(4), T().pow(6));
    CHECK(k3fib::isomorphic(m, tw));
  }
  SECTION("j = 0 and j = 1728 branches") {
    Model j0 = Model::short_model(PolyQ::zero(), PolyQ::zero(), C(1));
    Model j0_tw = Model::short_model(PolyQ::zero(), PolyQ::zero(), T());
    CHECK_FALSE(k3fib::isomorphic(j0, j0_tw));
    Model j0_six = Model::short_model(PolyQ::zero(), PolyQ::zero(), T().pow(6));
    CHECK(k3fib::isomorphic(j0, j0_six));

    Model j1728 = Model::short_model(PolyQ::zero(), C(1), PolyQ::zero());
    Model j1728_tw = Model::short_model(PolyQ::zero(), T(), PolyQ::zero());
    CHECK_FALSE(k3fib::isomorphic(j1728, j1728_tw));
    Model j1728_four = Model::short_model(PolyQ::zero(), T().pow(4), PolyQ::zero());
    CHECK(k3fib::isomorphic(j1728, j1728_four));
  }
}

TEST_CASE("nth power recognition in Q(t)") {
  using k3fib::is_nth_power;
  CHECK(is_nth_power(RFQ((T() - C(1)) * (T() - C(1)), T().pow(4)), 2));
  CHECK(is_nth_power(RFQ(T().pow(2) * Q(4)), 2));
  CHECK_FALSE(is_nth_power(RFQ(T().pow(2) * Q(2)), 2));
  CHECK_FALSE(is_nth_power(RFQ(T().pow(2) * Q(-1)), 2));
  CHECK(is_nth_power(RFQ(T().pow(3) * Q(-8)), 3));
  CHECK_FALSE(is_nth_power(RFQ(T().pow(3) + C(1)), 3));
  CHECK(is_nth_power(RFQ(PolyQ::constant(Q(729, 64))), 6));
}

TEST_CASE("absorb_squares") {
  PolyQ p = (T() - C(1)).pow(2) * T().pow(3);
  auto r = k3fib::absorb_squares(p);
  CHECK(r.taken == (T() - C(1)) * T());
  CHECK(r.reduced == T());
  CHECK(r.taken * r.taken * r.reduced == p);

  PolyQ q = (T() * T() + C(1)).pow(4) * Q(5);
  auto r2 = k3fib::absorb_squares(q);
  CHECK(r2.taken == (T() * T() + C(1)).pow(2));
  CHECK(r2.reduced == C(5));

  std::mt19937 rng(8642);
  for (int iter = 0; iter < 50; ++iter) {
    PolyQ f = random_poly(rng, 3);
    if (f.is_zero()) continue;
    PolyQ g = f * f * random_poly(rng, 2);
    if (g.is_zero()) continue;
    auto res = k3fib::absorb_squares(g);
    CHECK(res.taken * res.taken * res.reduced == g);
    CHECK(k3fib::poly_gcd(res.reduced, res.reduced.derivative()).degree() == 0);
  }
}

TEST_CASE("plane cubic with a smooth point") {
  using PP = Polynomial<PolyQ>;
  SECTION("v^2 = u^3 + 1 through (-1, 0)") {
    // outer variable v, inner u: coeff of v^0 is -(u^3 + 1), of v^2 is 1.
    PP cubic = PP::from_coeffs({-(T().pow(3) + C(1)), PolyQ::zero(), PolyQ::one()});
    auto res = k3fib::cubic_with_point_to_weierstrass(cubic, Q(-1), Q(0));
    auto inv = k3fib::short_invariants(res.model);
    CHECK(inv.c4 == Q(0));  // j = 0, like the source curve
    CHECK(!(inv.delta == Q(0)));
    Model reference = Model::short_model(PolyQ::zero(), PolyQ::zero(), C(1));
    CHECK(k3fib::isomorphic(k3fib::to_constant_model(res.model), reference));
  }
  SECTION("a nodal point is rejected") {
    // v^2 = u^3 + u^2 has a node at the origin.
    PP nodal = PP::from_coeffs({-(T().pow(3) + T().pow(2)), PolyQ::zero(), PolyQ::one()});
    CHECK_THROWS_AS(k3fib::cubic_with_point_to_weierstrass(nodal, Q(0), Q(0)),
                    k3fib::SingularPoint);
  }
  SECTION("points off the curve are rejected") {
    PP cubic = PP::from_coeffs({-(T().pow(3) + C(1)), PolyQ::zero(), PolyQ::one()});
    CHECK_THROWS_AS(k3fib::cubic_with_point_to_weierstrass(cubic, Q(1), Q(1)), k3fib::K3fibError);
  }
  SECTION("wrong total degree is rejected") {
    PP quartic = PP::from_coeffs({-(T().pow(4) + C(1)), PolyQ::zero(), PolyQ::one()});
    CHECK_THROWS_AS(k3fib::cubic_with_point_to_weierstrass(quartic, Q(1), Q(0)),
                    k3fib::WrongDegree);
    PP conic = PP::from_coeffs({-(T() + C(1)), PolyQ::zero(), PolyQ::one()});
    CHECK_THROWS_AS(k3fib::cubic_with_point_to_weierstrass(conic, Q(0), Q(1)),
                    k3fib::WrongDegree);
  }
  SECTION("a second rational cubic: v^2 = u^3 - u through (0, 0)") {
    PP cubic = PP::from_coeffs({-(T().pow(3) - T()), PolyQ::zero(), PolyQ::one()});
    auto res = k3fib::cubic_with_point_to_weierstrass(cubic, Q(0), Q(0));
    Model reference = Model::short_model(PolyQ::zero(), C(-1), PolyQ::zero());
    CHECK(k3fib::isomorphic(k3fib::to_constant_model(res.model), reference));
  }
}

TEST_CASE("transform chains") {
  k3fib::TransformChain<Q> chain;
  CHECK_THROWS_AS(chain.as_ursw(), k3fib::K3fibError);
  chain.iso = Isomorphism<Q>::rescale(RFQ(C(3)));
  CHECK(chain.is_pure_isomorphism());
  CHECK(chain.as_ursw().u == RFQ(C(3)));
  chain.steps.push_back({"invert", {{"x", "1/X"}}});
  CHECK_FALSE(chain.is_pure_isomorphism());
}
