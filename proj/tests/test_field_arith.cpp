#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "k3fib/places.hpp"
#include "k3fib/polynomial.hpp"
#include "k3fib/rational.hpp"
#include "k3fib/rational_function.hpp"

using k3fib::BigRational;
using k3fib::coprime_basis;
using k3fib::Place;
using k3fib::poly_gcd;
using k3fib::Polynomial;
using k3fib::RationalFunction;

using Q = BigRational;
using PolyQ = Polynomial<Q>;
using RF = RationalFunction<Q>;

namespace {

PolyQ P(std::initializer_list<long> coeffs) {
  std::vector<Q> c;
  for (long v : coeffs) c.emplace_back(v);
  return PolyQ(std::move(c));
}

PolyQ random_poly(std::mt19937_64& rng, int max_deg, int coeff_range = 9) {
  std::uniform_int_distribution<int> dd(0, max_deg);
  std::uniform_int_distribution<int> cd(-coeff_range, coeff_range);
  const int deg = dd(rng);
  std::vector<Q> c(static_cast<std::size_t>(deg) + 1);
  for (auto& a : c) a = Q(cd(rng));
  PolyQ p((std::vector<Q>(c)));
  return p;
}

PolyQ random_nonzero_poly(std::mt19937_64& rng, int max_deg) {
  while (true) {
    PolyQ p = random_poly(rng, max_deg);
    if (!p.is_zero()) return p;
  }
}

}  // namespace

TEST_CASE("BigRational canonical arithmetic") {
  Q a(6, 4);
  CHECK(a.num() == 3);
  CHECK(a.den() == 2);
  CHECK(a.to_string() == "3/2");
  CHECK(Q::from_string("-12/8") == Q(-3, 2));
  CHECK(Q::from_string("5") == Q(5));
  CHECK((Q(1, 3) + Q(1, 6)) == Q(1, 2));
  CHECK((Q(2, 3) * Q(9, 4)) == Q(3, 2));
  CHECK((Q(1) / Q(-2, 5)) == Q(-5, 2));
  CHECK(Q(-4, 6).to_string() == "-2/3");
  CHECK(Q(7).pow(3) == Q(343));
  CHECK(Q(2, 3).pow(-2) == Q(9, 4));
  CHECK_THROWS_AS(Q(1) / Q(0), k3fib::DivisionByZero);
}

TEST_CASE("BigRational exact powers") {
  CHECK(Q(9, 4).sqrt_exact().value() == Q(3, 2));
  CHECK_FALSE(Q(2).sqrt_exact().has_value());
  CHECK_FALSE(Q(-9).sqrt_exact().has_value());
  CHECK(Q(-27, 8).nth_root_exact(3).value() == Q(-3, 2));
  CHECK(Q(16, 81).nth_root_exact(4).value() == Q(2, 3));
  CHECK_FALSE(Q(8).nth_root_exact(4).has_value());
  CHECK(Q(64).nth_root_exact(6).value() == Q(2));
  CHECK(Q(0).nth_root_exact(2).value() == Q(0));
}

TEST_CASE("poly_gcd on fixed inputs") {
  PolyQ t = PolyQ::x();
  // (t^2-1, t-1) -> t-1
  CHECK(poly_gcd(P({-1, 0, 1}), P({-1, 1})) == P({-1, 1}));
  // (t, t+1) -> 1
  CHECK(poly_gcd(t, P({1, 1})) == PolyQ::one());
  // ((t-2)^2 (t+3), (t-2)(t+5)) -> t-2
  PolyQ f = P({-2, 1}) * P({-2, 1}) * P({3, 1});
  PolyQ g = P({-2, 1}) * P({5, 1});
  PolyQ h = poly_gcd(f, g);
  CHECK(h == P({-2, 1}));
  // Exact division by the gcd leaves no remainder.
  CHECK((f % h).is_zero());
  CHECK((g % h).is_zero());
  CHECK(poly_gcd(PolyQ::zero(), g) == g.monic());
}

TEST_CASE("poly_gcd randomized divisibility properties") {
  std::mt19937_64 rng(20240817u);
  for (int iter = 0; iter < 200; ++iter) {
    PolyQ f = random_nonzero_poly(rng, 5);
    PolyQ g = random_nonzero_poly(rng, 5);
    PolyQ h = poly_gcd(f, g);
    CHECK((f % h).is_zero());
    CHECK((g % h).is_zero());
    // Common factors always land in the gcd: gcd(f*m, g*m) = monic(m * h).
    PolyQ m = random_nonzero_poly(rng, 3);
    CHECK(poly_gcd(f * m, g * m) == (m * h).monic());
  }
}

TEST_CASE("squarefree decomposition on fixed inputs") {
  PolyQ t = PolyQ::x();
  auto d1 = squarefree_decompose(t.pow(3));
  REQUIRE(d1.layers.size() == 1);
  CHECK(d1.layers[0].first == t);
  CHECK(d1.layers[0].second == 3);

  PolyQ f = P({-1, 0, 1}).pow(2) * P({-2, 1});
  auto d2 = squarefree_decompose(f);
  REQUIRE(d2.layers.size() == 2);
  CHECK(d2.layers[0].first == P({-2, 1}));
  CHECK(d2.layers[0].second == 1);
  CHECK(d2.layers[1].first == P({-1, 0, 1}));
  CHECK(d2.layers[1].second == 2);
  CHECK(d2.reassemble() == f);

  CHECK_THROWS_AS(squarefree_decompose(PolyQ::zero()), k3fib::ZeroPolynomial);
}

TEST_CASE("discriminant layers of a split-torsion K3 model") {
  // y^2 = (x-e1)(x-e2)(x-e3) with e1=7t(t-1)(2t-1), e2=3t(t-1)(5t-1),
  // e3=t(t-1)(2t-1)(5t-1); its disc is 16 prod (e_i-e_j)^2.
  PolyQ t = PolyQ::x();
  PolyQ tm1 = P({-1, 1});
  PolyQ e1 = t * tm1 * P({-1, 2}) * Q(7);
  PolyQ e2 = t * tm1 * P({-1, 5}) * Q(3);
  PolyQ e3 = t * tm1 * P({-1, 2}) * P({-1, 5});
  PolyQ disc = ((e1 - e2) * (e1 - e3) * (e2 - e3)).pow(2) * Q(16);

  auto dec = squarefree_decompose(disc);
  REQUIRE(dec.layers.size() == 2);
  CHECK(dec.layers[0].second == 2);
  CHECK(dec.layers[0].first ==
        (P({4, 1}) * P({-1, 2}) * P({-8, 5}) * P({-1, 5}) * P({-2, 1})).monic());
  CHECK(dec.layers[1].second == 6);
  CHECK(dec.layers[1].first == t * tm1);
  CHECK(dec.reassemble() == disc);

  CHECK(valuation(disc, Place<Q>::finite(tm1)) == 6);
}

TEST_CASE("coprime basis on fixed inputs") {
  PolyQ t = PolyQ::x();
  // Canonical order: by degree, then coefficients from the top.
  auto b1 = coprime_basis(std::vector<PolyQ>{t * P({-1, 1}), t * P({2, 1})});
  REQUIRE(b1.size() == 3);
  CHECK(b1[0] == P({-1, 1}));
  CHECK(b1[1] == t);
  CHECK(b1[2] == P({2, 1}));

  auto b2 = coprime_basis(std::vector<PolyQ>{P({-1, 0, 1}), P({-1, 1})});
  REQUIRE(b2.size() == 2);
  CHECK(b2[0] == P({-1, 1}));
  CHECK(b2[1] == P({1, 1}));

  // Equal radicals with different multiplicities must split.
  auto b3 = coprime_basis(std::vector<PolyQ>{t.pow(2) * P({-1, 1}), t * P({-1, 1})});
  REQUIRE(b3.size() == 2);
  CHECK(b3[0] == P({-1, 1}));
  CHECK(b3[1] == t);

  CHECK_THROWS_AS(coprime_basis(std::vector<PolyQ>{PolyQ::zero()}), k3fib::ZeroPolynomial);
}

TEST_CASE("squarefree and coprime-basis randomized round trips") {
  std::mt19937_64 rng(971203u);
  std::uniform_int_distribution<int> mult(1, 3);
  int performed = 0;
  while (performed < 1000) {
    // Build an input with planted multiplicities from small random factors.
    PolyQ f = PolyQ::constant(Q(mult(rng)));
    for (int k = 0; k < 3; ++k) {
      PolyQ base = random_nonzero_poly(rng, 2);
      if (base.is_constant()) continue;
      f = f * base.pow(static_cast<unsigned>(mult(rng)));
    }
    if (f.is_constant()) continue;
    ++performed;

    auto dec = squarefree_decompose(f);
    CHECK(dec.reassemble() == f);
    CHECK(dec.unit == f.lc());
    for (std::size_t i = 0; i < dec.layers.size(); ++i) {
      for (std::size_t j = i + 1; j < dec.layers.size(); ++j) {
        CHECK(dec.layers[i].second < dec.layers[j].second);
        CHECK(poly_gcd(dec.layers[i].first, dec.layers[j].first).degree() == 0);
      }
      CHECK(poly_gcd(dec.layers[i].first, dec.layers[i].first.derivative()).degree() == 0);
    }

    // Coprime basis reconstructs the input from valuations.
    PolyQ g = random_nonzero_poly(rng, 4);
    if (g.is_constant()) g = g * PolyQ::x();
    auto basis = coprime_basis(std::vector<PolyQ>{f, g});
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = i + 1; j < basis.size(); ++j) {
        CHECK(poly_gcd(basis[i], basis[j]).degree() == 0);
      }
    }
    for (const PolyQ* input : {&f, &g}) {
      PolyQ rebuilt = PolyQ::constant(input->lc());
      for (const auto& b : basis) {
        int v = valuation(*input, Place<Q>::finite(b));
        rebuilt = rebuilt * b.pow(static_cast<unsigned>(v));
      }
      CHECK(rebuilt == *input);
    }
  }
}

TEST_CASE("valuations at finite places and infinity") {
  PolyQ t = PolyQ::x();
  CHECK(valuation(t.pow(3) + t.pow(4), Place<Q>::finite(t)) == 3);
  RF r(t.pow(2), t.pow(3) + PolyQ::one());
  CHECK(valuation(r, Place<Q>::infinity()) == 1);
  CHECK(valuation(t.pow(2), Place<Q>::infinity(), 8) == 6);
  CHECK_THROWS_AS(valuation(PolyQ::zero(), Place<Q>::finite(t)), k3fib::ZeroPolynomial);
  CHECK_THROWS_AS(Place<Q>::finite(t.pow(2)), k3fib::NonSquarefreePlace);

  std::mt19937_64 rng(5511u);
  for (int iter = 0; iter < 100; ++iter) {
    PolyQ f = random_nonzero_poly(rng, 4);
    PolyQ g = random_nonzero_poly(rng, 4);
    for (const auto& pl : {Place<Q>::finite(PolyQ::x()), Place<Q>::at(Q(1)),
                           Place<Q>::infinity()}) {
      CHECK(valuation(f * g, pl) == valuation(f, pl) + valuation(g, pl));
    }
  }
}

TEST_CASE("valuation uniformity over bundles") {
  PolyQ t = PolyQ::x();
  // Bundle t^2+1 divides (t^2+1)^2 uniformly.
  auto u1 = valuation_with_uniformity(P({1, 0, 1}).pow(2), Place<Q>::finite(P({1, 0, 1})));
  CHECK(u1.first == 2);
  CHECK(u1.second);
  // t(t-1) as a bundle on t^2(t-1): min order 1, non-uniform.
  auto u2 = valuation_with_uniformity(t.pow(2) * P({-1, 1}), Place<Q>::finite(t * P({-1, 1})));
  CHECK(u2.first == 1);
  CHECK_FALSE(u2.second);
}

TEST_CASE("resultants") {
  PolyQ x = PolyQ::x();
  CHECK(resultant(P({-2, 1}), P({-5, 1})) == Q(-3));

  // Res_x(x-a, x^2-1) over Q(a) equals a^2-1.
  using RFa = RationalFunction<Q>;
  using PolyRF = Polynomial<RFa>;
  RFa a = RFa::x();
  PolyRF f(std::vector<RFa>{RFa(0) - a, RFa(1)});
  PolyRF g(std::vector<RFa>{RFa(-1), RFa(0), RFa(1)});
  RFa want = a * a - RFa(1);
  CHECK(resultant(f, g) == want);

  // 4x4 Sylvester determinant for two quadratics, brute-forced.
  std::mt19937_64 rng(33097u);
  std::uniform_int_distribution<int> cd(-6, 6);
  int done = 0;
  while (done < 20) {
    Q a2(cd(rng)), a1(cd(rng)), a0(cd(rng));
    Q b2(cd(rng)), b1(cd(rng)), b0(cd(rng));
    if (a2.is_zero() || b2.is_zero()) continue;
    ++done;
    PolyQ f2 = PolyQ(std::vector<Q>{a0, a1, a2});
    PolyQ g2 = PolyQ(std::vector<Q>{b0, b1, b2});
    // det of [[a2,a1,a0,0],[0,a2,a1,a0],[b2,b1,b0,0],[0,b2,b1,b0]]
    // expanded via 2x2 minors (Laplace along the first two rows).
    Q m01 = a2 * a1 - Q(0);          // cols(0,1) of rows(0,1): a2*a2? careful below
    (void)m01;
    // Direct cofactor expansion is simplest with a tiny fixed-size routine.
    std::vector<std::vector<Q>> M = {
        {a2, a1, a0, Q(0)}, {Q(0), a2, a1, a0}, {b2, b1, b0, Q(0)}, {Q(0), b2, b1, b0}};
    // 4x4 determinant by recursive expansion.
    auto det3 = [](const std::vector<std::vector<Q>>& A) {
      return A[0][0] * (A[1][1] * A[2][2] - A[1][2] * A[2][1]) -
             A[0][1] * (A[1][0] * A[2][2] - A[1][2] * A[2][0]) +
             A[0][2] * (A[1][0] * A[2][1] - A[1][1] * A[2][0]);
    };
    Q det(0);
    for (int col = 0; col < 4; ++col) {
      std::vector<std::vector<Q>> minor;
      for (int r = 1; r < 4; ++r) {
        std::vector<Q> row;
        for (int c = 0; c < 4; ++c) {
          if (c != col) row.push_back(M[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
        }
        minor.push_back(row);
      }
      Q term = M[0][static_cast<std::size_t>(col)] * det3(minor);
      det += (col % 2 == 0) ? term : Q(0) - term;
    }
    CHECK(resultant(f2, g2) == det);
  }
}

TEST_CASE("rational function canonical forms") {
  PolyQ t = PolyQ::x();
  RF r1(P({-1, 0, 1}), P({-1, 1}));  // (t^2-1)/(t-1) = t+1
  CHECK(r1.is_polynomial());
  CHECK(r1.poly() == P({1, 1}));

  RF r2(t * Q(2), t.pow(2) * Q(2));  // 2t / 2t^2 = 1/t
  CHECK(r2.num() == PolyQ::one());
  CHECK(r2.den() == t);

  RF r3 = RF(P({1, 1}), t) + RF(P({-1, 1}), t);  // (t+1)/t + (t-1)/t = 2
  CHECK(r3 == RF(2));

  CHECK_THROWS_AS(RF(t, PolyQ::zero()), k3fib::DivisionByZero);
  CHECK((RF::x().pow(-2) * RF::x().pow(2)) == RF::one());
}

TEST_CASE("nested field towers operate") {
  // Q(u)(v): outer variable v with coefficients in Q(u).
  using Qu = RationalFunction<Q>;
  using Quv = RationalFunction<Qu>;
  Quv v = Quv::x();
  Quv u = Quv(Qu::x());
  Quv e = (u * v + Quv(1)) / (u - v);
  Quv back = e * (u - v) - u * v;
  CHECK(back == Quv(1));
}
