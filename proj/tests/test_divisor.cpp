#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "k3fib/divisor.hpp"

using k3fib::CurveSymbol;
using k3fib::Divisor;
using k3fib::KodairaType;
using k3fib::pairing;

namespace {

std::vector<CurveSymbol> all_symbols() {
  std::vector<CurveSymbol> out;
  for (int i = 1; i <= 6; ++i) out.push_back(CurveSymbol::line(i));
  for (int i = 1; i <= 6; ++i) {
    for (int j = i + 1; j <= 6; ++j) out.push_back(CurveSymbol::double_point(i, j));
  }
  for (int i = 1; i <= 6; ++i) {
    for (int j = i + 1; j <= 6; ++j) {
      for (int k = i + 1; k <= 6; ++k) {
        for (int m = k + 1; m <= 6; ++m) {
          if (k == j || m == j) continue;
          out.push_back(CurveSymbol::m_conic(i, j, k, m));
        }
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("the 66 ambient classes all have self-intersection -2") {
  auto symbols = all_symbols();
  REQUIRE(symbols.size() == 66);
  for (const auto& s : symbols) CHECK(k3fib::pair_symbols(s, s) == -2);
  // canonical form deduplicates
  CHECK(CurveSymbol::m_conic(3, 4, 1, 2) == CurveSymbol::m_conic(1, 2, 3, 4));
  CHECK(CurveSymbol::m_conic(4, 3, 2, 1) == CurveSymbol::m_conic(1, 2, 3, 4));
  CHECK(CurveSymbol::double_point(5, 2) == CurveSymbol::double_point(2, 5));
}

TEST_CASE("pairing rule branches") {
  auto L = [](int i) { return CurveSymbol::line(i); };
  auto P = [](int i, int j) { return CurveSymbol::double_point(i, j); };
  auto M = [](int i, int j, int k, int m) { return CurveSymbol::m_conic(i, j, k, m); };

  CHECK(k3fib::pair_symbols(L(1), L(2)) == 0);
  CHECK(k3fib::pair_symbols(P(1, 2), P(1, 3)) == 0);
  CHECK(k3fib::pair_symbols(L(1), P(1, 4)) == 1);
  CHECK(k3fib::pair_symbols(L(2), P(1, 4)) == 0);
  CHECK(k3fib::pair_symbols(L(5), M(1, 2, 3, 4)) == 1);
  CHECK(k3fib::pair_symbols(L(1), M(1, 2, 3, 4)) == 0);
  CHECK(k3fib::pair_symbols(P(1, 2), M(1, 2, 3, 4)) == 2);
  CHECK(k3fib::pair_symbols(P(3, 4), M(1, 2, 3, 4)) == 2);
  CHECK(k3fib::pair_symbols(P(1, 3), M(1, 2, 3, 4)) == 0);
  CHECK(k3fib::pair_symbols(M(1, 2, 3, 4), M(1, 2, 5, 6)) == 0);   // share the pair (12)
  CHECK(k3fib::pair_symbols(M(1, 2, 3, 4), M(1, 3, 2, 4)) == 2);   // no shared pair
  CHECK(k3fib::pair_symbols(M(1, 2, 3, 4), M(1, 5, 3, 6)) == 2);
  // symmetry
  CHECK(k3fib::pair_symbols(M(1, 2, 3, 4), L(5)) == 1);
  CHECK(k3fib::pair_symbols(P(1, 4), L(1)) == 1);
  CHECK(k3fib::pair_symbols(M(1, 2, 3, 4), P(1, 2)) == 2);
}

TEST_CASE("opaque classes parse but refuse to pair") {
  Divisor d = Divisor::parse("l1 + 2*l13 + mu[12|34] - eta[(12)(34)(15)|(36)(56)]");
  CHECK(d.coeff(CurveSymbol::line(1)) == 1);
  CHECK(d.coeff(CurveSymbol::double_point(1, 3)) == 2);
  CHECK(d.coeff(CurveSymbol::m_conic(1, 2, 3, 4)) == 1);
  CHECK(d.has_opaque());
  CHECK_THROWS_AS(pairing(d, d), k3fib::OpaquePairing);
  CHECK(k3fib::kodaira_type_of_divisor(d) == std::nullopt);
  // round trip
  CHECK(Divisor::parse(d.to_string()) == d);
}

TEST_CASE("divisor expression parsing") {
  CHECK(Divisor::parse("0").is_zero());
  CHECK(Divisor::parse("l1 - l1").is_zero());
  Divisor d = Divisor::parse("-2*l1 + 3*mu[56|12]");
  CHECK(d.coeff(CurveSymbol::line(1)) == -2);
  CHECK(d.coeff(CurveSymbol::m_conic(1, 2, 5, 6)) == 3);
  CHECK_THROWS_AS(Divisor::parse("l7"), k3fib::ParseError);
  CHECK_THROWS_AS(Divisor::parse("mu[12|13]"), k3fib::ParseError);
  CHECK_THROWS_AS(Divisor::parse("l1 l2"), k3fib::ParseError);
  CHECK_THROWS_AS(Divisor::parse("2 l1"), k3fib::ParseError);
  CHECK_THROWS_AS(Divisor::parse("q3"), k3fib::ParseError);
  CHECK_THROWS_AS(Divisor::parse(""), k3fib::ParseError);
  CHECK(k3fib::evaluate_pairing_expression("l1 . l13") == 1);
  CHECK(k3fib::evaluate_pairing_expression("l1 + l2 . 2*l12") == 4);
  CHECK_THROWS_AS(k3fib::evaluate_pairing_expression("l1 , l2"), k3fib::ParseError);
}

TEST_CASE("divisors of the standard functions") {
  SECTION("the parameter of the I2* fibration") {
    // t = u*v / (cu+bv-1), with cu+bv-1 the joining line M[15|36].
    Divisor t = k3fib::divisor_of({{"u", 1}, {"v", 1}, {"M[15|36]", -1}});
    Divisor expected = Divisor::parse(
        "l16 + l14 + 2*l1 + 2*l13 + 2*l3 + l23 + l35 - mu[15|36] - mu[12|34]");
    CHECK(k3fib::verify_divisor_identity(t, expected));
    CHECK(pairing(t, t) == 0);
  }
  SECTION("the shifted parameter identity") {
    // (cu-1)(bv-1)/(cu+bv-1) = M[12|36] M[15|34] / M[15|36] up to scale.
    Divisor lhs = k3fib::divisor_of({{"M[12|36]", 1}, {"M[15|34]", 1}, {"M[15|36]", -1}});
    Divisor rhs = Divisor::parse("mu[12|36] + mu[15|34] - mu[15|36] - mu[12|34]");
    CHECK(k3fib::verify_divisor_identity(lhs, rhs));
  }
  SECTION("principal divisors pair to zero with everything ample-orthogonal") {
    Divisor w = k3fib::divisor_of_function("w");
    CHECK(pairing(w, w) == 0);
    for (const char* f : {"u", "u-1", "v", "v-1", "au+bv-1", "cu+dv-1"}) {
      Divisor d = k3fib::divisor_of_function(f);
      CHECK(pairing(d, d) == 0);
      CHECK(pairing(d, w) == 0);
    }
  }
  SECTION("unknown names are flagged") {
    CHECK_THROWS_AS(k3fib::divisor_of_function("t"), k3fib::UnknownFunction);
    CHECK_THROWS_AS(k3fib::divisor_of_function("M[12|34"), k3fib::UnknownFunction);
  }
}

TEST_CASE("fiber recognition") {
  SECTION("the zero fiber of the I2* fibration") {
    Divisor t = k3fib::divisor_of({{"u", 1}, {"v", 1}, {"M[15|36]", -1}});
    Divisor zero_part = t.positive_part();
    auto ty = k3fib::kodaira_type_of_divisor(zero_part);
    REQUIRE(ty.has_value());
    CHECK(*ty == KodairaType::make_InStar(2));
  }
  SECTION("a two-component I2") {
    Divisor d = Divisor::parse("l34 + mu[12|34]");
    auto ty = k3fib::kodaira_type_of_divisor(d);
    REQUIRE(ty.has_value());
    CHECK(*ty == KodairaType::make_In(2));
    CHECK(pairing(d, d) == 0);
  }
  SECTION("single curves are not fibers") {
    CHECK(k3fib::kodaira_type_of_divisor(Divisor(CurveSymbol::line(1))) == std::nullopt);
  }
  SECTION("negative and disconnected divisors are rejected") {
    CHECK(k3fib::kodaira_type_of_divisor(Divisor::parse("l1 - l2")) == std::nullopt);
    // two disjoint I2-shaped pieces (the conics share the pair (12), so they
    // do not meet): not connected
    Divisor two = Divisor::parse("l34 + mu[12|34] + l56 + mu[12|56]");
    CHECK(k3fib::kodaira_type_of_divisor(two) == std::nullopt);
  }
  SECTION("a hexagon of lines is an I6") {
    // l1 and l2 are disjoint, as are l3,l4; chain them through double points.
    Divisor hex = Divisor::parse("l1 + l13 + l3 + l23 + l2 + l12");
    // check the cycle: l1-l13-l3-l23-l2-l12-l1
    CHECK(pairing(hex, hex) == 0);
    auto ty = k3fib::kodaira_type_of_divisor(hex);
    REQUIRE(ty.has_value());
    CHECK(*ty == KodairaType::make_In(6));
  }
  SECTION("zero divisor is not recognized") {
    CHECK(k3fib::kodaira_type_of_divisor(Divisor::zero()) == std::nullopt);
  }
}
