#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "k3fib/errors.hpp"
#include "k3fib/intfactor.hpp"
#include "k3fib/places.hpp"
#include "k3fib/polynomial.hpp"
#include "k3fib/rational.hpp"
#include "k3fib/rational_function.hpp"

namespace k3fib {

// ---------------------------------------------------------------------------
// Kodaira fiber types
// ---------------------------------------------------------------------------

struct KodairaType {
  enum class Family { In, II, III, IV, InStar, IVStar, IIIStar, IIStar };
  Family family = Family::In;
  int index = 0;  // n for I_n and I_n*

  static KodairaType make_In(int n) { return {Family::In, n}; }
  static KodairaType make_InStar(int n) { return {Family::InStar, n}; }

  // Number of irreducible components of the fiber.
  int components() const {
    switch (family) {
      case Family::In: return index == 0 ? 1 : index;
      case Family::II: return 1;
      case Family::III: return 2;
      case Family::IV: return 3;
      case Family::InStar: return index + 5;
      case Family::IVStar: return 7;
      case Family::IIIStar: return 8;
      case Family::IIStar: return 9;
    }
    return 0;
  }

  int euler() const {
    switch (family) {
      case Family::In: return index;
      case Family::II: return 2;
      case Family::III: return 3;
      case Family::IV: return 4;
      case Family::InStar: return index + 6;
      case Family::IVStar: return 8;
      case Family::IIIStar: return 9;
      case Family::IIStar: return 10;
    }
    return 0;
  }

  std::string to_string() const {
    switch (family) {
      case Family::In: return "I" + std::to_string(index);
      case Family::II: return "II";
      case Family::III: return "III";
      case Family::IV: return "IV";
      case Family::InStar: return "I" + std::to_string(index) + "*";
      case Family::IVStar: return "IV*";
      case Family::IIIStar: return "III*";
      case Family::IIStar: return "II*";
    }
    return "?";
  }

  static KodairaType parse(const std::string& s) {
    auto bad = [&]() -> KodairaType { throw ParseError("unknown Kodaira type '" + s + "'"); };
    if (s.empty() || s[0] != 'I') return bad();
    const bool star = s.back() == '*';
    std::string body = star ? s.substr(0, s.size() - 1) : s;
    if (body == "II") return star ? KodairaType{Family::IIStar, 0} : KodairaType{Family::II, 0};
    if (body == "III") return star ? KodairaType{Family::IIIStar, 0} : KodairaType{Family::III, 0};
    if (body == "IV") return star ? KodairaType{Family::IVStar, 0} : KodairaType{Family::IV, 0};
    if (body.size() >= 2 && body[0] == 'I' && std::isdigit(static_cast<unsigned char>(body[1]))) {
      int n = std::stoi(body.substr(1));
      return star ? make_InStar(n) : make_In(n);
    }
    return bad();
  }

  bool operator==(const KodairaType& o) const {
    return family == o.family && index == o.index;
  }
  bool operator!=(const KodairaType& o) const { return !(*this == o); }
  bool operator<(const KodairaType& o) const {
    if (family != o.family) return static_cast<int>(family) < static_cast<int>(o.family);
    return index < o.index;
  }
};

// ---------------------------------------------------------------------------
// Weierstrass models
// ---------------------------------------------------------------------------

// y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6 over F[t], cut out in the
// ruled surface of degree parameter n: deg a_i <= n*i (n=2 for K3 surfaces).
template <class F>
struct WeierstrassModel {
  Polynomial<F> a1, a2, a3, a4, a6;
  int n = 1;

  static WeierstrassModel make(Polynomial<F> a1, Polynomial<F> a2, Polynomial<F> a3,
                               Polynomial<F> a4, Polynomial<F> a6, int n = 0) {
    WeierstrassModel m;
    m.a1 = std::move(a1);
    m.a2 = std::move(a2);
    m.a3 = std::move(a3);
    m.a4 = std::move(a4);
    m.a6 = std::move(a6);
    if (n == 0) {
      n = 1;
      const std::pair<const Polynomial<F>*, int> entries[] = {
          {&m.a1, 1}, {&m.a2, 2}, {&m.a3, 3}, {&m.a4, 4}, {&m.a6, 6}};
      for (const auto& [p, i] : entries) {
        if (p->is_zero()) continue;
        n = std::max(n, (p->degree() + i - 1) / i);
      }
    }
    m.n = n;
    const std::pair<const Polynomial<F>*, int> entries[] = {
        {&m.a1, 1}, {&m.a2, 2}, {&m.a3, 3}, {&m.a4, 4}, {&m.a6, 6}};
    for (const auto& [p, i] : entries) {
      if (!p->is_zero() && p->degree() > n * i) {
        throw K3fibError("coefficient degree exceeds the n*i bound");
      }
    }
    return m;
  }

  static WeierstrassModel short_model(Polynomial<F> a2, Polynomial<F> a4, Polynomial<F> a6,
                                      int n = 0) {
    return make(Polynomial<F>::zero(), std::move(a2), Polynomial<F>::zero(), std::move(a4),
                std::move(a6), n);
  }

  bool is_short() const { return a1.is_zero() && a3.is_zero(); }
};

template <class F>
struct ModelInvariants {
  Polynomial<F> b2, b4, b6, b8, c4, c6, delta;
  RationalFunction<F> j;
};

template <class F>
ModelInvariants<F> invariants(const WeierstrassModel<F>& m) {
  ModelInvariants<F> inv;
  inv.b2 = m.a1 * m.a1 + m.a2 * F(4);
  inv.b4 = m.a4 * F(2) + m.a1 * m.a3;
  inv.b6 = m.a3 * m.a3 + m.a6 * F(4);
  inv.b8 = m.a1 * m.a1 * m.a6 + m.a2 * m.a6 * F(4) - m.a1 * m.a3 * m.a4 + m.a2 * m.a3 * m.a3 -
           m.a4 * m.a4;
  inv.c4 = inv.b2 * inv.b2 - inv.b4 * F(24);
  inv.c6 = -(inv.b2 * inv.b2 * inv.b2) + inv.b2 * inv.b4 * F(36) - inv.b6 * F(216);
  inv.delta = -(inv.b2 * inv.b2 * inv.b8) - inv.b4 * inv.b4 * inv.b4 * F(8) -
              inv.b6 * inv.b6 * F(27) + inv.b2 * inv.b4 * inv.b6 * F(9);
  if (inv.b8 * F(4) != inv.b2 * inv.b6 - inv.b4 * inv.b4) {
    throw InternalError("4*b8 identity failed");
  }
  if (inv.delta * F(1728) != inv.c4.pow(3) - inv.c6.pow(2)) {
    throw InternalError("1728*delta identity failed");
  }
  if (inv.delta.is_zero()) throw SingularSurface("discriminant vanishes identically");
  inv.j = RationalFunction<F>(inv.c4.pow(3), inv.delta);
  return inv;
}

// ---------------------------------------------------------------------------
// Local classification
// ---------------------------------------------------------------------------

template <class F>
struct KodairaFiber {
  Place<F> place = Place<F>::infinity();
  KodairaType type;
  int vDelta = 0;
  int components = 0;
  int euler = 0;
  int degree = 1;
};

namespace weier_detail {

constexpr int kInfValuation = 1 << 20;

// Valuation triple (vc4, vc6, vDelta) at a place, with c4/c6 possibly zero.
template <class F>
struct Triple {
  int vc4, vc6, vd;
};

template <class F>
Triple<F> valuation_triple(const ModelInvariants<F>& inv, const Place<F>& v, int n) {
  auto val_of = [&](const Polynomial<F>& p, int weight) -> int {
    if (p.is_zero()) return kInfValuation;
    auto [e, uniform] = valuation_with_uniformity(p, v, weight);
    if (!uniform) {
      throw AmbiguousBundle("non-uniform valuation over bundle " + v.to_string());
    }
    return e;
  };
  const bool fin = v.is_finite();
  return Triple<F>{val_of(inv.c4, fin ? 0 : 4 * n), val_of(inv.c6, fin ? 0 : 6 * n),
                   val_of(inv.delta, fin ? 0 : 12 * n)};
}

inline KodairaType type_from_triple(int vc4, int vc6, int vd) {
  // Strip (4,6,12)-reducible parts: classification uses the minimal model.
  const int e = std::min(vd / 12, std::min(vc4 / 4, vc6 / 6));
  if (e > 0) {
    vc4 -= 4 * e;
    vc6 -= 6 * e;
    vd -= 12 * e;
  }
  if (vd == 0) return KodairaType::make_In(0);
  if (vc4 == 0) return KodairaType::make_In(vd);
  if (vd == 2) return KodairaType{KodairaType::Family::II, 0};
  if (vd == 3 && vc4 == 1) return KodairaType{KodairaType::Family::III, 0};
  if (vd == 4 && vc6 == 2) return KodairaType{KodairaType::Family::IV, 0};
  if (vd == 6 && vc4 >= 2 && vc6 >= 3) return KodairaType::make_InStar(0);
  if (vd > 6 && vc4 == 2 && vc6 == 3) return KodairaType::make_InStar(vd - 6);
  if (vd == 8 && vc6 == 4) return KodairaType{KodairaType::Family::IVStar, 0};
  if (vd == 9 && vc4 == 3) return KodairaType{KodairaType::Family::IIIStar, 0};
  if (vd == 10 && vc6 == 5) return KodairaType{KodairaType::Family::IIStar, 0};
  throw UnclassifiableTriple("(vc4,vc6,vd)=(" + std::to_string(vc4) + "," + std::to_string(vc6) +
                             "," + std::to_string(vd) + ")");
}

template <class F>
KodairaFiber<F> classify_given(const ModelInvariants<F>& inv, const Place<F>& v, int n) {
  auto tr = valuation_triple(inv, v, n);
  const int e = std::min(tr.vd / 12, std::min(tr.vc4 / 4, tr.vc6 / 6));
  KodairaFiber<F> f;
  f.place = v;
  f.type = type_from_triple(tr.vc4, tr.vc6, tr.vd);
  f.vDelta = tr.vd - 12 * e;
  f.components = f.type.components();
  f.euler = f.type.euler();
  f.degree = v.degree();
  if (f.euler != f.vDelta) {
    throw InternalError("euler number disagrees with minimal discriminant order");
  }
  return f;
}

}  // namespace weier_detail

template <class F>
KodairaFiber<F> classify_place(const WeierstrassModel<F>& m, const Place<F>& v) {
  return weier_detail::classify_given(invariants(m), v, m.n);
}

// ---------------------------------------------------------------------------
// Minimalization
// ---------------------------------------------------------------------------

// Removes every (4,6,12)-divisible part of the valuation triple at v.  The
// direct a_i / p^i reduction is used as long as it stays polynomial; if a
// translation would be needed, the model is depressed to y^2 = x^3 + P x + Q
// with P = -c4/48, Q = -c6/864 (same invariants), where the reduction is
// always exact.
template <class F>
WeierstrassModel<F> minimalize_at(const WeierstrassModel<F>& m, const Place<F>& v) {
  ModelInvariants<F> inv = invariants(m);
  auto tr = weier_detail::valuation_triple(inv, v, m.n);
  const int e = std::min(tr.vd / 12, std::min(tr.vc4 / 4, tr.vc6 / 6));
  if (e == 0) return m;

  if (v.is_finite()) {
    // How many direct steps stay polynomial?
    int k = e;
    const std::pair<const Polynomial<F>*, int> entries[] = {
        {&m.a1, 1}, {&m.a2, 2}, {&m.a3, 3}, {&m.a4, 4}, {&m.a6, 6}};
    for (const auto& [p, i] : entries) {
      if (p->is_zero()) continue;
      k = std::min(k, valuation(*p, v) / i);
    }
    if (k == e) {
      WeierstrassModel<F> out = m;
      Polynomial<F> pk = v.poly().pow(static_cast<unsigned>(e));
      out.a1 = m.a1.is_zero() ? m.a1 : m.a1 / pk;
      out.a2 = m.a2.is_zero() ? m.a2 : m.a2 / pk.pow(2);
      out.a3 = m.a3.is_zero() ? m.a3 : m.a3 / pk.pow(3);
      out.a6 = m.a6.is_zero() ? m.a6 : m.a6 / pk.pow(6);
      out.a4 = m.a4.is_zero() ? m.a4 : m.a4 / pk.pow(4);
      return out;
    }
    // Depressed gauge: P,Q are divisible by p^{4e}, p^{6e} by definition of e.
    Polynomial<F> P = -(inv.c4) / F(48);
    Polynomial<F> Q = -(inv.c6) / F(864);
    Polynomial<F> pe = v.poly().pow(static_cast<unsigned>(e));
    P = P.is_zero() ? P : P / pe.pow(4);
    Q = Q.is_zero() ? Q : Q / pe.pow(6);
    return WeierstrassModel<F>::make(Polynomial<F>::zero(), Polynomial<F>::zero(),
                                     Polynomial<F>::zero(), P, Q, m.n);
  }

  // Infinity: the reduction lowers the surface degree by e.
  Polynomial<F> P = -(inv.c4) / F(48);
  Polynomial<F> Q = -(inv.c6) / F(864);
  return WeierstrassModel<F>::make(Polynomial<F>::zero(), Polynomial<F>::zero(),
                                   Polynomial<F>::zero(), P, Q, m.n - e);
}

// ---------------------------------------------------------------------------
// Global configuration
// ---------------------------------------------------------------------------

template <class F>
struct FiberConfiguration {
  std::vector<KodairaFiber<F>> fibers;
  int n = 1;

  int euler_sum() const {
    int s = 0;
    for (const auto& f : fibers) s += f.degree * f.euler;
    return s;
  }
  // Degree-weighted multiset of types.
  std::map<std::string, int> type_counts() const {
    std::map<std::string, int> out;
    for (const auto& f : fibers) out[f.type.to_string()] += f.degree;
    return out;
  }
};

template <class F>
FiberConfiguration<F> fiber_configuration(const WeierstrassModel<F>& m) {
  ModelInvariants<F> inv = invariants(m);
  std::vector<Polynomial<F>> inputs;
  for (const auto& [g, mult] : squarefree_decompose(inv.delta).layers) inputs.push_back(g);
  if (!inv.c4.is_zero() && !inv.c4.is_constant()) inputs.push_back(inv.c4);
  if (!inv.c6.is_zero() && !inv.c6.is_constant()) inputs.push_back(inv.c6);
  std::vector<Polynomial<F>> basis = coprime_basis(inputs);

  FiberConfiguration<F> cfg;
  cfg.n = m.n;
  for (const auto& b : basis) {
    Place<F> v = Place<F>::finite(b);
    if (valuation(inv.delta, v) == 0) continue;
    cfg.fibers.push_back(weier_detail::classify_given(inv, v, m.n));
  }
  if (12 * m.n - inv.delta.degree() > 0) {
    cfg.fibers.push_back(weier_detail::classify_given(inv, Place<F>::infinity(), m.n));
  }
  std::sort(cfg.fibers.begin(), cfg.fibers.end(),
            [](const KodairaFiber<F>& x, const KodairaFiber<F>& y) { return x.place < y.place; });
  return cfg;
}

template <class F>
bool euler_check(const FiberConfiguration<F>& cfg, int n) {
  return cfg.euler_sum() == 12 * n;
}

// Mordell-Weil free rank from the configuration: rho - 2 - sum deg*(m_v - 1).
template <class F>
int shioda_tate_rank(const FiberConfiguration<F>& cfg, int rho) {
  if (!euler_check(cfg, cfg.n)) {
    throw IncompleteConfiguration("euler sum " + std::to_string(cfg.euler_sum()) +
                                  " != " + std::to_string(12 * cfg.n));
  }
  int s = 0;
  for (const auto& f : cfg.fibers) s += f.degree * (f.components - 1);
  return rho - 2 - s;
}

// ---------------------------------------------------------------------------
// Sections and 2-torsion
// ---------------------------------------------------------------------------

template <class F>
struct Section {
  bool at_infinity = true;
  RationalFunction<F> x, y;

  static Section O() { return Section{}; }
  static Section xy(RationalFunction<F> x, RationalFunction<F> y) {
    Section s;
    s.at_infinity = false;
    s.x = std::move(x);
    s.y = std::move(y);
    return s;
  }
};

template <class F>
bool verify_section(const WeierstrassModel<F>& m, const Section<F>& s) {
  if (s.at_infinity) return true;
  using RF = RationalFunction<F>;
  const RF x = s.x, y = s.y;
  RF lhs = y * y + RF(m.a1) * x * y + RF(m.a3) * y;
  RF rhs = x * x * x + RF(m.a2) * x * x + RF(m.a4) * x + RF(m.a6);
  return lhs == rhs;
}

struct TwoTorsionShape {
  int points = 1;  // including O
  std::string name = "{e}";
};

template <class F>
struct TwoTorsionResult {
  std::vector<Section<F>> sections;  // the non-O 2-torsion points
  TwoTorsionShape shape;
  bool complete = true;  // false only if the root search had to give up
};

namespace weier_detail {

// All rational roots of the monic cubic z^3 + c2 z^2 + c1 z + c0 over Q.
// Returns nullopt if integer factorization gave up.
inline std::optional<std::vector<BigRational>> rational_roots_monic_cubic(
    const BigRational& c2, const BigRational& c1, const BigRational& c0) {
  mpz_class L = 1;
  for (const auto& c : {c2, c1, c0}) {
    mpz_class d = c.den();
    mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), d.get_mpz_t());
  }
  BigRational Lq{L};
  // z = L x turns the cubic into a monic integer cubic in z.
  mpz_class A = (c2 * Lq).num();
  mpz_class B = (c1 * Lq * Lq).num();
  mpz_class C = (c0 * Lq * Lq * Lq).num();

  std::vector<mpz_class> int_roots;
  auto push_quadratic_roots = [&](const mpz_class& p, const mpz_class& q) {
    // integer roots of z^2 + p z + q
    mpz_class disc = p * p - 4 * q;
    if (disc < 0) return;
    if (mpz_perfect_square_p(disc.get_mpz_t()) == 0) return;
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), disc.get_mpz_t());
    for (const mpz_class& num : {mpz_class(-p + s), mpz_class(-p - s)}) {
      if (num % 2 == 0) int_roots.push_back(num / 2);
    }
  };

  if (C == 0) {
    int_roots.push_back(0);
    push_quadratic_roots(A, B);
  } else {
    auto divs = positive_divisors(C);
    if (!divs) return std::nullopt;
    bool found = false;
    for (const auto& d : *divs) {
      for (const mpz_class& r : {mpz_class(d), mpz_class(-d)}) {
        if (((r + A) * r + B) * r + C == 0) {
          int_roots.push_back(r);
          // Deflate and pick up the remaining (quadratic) roots.
          push_quadratic_roots(A + r, B + (A + r) * r);
          found = true;
          break;
        }
      }
      if (found) break;
    }
  }

  std::vector<BigRational> out;
  for (const auto& r : int_roots) {
    BigRational x = BigRational(r) / BigRational(L);
    // The deflation can repeat a double root; dedupe.
    bool seen = false;
    for (const auto& y : out) seen = seen || (y == x);
    if (!seen) out.push_back(x);
  }
  return out;
}

}  // namespace weier_detail

// 2-torsion sections over Q(t).  The x-coordinates are the elements of Q(t)
// satisfying 4x^3 + b2 x^2 + 2 b4 x + b6 = 0; being integral over Q[t] they
// are polynomials, found by specialize-solve-interpolate with an exact final
// verification.  Works for long models too: y0 = -(a1 x0 + a3)/2.
inline TwoTorsionResult<BigRational> two_torsion(const WeierstrassModel<BigRational>& m) {
  using Q = BigRational;
  using PolyQ = Polynomial<Q>;
  ModelInvariants<Q> inv = invariants(m);
  // Monic cubic over Q[t]: x^3 + (b2/4) x^2 + (b4/2) x + b6/4.
  PolyQ c2 = inv.b2 / Q(4);
  PolyQ c1 = inv.b4 / Q(2);
  PolyQ c0 = inv.b6 / Q(4);

  auto set_shape = [](TwoTorsionResult<Q>& r) {
    r.shape.points = 1 + static_cast<int>(r.sections.size());
    switch (r.shape.points) {
      case 1: r.shape.name = "{e}"; break;
      case 2: r.shape.name = "Z/2"; break;
      case 4: r.shape.name = "(Z/2)^2"; break;
      default: r.shape.name = "irregular"; break;
    }
  };

  TwoTorsionResult<Q> result;
  int D = 0;
  if (!c2.is_zero()) D = std::max(D, c2.degree());
  if (!c1.is_zero()) D = std::max(D, (c1.degree() + 1) / 2);
  if (!c0.is_zero()) D = std::max(D, (c0.degree() + 2) / 3);

  const Q pool[] = {Q(0),     Q(1),  Q(-1), Q(2),     Q(-2), Q(3),  Q(-3), Q(1, 2),
                    Q(-1, 2), Q(5),  Q(-5), Q(1, 3),  Q(4),  Q(7),  Q(-4), Q(-7),
                    Q(8),     Q(-8), Q(9),  Q(-9),    Q(11), Q(13)};
  std::vector<Q> nodes;
  std::vector<std::vector<Q>> node_roots;
  for (const Q& t0 : pool) {
    if (static_cast<int>(nodes.size()) >= D + 2) break;
    auto roots = weier_detail::rational_roots_monic_cubic(c2.eval(t0), c1.eval(t0), c0.eval(t0));
    if (!roots) continue;  // factorization budget exceeded at this node
    if (roots->empty()) {
      // A polynomial root would specialize to a rational root here: none exist.
      set_shape(result);
      return result;
    }
    nodes.push_back(t0);
    node_roots.push_back(*roots);
  }
  if (static_cast<int>(nodes.size()) < D + 2) {
    result.complete = false;
    set_shape(result);
    return result;
  }

  // Enumerate root choices over the first D+1 nodes, interpolate, check the
  // spare node, then verify exactly.
  std::vector<PolyQ> found;
  std::vector<std::size_t> idx(static_cast<std::size_t>(D + 1), 0);
  while (true) {
    std::vector<std::pair<Q, Q>> pts;
    for (int i = 0; i <= D; ++i) {
      pts.emplace_back(nodes[static_cast<std::size_t>(i)],
                       node_roots[static_cast<std::size_t>(i)][idx[static_cast<std::size_t>(i)]]);
    }
    PolyQ cand = interpolate(pts);
    // Prune on the spare node before the exact check.
    const Q spare_t = nodes[static_cast<std::size_t>(D + 1)];
    const auto& spare_roots = node_roots[static_cast<std::size_t>(D + 1)];
    bool spare_ok = false;
    Q cv = cand.eval(spare_t);
    for (const auto& r : spare_roots) spare_ok = spare_ok || (r == cv);
    if (spare_ok) {
      PolyQ value = cand.pow(3) + c2 * cand.pow(2) + c1 * cand + c0;
      if (value.is_zero()) {
        bool seen = false;
        for (const auto& p : found) seen = seen || (p == cand);
        if (!seen) found.push_back(cand);
      }
    }
    // Advance the multi-index.
    int pos = 0;
    while (pos <= D) {
      std::size_t u = static_cast<std::size_t>(pos);
      if (++idx[u] < node_roots[u].size()) break;
      idx[u] = 0;
      ++pos;
    }
    if (pos > D) break;
  }

  for (const auto& x0 : found) {
    RationalFunction<Q> x0r(x0);
    RationalFunction<Q> y0 = -(RationalFunction<Q>(m.a1) * x0r + RationalFunction<Q>(m.a3)) /
                             RationalFunction<Q>(PolyQ::constant(Q(2)));
    Section<Q> s = Section<Q>::xy(x0r, y0);
    if (!verify_section(m, s)) throw InternalError("two-torsion verification failed");
    result.sections.push_back(s);
  }
  set_shape(result);
  return result;
}

}  // namespace k3fib
