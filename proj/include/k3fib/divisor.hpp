#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "k3fib/errors.hpp"
#include "k3fib/weierstrass.hpp"

namespace k3fib {

// ---------------------------------------------------------------------------
// Curve symbols on the blown-up double cover of the plane
// ---------------------------------------------------------------------------
//
// l<i>        strict transform of the i-th branch line (i in 1..6)
// l<i><j>     exceptional curve over the double point L_i cap L_j (i < j)
// mu[ij|km]   pullback of the line joining the double points (ij) and (km),
//             minus the exceptional parts; the two pairs are disjoint
// eta[...]    opaque classes: remembered by name, no intersection data

struct CurveSymbol {
  enum class Kind { Line, DoublePoint, MConic, Opaque };
  Kind kind = Kind::Line;
  int i = 0, j = 0, k = 0, m = 0;
  std::string opaque;

  static void check_index(int x) {
    if (x < 1 || x > 6) throw ParseError("line index out of range: " + std::to_string(x));
  }

  static CurveSymbol line(int i) {
    check_index(i);
    CurveSymbol s;
    s.kind = Kind::Line;
    s.i = i;
    return s;
  }

  static CurveSymbol double_point(int i, int j) {
    check_index(i);
    check_index(j);
    if (i == j) throw ParseError("double point needs two distinct lines");
    if (i > j) std::swap(i, j);
    CurveSymbol s;
    s.kind = Kind::DoublePoint;
    s.i = i;
    s.j = j;
    return s;
  }

  static CurveSymbol m_conic(int i, int j, int k, int m) {
    check_index(i);
    check_index(j);
    check_index(k);
    check_index(m);
    if (i > j) std::swap(i, j);
    if (k > m) std::swap(k, m);
    if (std::make_pair(i, j) > std::make_pair(k, m)) {
      std::swap(i, k);
      std::swap(j, m);
    }
    std::set<int> all{i, j, k, m};
    if (all.size() != 4) throw ParseError("mu needs four distinct line indices");
    CurveSymbol s;
    s.kind = Kind::MConic;
    s.i = i;
    s.j = j;
    s.k = k;
    s.m = m;
    return s;
  }

  static CurveSymbol opaque_class(std::string text) {
    CurveSymbol s;
    s.kind = Kind::Opaque;
    s.opaque = std::move(text);
    return s;
  }

  std::string to_string() const {
    switch (kind) {
      case Kind::Line: return "l" + std::to_string(i);
      case Kind::DoublePoint: return "l" + std::to_string(i) + std::to_string(j);
      case Kind::MConic:
        return "mu[" + std::to_string(i) + std::to_string(j) + "|" + std::to_string(k) +
               std::to_string(m) + "]";
      case Kind::Opaque: return opaque;
    }
    return "?";
  }

  auto key() const { return std::make_tuple(static_cast<int>(kind), i, j, k, m, opaque); }
  bool operator<(const CurveSymbol& o) const { return key() < o.key(); }
  bool operator==(const CurveSymbol& o) const { return key() == o.key(); }
  bool operator!=(const CurveSymbol& o) const { return !(*this == o); }
};

// Intersection number of two curve symbols; throws on opaque classes.
inline long pair_symbols(const CurveSymbol& a, const CurveSymbol& b) {
  using K = CurveSymbol::Kind;
  if (a.kind == K::Opaque || b.kind == K::Opaque) {
    throw OpaquePairing("no intersection data for " +
                        (a.kind == K::Opaque ? a.opaque : b.opaque));
  }
  auto line_in_pair = [](int p, const CurveSymbol& s) { return p == s.i || p == s.j; };
  auto line_in_conic = [](int p, const CurveSymbol& s) {
    return p == s.i || p == s.j || p == s.k || p == s.m;
  };
  auto pair_of_conic = [](const CurveSymbol& pt, const CurveSymbol& c) {
    return (pt.i == c.i && pt.j == c.j) || (pt.i == c.k && pt.j == c.m);
  };

  if (a.kind == K::Line && b.kind == K::Line) return a.i == b.i ? -2 : 0;
  if (a.kind == K::DoublePoint && b.kind == K::DoublePoint) return a == b ? -2 : 0;
  if (a.kind == K::MConic && b.kind == K::MConic) {
    if (a == b) return -2;
    bool share = (a.i == b.i && a.j == b.j) || (a.i == b.k && a.j == b.m) ||
                 (a.k == b.i && a.m == b.j) || (a.k == b.k && a.m == b.m);
    return share ? 0 : 2;
  }
  if (a.kind == K::Line && b.kind == K::DoublePoint) return line_in_pair(a.i, b) ? 1 : 0;
  if (a.kind == K::DoublePoint && b.kind == K::Line) return pair_symbols(b, a);
  if (a.kind == K::Line && b.kind == K::MConic) return line_in_conic(a.i, b) ? 0 : 1;
  if (a.kind == K::MConic && b.kind == K::Line) return pair_symbols(b, a);
  if (a.kind == K::DoublePoint && b.kind == K::MConic) return pair_of_conic(a, b) ? 2 : 0;
  if (a.kind == K::MConic && b.kind == K::DoublePoint) return pair_symbols(b, a);
  throw InternalError("unhandled symbol pairing");
}

// ---------------------------------------------------------------------------
// Divisors
// ---------------------------------------------------------------------------

class Divisor {
 public:
  Divisor() = default;
  explicit Divisor(const CurveSymbol& s, long c = 1) {
    if (c != 0) coeffs_[s] = c;
  }

  static Divisor zero() { return {}; }

  long coeff(const CurveSymbol& s) const {
    auto it = coeffs_.find(s);
    return it == coeffs_.end() ? 0 : it->second;
  }
  const std::map<CurveSymbol, long>& terms() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  bool has_opaque() const {
    for (const auto& [s, c] : coeffs_) {
      if (s.kind == CurveSymbol::Kind::Opaque) return true;
    }
    return false;
  }

  Divisor& add(const CurveSymbol& s, long c) {
    auto it = coeffs_.find(s);
    long v = (it == coeffs_.end() ? 0 : it->second) + c;
    if (v == 0) {
      if (it != coeffs_.end()) coeffs_.erase(it);
    } else {
      coeffs_[s] = v;
    }
    return *this;
  }

  Divisor operator+(const Divisor& o) const {
    Divisor r = *this;
    for (const auto& [s, c] : o.coeffs_) r.add(s, c);
    return r;
  }
  Divisor operator-(const Divisor& o) const {
    Divisor r = *this;
    for (const auto& [s, c] : o.coeffs_) r.add(s, -c);
    return r;
  }
  Divisor operator-() const {
    Divisor r;
    for (const auto& [s, c] : coeffs_) r.coeffs_[s] = -c;
    return r;
  }
  Divisor operator*(long k) const {
    Divisor r;
    if (k != 0) {
      for (const auto& [s, c] : coeffs_) r.coeffs_[s] = c * k;
    }
    return r;
  }
  bool operator==(const Divisor& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const Divisor& o) const { return !(*this == o); }

  Divisor positive_part() const {
    Divisor r;
    for (const auto& [s, c] : coeffs_) {
      if (c > 0) r.coeffs_[s] = c;
    }
    return r;
  }

  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [s, c] : coeffs_) {
      long a = c < 0 ? -c : c;
      if (first) {
        if (c < 0) out += "-";
        first = false;
      } else {
        out += c < 0 ? " - " : " + ";
      }
      if (a != 1) out += std::to_string(a) + "*";
      out += s.to_string();
    }
    return out;
  }

  static Divisor parse(const std::string& text);

 private:
  std::map<CurveSymbol, long> coeffs_;
};

inline long pairing(const Divisor& a, const Divisor& b) {
  long total = 0;
  for (const auto& [sa, ca] : a.terms()) {
    for (const auto& [sb, cb] : b.terms()) total += ca * cb * pair_symbols(sa, sb);
  }
  return total;
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace divisor_detail {

inline int digit_at(const std::string& s, std::size_t pos, const std::string& ctx) {
  if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) {
    throw ParseError("expected digit in " + ctx);
  }
  return s[pos] - '0';
}

// Parses one curve symbol starting at pos; advances pos past it.
inline CurveSymbol parse_symbol(const std::string& s, std::size_t& pos) {
  auto starts_with = [&](const char* w) {
    return s.compare(pos, std::string(w).size(), w) == 0;
  };
  for (const char* tag : {"eta", "xi", "nu", "gamma"}) {
    if (starts_with(tag) && pos + std::string(tag).size() < s.size() &&
        s[pos + std::string(tag).size()] == '[') {
      std::size_t close = s.find(']', pos);
      if (close == std::string::npos) throw ParseError("unterminated opaque class");
      std::string whole = s.substr(pos, close - pos + 1);
      pos = close + 1;
      return CurveSymbol::opaque_class(whole);
    }
  }
  if (starts_with("mu[")) {
    std::size_t p = pos + 3;
    int i = digit_at(s, p++, "mu");
    int j = digit_at(s, p++, "mu");
    if (p >= s.size() || s[p] != '|') throw ParseError("expected | in mu[..|..]");
    ++p;
    int k = digit_at(s, p++, "mu");
    int m = digit_at(s, p++, "mu");
    if (p >= s.size() || s[p] != ']') throw ParseError("expected ] in mu[..|..]");
    pos = p + 1;
    return CurveSymbol::m_conic(i, j, k, m);
  }
  if (pos < s.size() && s[pos] == 'l') {
    std::size_t p = pos + 1;
    int i = digit_at(s, p++, "l-symbol");
    if (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) {
      int j = s[p] - '0';
      pos = p + 1;
      return CurveSymbol::double_point(i, j);
    }
    pos = p;
    return CurveSymbol::line(i);
  }
  throw ParseError("unrecognized symbol near '" + s.substr(pos) + "'");
}

}  // namespace divisor_detail

inline Divisor Divisor::parse(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) throw ParseError("empty divisor expression");
  if (s == "0") return Divisor::zero();
  Divisor out;
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    long sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      throw ParseError("expected + or - between terms");
    }
    first = false;
    long mag = 1;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      std::size_t endp = pos;
      while (endp < s.size() && std::isdigit(static_cast<unsigned char>(s[endp]))) ++endp;
      mag = std::stol(s.substr(pos, endp - pos));
      pos = endp;
      if (pos >= s.size() || s[pos] != '*') throw ParseError("expected * after coefficient");
      ++pos;
    }
    CurveSymbol sym = divisor_detail::parse_symbol(s, pos);
    out.add(sym, sign * mag);
  }
  return out;
}

// "lhs . rhs" -> intersection number of the two divisor expressions.
inline long evaluate_pairing_expression(const std::string& text) {
  std::size_t dot = text.find('.');
  if (dot == std::string::npos || text.find('.', dot + 1) != std::string::npos) {
    throw ParseError("pairing expression needs exactly one '.'");
  }
  Divisor lhs = Divisor::parse(text.substr(0, dot));
  Divisor rhs = Divisor::parse(text.substr(dot + 1));
  return pairing(lhs, rhs);
}

// ---------------------------------------------------------------------------
// Divisors of the standard functions on the six-lines double cover
// ---------------------------------------------------------------------------

// Total transform of the i-th branch line.
inline Divisor line_pullback(int i) {
  Divisor d(CurveSymbol::line(i), 2);
  for (int j = 1; j <= 6; ++j) {
    if (j != i) d.add(CurveSymbol::double_point(std::min(i, j), std::max(i, j)), 1);
  }
  return d;
}

// Total transform of the line joining the double points (ij) and (km).
inline Divisor m_line_pullback(int i, int j, int k, int m) {
  Divisor d(CurveSymbol::m_conic(i, j, k, m), 1);
  d.add(CurveSymbol::double_point(std::min(i, j), std::max(i, j)), 1);
  d.add(CurveSymbol::double_point(std::min(k, m), std::max(k, m)), 1);
  return d;
}

// The affine coordinates put the double points (12) and (34) on the line at
// infinity, so the hyperplane class is the pullback of M[12|34].
inline Divisor hyperplane_class() { return m_line_pullback(1, 2, 3, 4); }

// Divisor of a named function: the six affine line equations, w, and the
// joining lines M[ij|km].
inline Divisor divisor_of_function(const std::string& name) {
  static const std::map<std::string, int> line_names = {
      {"u", 1}, {"u-1", 2}, {"v", 3}, {"v-1", 4}, {"au+bv-1", 5}, {"cu+dv-1", 6}};
  auto it = line_names.find(name);
  if (it != line_names.end()) return line_pullback(it->second) - hyperplane_class();
  if (name == "w") {
    // Half the total transform of the full branch sextic, minus three
    // hyperplanes: w vanishes once on each branch curve.
    Divisor half;
    for (int i = 1; i <= 6; ++i) half.add(CurveSymbol::line(i), 1);
    for (int i = 1; i <= 6; ++i) {
      for (int j = i + 1; j <= 6; ++j) half.add(CurveSymbol::double_point(i, j), 1);
    }
    return half - hyperplane_class() * 3;
  }
  if (name.size() >= 4 && name.compare(0, 2, "M[") == 0 && name.back() == ']') {
    std::size_t pos = 0;
    std::string body = "mu" + name.substr(1);
    CurveSymbol c = divisor_detail::parse_symbol(body, pos);
    if (pos != body.size()) throw ParseError("malformed M-line name: " + name);
    return m_line_pullback(c.i, c.j, c.k, c.m) - hyperplane_class();
  }
  throw UnknownFunction("no divisor table entry for '" + name + "'");
}

// Divisor of a product prod name_i ^ e_i.
inline Divisor divisor_of(const std::vector<std::pair<std::string, int>>& factors) {
  Divisor d;
  for (const auto& [name, e] : factors) d = d + divisor_of_function(name) * e;
  return d;
}

// ---------------------------------------------------------------------------
// Fiber recognition
// ---------------------------------------------------------------------------

// Decides whether an effective divisor is a full fiber of one of the
// standard types, by self-intersection and component bookkeeping.  The
// lattice cannot distinguish I2 from III or I3 from IV; the I-side names are
// returned.  std::nullopt means the divisor was not recognized.
inline std::optional<KodairaType> kodaira_type_of_divisor(const Divisor& d) {
  if (d.is_zero() || d.has_opaque()) return std::nullopt;
  std::vector<std::pair<CurveSymbol, long>> comps(d.terms().begin(), d.terms().end());
  for (const auto& [s, c] : comps) {
    if (c <= 0) return std::nullopt;
  }
  const std::size_t k = comps.size();

  // Every component must meet the divisor trivially.
  for (const auto& [s, c] : comps) {
    if (pairing(d, Divisor(s)) != 0) return std::nullopt;
  }
  if (pairing(d, d) != 0) return std::nullopt;

  // Connectivity of the dual graph.
  std::vector<bool> seen(k, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    std::size_t x = stack.back();
    stack.pop_back();
    for (std::size_t y = 0; y < k; ++y) {
      if (!seen[y] && pair_symbols(comps[x].first, comps[y].first) != 0) {
        seen[y] = true;
        stack.push_back(y);
      }
    }
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) return std::nullopt;

  std::map<long, std::size_t> mult_counts;
  for (const auto& [s, c] : comps) mult_counts[c]++;

  auto is_exactly = [&](std::initializer_list<std::pair<long, std::size_t>> want) {
    std::map<long, std::size_t> w;
    for (auto [m, n] : want) w[m] = n;
    return mult_counts == w;
  };

  if (k >= 2 && mult_counts.size() == 1 && mult_counts.count(1) == 1) {
    return KodairaType::make_In(static_cast<int>(k));
  }
  if (k >= 5 && mult_counts.size() == 2 && mult_counts[1] == 4 && mult_counts[2] == k - 4) {
    return KodairaType::make_InStar(static_cast<int>(k) - 5);
  }
  if (is_exactly({{1, 3}, {2, 3}, {3, 1}})) return KodairaType{KodairaType::Family::IVStar, 0};
  if (is_exactly({{1, 2}, {2, 3}, {3, 2}, {4, 1}})) {
    return KodairaType{KodairaType::Family::IIIStar, 0};
  }
  if (is_exactly({{1, 1}, {2, 2}, {3, 2}, {4, 2}, {5, 1}, {6, 1}})) {
    return KodairaType{KodairaType::Family::IIStar, 0};
  }
  return std::nullopt;
}

// Checks that lhs and rhs agree as divisors.
inline bool verify_divisor_identity(const Divisor& lhs, const Divisor& rhs) {
  return lhs == rhs;
}

}  // namespace k3fib
