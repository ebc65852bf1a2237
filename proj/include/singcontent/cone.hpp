#pragma once

// Cyclic quotient surface singularities 1/r(a,b), two-dimensional cones,
// width / local index, the crepant decomposition into elementary
// T-singularities plus a residue, and the singularity content of a cone.

#include <cctype>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "singcontent/lattice.hpp"

namespace singcontent {

/// Thrown by the text parsers; carries the offending character offset.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A cyclic quotient singularity, stored as the canonical 1/r(1,q):
/// the weights are scaled so the first is 1, then q is replaced by
/// min(q, q^-1 mod r). Smooth points are 1/1(1,0).
class QuotientType {
 public:
  /// Canonicalizes 1/r(a,b). Requires r > 0 and gcd(r,a) == gcd(r,b) == 1.
  static QuotientType make(const Integer& r, const Integer& a, const Integer& b) {
    if (r <= 0) throw std::invalid_argument("quotient type: r must be positive");
    if (r == 1) return QuotientType(1, 0);
    if (gcd(r, a) != 1 || gcd(r, b) != 1)
      throw std::invalid_argument("quotient type 1/" + r.str() + "(" + a.str() + "," +
                                  b.str() + ") is not isolated: gcd(r,a) and gcd(r,b) must be 1");
    Integer q = mod(b * inverse_mod(a, r), r);
    Integer qi = inverse_mod(q, r);
    return QuotientType(r, q < qi ? q : qi);
  }

  static QuotientType smooth() { return QuotientType(1, 0); }

  const Integer& r() const { return r_; }
  Integer a() const { return 1; }
  const Integer& b() const { return q_; }
  /// q of 1/r(1,q); the weight a of the form 1/r(1,a-1) is q + 1.
  const Integer& q() const { return q_; }

  bool is_smooth() const { return r_ == 1; }

  friend bool operator==(const QuotientType&, const QuotientType&) = default;
  friend bool operator<(const QuotientType& x, const QuotientType& y) {
    return std::tie(x.r_, x.q_) < std::tie(y.r_, y.q_);
  }

 private:
  QuotientType(Integer r, Integer q) : r_(std::move(r)), q_(std::move(q)) {}
  Integer r_;
  Integer q_;
};

inline std::string to_string(const QuotientType& t) {
  return "1/" + t.r().str() + "(" + t.a().str() + "," + t.b().str() + ")";
}

inline std::ostream& operator<<(std::ostream& os, const QuotientType& t) {
  return os << to_string(t);
}

/// Parses the text form `1/r(a,b)`.
inline QuotientType parse_quotient_type(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  auto expect = [&](char c) {
    if (pos >= text.size() || text[pos] != c)
      throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
  };
  auto integer = [&](bool allow_sign) {
    std::size_t start = pos;
    if (allow_sign && pos < text.size() && text[pos] == '-') ++pos;
    std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) throw ParseError("expected an integer", start);
    return Integer(std::string(text.substr(start, pos - start)));
  };
  expect('1');
  expect('/');
  std::size_t r_pos = pos;
  Integer r = integer(false);
  expect('(');
  Integer a = integer(true);
  expect(',');
  while (pos < text.size() && text[pos] == ' ') ++pos;
  Integer b = integer(true);
  expect(')');
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos != text.size()) throw ParseError("trailing characters", pos);
  if (r == 0) throw ParseError("group order r must be positive", r_pos);
  return QuotientType::make(r, a, b);
}

/// A strictly convex two-dimensional cone with primitive ray generators.
/// The ordering (u, v) matters only for decompose(), which walks from u.
class Cone2 {
 public:
  Cone2(LatticePoint u, LatticePoint v) : u_(std::move(u)), v_(std::move(v)) {
    if (!is_primitive(u_) || !is_primitive(v_))
      throw std::invalid_argument("Cone2: ray generators must be primitive");
    if (det(u_, v_) == 0) throw std::invalid_argument("Cone2: generators are collinear");
  }
  const LatticePoint& u() const { return u_; }
  const LatticePoint& v() const { return v_; }
  Integer order() const { return abs(det(u_, v_)); }

  friend bool operator==(const Cone2&, const Cone2&) = default;

 private:
  LatticePoint u_, v_;
};

struct ConeProfile {
  Integer width;        // w
  Integer local_index;  // l
  Integer n;            // floor(w / l)
  Integer rho;          // w mod l

  friend bool operator==(const ConeProfile&, const ConeProfile&) = default;
};

/// Empty residue is std::nullopt.
using Residue = std::optional<QuotientType>;

inline std::string to_string(const Residue& r) {
  return r ? to_string(*r) : std::string("∅");
}

struct ConeSingularityContent {
  Integer n;
  Residue residue;

  friend bool operator==(const ConeSingularityContent&, const ConeSingularityContent&) = default;
};

inline std::string to_string(const ConeSingularityContent& c) {
  return "(" + c.n.str() + ", " + to_string(c.residue) + ")";
}

// ---------------------------------------------------------------------------

/// Type of the cone: send u to (0,1); v lands on (+-r, y) and the cone is
/// 1/r(1, -y mod r).
inline QuotientType cone_to_type(const Cone2& c) {
  LatticePoint v = apply_map(map_to_vertical(c.u()), c.v());
  Integer r = abs(v.x);
  if (r == 1) return QuotientType::smooth();
  return QuotientType::make(r, 1, mod(-v.y, r));
}

/// Standard position u = (0,1), v = (r, -q) for 1/r(1,q).
inline Cone2 type_to_cone(const QuotientType& t) {
  return Cone2({0, 1}, {t.r(), -t.q()});
}

inline ConeProfile profile(const QuotientType& t) {
  Integer a = t.q() + 1;  // 1/r(1, a-1): a + b == a
  Integer w = gcd(t.r(), a);
  Integer l = t.r() / w;
  return {w, l, w / l, w % l};
}

inline Residue residue(const QuotientType& t) {
  ConeProfile p = profile(t);
  if (p.rho == 0) return std::nullopt;
  Integer a = t.q() + 1;
  if ((p.rho * a) % p.width != 0)
    throw std::logic_error("residue: rho*a/w is not integral for " + to_string(t));
  return QuotientType::make(p.rho * p.local_index, 1, p.rho * a / p.width - 1);
}

inline ConeSingularityContent singularity_content(const QuotientType& t) {
  return {profile(t).n, residue(t)};
}

inline bool is_t_singularity(const QuotientType& t) { return profile(t).rho == 0; }

/// n - 1 for a T-singularity 1/(n l^2)(1, n l c - 1).
inline Integer milnor_number(const QuotientType& t) {
  ConeProfile p = profile(t);
  if (p.rho != 0)
    throw std::invalid_argument("milnor_number: " + to_string(t) + " is not a T-singularity");
  return p.n - 1;
}

struct Subcone {
  Cone2 cone;
  QuotientType type;
};

/// Splits c along the segment uv into subcones of width l, except the
/// residual slot m which has width rho. When rho == 0 there is no residual
/// slot and m is ignored.
inline std::vector<Subcone> decompose(const Cone2& c, const Integer& m) {
  Integer w = lattice_length(c.u(), c.v());
  Integer l = lattice_height(c.u(), c.v());
  Integer n = w / l, rho = w % l;
  if (m < 0 || (rho != 0 && m > n))
    throw std::out_of_range("decompose: residual slot " + m.str() + " outside [0, " +
                            n.str() + "]");
  LatticePoint step = primitive_direction(c.v() - c.u());

  std::vector<Subcone> out;
  LatticePoint cur = c.u();
  Integer pieces = rho == 0 ? n : n + 1;
  for (Integer i = 0; i < pieces; ++i) {
    Integer len = (rho != 0 && i == m) ? rho : l;
    LatticePoint next = cur + len * step;
    if (!is_primitive(next))
      throw std::logic_error("decompose: crepant point is not primitive");
    Cone2 sub(cur, next);
    out.push_back({sub, cone_to_type(sub)});
    cur = std::move(next);
  }
  if (cur != c.v()) throw std::logic_error("decompose: walk did not end at v");
  return out;
}

}  // namespace singcontent
