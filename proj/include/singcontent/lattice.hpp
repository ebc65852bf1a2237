#pragma once

// Exact two-dimensional lattice geometry: points of N, dual vectors in M,
// unimodular maps, and the primitive-segment quantities (lattice length and
// lattice height) that everything else is built on.

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <tuple>

#include <boost/multiprecision/cpp_int.hpp>

namespace singcontent {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// ---------------------------------------------------------------------------
// Integer helpers

inline Integer abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

/// Non-negative gcd; gcd(0, 0) == 0.
inline Integer gcd(const Integer& a, const Integer& b) {
  Integer x = abs(a), y = abs(b);
  while (y != 0) {
    Integer t = x % y;
    x = std::move(y);
    y = std::move(t);
  }
  return x;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a / gcd(a, b) * b);
}

struct ExtendedGcd {
  Integer g, s, t;  // s*a + t*b == g >= 0
};

inline ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (r != 0) {
    Integer q = old_r / r;
    std::tie(old_r, r) = std::make_tuple(r, Integer(old_r - q * r));
    std::tie(old_s, s) = std::make_tuple(s, Integer(old_s - q * s));
    std::tie(old_t, t) = std::make_tuple(t, Integer(old_t - q * t));
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

/// Floor division (cpp_int division truncates toward zero).
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

/// Least non-negative residue.
inline Integer mod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += abs(m);
  return r;
}

/// Inverse of a modulo m; throws if gcd(a, m) != 1.
inline Integer inverse_mod(const Integer& a, const Integer& m) {
  if (m == 1) return 0;
  auto e = extended_gcd(mod(a, m), m);
  if (e.g != 1) throw std::domain_error("inverse_mod: arguments not coprime");
  return mod(e.s, m);
}

// ---------------------------------------------------------------------------
// Rational helpers

/// num/den for any nonzero den. Boost's two-argument constructor rejects a
/// negative denominator, so the sign is moved to the numerator first.
inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  return den < 0 ? Rational(Integer(-num), Integer(-den)) : Rational(num, den);
}

inline Integer floor(const Rational& q) {
  return floor_div(numerator(q), denominator(q));
}

inline Integer ceil(const Rational& q) {
  return ceil_div(numerator(q), denominator(q));
}

inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

/// "p/q" in lowest terms, or "p" when the denominator is 1.
inline std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

/// Parses "p", "-p" or "p/q".
inline Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    Integer den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return make_rational(Integer(text.substr(0, slash)), den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
}

// ---------------------------------------------------------------------------
// Lattice points and dual vectors

struct LatticePoint {
  Integer x, y;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend bool operator<(const LatticePoint& a, const LatticePoint& b) {
    return std::tie(a.x, a.y) < std::tie(b.x, b.y);
  }
  friend LatticePoint operator+(const LatticePoint& a, const LatticePoint& b) {
    return {a.x + b.x, a.y + b.y};
  }
  friend LatticePoint operator-(const LatticePoint& a, const LatticePoint& b) {
    return {a.x - b.x, a.y - b.y};
  }
  friend LatticePoint operator-(const LatticePoint& a) { return {-a.x, -a.y}; }
  friend LatticePoint operator*(const Integer& k, const LatticePoint& a) {
    return {k * a.x, k * a.y};
  }
  friend std::ostream& operator<<(std::ostream& os, const LatticePoint& p) {
    return os << '(' << p.x << ", " << p.y << ')';
  }
};

/// An element of M = Hom(N, Z).
struct DualVector {
  Integer x, y;

  friend bool operator==(const DualVector&, const DualVector&) = default;
  friend bool operator<(const DualVector& a, const DualVector& b) {
    return std::tie(a.x, a.y) < std::tie(b.x, b.y);
  }
  friend DualVector operator-(const DualVector& h) { return {-h.x, -h.y}; }
  friend std::ostream& operator<<(std::ostream& os, const DualVector& h) {
    return os << '<' << h.x << ", " << h.y << '>';
  }
};

inline Integer pairing(const DualVector& h, const LatticePoint& v) {
  return h.x * v.x + h.y * v.y;
}

inline Integer det(const LatticePoint& u, const LatticePoint& v) {
  return u.x * v.y - u.y * v.x;
}

inline bool is_primitive(const LatticePoint& v) {
  return gcd(v.x, v.y) == 1;
}

inline bool is_primitive(const DualVector& h) { return gcd(h.x, h.y) == 1; }

/// Primitive vector in the direction of a nonzero v.
inline LatticePoint primitive_direction(const LatticePoint& v) {
  Integer g = gcd(v.x, v.y);
  if (g == 0) throw std::invalid_argument("primitive_direction: zero vector");
  return {v.x / g, v.y / g};
}

/// L such that v - u = L * p with p primitive; 0 when u == v.
inline Integer lattice_length(const LatticePoint& u, const LatticePoint& v) {
  return gcd(v.x - u.x, v.y - u.y);
}

/// Lattice height of the segment uv above the origin, computed as
/// |det(u, v)| / lattice_length(u, v).
inline Integer lattice_height(const LatticePoint& u, const LatticePoint& v) {
  Integer d = det(u, v);
  if (d == 0)
    throw std::invalid_argument("lattice_height: u and v are linearly dependent");
  return abs(d) / lattice_length(u, v);
}

// ---------------------------------------------------------------------------
// Unimodular maps (linear, no translation)

class UnimodularMap {
 public:
  UnimodularMap() = default;  // identity
  UnimodularMap(Integer a11, Integer a12, Integer a21, Integer a22)
      : a11_(std::move(a11)), a12_(std::move(a12)), a21_(std::move(a21)),
        a22_(std::move(a22)) {
    Integer d = determinant();
    if (d != 1 && d != -1)
      throw std::invalid_argument("UnimodularMap: determinant must be +1 or -1");
  }

  static UnimodularMap identity() { return {}; }

  const Integer& a11() const { return a11_; }
  const Integer& a12() const { return a12_; }
  const Integer& a21() const { return a21_; }
  const Integer& a22() const { return a22_; }

  Integer determinant() const { return a11_ * a22_ - a12_ * a21_; }

  UnimodularMap inverse() const {
    Integer d = determinant();
    return {d * a22_, -d * a12_, -d * a21_, d * a11_};
  }

  /// (*this) o other
  UnimodularMap compose(const UnimodularMap& o) const {
    return {a11_ * o.a11_ + a12_ * o.a21_, a11_ * o.a12_ + a12_ * o.a22_,
            a21_ * o.a11_ + a22_ * o.a21_, a21_ * o.a12_ + a22_ * o.a22_};
  }

  friend bool operator==(const UnimodularMap&, const UnimodularMap&) = default;

 private:
  Integer a11_ = 1, a12_ = 0, a21_ = 0, a22_ = 1;
};

inline LatticePoint apply_map(const UnimodularMap& m, const LatticePoint& v) {
  return {m.a11() * v.x + m.a12() * v.y, m.a21() * v.x + m.a22() * v.y};
}

/// A unimodular map sending the primitive vector u to (0, 1).
inline UnimodularMap map_to_vertical(const LatticePoint& u) {
  if (!is_primitive(u))
    throw std::invalid_argument("map_to_vertical: vector is not primitive");
  auto e = extended_gcd(u.x, u.y);  // s*x + t*y == 1
  return {-u.y, u.x, e.s, e.t};
}

}  // namespace singcontent
