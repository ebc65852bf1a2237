#pragma once

// Fano polygons and the invariants of their spanning fans: singularity
// content, anticanonical degree, Hilbert series of -K, Picard rank, and
// recognition of (fake) weighted projective planes.
//
// Several quantities come in two independent routes so they can be checked
// against each other:
//   degree          : 12 - n - sum A(sigma)       vs  2 * area(dual polygon)
//   hilbert_series  : leading term + Q_sigma      vs  lattice points of m * dual

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "singcontent/cone.hpp"
#include "singcontent/dedekind.hpp"
#include "singcontent/hirzebruch_jung.hpp"

namespace singcontent {

enum class PolygonErrorKind { NotConvex, OriginNotInterior, NonPrimitiveVertex };

inline const char* to_string(PolygonErrorKind k) {
  switch (k) {
    case PolygonErrorKind::NotConvex: return "NotConvex";
    case PolygonErrorKind::OriginNotInterior: return "OriginNotInterior";
    case PolygonErrorKind::NonPrimitiveVertex: return "NonPrimitiveVertex";
  }
  return "?";
}

class PolygonError : public std::invalid_argument {
 public:
  PolygonError(PolygonErrorKind kind, const std::string& detail)
      : std::invalid_argument(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}
  PolygonErrorKind kind() const { return kind_; }

 private:
  PolygonErrorKind kind_;
};

/// Strict convex hull, counterclockwise, collinear points dropped, starting
/// from the lexicographically smallest point.
inline std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  auto cross = [](const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
    return det(a - o, b - o);
  };
  std::vector<LatticePoint> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

class FanoPolygon {
 public:
  /// Takes the convex hull of the points (any order, redundant points
  /// allowed) and checks the Fano conditions.
  static FanoPolygon validate(const std::vector<LatticePoint>& points) {
    std::vector<LatticePoint> hull = convex_hull(points);
    if (hull.size() < 3)
      throw PolygonError(PolygonErrorKind::NotConvex, "points do not span a two-dimensional polygon");
    for (std::size_t i = 0; i < hull.size(); ++i) {
      if (det(hull[i], hull[(i + 1) % hull.size()]) <= 0)
        throw PolygonError(PolygonErrorKind::OriginNotInterior,
                           "origin is not in the strict interior");
    }
    for (const auto& v : hull) {
      if (!is_primitive(v)) {
        std::ostringstream os;
        os << "vertex " << v << " is not primitive";
        throw PolygonError(PolygonErrorKind::NonPrimitiveVertex, os.str());
      }
    }
    return FanoPolygon(std::move(hull));
  }

  /// Counterclockwise vertex list.
  const std::vector<LatticePoint>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const LatticePoint& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }

  friend bool operator==(const FanoPolygon&, const FanoPolygon&) = default;

 private:
  explicit FanoPolygon(std::vector<LatticePoint> v) : vertices_(std::move(v)) {}
  std::vector<LatticePoint> vertices_;
};

/// Applies m to every vertex; the image is again Fano.
inline FanoPolygon transform(const FanoPolygon& p, const UnimodularMap& m) {
  std::vector<LatticePoint> image;
  image.reserve(p.size());
  for (const auto& v : p.vertices()) image.push_back(apply_map(m, v));
  return FanoPolygon::validate(image);
}

/// Cone i is spanned by vertex i and vertex i+1 (counterclockwise).
inline std::vector<Cone2> edge_cones(const FanoPolygon& p) {
  std::vector<Cone2> cones;
  cones.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) cones.emplace_back(p.vertex(i), p.vertex(i + 1));
  return cones;
}

// ---------------------------------------------------------------------------
// Singularity content

struct PolygonSingularityContent {
  Integer n;
  std::vector<QuotientType> basket;  // cyclic order, empty residues omitted
};

enum class BasketComparison { Rotation, Multiset };

inline bool same_basket(const std::vector<QuotientType>& x, const std::vector<QuotientType>& y,
                        BasketComparison mode = BasketComparison::Rotation) {
  if (x.size() != y.size()) return false;
  if (x.empty()) return true;
  if (mode == BasketComparison::Multiset) {
    auto sx = x, sy = y;
    std::sort(sx.begin(), sx.end());
    std::sort(sy.begin(), sy.end());
    return sx == sy;
  }
  const std::size_t n = x.size();
  for (std::size_t shift = 0; shift < n; ++shift) {
    std::size_t i = 0;
    while (i < n && x[i] == y[(i + shift) % n]) ++i;
    if (i == n) return true;
  }
  return false;
}

inline bool equivalent(const PolygonSingularityContent& x, const PolygonSingularityContent& y,
                       BasketComparison mode = BasketComparison::Rotation) {
  return x.n == y.n && same_basket(x.basket, y.basket, mode);
}

inline std::string to_string(const PolygonSingularityContent& c) {
  std::string s = "(" + c.n.str() + ", {";
  for (std::size_t i = 0; i < c.basket.size(); ++i) {
    if (i) s += ", ";
    s += to_string(c.basket[i]);
  }
  return s + "})";
}

inline PolygonSingularityContent singularity_content(const FanoPolygon& p) {
  PolygonSingularityContent out{0, {}};
  for (const auto& cone : edge_cones(p)) {
    ConeSingularityContent c = singularity_content(cone_to_type(cone));
    out.n += c.n;
    if (c.residue) out.basket.push_back(*c.residue);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Degree

/// K^2 = 12 - n - sum_{sigma in basket} A(sigma).
inline Rational degree(const FanoPolygon& p) {
  PolygonSingularityContent sc = singularity_content(p);
  Rational k2 = Rational(12 - sc.n);
  for (const auto& sigma : sc.basket) k2 -= a_correction(sigma);
  return k2;
}

struct RationalPoint {
  Rational x, y;
  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

struct RationalPolygon {
  std::vector<RationalPoint> vertices;  // counterclockwise
};

/// Polar dual {u : u(v) >= -1 for all v in P}; vertex i is dual to edge i.
inline RationalPolygon dual(const FanoPolygon& p) {
  RationalPolygon out;
  out.vertices.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const LatticePoint& u = p.vertex(i);
    const LatticePoint& v = p.vertex(i + 1);
    Integer d = det(u, v);
    // x*u.x + y*u.y = -1, x*v.x + y*v.y = -1
    out.vertices.push_back({make_rational(u.y - v.y, d), make_rational(v.x - u.x, d)});
  }
  return out;
}

inline Rational area(const RationalPolygon& q) {
  Rational twice = 0;
  const auto& v = q.vertices;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % v.size()];
    twice += a.x * b.y - a.y * b.x;
  }
  if (twice < 0) twice = -twice;
  return twice / 2;
}

/// Anticanonical degree as twice the area of the dual polygon.
inline Rational degree_oracle(const FanoPolygon& p) { return 2 * area(dual(p)); }

// ---------------------------------------------------------------------------
// Hilbert series

namespace detail {

// Lattice points u of m * dual(P), i.e. <u, v> >= -m for every vertex v,
// counted column by column over x in [xmin, xmax].
template <class Int>
Integer count_dilation(const std::vector<std::array<Int, 2>>& verts, Int m, Int xmin, Int xmax) {
  auto fdiv = [](Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
  };
  auto cdiv = [](Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
    return q;
  };
  Integer total = 0;
  for (Int x = xmin; x <= xmax; ++x) {
    bool empty = false, have_lo = false, have_hi = false;
    Int lo = 0, hi = 0;
    for (const auto& v : verts) {
      Int rhs = -m - v[0] * x;  // v.y * y >= rhs
      if (v[1] > 0) {
        Int c = cdiv(rhs, v[1]);
        if (!have_lo || c > lo) lo = c;
        have_lo = true;
      } else if (v[1] < 0) {
        Int f = fdiv(rhs, v[1]);
        if (!have_hi || f < hi) hi = f;
        have_hi = true;
      } else if (rhs > 0) {
        empty = true;
      }
    }
    if (empty || !have_lo || !have_hi || hi < lo) continue;
    total += Integer(hi - lo + 1);
  }
  return total;
}

}  // namespace detail

/// Number of lattice points in m * dual(P) for m = 0 .. terms-1; the m-th
/// coefficient of Hilb(X, -K).
inline std::vector<Integer> ehrhart_hilbert_oracle(const FanoPolygon& p, std::size_t terms) {
  RationalPolygon d = dual(p);
  Rational min_x = d.vertices.front().x, max_x = min_x;
  for (const auto& q : d.vertices) {
    min_x = std::min(min_x, q.x);
    max_x = std::max(max_x, q.x);
  }
  Integer max_coord = 0;
  for (const auto& v : p.vertices()) max_coord = std::max({max_coord, abs(v.x), abs(v.y)});

  std::vector<Integer> out;
  out.reserve(terms);
  for (std::size_t m = 0; m < terms; ++m) {
    Integer xmin = floor(Rational(m) * min_x), xmax = ceil(Rational(m) * max_x);
    Integer bound = (abs(xmin) + abs(xmax) + m + 1) * (max_coord + 1);
    if (bound < (Integer(1) << 60)) {
      std::vector<std::array<std::int64_t, 2>> verts;
      for (const auto& v : p.vertices())
        verts.push_back({v.x.convert_to<std::int64_t>(), v.y.convert_to<std::int64_t>()});
      out.push_back(detail::count_dilation<std::int64_t>(
          verts, static_cast<std::int64_t>(m), xmin.convert_to<std::int64_t>(),
          xmax.convert_to<std::int64_t>()));
    } else {
      std::vector<std::array<Integer, 2>> verts;
      for (const auto& v : p.vertices()) verts.push_back({v.x, v.y});
      out.push_back(detail::count_dilation<Integer>(verts, Integer(m), xmin, xmax));
    }
  }
  return out;
}

struct HilbertSeries {
  std::array<Rational, 3> leading_numerator;  // 1, K^2 - 2, 1 over (1-t)^3
  std::vector<PeriodicCorrection> corrections;
  std::vector<Integer> expanded;
};

/// Hilb(X, -K) = (1 + (K^2-2) t + t^2)/(1-t)^3 + sum_{sigma in basket} Q_sigma(t).
inline HilbertSeries hilbert_series(const FanoPolygon& p, std::size_t terms) {
  HilbertSeries out;
  Rational k2 = degree(p);
  out.leading_numerator = {Rational(1), k2 - 2, Rational(1)};
  for (const auto& sigma : singularity_content(p).basket)
    out.corrections.push_back(periodic_correction(sigma));

  out.expanded.reserve(terms);
  for (std::size_t m = 0; m < terms; ++m) {
    // coefficient of t^j in 1/(1-t)^3 is binom(j+2, 2)
    auto tri = [](std::size_t j) { return Rational(Integer(j + 2) * (j + 1) / 2); };
    Rational c = out.leading_numerator[0] * tri(m);
    if (m >= 1) c += out.leading_numerator[1] * tri(m - 1);
    if (m >= 2) c += out.leading_numerator[2] * tri(m - 2);
    for (const auto& q : out.corrections) c += q.coefficient(m);
    if (!is_integral(c) || c < 0)
      throw std::logic_error("hilbert_series: coefficient " + std::to_string(m) + " is " +
                             to_string(c) + ", not a non-negative integer");
    out.expanded.push_back(numerator(c));
  }
  return out;
}

/// Enough terms to cover every correction period twice.
inline std::size_t default_hilbert_terms(const PolygonSingularityContent& sc) {
  Integer longest = 0;
  for (const auto& s : sc.basket) longest = std::max(longest, s.r());
  return std::max<std::size_t>(20, (2 * longest + 3).convert_to<std::size_t>());
}

// ---------------------------------------------------------------------------
// Picard rank, weighted projective planes, Noether

inline std::size_t picard_rank(const FanoPolygon& p) { return p.size() - 2; }

/// n + |B| - 2, an upper bound for the Picard rank of every polygon in the
/// mutation class.
inline Integer picard_rank_bound(const PolygonSingularityContent& sc) {
  return sc.n + Integer(sc.basket.size()) - 2;
}

struct WpsWeights {
  std::array<Integer, 3> weights;  // ascending
  Integer index;                   // 1 for a genuine weighted projective plane

  friend bool operator==(const WpsWeights&, const WpsWeights&) = default;
};

/// For a triangle: coprime weights with sum lambda_i v_i = 0 and the index of
/// the sublattice spanned by the vertices.
inline std::optional<WpsWeights> wps_weights(const FanoPolygon& p) {
  if (p.size() != 3) return std::nullopt;
  const auto& v = p.vertices();
  std::array<Integer, 3> minors = {abs(det(v[1], v[2])), abs(det(v[2], v[0])),
                                   abs(det(v[0], v[1]))};
  Integer g = gcd(gcd(minors[0], minors[1]), minors[2]);
  std::array<Integer, 3> w = {minors[0] / g, minors[1] / g, minors[2] / g};
  std::sort(w.begin(), w.end());
  return WpsWeights{w, g};
}

/// The triangle of P(l1, l2, l3): the images of e_1, e_2, e_3 under a basis
/// of the orthogonal complement of (l1, l2, l3) in Z^3.
inline FanoPolygon wps_polygon(const std::array<Integer, 3>& weights) {
  for (const auto& w : weights)
    if (w <= 0) throw std::invalid_argument("wps_polygon: weights must be positive");
  if (gcd(gcd(weights[0], weights[1]), weights[2]) != 1)
    throw std::invalid_argument("wps_polygon: weights must have gcd 1");

  // Column operations U with weights^T U = (1, 0, 0); columns 1 and 2 of U
  // span the kernel.
  std::array<std::array<Integer, 3>, 3> u{};
  for (int i = 0; i < 3; ++i) u[i][i] = 1;
  std::array<Integer, 3> row = weights;
  for (int j = 1; j < 3; ++j) {
    auto e = extended_gcd(row[0], row[j]);
    Integer p = row[0] / e.g, q = row[j] / e.g;
    for (int i = 0; i < 3; ++i) {
      Integer c0 = u[i][0], cj = u[i][j];
      u[i][0] = e.s * c0 + e.t * cj;
      u[i][j] = -q * c0 + p * cj;
    }
    row[0] = e.g;
    row[j] = 0;
  }
  std::vector<LatticePoint> verts;
  for (int i = 0; i < 3; ++i) verts.push_back({u[i][1], u[i][2]});
  return FanoPolygon::validate(verts);
}

struct NoetherTerms {
  Rational degree;
  Integer picard_rank;
  Integer milnor_sum;

  Rational total() const { return degree + Rational(picard_rank + milnor_sum); }
};

/// K^2, rho and the Milnor sum for a polygon whose cones are all
/// T-singularities (empty basket).
inline NoetherTerms noether_terms(const FanoPolygon& p) {
  NoetherTerms t{degree(p), Integer(picard_rank(p)), 0};
  for (const auto& cone : edge_cones(p)) {
    QuotientType sigma = cone_to_type(cone);
    if (!is_t_singularity(sigma))
      throw std::invalid_argument("noether_check: basket is not empty (" + to_string(sigma) +
                                  " has a residue)");
    t.milnor_sum += milnor_number(sigma);
  }
  return t;
}

/// K^2 + rho + sum mu == 10.
inline bool noether_check(const FanoPolygon& p) { return noether_terms(p).total() == 10; }

}  // namespace singcontent
