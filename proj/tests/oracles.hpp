#pragma once

// Test-only oracles. Each one reaches its answer by a route that does not go
// through the library code it is used to check.

#include <array>
#include <cmath>
#include <map>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "singcontent/singcontent.hpp"

namespace singcontent::oracle {

/// Lattice points on the closed segment [u, v], minus one, by walking a grid.
inline Integer lattice_length_by_count(const LatticePoint& u, const LatticePoint& v) {
  if (u == v) return 0;
  LatticePoint d = v - u;
  // t in [0, 1] with u + t d integral: t = k / N where N = max(|dx|, |dy|)
  Integer n = std::max(abs(d.x), abs(d.y));
  Integer points = 0;
  for (Integer k = 0; k <= n; ++k) {
    if ((k * d.x) % n == 0 && (k * d.y) % n == 0) ++points;
  }
  return points - 1;
}

/// |h(u)| for the primitive normal h of v - u.
inline Integer lattice_height_by_normal(const LatticePoint& u, const LatticePoint& v) {
  LatticePoint d = v - u;
  Integer g = gcd(d.x, d.y);
  DualVector h{d.y / g, -d.x / g};
  return abs(pairing(h, u));
}

/// Reads 1/r(1,q) off the lattice points of the half-open parallelepiped
/// {s u + t v : 0 <= s, t < 1}: the point with s = 1/r has t = q/r.
inline QuotientType type_by_parallelepiped(const LatticePoint& u, const LatticePoint& v) {
  Integer r = abs(det(u, v));
  if (r == 1) return QuotientType::smooth();
  Integer d = det(u, v);
  // p = (1/r) u + (q/r) v is integral  <=>  u + q v == 0 mod r
  for (Integer q = 0; q < r; ++q) {
    LatticePoint w = u + q * v;
    if (w.x % r == 0 && w.y % r == 0) return QuotientType::make(r, 1, q);
  }
  (void)d;
  throw std::logic_error("no generator found");
}

/// T-singularity closed form: r = n l^2 and the type is 1/r(1, n l c - 1)
/// with gcd(l, c) == 1, for some n, l, c.
inline bool matches_t_form(const QuotientType& t) {
  const Integer& r = t.r();
  for (Integer l = 1; l * l <= r; ++l) {
    if (r % (l * l) != 0) continue;
    Integer n = r / (l * l);
    for (Integer c = 1; c <= l; ++c) {
      if (gcd(l, c) != 1) continue;
      if (r == 1) return true;
      Integer w = mod(n * l * c - 1, r);
      if (gcd(w, r) != 1) continue;
      if (QuotientType::make(r, 1, w) == t) return true;
    }
  }
  return false;
}

/// b_1 - 1/(b_2 - 1/(... - 1/b_k)), exactly.
inline Rational evaluate_hj(const std::vector<Integer>& b) {
  Rational x(b.back());
  for (std::size_t i = b.size() - 1; i-- > 0;) x = Rational(b[i]) - 1 / x;
  return x;
}

// ---------------------------------------------------------------------------
// Dedekind sums by floating-point summation over roots of unity at 200 bits,
// followed by continued-fraction rational reconstruction.

using BigFloat = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<200, boost::multiprecision::digit_base_2>>;

struct FloatDedekind {
  std::vector<BigFloat> real;
  std::vector<BigFloat> imag;
};

inline FloatDedekind dedekind_float(long r, long a, long b) {
  const BigFloat two_pi = 2 * boost::math::constants::pi<BigFloat>();
  std::vector<BigFloat> c(r), s(r);
  for (long k = 0; k < r; ++k) {
    c[k] = cos(two_pi * k / r);
    s[k] = sin(two_pi * k / r);
  }
  FloatDedekind out{std::vector<BigFloat>(r, 0), std::vector<BigFloat>(r, 0)};
  for (long k = 0; k < r; ++k) {
    long ka = (k * a) % r, kb = (k * b) % r;
    if (ka == 0 || kb == 0) continue;  // eps^a == 1 or eps^b == 1
    // 1/((1 - eps^a)(1 - eps^b))
    BigFloat xr = (1 - c[ka]) * (1 - c[kb]) - s[ka] * s[kb];
    BigFloat xi = -(1 - c[ka]) * s[kb] - s[ka] * (1 - c[kb]);
    BigFloat norm = xr * xr + xi * xi;
    BigFloat ir = xr / norm, ii = -xi / norm;
    for (long m = 0; m < r; ++m) {
      long km = (k * m) % r;
      out.real[m] += (c[km] * ir - s[km] * ii) / r;
      out.imag[m] += (c[km] * ii + s[km] * ir) / r;
    }
  }
  return out;
}

/// Best rational approximation with denominator <= bound.
inline Rational reconstruct(const BigFloat& x, const Integer& bound) {
  Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  BigFloat y = x;
  for (int iter = 0; iter < 200; ++iter) {
    BigFloat fl = floor(y);
    Integer a = fl.convert_to<Integer>();
    Integer p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > bound) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    BigFloat frac = y - fl;
    if (abs(frac) < BigFloat("1e-50")) break;
    y = 1 / frac;
  }
  return Rational(p1, q1);
}

// ---------------------------------------------------------------------------

/// Number of monomials x^i y^j z^k with w0 i + w1 j + w2 k == d.
inline Integer monomials_of_degree(const std::array<long, 3>& w, long d) {
  Integer count = 0;
  for (long i = 0; i * w[0] <= d; ++i)
    for (long j = 0; i * w[0] + j * w[1] <= d; ++j)
      if ((d - i * w[0] - j * w[1]) % w[2] == 0) ++count;
  return count;
}

/// Markov triples (x <= y <= z, x^2 + y^2 + z^2 = 3xyz) within `moves`
/// Markov involutions of (1,1,1).
inline std::set<std::array<Integer, 3>> markov_triples(int moves) {
  auto sorted = [](std::array<Integer, 3> t) {
    std::sort(t.begin(), t.end());
    return t;
  };
  std::set<std::array<Integer, 3>> seen{{1, 1, 1}};
  std::vector<std::array<Integer, 3>> frontier{{1, 1, 1}};
  for (int d = 0; d < moves; ++d) {
    std::vector<std::array<Integer, 3>> next;
    for (const auto& t : frontier) {
      for (int i = 0; i < 3; ++i) {
        auto u = t;
        u[i] = 3 * t[(i + 1) % 3] * t[(i + 2) % 3] - t[i];
        u = sorted(u);
        if (seen.insert(u).second) next.push_back(u);
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace singcontent::oracle
