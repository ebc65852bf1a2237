#pragma once

// Hirzebruch-Jung continued fractions and the numerical data of the minimal
// resolution of 1/r(1,q): self-intersections -b_i, the alpha/beta sequences
// and the discrepancies d_i = -1 + (alpha_i + beta_i)/r.

#include <stdexcept>
#include <vector>

#include "singcontent/cone.hpp"

namespace singcontent {

/// r/q = b_1 - 1/(b_2 - 1/(... - 1/b_k)), every b_i >= 2.
inline std::vector<Integer> hj_expand(Integer r, Integer q) {
  if (q <= 0 || q >= r) throw std::invalid_argument("hj_expand: need 0 < q < r");
  if (gcd(r, q) != 1) throw std::invalid_argument("hj_expand: gcd(r, q) must be 1");
  std::vector<Integer> b;
  while (q > 0) {
    Integer c = ceil_div(r, q);
    b.push_back(c);
    Integer next = c * q - r;
    r = std::move(q);
    q = std::move(next);
  }
  return b;
}

struct HJExpansion {
  QuotientType sigma;
  std::vector<Integer> b;
  std::vector<Integer> alpha;
  std::vector<Integer> beta;
  std::vector<Rational> discrepancy;

  std::size_t length() const { return b.size(); }
};

inline HJExpansion hj_data(const QuotientType& sigma) {
  if (sigma.is_smooth()) throw std::invalid_argument("hj_data: smooth point has no resolution");
  const Integer& r = sigma.r();
  HJExpansion out{sigma, hj_expand(r, sigma.q()), {}, {}, {}};
  const auto k = out.b.size();

  // alpha_{i+1} = b_i alpha_i - alpha_{i-1}, alpha_0 = 0, alpha_1 = 1
  out.alpha.resize(k);
  Integer prev = 0, cur = 1;
  for (std::size_t i = 0; i < k; ++i) {
    out.alpha[i] = cur;
    Integer next = out.b[i] * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  // beta_{i-1} = b_i beta_i - beta_{i+1}, beta_{k+1} = 0, beta_k = 1
  out.beta.resize(k);
  prev = 0;
  cur = 1;
  for (std::size_t i = k; i-- > 0;) {
    out.beta[i] = cur;
    Integer next = out.b[i] * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  out.discrepancy.reserve(k);
  for (std::size_t i = 0; i < k; ++i)
    out.discrepancy.push_back(Rational(-1) + make_rational(out.alpha[i] + out.beta[i], r));
  return out;
}

/// A(sigma) = k + 1 - sum d_i^2 b_i + 2 sum d_i d_{i+1}; the amount a basket
/// element subtracts from 12 - n in the degree formula.
inline Rational a_correction(const QuotientType& sigma) {
  HJExpansion hj = hj_data(sigma);
  const auto k = hj.length();
  Rational a(static_cast<long long>(k + 1));
  for (std::size_t i = 0; i < k; ++i)
    a -= hj.discrepancy[i] * hj.discrepancy[i] * Rational(hj.b[i]);
  for (std::size_t i = 0; i + 1 < k; ++i)
    a += 2 * hj.discrepancy[i] * hj.discrepancy[i + 1];
  return a;
}

}  // namespace singcontent
