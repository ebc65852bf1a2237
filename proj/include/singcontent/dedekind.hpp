#pragma once

// Exact Dedekind sums
//
//   delta_m = (1/r) sum_{eps^r = 1, eps^a != 1, eps^b != 1} eps^m / ((1 - eps^a)(1 - eps^b))
//
// and the periodic Hilbert-series correction Q_sigma(t) built from them.
//
// Each factor is expanded with 1/(1 - eta) = -(1/r) sum_{k<r} k eta^k (valid
// for eta^r = 1, eta != 1), which turns delta_m into
//
//   delta_m = r^-3 sum_t C[t] S(m + t),   C[t] = sum_{a j + b k = t mod r} j k,
//
// where S(s) is the character sum of eps^s over the admissible roots. S is
// evaluated by inclusion-exclusion over the subgroups {eps^a = 1} and
// {eps^b = 1}: a subgroup of order g contributes g when g | s and 0 otherwise.
// No cyclotomic arithmetic is needed and the table costs O(r^2).

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "singcontent/cone.hpp"

namespace singcontent {

/// Which multiple of i indexes delta in the periodic correction:
/// delta_{kDedekindIndexSign * (a+b) * i}. Fixed by comparing against lattice
/// point counts on P(1,1,3); the opposite sign predicts 28/3 sections of -K.
inline constexpr int kDedekindIndexSign = -1;

/// Largest group order accepted by dedekind_sums (keeps accumulators in 128 bits).
inline constexpr std::int64_t kMaxDedekindOrder = std::int64_t{1} << 20;

struct DedekindTable {
  Integer r, a, b;
  std::vector<Rational> delta;  // delta_0 .. delta_{r-1}
};

namespace detail {

inline std::int64_t small_order(const Integer& r) {
  if (r <= 1) throw std::invalid_argument("dedekind_sums: need r > 1");
  if (r > kMaxDedekindOrder) throw std::domain_error("dedekind_sums: r too large");
  return r.convert_to<std::int64_t>();
}

inline Integer to_integer(__int128 v) {
  bool negative = v < 0;
  unsigned __int128 u = negative ? static_cast<unsigned __int128>(-(v + 1)) + 1
                                 : static_cast<unsigned __int128>(v);
  Integer hi = static_cast<std::uint64_t>(u >> 64);
  Integer out = (hi << 64) + static_cast<std::uint64_t>(u);
  return negative ? Integer(-out) : out;
}

}  // namespace detail

inline DedekindTable dedekind_sums(const Integer& r_in, const Integer& a_in, const Integer& b_in) {
  const std::int64_t r = detail::small_order(r_in);
  const std::int64_t a = mod(a_in, r_in).convert_to<std::int64_t>();
  const std::int64_t b = mod(b_in, r_in).convert_to<std::int64_t>();

  std::vector<__int128> weight(r, 0);
  for (std::int64_t j = 1; j < r; ++j)
    for (std::int64_t k = 1; k < r; ++k)
      weight[(a * j + b * k) % r] += static_cast<__int128>(j) * k;

  const std::int64_t ga = std::gcd(r, a), gb = std::gcd(r, b), gab = std::gcd(ga, gb);
  auto character_sum = [&](std::int64_t s) -> std::int64_t {
    auto part = [s](std::int64_t g) { return s % g == 0 ? g : 0; };
    return part(r) - part(ga) - part(gb) + part(gab);
  };

  DedekindTable out{r_in, mod(a_in, r_in), mod(b_in, r_in), {}};
  out.delta.reserve(r);
  const Integer r3 = Integer(r) * r * r;
  for (std::int64_t m = 0; m < r; ++m) {
    __int128 total = 0;
    for (std::int64_t t = 0; t < r; ++t)
      if (weight[t] != 0) total += weight[t] * character_sum((m + t) % r);
    out.delta.emplace_back(detail::to_integer(total), r3);
  }
  return out;
}

inline DedekindTable dedekind_sums(const QuotientType& sigma) {
  return dedekind_sums(sigma.r(), sigma.a(), sigma.b());
}

/// Q_sigma(t) = (sum_{i<r} c_i t^i) / (1 - t^r).
struct PeriodicCorrection {
  QuotientType sigma;
  std::vector<Rational> numerator;
  Integer period;

  const Rational& coefficient(std::size_t m) const {
    return numerator[m % numerator.size()];
  }
};

/// c_i = delta_{sign (a+b) i mod r} - delta_0. Only the production sign
/// kDedekindIndexSign is meaningful; the parameter exists so tests can show
/// the other choice is wrong.
inline PeriodicCorrection periodic_correction(const QuotientType& sigma,
                                              int sign = kDedekindIndexSign) {
  DedekindTable table = dedekind_sums(sigma);
  const std::int64_t r = sigma.r().convert_to<std::int64_t>();
  const std::int64_t s =
      mod(Integer(sign) * (sigma.a() + sigma.b()), sigma.r()).convert_to<std::int64_t>();
  PeriodicCorrection out{sigma, {}, sigma.r()};
  out.numerator.reserve(r);
  for (std::int64_t i = 0; i < r; ++i)
    out.numerator.push_back(table.delta[(s * i) % r] - table.delta[0]);
  return out;
}

}  // namespace singcontent
