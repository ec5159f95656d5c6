#pragma once

#include <cstdint>
#include <span>

#include <boost/math/distributions/chi_squared.hpp>

namespace pbe::stats {

struct ChiSquare {
  double statistic = 0;
  double degrees_of_freedom = 0;
  double p_value = 1;
};

/// Pearson goodness-of-fit against the uniform distribution over the bins.
inline ChiSquare chi_square_uniform(std::span<const std::uint64_t> counts) {
  ChiSquare r;
  if (counts.size() < 2) return r;
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  if (total == 0) return r;
  const double expected = static_cast<double>(total) / static_cast<double>(counts.size());
  for (auto c : counts) {
    const double d = static_cast<double>(c) - expected;
    r.statistic += d * d / expected;
  }
  r.degrees_of_freedom = static_cast<double>(counts.size() - 1);
  boost::math::chi_squared dist(r.degrees_of_freedom);
  r.p_value = boost::math::cdf(boost::math::complement(dist, r.statistic));
  return r;
}

/// Lehmer-code rank of a permutation of 0..n-1, in [0, n!).
inline std::uint64_t permutation_rank(std::span<const std::size_t> perm) {
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    std::uint64_t smaller_after = 0;
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[j] < perm[i]) ++smaller_after;
    rank = rank * (perm.size() - i) + smaller_after;
  }
  return rank;
}

inline std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace pbe::stats
