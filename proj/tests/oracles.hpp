#pragma once

// Test-only reference computations. None of these call into the library's
// bound, construction or solver code; they exist to check it.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "zdt/games.hpp"
#include "zdt/verify.hpp"
#include "zdt/zd_core.hpp"

namespace zdt::oracle {

struct Interval {
  double lower;
  double upper;
};

// Baseline interval for the threshold PGG, assembled from the per-regime
// expressions (z < m-1, z = m-1, z >= m) obtained by substituting the payoff
// formulas into the baseline inequalities by hand.
inline Interval pgg_baseline_interval(int n, int m, double r, double c, double s) {
  const double k = 1.0 / ((n - 1) * (1.0 - s));
  const double lower = std::max(r * c * (n - 1) / n - c / (1.0 - s), 0.0);
  double upper = r * c - c;
  upper = std::min(upper, -c + (n - m + 1) * c * k);                // z = m-2 (exists since m >= 2)
  upper = std::min(upper, r * c * m / n - c + (n - m) * c * k);      // z = m-1
  if (m <= n - 2) upper = std::min(upper, r * c * (m + 1) / n - c + (n - m - 1) * c * k);  // z = m
  return {lower, upper};
}

// Same for the threshold snowdrift game.
inline Interval sdg_baseline_interval(int n, int m, double b, double c, double s) {
  const double k = 1.0 / ((n - 1) * (1.0 - s));
  const double lower = std::max(b - c * k, 0.0);
  double upper = b - c / n;
  upper = std::min(upper, c / (m - 1) * ((n - m + 1) * k - 1.0));     // z = m-2
  upper = std::min(upper, b - c / m + (n - m) * c * k / m);          // z = m-1
  return {lower, upper};
}

// Discounted payoffs by forward propagation of the profile distribution,
// truncated once delta^t drops below 1e-16. Independent of the linear solve.
inline std::vector<double> forward_discounted_payoffs(const StrategyProfile& profile, const PayoffTable& table,
                                                      double delta) {
  const int n = profile.n();
  const std::size_t states = std::size_t{1} << n;
  auto coop_of = [&](std::size_t s, int j) {
    const bool c = (s >> j) & 1U;
    const int z = std::popcount(static_cast<std::uint64_t>(s)) - (c ? 1 : 0);
    return profile.strategies[static_cast<std::size_t>(j)].coop_prob(c, z);
  };
  auto payoff_of = [&](std::size_t s, int j) {
    const bool c = (s >> j) & 1U;
    const int z = std::popcount(static_cast<std::uint64_t>(s)) - (c ? 1 : 0);
    return c ? table.a(z) : table.b(z);
  };
  // Probability of moving from s to t, computed bit by bit.
  auto step_prob = [&](std::size_t s, std::size_t t) {
    double p = 1.0;
    for (int j = 0; j < n; ++j) {
      const double q = coop_of(s, j);
      p *= ((t >> j) & 1U) ? q : 1.0 - q;
    }
    return p;
  };

  std::vector<double> v(states, 0.0);
  for (std::size_t s = 0; s < states; ++s) {
    double p = 1.0;
    for (int j = 0; j < n; ++j) {
      const double q = profile.strategies[static_cast<std::size_t>(j)].init;
      p *= ((s >> j) & 1U) ? q : 1.0 - q;
    }
    v[s] = p;
  }
  std::vector<double> pi(static_cast<std::size_t>(n), 0.0);
  double weight = 1.0;
  while (weight > 1e-16) {
    for (std::size_t s = 0; s < states; ++s) {
      for (int j = 0; j < n; ++j) pi[static_cast<std::size_t>(j)] += weight * v[s] * payoff_of(s, j);
    }
    std::vector<double> next(states, 0.0);
    for (std::size_t s = 0; s < states; ++s) {
      if (v[s] == 0.0) continue;
      for (std::size_t t = 0; t < states; ++t) next[t] += v[s] * step_prob(s, t);
    }
    v.swap(next);
    weight *= delta;
  }
  for (double& x : pi) x *= (1.0 - delta);
  return pi;
}

// Random valid specification for property tests.
inline GameSpec random_spec(std::mt19937_64& rng, int n_min = 3, int n_max = 10) {
  std::uniform_int_distribution<int> n_dist(n_min, n_max);
  const int n = n_dist(rng);
  std::uniform_int_distribution<int> m_dist(2, n - 1);
  const int m = m_dist(rng);
  std::uniform_real_distribution<double> cost(0.5, 2.0);
  const double c = cost(rng);
  if (std::bernoulli_distribution(0.5)(rng)) {
    std::uniform_real_distribution<double> r_dist(1.05, n - 0.05);
    return GameSpec::pgg(n, m, r_dist(rng), c);
  }
  std::uniform_real_distribution<double> ratio(1.05, 10.0);
  return GameSpec::sdg(n, m, ratio(rng) * c, c);
}

}  // namespace zdt::oracle
