#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zdt/games.hpp"
#include "zdt/zd_core.hpp"

namespace zdt {

// Exact payoffs need the full 2^n action-profile chain.
inline constexpr int kMaxExactPlayers = 16;

// Tag of the random stream used by random_memory_one and simulate_monte_carlo.
inline constexpr std::string_view kRngAlgorithm = "mt19937_64/splitmix64-stream-seed";

// strategies[0] is the focal player.
struct StrategyProfile {
  std::vector<MemoryOneStrategy> strategies;

  int n() const { return static_cast<int>(strategies.size()); }
  // Throws InvalidArgument unless there are n >= 2 valid strategies sharing n.
  void validate() const;
};

enum class PayoffMethod { Exact, MonteCarlo };

std::string_view to_string(PayoffMethod method);

struct PayoffOutcome {
  std::vector<double> pi;  // per player, normalized by (1 - delta)
  double pi_focal = 0.0;
  double pi_coplayers_avg = 0.0;
  PayoffMethod method = PayoffMethod::Exact;
  std::optional<std::vector<double>> std_error;  // Monte Carlo only
  double delta = 0.0;
  std::optional<std::uint64_t> seed;
  std::uint64_t episodes = 0;

  // Fills pi_focal / pi_coplayers_avg from pi.
  void summarize();
};

// How the discounted occupancy v0^T (I - delta M)^{-1} is solved.
enum class SolverKind {
  Auto,      // dense for n <= kDenseMaxPlayers, iterative above
  Dense,     // dense LU on the 2^n x 2^n system
  Iterative  // matrix-free BiCGSTAB
};
inline constexpr int kDenseMaxPlayers = 10;

// Row-stochastic transition matrix over action profiles, row-major, 2^n x 2^n.
// Profile bit j set means player j cooperated. Intended for n <= 12.
std::vector<double> transition_matrix(const StrategyProfile& profile);

// Distribution of the first-round profile from each player's init probability.
std::vector<double> initial_distribution(const StrategyProfile& profile);

// pi_j = (1 - delta) v0^T (I - delta M)^{-1} g_j over the 2^n profile chain.
// Throws StateSpaceTooLarge if n > kMaxExactPlayers, NumericFailure if the
// solve does not converge.
PayoffOutcome exact_discounted_payoffs(const StrategyProfile& profile, const PayoffTable& table,
                                       double delta, SolverKind solver = SolverKind::Auto);

// pi^-i - s pi^i - (1 - s) l, signed.
double relation_residual(const PayoffOutcome& outcome, double s, double l);

// Geometric-stopping estimate: each round is followed by another with
// probability delta, and (1 - delta) times the mean undiscounted episode total
// estimates the discounted payoff. Episode k draws from its own stream seeded
// by (seed, k), so the result is identical for any `threads` value.
PayoffOutcome simulate_monte_carlo(const StrategyProfile& profile, const PayoffTable& table,
                                   double delta, std::uint64_t episodes, std::uint64_t seed,
                                   unsigned threads = 0);

// 2n + 1 independent uniform draws: probs in order, then init.
MemoryOneStrategy random_memory_one(int n, std::uint64_t seed);

// Deterministic 64-bit mix of (seed, index), used to derive sub-seeds.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace zdt
