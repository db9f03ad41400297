#include "zdt/verify.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <random>
#include <thread>

#include "occupancy.hpp"
#include "zdt/errors.hpp"

namespace zdt {

namespace {

// Uniform in [0, 1) from the top 53 bits; independent of the standard
// library's distribution implementations.
double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

double profile_payoff(const PayoffTable& table, std::uint64_t profile, int player) {
  const bool cooperated = (profile >> player) & 1U;
  const int z = std::popcount(profile) - (cooperated ? 1 : 0);
  return cooperated ? table.a(z) : table.b(z);
}

void check_delta(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw InvalidArgument("0 < delta < 1 required");
}

void check_table(const StrategyProfile& profile, const PayoffTable& table) {
  if (table.n() != profile.n()) throw InvalidArgument("payoff table and profile disagree on n");
}

}  // namespace

void StrategyProfile::validate() const {
  const int count = n();
  if (count < 2) throw InvalidArgument("a profile needs at least two players");
  for (const auto& s : strategies) {
    if (s.n != count) {
      throw InvalidArgument("every strategy in the profile must have n = " + std::to_string(count));
    }
    s.validate();
  }
}

std::string_view to_string(PayoffMethod method) {
  return method == PayoffMethod::Exact ? "exact" : "monte_carlo";
}

void PayoffOutcome::summarize() {
  pi_focal = pi.front();
  double sum = 0.0;
  for (std::size_t j = 1; j < pi.size(); ++j) sum += pi[j];
  pi_coplayers_avg = sum / static_cast<double>(pi.size() - 1);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over a golden-ratio stride.
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::vector<double> initial_distribution(const StrategyProfile& profile) {
  const int n = profile.n();
  std::vector<double> init(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) init[static_cast<std::size_t>(j)] = profile.strategies[static_cast<std::size_t>(j)].init;
  std::vector<double> v0(std::size_t{1} << n);
  detail::product_distribution(init.data(), n, v0.data());
  return v0;
}

std::vector<double> transition_matrix(const StrategyProfile& profile) {
  profile.validate();
  const int n = profile.n();
  if (n > 12) throw StateSpaceTooLarge("dense transition matrix limited to n <= 12");
  const std::size_t states = std::size_t{1} << n;
  const auto coop = detail::next_round_coop(profile);
  std::vector<double> m(states * states);
  for (std::size_t s = 0; s < states; ++s) detail::product_distribution(coop.data() + s * n, n, m.data() + s * states);
  return m;
}

PayoffOutcome exact_discounted_payoffs(const StrategyProfile& profile, const PayoffTable& table, double delta,
                                       SolverKind solver) {
  check_delta(delta);
  if (profile.n() > kMaxExactPlayers) {
    throw StateSpaceTooLarge("exact payoffs need 2^n profile states; n = " + std::to_string(profile.n()) +
                             " exceeds the limit of " + std::to_string(kMaxExactPlayers) +
                             " (use Monte Carlo simulation instead)");
  }
  profile.validate();
  check_table(profile, table);

  const int n = profile.n();
  const auto occupancy = detail::discounted_occupancy(profile, delta, solver);
  PayoffOutcome out;
  out.method = PayoffMethod::Exact;
  out.delta = delta;
  out.pi.assign(static_cast<std::size_t>(n), 0.0);
  for (std::size_t s = 0; s < occupancy.size(); ++s) {
    for (int j = 0; j < n; ++j) out.pi[static_cast<std::size_t>(j)] += occupancy[s] * profile_payoff(table, s, j);
  }
  for (double& v : out.pi) v *= (1.0 - delta);
  out.summarize();
  return out;
}

double relation_residual(const PayoffOutcome& outcome, double s, double l) {
  return outcome.pi_coplayers_avg - s * outcome.pi_focal - (1.0 - s) * l;
}

MemoryOneStrategy random_memory_one(int n, std::uint64_t seed) {
  if (n < 2) throw InvalidArgument("random_memory_one needs n >= 2");
  std::mt19937_64 rng(derive_seed(seed, 0));
  MemoryOneStrategy out;
  out.n = n;
  out.probs.resize(static_cast<std::size_t>(2 * n));
  for (double& p : out.probs) p = uniform01(rng);
  out.init = uniform01(rng);
  return out;
}

PayoffOutcome simulate_monte_carlo(const StrategyProfile& profile, const PayoffTable& table, double delta,
                                   std::uint64_t episodes, std::uint64_t seed, unsigned threads) {
  check_delta(delta);
  if (episodes < 1) throw InvalidArgument("episodes >= 1 required");
  profile.validate();
  check_table(profile, table);
  const int n = profile.n();
  if (n > 64) throw InvalidArgument("Monte Carlo simulation supports n <= 64");

  constexpr std::uint64_t kBlock = 1024;
  const std::uint64_t blocks = (episodes + kBlock - 1) / kBlock;
  const auto width = static_cast<std::size_t>(n);
  // Per-block sums of episode totals and their squares; combined in block
  // order afterwards so the result does not depend on scheduling.
  std::vector<double> sums(blocks * width, 0.0), squares(blocks * width, 0.0);

  auto run_block = [&](std::uint64_t block) {
    std::vector<double> totals(width);
    double* sum = sums.data() + block * width;
    double* sq = squares.data() + block * width;
    const std::uint64_t end = std::min(episodes, (block + 1) * kBlock);
    for (std::uint64_t episode = block * kBlock; episode < end; ++episode) {
      std::mt19937_64 rng(derive_seed(seed, episode));
      std::uint64_t actions = 0;
      for (int j = 0; j < n; ++j) {
        if (uniform01(rng) < profile.strategies[static_cast<std::size_t>(j)].init) actions |= std::uint64_t{1} << j;
      }
      std::fill(totals.begin(), totals.end(), 0.0);
      while (true) {
        for (int j = 0; j < n; ++j) totals[static_cast<std::size_t>(j)] += profile_payoff(table, actions, j);
        if (uniform01(rng) >= delta) break;
        const int cooperators = std::popcount(actions);
        std::uint64_t next = 0;
        for (int j = 0; j < n; ++j) {
          const bool cooperated = (actions >> j) & 1U;
          const double p = profile.strategies[static_cast<std::size_t>(j)].coop_prob(cooperated, cooperators - (cooperated ? 1 : 0));
          if (uniform01(rng) < p) next |= std::uint64_t{1} << j;
        }
        actions = next;
      }
      for (std::size_t j = 0; j < width; ++j) {
        sum[j] += totals[j];
        sq[j] += totals[j] * totals[j];
      }
    }
  };

  std::atomic<std::uint64_t> next_block{0};
  auto worker = [&] {
    for (std::uint64_t b = next_block++; b < blocks; b = next_block++) run_block(b);
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, blocks));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  PayoffOutcome out;
  out.method = PayoffMethod::MonteCarlo;
  out.delta = delta;
  out.seed = seed;
  out.episodes = episodes;
  out.pi.assign(width, 0.0);
  std::vector<double> err(width, 0.0);
  const auto count = static_cast<double>(episodes);
  for (std::size_t j = 0; j < width; ++j) {
    double total = 0.0, total_sq = 0.0;
    for (std::uint64_t b = 0; b < blocks; ++b) {
      total += sums[b * width + j];
      total_sq += squares[b * width + j];
    }
    const double mean = total / count;
    out.pi[j] = (1.0 - delta) * mean;
    if (episodes > 1) {
      const double var = std::max(0.0, (total_sq - count * mean * mean) / (count - 1.0));
      err[j] = (1.0 - delta) * std::sqrt(var / count);
    }
  }
  out.std_error = std::move(err);
  out.summarize();
  return out;
}

}  // namespace zdt
