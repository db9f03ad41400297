#pragma once

#include <vector>

#include "zdt/verify.hpp"

namespace zdt::detail {

// Per-profile cooperation probabilities: coop[s * n + j] is the chance that
// player j cooperates after profile s.
std::vector<double> next_round_coop(const StrategyProfile& profile);

// Writes the product distribution of the next profile into out[0 .. 2^n).
void product_distribution(const double* coop, int n, double* out);

// x^T = v0^T (I - delta M)^{-1}, the discounted profile occupancy (sums to 1/(1-delta)).
std::vector<double> discounted_occupancy(const StrategyProfile& profile, double delta, SolverKind solver);

}  // namespace zdt::detail
