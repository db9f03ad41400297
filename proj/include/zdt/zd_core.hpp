#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "zdt/games.hpp"

namespace zdt {

// Probabilities within this distance outside [0, 1] are clamped by construct_zd.
inline constexpr double kProbabilityTolerance = 1e-12;

enum class ZdClass { Generous, Extortionate, Equalizer };

std::string_view to_string(ZdClass cls);
ZdClass parse_class(std::string_view text);

struct ZDParameters {
  double s = 0.0;      // slope of the enforced relation
  double l = 0.0;      // baseline payoff
  double phi = 0.0;    // scaling, > 0
  double delta = 0.0;  // discount factor in (0, 1)
  double p0 = 0.0;     // initial cooperation probability
};

// Memory-one strategy for an n-player game. `probs` follows the ordering
// (p_{C,n-1}, ..., p_{C,0}, p_{D,n-1}, ..., p_{D,0}), i.e. own previous action
// first, then the number of cooperating co-players in descending order.
struct MemoryOneStrategy {
  int n = 0;
  std::vector<double> probs;
  double init = 0.0;

  // Cooperation probability after a round in which this player cooperated
  // (or not) and `z` co-players cooperated.
  double coop_prob(bool cooperated, int z) const {
    return probs[static_cast<std::size_t>(cooperated ? n - 1 - z : 2 * n - 1 - z)];
  }

  // Throws InvalidArgument on a wrong length or an entry outside [0, 1].
  void validate() const;

  static MemoryOneStrategy all_cooperate(int n);
  static MemoryOneStrategy all_defect(int n);
};

// g^i = (a_{n-1}, ..., a_0, b_{n-1}, ..., b_0).
std::vector<double> payoff_vector_self(const PayoffTable& table);

// Average co-player payoff per focal outcome, same ordering as payoff_vector_self:
//   g_{C,z} = (z a_z + (n-z-1) b_{z+1}) / (n-1)
//   g_{D,z} = (z a_{z-1} + (n-z-1) b_z) / (n-1)
// Terms whose coefficient vanishes are dropped, so a_{-1} and b_n are never read.
std::vector<double> payoff_vector_coplayers(const PayoffTable& table);

// Admissible interval for the baseline payoff l at slope s.
struct LBounds {
  double lower = 0.0;
  double upper = 0.0;
  int lower_argz = 0;
  int upper_argz = 0;
};

// z-th lower / upper expression of the baseline inequalities.
double l_lower_term(const PayoffTable& table, int z, double s);
double l_upper_term(const PayoffTable& table, int z, double s);

// lower = max_z { b_z - z/(n-1) * (b_z - a_{z-1}) / (1-s) }
// upper = min_z { a_z + (n-z-1)/(n-1) * (b_{z+1} - a_z) / (1-s) }
// Throws SlopeAtOne when s == 1.
LBounds l_bounds(const PayoffTable& table, double s);

// Slope range -1/(n-1) < s < 1, lower <= l <= upper, and at least one of the two
// comparisons strict.
bool enforceable(const PayoffTable& table, double s, double l);

// The preset baseline: a_{n-1} for generous, b_0 for extortionate.
// Equalizer has no preset and throws InvalidArgument.
double preset_baseline(const PayoffTable& table, ZdClass cls);

// p0 = 1 for generous, 0 for extortionate; nullopt for anything else.
std::optional<double> default_p0(ZdClass cls);

// Builds p = (p^rep + phi (s g^i - g^-i + (1-s) l 1) - (1-delta) p0 1) / delta.
// Throws SlopeOutOfRange, InvalidArgument (phi, delta, p0 domain), or
// InfeasibleParameters listing every entry further than kProbabilityTolerance
// outside [0, 1]. Entries within tolerance are clamped.
MemoryOneStrategy construct_zd(const PayoffTable& table, const ZDParameters& params);

// The raw, unclamped right-hand side of the construction (no range checks).
std::vector<double> zd_probability_vector(const PayoffTable& table, const ZDParameters& params);

struct PhiInterval {
  double lo = 0.0;
  double hi = 0.0;
  // true when lo is the (excluded) phi > 0 boundary.
  bool lo_open = false;

  bool contains(double phi) const { return (lo_open ? phi > lo : phi >= lo) && phi <= hi; }
  double midpoint() const { return 0.5 * (lo + hi); }
  double width() const { return hi - lo; }
};

// Set of phi > 0 for which construct_zd succeeds with these (s, l, delta, p0).
// Each of the 2n entries is affine in phi, so the set is an interval obtained
// in closed form. The interval is computed with half the clamp tolerance so
// every point in it is accepted by construct_zd.
std::optional<PhiInterval> feasible_phi_interval(const PayoffTable& table, double s, double l,
                                                 double delta, double p0);

// p0 in [0, 1] maximizing the width of the feasible phi interval (the width is
// concave in p0). nullopt when no p0 admits any phi.
std::optional<double> best_p0(const PayoffTable& table, double s, double l, double delta);

// Smallest delta (resolution 1e-6) for which some p0 in {0, 0.1, ..., 1} or the
// width-maximizing p0 yields a nonempty phi interval. nullopt when nothing up
// to 1 - 1e-6 works. Throws NotEnforceable if enforceable(table, s, l) is false.
std::optional<double> min_enforceable_delta(const PayoffTable& table, double s, double l);

}  // namespace zdt
