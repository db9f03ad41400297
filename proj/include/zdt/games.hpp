#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace zdt {

enum class Family { ThresholdPGG, ThresholdSDG };

std::string_view to_string(Family family);
// Accepts "pgg" / "sdg" (case-insensitive). Throws InvalidSpec otherwise.
Family parse_family(std::string_view text);

// A threshold public goods game (multiplier r, contribution c) or a threshold
// snowdrift game (benefit b, total clearing cost c). `m` is the minimum number
// of cooperators needed for any benefit to be produced.
struct GameSpec {
  Family family = Family::ThresholdPGG;
  int n = 0;
  int m = 0;
  double r = 0.0;  // PGG only
  double b = 0.0;  // SDG only
  double c = 1.0;

  static GameSpec pgg(int n, int m, double r, double c = 1.0);
  static GameSpec sdg(int n, int m, double b, double c);

  // Throws InvalidSpec naming the first violated bound.
  void validate() const;

  bool operator==(const GameSpec&) const = default;
};

// Per-round payoffs of a symmetric n-player binary-action game. Both vectors are
// indexed ascending in z, the number of cooperating co-players (z = 0..n-1).
class PayoffTable {
public:
  PayoffTable(std::vector<double> cooperator, std::vector<double> defector);

  int n() const { return static_cast<int>(a_.size()); }
  // Cooperator payoff with z cooperating co-players.
  double a(int z) const { return a_[static_cast<std::size_t>(z)]; }
  // Defector payoff with z cooperating co-players.
  double b(int z) const { return b_[static_cast<std::size_t>(z)]; }
  std::span<const double> cooperator() const { return a_; }
  std::span<const double> defector() const { return b_; }

  // Largest absolute entry; used as a scale for tolerances.
  double magnitude() const;
  double min_entry() const;
  double max_entry() const;

  // Every entry multiplied by k.
  PayoffTable scaled(double k) const;

private:
  std::vector<double> a_;
  std::vector<double> b_;
};

// a_z = rc(z+1)/n - c once z >= m-1 (else -c); b_z = rcz/n once z >= m (else 0).
PayoffTable pgg_payoffs(const GameSpec& spec);
// a_z = b - c/(z+1) once z >= m-1 (else -c/(z+1)); b_z = b once z >= m (else 0).
PayoffTable sdg_payoffs(const GameSpec& spec);
// Dispatches on spec.family.
PayoffTable payoffs(const GameSpec& spec);

enum class Condition { Monotone, DefectorAdvantage, CooperationFavored };

std::string_view to_string(Condition condition);

struct AssumptionReport {
  bool monotone = true;
  bool defector_advantage = true;
  bool cooperation_favored = true;
  // (condition, z) for every failing instance. CooperationFavored uses z = n-1.
  std::vector<std::pair<Condition, int>> violations;

  bool all() const { return monotone && defector_advantage && cooperation_favored; }
};

// Exhaustive check of the social-dilemma conditions:
//   (i)   a_{z+1} >= a_z and b_{z+1} >= b_z
//   (ii)  b_{z+1} > a_z
//   (iii) a_{n-1} > b_0
AssumptionReport check_social_dilemma(const PayoffTable& table);

}  // namespace zdt
