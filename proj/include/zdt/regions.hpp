#pragma once

#include <string>
#include <vector>

#include "zdt/games.hpp"
#include "zdt/zd_core.hpp"

namespace zdt {

// Feasible slopes of the form s >= s_star (strict == false) or s > s_star.
struct SlopeBound {
  double s_star = 0.0;
  bool strict = false;
  ZdClass cls = ZdClass::Generous;
  // Set when the formula fell at or below -1/(n-1) and was floored to it.
  bool floored = false;
};

// Closed-form bounds for the threshold games. All throw InvalidSpec on
// parameters outside the game's valid range.
SlopeBound pgg_generous_bound(int n, int m, double r);
// max{ (m-2)/(n-1) strict, 1 - n/(r(n-1)) }; ties go to the strict branch.
SlopeBound pgg_extortionate_bound(int n, int m, double r);
SlopeBound sdg_generous_bound(int n, int m, double b, double c);
SlopeBound sdg_extortionate_bound(int n, int m, double b, double c);

// Dispatch on family and class (Generous / Extortionate only).
SlopeBound closed_form_bound(const GameSpec& spec, ZdClass cls);

// True iff some l admits an equalizer (s = 0) under the strict baseline conditions.
bool equalizer_exists(const PayoffTable& table);

// Independent bisection over the baseline inequalities: the infimum s* with
// enforceable(table, s, l) for every s in (s*, 1). `l` must equal the class
// preset (a_{n-1} or b_0). Throws NoFeasibleSlope if no legal slope works.
SlopeBound numeric_slope_bound(const PayoffTable& table, ZdClass cls, double l);
SlopeBound numeric_slope_bound(const PayoffTable& table, ZdClass cls);

struct RegionCell {
  double axis1_value = 0.0;
  int m = 0;
  SlopeBound closed;
  SlopeBound oracle;
  double discrepancy = 0.0;  // |closed.s_star - oracle.s_star|
};

struct RegionGrid {
  Family family = Family::ThresholdPGG;
  int n = 0;
  double c = 1.0;
  ZdClass cls = ZdClass::Generous;
  std::string axis1_name;  // "r" for PGG, "b/c" for SDG
  std::vector<double> axis1_values;
  std::vector<int> m_values;
  // Row-major: index = i_m * axis1_values.size() + i_axis1.
  std::vector<RegionCell> cells;
  double max_discrepancy = 0.0;
  int strict_mismatches = 0;

  const RegionCell& at(std::size_t i_axis1, std::size_t i_m) const {
    return cells[i_m * axis1_values.size() + i_axis1];
  }
};

// Evaluates every (axis1, m) cell with the closed form and the numeric oracle.
// For SDG axis1 is the ratio b/c with cost `c`. `threads` = 0 picks the
// hardware concurrency; output does not depend on it. Throws InvalidSpec
// naming the first invalid cell before any work starts.
RegionGrid region_sweep(Family family, int n, const std::vector<double>& axis1,
                        const std::vector<int>& m_values, ZdClass cls, double c = 1.0,
                        unsigned threads = 0);

// Figure presets at n = 8: fig1-left/right (PGG generous/extortionate),
// fig2-left/right (SDG generous/extortionate).
struct RegionPreset {
  Family family;
  ZdClass cls;
  int n;
  double axis_min;
  double axis_max;
  double axis_step;
};
RegionPreset region_preset(const std::string& name);

// Evenly spaced values min, min+step, ... <= max, rounded to 1e-9 so decimal
// grids land on exact decimal doubles.
std::vector<double> axis_grid(double min, double max, double step);

std::string to_csv(const RegionGrid& grid);

}  // namespace zdt
