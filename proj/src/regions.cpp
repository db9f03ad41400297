#include "zdt/regions.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <thread>

#include "zdt/errors.hpp"

namespace zdt {

namespace {

SlopeBound make_bound(int n, double s_star, bool strict, ZdClass cls) {
  SlopeBound out{s_star, strict, cls, false};
  const double floor_v = -1.0 / (n - 1);
  if (!(s_star > floor_v)) {
    out.s_star = floor_v;
    out.strict = true;  // the slope range itself is open
    out.floored = true;
  }
  return out;
}

constexpr int kScanPoints = 2048;
constexpr double kBisectionTolerance = 1e-11;

}  // namespace

SlopeBound pgg_generous_bound(int n, int m, double r) {
  GameSpec::pgg(n, m, r).validate();
  const double s_star = 1.0 - (n - m + 1) / (r * (n - 1));
  return make_bound(n, s_star, false, ZdClass::Generous);
}

SlopeBound pgg_extortionate_bound(int n, int m, double r) {
  GameSpec::pgg(n, m, r).validate();
  // (m-2)/(n-1) >= 1 - n/(r(n-1))  <=>  r (n-m+1) <= n
  if (r * (n - m + 1) <= n) {
    return make_bound(n, static_cast<double>(m - 2) / (n - 1), true, ZdClass::Extortionate);
  }
  return make_bound(n, 1.0 - n / (r * (n - 1)), false, ZdClass::Extortionate);
}

SlopeBound sdg_generous_bound(int n, int m, double b, double c) {
  GameSpec::sdg(n, m, b, c).validate();
  const double num = c * n * (n - m + 1);
  const double den = (n - 1) * ((b * n - c) * (m - 1) + c * n);
  return make_bound(n, 1.0 - num / den, false, ZdClass::Generous);
}

SlopeBound sdg_extortionate_bound(int n, int m, double b, double c) {
  GameSpec::sdg(n, m, b, c).validate();
  return make_bound(n, 1.0 - c / (b * (n - 1)), false, ZdClass::Extortionate);
}

SlopeBound closed_form_bound(const GameSpec& spec, ZdClass cls) {
  const bool pgg = spec.family == Family::ThresholdPGG;
  switch (cls) {
    case ZdClass::Generous:
      return pgg ? pgg_generous_bound(spec.n, spec.m, spec.r)
                 : sdg_generous_bound(spec.n, spec.m, spec.b, spec.c);
    case ZdClass::Extortionate:
      return pgg ? pgg_extortionate_bound(spec.n, spec.m, spec.r)
                 : sdg_extortionate_bound(spec.n, spec.m, spec.b, spec.c);
    case ZdClass::Equalizer: break;
  }
  throw InvalidArgument("closed-form slope bounds exist only for generous and extortionate classes");
}

bool equalizer_exists(const PayoffTable& table) {
  const auto bounds = l_bounds(table, 0.0);
  // Any l strictly inside the interval satisfies both comparisons with at least
  // one strict; a degenerate or empty interval admits none.
  return bounds.lower < bounds.upper;
}

SlopeBound numeric_slope_bound(const PayoffTable& table, ZdClass cls, double l) {
  if (cls == ZdClass::Equalizer) throw InvalidArgument("numeric slope bound needs generous or extortionate");
  if (l != preset_baseline(table, cls)) {
    throw InvalidArgument("baseline l does not match the class preset (a_{n-1} or b_0)");
  }
  const int n = table.n();
  const double floor_v = -1.0 / (n - 1);
  auto ok = [&](double s) { return enforceable(table, s, l); };

  // Coarse scan for the last infeasible slope, then bisect the bracket above it.
  int last_bad = -1;
  for (int k = 1; k < kScanPoints; ++k) {
    const double s = floor_v + (1.0 - floor_v) * k / kScanPoints;
    if (!ok(s)) last_bad = k;
  }
  if (last_bad < 0) return SlopeBound{floor_v, true, cls, true};

  double lo = floor_v + (1.0 - floor_v) * last_bad / kScanPoints;
  double hi = last_bad + 1 < kScanPoints ? floor_v + (1.0 - floor_v) * (last_bad + 1) / kScanPoints
                                         : 1.0 - 1e-12;
  if (!ok(hi)) throw NoFeasibleSlope("no slope in (-1/(n-1), 1) is enforceable for this baseline");
  while (hi - lo > kBisectionTolerance) {
    const double mid = 0.5 * (lo + hi);
    if (ok(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }

  // At a non-strict boundary one baseline inequality is tight and the other
  // keeps positive slack; at a strict one both collapse onto l.
  const auto bounds = l_bounds(table, hi);
  const double tol = 1e-7 * std::max(1.0, table.magnitude());
  const bool strict = (l - bounds.lower) <= tol && (bounds.upper - l) <= tol;
  return SlopeBound{hi, strict, cls, false};
}

SlopeBound numeric_slope_bound(const PayoffTable& table, ZdClass cls) {
  return numeric_slope_bound(table, cls, preset_baseline(table, cls));
}

std::vector<double> axis_grid(double min, double max, double step) {
  if (!(step > 0.0) || !(max >= min)) throw InvalidArgument("axis grid needs step > 0 and max >= min");
  const auto count = static_cast<long>(std::floor((max - min) / step + 1e-9)) + 1;
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(count));
  for (long k = 0; k < count; ++k) values.push_back(std::round((min + k * step) * 1e9) / 1e9);
  return values;
}

RegionPreset region_preset(const std::string& name) {
  if (name == "fig1-left") return {Family::ThresholdPGG, ZdClass::Generous, 8, 1.01, 7.99, 0.01};
  if (name == "fig1-right") return {Family::ThresholdPGG, ZdClass::Extortionate, 8, 1.01, 7.99, 0.01};
  if (name == "fig2-left") return {Family::ThresholdSDG, ZdClass::Generous, 8, 1.01, 10.0, 0.01};
  if (name == "fig2-right") return {Family::ThresholdSDG, ZdClass::Extortionate, 8, 1.01, 10.0, 0.01};
  throw InvalidArgument("unknown preset \"" + name +
                        "\" (expected fig1-left, fig1-right, fig2-left or fig2-right)");
}

RegionGrid region_sweep(Family family, int n, const std::vector<double>& axis1,
                        const std::vector<int>& m_values, ZdClass cls, double c, unsigned threads) {
  if (cls == ZdClass::Equalizer) throw InvalidArgument("region sweeps cover generous and extortionate classes");
  RegionGrid grid;
  grid.family = family;
  grid.n = n;
  grid.c = c;
  grid.cls = cls;
  grid.axis1_name = family == Family::ThresholdPGG ? "r" : "b/c";
  grid.axis1_values = axis1;
  grid.m_values = m_values;

  auto spec_for = [&](double x, int m) {
    return family == Family::ThresholdPGG ? GameSpec::pgg(n, m, x, c) : GameSpec::sdg(n, m, x * c, c);
  };
  for (int m : m_values) {
    for (double x : axis1) {
      try {
        spec_for(x, m).validate();
      } catch (const InvalidSpec& e) {
        std::ostringstream os;
        os << "invalid cell (" << grid.axis1_name << " = " << x << ", m = " << m << "): " << e.what();
        throw InvalidSpec(os.str());
      }
    }
  }

  const std::size_t total = axis1.size() * m_values.size();
  grid.cells.resize(total);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t idx = next++; idx < total; idx = next++) {
      const int m = m_values[idx / axis1.size()];
      const double x = axis1[idx % axis1.size()];
      const auto spec = spec_for(x, m);
      RegionCell cell;
      cell.axis1_value = x;
      cell.m = m;
      cell.closed = closed_form_bound(spec, cls);
      cell.oracle = numeric_slope_bound(payoffs(spec), cls);
      cell.discrepancy = std::abs(cell.closed.s_star - cell.oracle.s_star);
      grid.cells[idx] = cell;
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(total, 1)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  for (const auto& cell : grid.cells) {
    grid.max_discrepancy = std::max(grid.max_discrepancy, cell.discrepancy);
    if (cell.closed.strict != cell.oracle.strict) ++grid.strict_mismatches;
  }
  return grid;
}

namespace {

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

std::string to_csv(const RegionGrid& grid) {
  std::string out =
      "family,n,m,axis1_name,axis1_value,class,s_star_closed,strict,s_star_oracle,discrepancy\n";
  for (const auto& cell : grid.cells) {
    out += std::string(to_string(grid.family)) + ',' + std::to_string(grid.n) + ',' +
           std::to_string(cell.m) + ',' + grid.axis1_name + ',' + fmt12(cell.axis1_value) + ',' +
           std::string(to_string(grid.cls)) + ',' + fmt12(cell.closed.s_star) + ',' +
           (cell.closed.strict ? "true" : "false") + ',' + fmt12(cell.oracle.s_star) + ',' +
           fmt12(cell.discrepancy) + '\n';
  }
  return out;
}

}  // namespace zdt
