#include "zdt/zd_core.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "zdt/errors.hpp"

namespace zdt {

namespace {

constexpr double kIntervalTolerance = 0.5 * kProbabilityTolerance;

double slope_floor(int n) { return -1.0 / (n - 1); }

bool slope_in_range(int n, double s) { return s > slope_floor(n) && s < 1.0; }

void check_slope(int n, double s) {
  if (!slope_in_range(n, s)) {
    std::ostringstream os;
    os << "slope s = " << s << " outside (-1/(n-1), 1) = (" << slope_floor(n) << ", 1)";
    throw SlopeOutOfRange(os.str());
  }
}

// Direction vector w = s g^i - g^-i + (1-s) l 1, written as s (g - l) - (g^- - l)
// so entries where g = g^- = l come out exactly zero.
std::vector<double> direction(const PayoffTable& table, double s, double l) {
  const auto self = payoff_vector_self(table);
  const auto co = payoff_vector_coplayers(table);
  std::vector<double> w(self.size());
  for (std::size_t k = 0; k < w.size(); ++k) w[k] = s * (self[k] - l) - (co[k] - l);
  return w;
}

// Affine bounds on phi for fixed (delta, p0). Entry k of the strategy is
// (A_k + phi w_k) / delta with A_k = rep_k - (1-delta) p0.
struct PhiConstraints {
  double lo = 0.0;  // max of lower bounds, at least 0
  bool lo_open = true;
  double hi = std::numeric_limits<double>::infinity();
  bool consistent = true;  // false when a w_k = 0 entry is out of range
};

PhiConstraints phi_constraints(std::span<const double> w, int n, double delta, double p0) {
  PhiConstraints out;
  const double floor_v = -kIntervalTolerance * delta;
  const double ceil_v = delta * (1.0 + kIntervalTolerance);
  for (std::size_t k = 0; k < w.size(); ++k) {
    const double rep = static_cast<int>(k) < n ? 1.0 : 0.0;
    const double a = rep - (1.0 - delta) * p0;
    double lower, upper;
    if (w[k] > 0.0) {
      lower = (floor_v - a) / w[k];
      upper = (ceil_v - a) / w[k];
    } else if (w[k] < 0.0) {
      lower = (ceil_v - a) / w[k];
      upper = (floor_v - a) / w[k];
    } else {
      if (a < floor_v || a > ceil_v) out.consistent = false;
      continue;
    }
    out.lo = std::max(out.lo, lower);
    out.hi = std::min(out.hi, upper);
  }
  // phi > 0 is open; any positive affine lower bound is closed.
  out.lo_open = out.lo <= 0.0;
  if (out.lo_open) out.lo = 0.0;
  return out;
}

bool nonempty(const PhiConstraints& c) {
  if (!c.consistent) return false;
  return c.lo_open ? c.hi > c.lo : c.hi >= c.lo;
}

// Width used to rank p0 values; -inf when empty.
double width(const PhiConstraints& c) {
  if (!nonempty(c)) return -std::numeric_limits<double>::infinity();
  return c.hi - c.lo;
}

}  // namespace

std::string_view to_string(ZdClass cls) {
  switch (cls) {
    case ZdClass::Generous: return "generous";
    case ZdClass::Extortionate: return "extortionate";
    case ZdClass::Equalizer: return "equalizer";
  }
  return "?";
}

ZdClass parse_class(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (lower == "generous") return ZdClass::Generous;
  if (lower == "extortionate") return ZdClass::Extortionate;
  if (lower == "equalizer") return ZdClass::Equalizer;
  throw InvalidArgument("class must be generous, extortionate or equalizer, got \"" +
                        std::string(text) + "\"");
}

void MemoryOneStrategy::validate() const {
  if (n < 2) throw InvalidArgument("strategy needs n >= 2");
  if (probs.size() != static_cast<std::size_t>(2 * n)) {
    throw InvalidArgument("strategy needs 2n = " + std::to_string(2 * n) + " probabilities, got " +
                          std::to_string(probs.size()));
  }
  for (std::size_t k = 0; k < probs.size(); ++k) {
    if (!(probs[k] >= 0.0 && probs[k] <= 1.0)) {
      throw InvalidArgument("strategy probability " + std::to_string(k) + " outside [0, 1]");
    }
  }
  if (!(init >= 0.0 && init <= 1.0)) throw InvalidArgument("initial probability outside [0, 1]");
}

MemoryOneStrategy MemoryOneStrategy::all_cooperate(int n) {
  return {n, std::vector<double>(static_cast<std::size_t>(2 * n), 1.0), 1.0};
}

MemoryOneStrategy MemoryOneStrategy::all_defect(int n) {
  return {n, std::vector<double>(static_cast<std::size_t>(2 * n), 0.0), 0.0};
}

std::vector<double> payoff_vector_self(const PayoffTable& table) {
  const int n = table.n();
  std::vector<double> g;
  g.reserve(static_cast<std::size_t>(2 * n));
  for (int z = n - 1; z >= 0; --z) g.push_back(table.a(z));
  for (int z = n - 1; z >= 0; --z) g.push_back(table.b(z));
  return g;
}

std::vector<double> payoff_vector_coplayers(const PayoffTable& table) {
  const int n = table.n();
  const double denom = n - 1;
  std::vector<double> g;
  g.reserve(static_cast<std::size_t>(2 * n));
  for (int z = n - 1; z >= 0; --z) {
    double sum = z * table.a(z);
    if (z < n - 1) sum += (n - z - 1) * table.b(z + 1);
    g.push_back(sum / denom);
  }
  for (int z = n - 1; z >= 0; --z) {
    double sum = (n - z - 1) * table.b(z);
    if (z > 0) sum += z * table.a(z - 1);
    g.push_back(sum / denom);
  }
  return g;
}

double l_lower_term(const PayoffTable& table, int z, double s) {
  if (z == 0) return table.b(0);
  const double coef = static_cast<double>(z) / (table.n() - 1);
  return table.b(z) - coef * (table.b(z) - table.a(z - 1)) / (1.0 - s);
}

double l_upper_term(const PayoffTable& table, int z, double s) {
  const int n = table.n();
  if (z == n - 1) return table.a(n - 1);
  const double coef = static_cast<double>(n - z - 1) / (n - 1);
  return table.a(z) + coef * (table.b(z + 1) - table.a(z)) / (1.0 - s);
}

LBounds l_bounds(const PayoffTable& table, double s) {
  if (s == 1.0) throw SlopeAtOne();
  LBounds out;
  out.lower = l_lower_term(table, 0, s);
  out.upper = l_upper_term(table, 0, s);
  for (int z = 1; z < table.n(); ++z) {
    const double lo = l_lower_term(table, z, s);
    const double up = l_upper_term(table, z, s);
    if (lo > out.lower) {
      out.lower = lo;
      out.lower_argz = z;
    }
    if (up < out.upper) {
      out.upper = up;
      out.upper_argz = z;
    }
  }
  return out;
}

bool enforceable(const PayoffTable& table, double s, double l) {
  if (!slope_in_range(table.n(), s)) return false;
  const auto bounds = l_bounds(table, s);
  if (!(bounds.lower <= l && l <= bounds.upper)) return false;
  return bounds.lower < l || l < bounds.upper;
}

double preset_baseline(const PayoffTable& table, ZdClass cls) {
  switch (cls) {
    case ZdClass::Generous: return table.a(table.n() - 1);
    case ZdClass::Extortionate: return table.b(0);
    case ZdClass::Equalizer: break;
  }
  throw InvalidArgument("equalizer strategies have no preset baseline payoff");
}

std::optional<double> default_p0(ZdClass cls) {
  if (cls == ZdClass::Generous) return 1.0;
  if (cls == ZdClass::Extortionate) return 0.0;
  return std::nullopt;
}

std::vector<double> zd_probability_vector(const PayoffTable& table, const ZDParameters& params) {
  const int n = table.n();
  const auto w = direction(table, params.s, params.l);
  std::vector<double> p(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) {
    const double rep = static_cast<int>(k) < n ? 1.0 : 0.0;
    p[k] = (rep - (1.0 - params.delta) * params.p0 + params.phi * w[k]) / params.delta;
  }
  return p;
}

MemoryOneStrategy construct_zd(const PayoffTable& table, const ZDParameters& params) {
  const int n = table.n();
  check_slope(n, params.s);
  if (!(params.phi > 0.0) || !std::isfinite(params.phi)) throw InvalidArgument("phi > 0 required");
  if (!(params.delta > 0.0 && params.delta < 1.0)) throw InvalidArgument("0 < delta < 1 required");
  if (!(params.p0 >= 0.0 && params.p0 <= 1.0)) throw InvalidArgument("0 <= p0 <= 1 required");

  auto probs = zd_probability_vector(table, params);
  std::vector<std::pair<int, double>> bad;
  for (std::size_t k = 0; k < probs.size(); ++k) {
    double& p = probs[k];
    if (p < -kProbabilityTolerance || p > 1.0 + kProbabilityTolerance || !std::isfinite(p)) {
      bad.emplace_back(static_cast<int>(k), p);
    }
    p = std::clamp(p, 0.0, 1.0);
  }
  if (!bad.empty()) {
    std::ostringstream os;
    os << "phi = " << params.phi << ", p0 = " << params.p0 << ", delta = " << params.delta
       << " cannot realize s = " << params.s << ", l = " << params.l << ":";
    for (const auto& [k, v] : bad) os << " p[" << k << "] = " << v;
    throw InfeasibleParameters(os.str(), std::move(bad));
  }
  return {n, std::move(probs), params.p0};
}

std::optional<PhiInterval> feasible_phi_interval(const PayoffTable& table, double s, double l,
                                                 double delta, double p0) {
  const auto w = direction(table, s, l);
  const auto c = phi_constraints(w, table.n(), delta, p0);
  if (!nonempty(c)) return std::nullopt;
  return PhiInterval{c.lo, c.hi, c.lo_open};
}

std::optional<double> best_p0(const PayoffTable& table, double s, double l, double delta) {
  const int n = table.n();
  const auto w = direction(table, s, l);

  // Entries with w_k = 0 pin A_k(p0) = rep_k - (1-delta) p0 to [floor, ceil]
  // regardless of phi; intersect those p0 ranges first.
  double p_lo = 0.0, p_hi = 1.0;
  const double floor_v = -kIntervalTolerance * delta;
  const double ceil_v = delta * (1.0 + kIntervalTolerance);
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] != 0.0) continue;
    const double rep = static_cast<int>(k) < n ? 1.0 : 0.0;
    p_lo = std::max(p_lo, (rep - ceil_v) / (1.0 - delta));
    p_hi = std::min(p_hi, (rep - floor_v) / (1.0 - delta));
  }
  if (p_lo > p_hi) return std::nullopt;
  p_lo = std::clamp(p_lo, 0.0, 1.0);
  p_hi = std::clamp(p_hi, 0.0, 1.0);

  // hi - lo is concave in p0 even where it goes negative, so the search runs on
  // the raw difference; emptiness is only checked on the final candidates.
  auto raw = [&](double p0) {
    const auto c = phi_constraints(w, n, delta, p0);
    return c.consistent ? c.hi - c.lo : -std::numeric_limits<double>::infinity();
  };
  auto score = [&](double p0) { return width(phi_constraints(w, n, delta, p0)); };

  // Golden-section search on the concave width.
  constexpr double kInvPhi = 0.6180339887498949;
  double x0 = p_lo, x3 = p_hi;
  double x1 = x3 - kInvPhi * (x3 - x0);
  double x2 = x0 + kInvPhi * (x3 - x0);
  double f1 = raw(x1), f2 = raw(x2);
  for (int it = 0; it < 100 && x3 - x0 > 1e-13; ++it) {
    if (f1 < f2) {
      x0 = x1;
      x1 = x2;
      f1 = f2;
      x2 = x0 + kInvPhi * (x3 - x0);
      f2 = raw(x2);
    } else {
      x3 = x2;
      x2 = x1;
      f2 = f1;
      x1 = x3 - kInvPhi * (x3 - x0);
      f1 = raw(x1);
    }
  }
  std::array<double, 5> candidates{p_lo, p_hi, x1, x2, 0.5 * (x0 + x3)};
  double best = candidates[0];
  double best_score = score(best);
  for (double cand : candidates) {
    const double sc = score(cand);
    if (sc > best_score) {
      best = cand;
      best_score = sc;
    }
  }
  if (!std::isfinite(best_score)) return std::nullopt;
  return best;
}

std::optional<double> min_enforceable_delta(const PayoffTable& table, double s, double l) {
  if (!enforceable(table, s, l)) {
    std::ostringstream os;
    os << "(s, l) = (" << s << ", " << l << ") is not enforceable";
    throw NotEnforceable(os.str());
  }
  auto feasible = [&](double delta) {
    for (int i = 0; i <= 10; ++i) {
      if (feasible_phi_interval(table, s, l, delta, i / 10.0)) return true;
    }
    const auto p0 = best_p0(table, s, l, delta);
    return p0 && feasible_phi_interval(table, s, l, delta, *p0).has_value();
  };
  constexpr double kResolution = 1e-6;
  double hi = 1.0 - kResolution;
  if (!feasible(hi)) return std::nullopt;
  double lo = 0.0;
  while (hi - lo > kResolution) {
    const double mid = 0.5 * (lo + hi);
    if (feasible(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

}  // namespace zdt
