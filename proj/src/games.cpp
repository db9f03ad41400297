#include "zdt/games.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include "zdt/errors.hpp"

namespace zdt {

std::string_view to_string(Family family) {
  return family == Family::ThresholdPGG ? "pgg" : "sdg";
}

Family parse_family(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (lower == "pgg") return Family::ThresholdPGG;
  if (lower == "sdg") return Family::ThresholdSDG;
  throw InvalidSpec("family must be \"pgg\" or \"sdg\", got \"" + std::string(text) + "\"");
}

GameSpec GameSpec::pgg(int n, int m, double r, double c) {
  GameSpec spec;
  spec.family = Family::ThresholdPGG;
  spec.n = n;
  spec.m = m;
  spec.r = r;
  spec.c = c;
  return spec;
}

GameSpec GameSpec::sdg(int n, int m, double b, double c) {
  GameSpec spec;
  spec.family = Family::ThresholdSDG;
  spec.n = n;
  spec.m = m;
  spec.b = b;
  spec.c = c;
  return spec;
}

void GameSpec::validate() const {
  auto fail = [](const std::string& msg) { throw InvalidSpec(msg); };
  if (n < 2) fail("n must satisfy n >= 2 (got n = " + std::to_string(n) + ")");
  if (!(1 < m && m < n)) {
    fail("m must satisfy 1 < m < n (got m = " + std::to_string(m) + ", n = " + std::to_string(n) + ")");
  }
  if (!std::isfinite(c) || !(c > 0.0)) fail("c > 0 required");
  if (family == Family::ThresholdPGG) {
    if (!std::isfinite(r) || !(1.0 < r && r < n)) {
      std::ostringstream os;
      os << "r must satisfy 1 < r < n (got r = " << r << ", n = " << n << ")";
      fail(os.str());
    }
  } else {
    if (!std::isfinite(b) || !(b > c)) fail("b > c required");
  }
}

PayoffTable::PayoffTable(std::vector<double> cooperator, std::vector<double> defector)
    : a_(std::move(cooperator)), b_(std::move(defector)) {
  if (a_.size() != b_.size()) throw InvalidArgument("payoff vectors must have equal length");
  if (a_.size() < 2) throw InvalidArgument("payoff table needs n >= 2");
}

double PayoffTable::magnitude() const {
  double mag = 0.0;
  for (double v : a_) mag = std::max(mag, std::abs(v));
  for (double v : b_) mag = std::max(mag, std::abs(v));
  return mag;
}

double PayoffTable::min_entry() const {
  return std::min(*std::min_element(a_.begin(), a_.end()), *std::min_element(b_.begin(), b_.end()));
}

double PayoffTable::max_entry() const {
  return std::max(*std::max_element(a_.begin(), a_.end()), *std::max_element(b_.begin(), b_.end()));
}

PayoffTable PayoffTable::scaled(double k) const {
  auto a = a_;
  auto b = b_;
  for (double& v : a) v *= k;
  for (double& v : b) v *= k;
  return PayoffTable(std::move(a), std::move(b));
}

PayoffTable pgg_payoffs(const GameSpec& spec) {
  if (spec.family != Family::ThresholdPGG) throw InvalidSpec("pgg_payoffs needs a pgg spec");
  spec.validate();
  const int n = spec.n;
  const double r = spec.r;
  const double c = spec.c;
  std::vector<double> a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
  for (int z = 0; z < n; ++z) {
    a[z] = z >= spec.m - 1 ? r * c * (z + 1) / n - c : -c;
    b[z] = z >= spec.m ? r * c * z / n : 0.0;
  }
  return PayoffTable(std::move(a), std::move(b));
}

PayoffTable sdg_payoffs(const GameSpec& spec) {
  if (spec.family != Family::ThresholdSDG) throw InvalidSpec("sdg_payoffs needs an sdg spec");
  spec.validate();
  const int n = spec.n;
  std::vector<double> a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
  for (int z = 0; z < n; ++z) {
    const double share = spec.c / (z + 1);
    a[z] = z >= spec.m - 1 ? spec.b - share : -share;
    b[z] = z >= spec.m ? spec.b : 0.0;
  }
  return PayoffTable(std::move(a), std::move(b));
}

PayoffTable payoffs(const GameSpec& spec) {
  return spec.family == Family::ThresholdPGG ? pgg_payoffs(spec) : sdg_payoffs(spec);
}

std::string_view to_string(Condition condition) {
  switch (condition) {
    case Condition::Monotone: return "monotone";
    case Condition::DefectorAdvantage: return "defector_advantage";
    case Condition::CooperationFavored: return "cooperation_favored";
  }
  return "?";
}

AssumptionReport check_social_dilemma(const PayoffTable& table) {
  AssumptionReport report;
  const int n = table.n();
  for (int z = 0; z + 1 < n; ++z) {
    if (!(table.a(z + 1) >= table.a(z) && table.b(z + 1) >= table.b(z))) {
      report.monotone = false;
      report.violations.emplace_back(Condition::Monotone, z);
    }
    if (!(table.b(z + 1) > table.a(z))) {
      report.defector_advantage = false;
      report.violations.emplace_back(Condition::DefectorAdvantage, z);
    }
  }
  if (!(table.a(n - 1) > table.b(0))) {
    report.cooperation_favored = false;
    report.violations.emplace_back(Condition::CooperationFavored, n - 1);
  }
  return report;
}

}  // namespace zdt
