#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "zdt/errors.hpp"
#include "zdt/regions.hpp"
#include "zdt/zd_core.hpp"

using namespace zdt;

namespace {

const PayoffTable& small_pgg() {
  static const PayoffTable t = pgg_payoffs(GameSpec::pgg(4, 2, 2.0));
  return t;
}

// Co-player average payoff written out directly from a and b.
double coplayer_avg(const PayoffTable& t, bool coop, int z) {
  const int n = t.n();
  if (coop) {
    const double tail = z + 1 < n ? t.b(z + 1) : 0.0;
    return (z * t.a(z) + (n - z - 1) * tail) / (n - 1);
  }
  const double head = z > 0 ? t.a(z - 1) : 0.0;
  return (z * head + (n - z - 1) * t.b(z)) / (n - 1);
}

// A feasible (table, s, l) drawn from the interior of the enforceable region.
struct Interior {
  PayoffTable table;
  double s;
  double l;
};

Interior random_interior(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (;;) {
    const auto spec = oracle::random_spec(rng, 3, 7);
    auto table = payoffs(spec);
    const int n = spec.n;
    const double s_min = -1.0 / (n - 1);
    const double s = s_min + (1.0 - s_min) * (0.02 + 0.96 * u(rng));
    const auto bounds = l_bounds(table, s);
    if (!(bounds.lower < bounds.upper)) continue;
    const double l = bounds.lower + (bounds.upper - bounds.lower) * (0.05 + 0.9 * u(rng));
    return {std::move(table), s, l};
  }
}

}  // namespace

TEST_CASE("payoff vector ordering, small pgg") {
  const auto g = payoff_vector_self(small_pgg());
  const std::vector<double> expected{1, 0.5, 0, -1, 1.5, 1, 0, 0};
  REQUIRE(g.size() == expected.size());
  for (std::size_t k = 0; k < g.size(); ++k) CHECK(g[k] == doctest::Approx(expected[k]));
}

TEST_CASE("zero table gives zero payoff vectors") {
  const PayoffTable zero(std::vector<double>(5, 0.0), std::vector<double>(5, 0.0));
  for (double x : payoff_vector_self(zero)) CHECK(x == 0.0);
  for (double x : payoff_vector_coplayers(zero)) CHECK(x == 0.0);
}

TEST_CASE("payoff vector, small sdg") {
  const auto g = payoff_vector_self(sdg_payoffs(GameSpec::sdg(4, 2, 2.0, 1.0)));
  const std::vector<double> expected{1.75, 5.0 / 3.0, 1.5, -1, 2, 2, 0, 0};
  for (std::size_t k = 0; k < g.size(); ++k) CHECK(g[k] == doctest::Approx(expected[k]));
}

TEST_CASE("co-player vector endpoints and a worked entry") {
  const auto& t = small_pgg();
  const auto gm = payoff_vector_coplayers(t);
  CHECK(gm[0] == doctest::Approx(t.a(3)));      // (C, n-1): all co-players cooperated
  CHECK(gm[7] == doctest::Approx(t.b(0)));      // (D, 0): nobody cooperated
  CHECK(gm[2] == doctest::Approx(2.0 / 3.0));   // (C, 1)
}

TEST_CASE("property: co-player vector matches the direct average") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const auto t = payoffs(oracle::random_spec(rng, 3, 12));
    const int n = t.n();
    const auto gm = payoff_vector_coplayers(t);
    for (int z = 0; z < n; ++z) {
      CHECK(gm[static_cast<std::size_t>(n - 1 - z)] == doctest::Approx(coplayer_avg(t, true, z)).epsilon(1e-13));
      CHECK(gm[static_cast<std::size_t>(2 * n - 1 - z)] ==
            doctest::Approx(coplayer_avg(t, false, z)).epsilon(1e-13));
    }
  }
}

TEST_CASE("small pgg at s = 0: z = 0 terms vanish, full interval is empty") {
  const auto& t = small_pgg();
  CHECK(l_lower_term(t, 0, 0.0) == 0.0);
  CHECK(l_upper_term(t, 0, 0.0) == 0.0);
  // the z = n-1 lower term is a_{n-2} = 0.5, so the maximum over z exceeds the upper end
  const auto b = l_bounds(t, 0.0);
  CHECK(b.lower == doctest::Approx(0.5));
  CHECK(b.lower_argz == 3);
  CHECK(b.upper == doctest::Approx(0.0));
  CHECK(b.upper_argz == 0);
  CHECK_FALSE(enforceable(t, 0.0, 0.0));
  const auto ref = oracle::pgg_baseline_interval(4, 2, 2.0, 1.0, 0.0);
  CHECK(b.lower == doctest::Approx(ref.lower));
  CHECK(b.upper == doctest::Approx(ref.upper));
}

TEST_CASE("z = 0 lower term and z = n-1 upper term reduce to b_0 and a_{n-1}") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-0.3, 0.95);
  for (int i = 0; i < 100; ++i) {
    const auto t = payoffs(oracle::random_spec(rng));
    const double s = u(rng);
    CHECK(l_lower_term(t, 0, s) == doctest::Approx(t.b(0)));
    CHECK(l_upper_term(t, t.n() - 1, s) == doctest::Approx(t.a(t.n() - 1)));
  }
}

TEST_CASE("baseline interval agrees with the hand-derived regime expressions") {
  // threshold snowdrift worked case
  const auto spec = GameSpec::sdg(8, 3, 2.0, 1.0);
  const auto b = l_bounds(payoffs(spec), 0.95);
  const auto ref = oracle::sdg_baseline_interval(8, 3, 2.0, 1.0, 0.95);
  CHECK(b.lower == doctest::Approx(ref.lower).epsilon(1e-12));
  CHECK(b.upper == doctest::Approx(ref.upper).epsilon(1e-12));

  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 2000; ++i) {
    const auto sp = oracle::random_spec(rng, 3, 16);
    const double s_min = -1.0 / (sp.n - 1);
    const double s = s_min + (1.0 - s_min) * (0.001 + 0.998 * u(rng));
    const auto got = l_bounds(payoffs(sp), s);
    const auto want = sp.family == Family::ThresholdPGG
                          ? oracle::pgg_baseline_interval(sp.n, sp.m, sp.r, sp.c, s)
                          : oracle::sdg_baseline_interval(sp.n, sp.m, sp.b, sp.c, s);
    const double scale = std::max(1.0, std::abs(want.lower) + std::abs(want.upper));
    CHECK(std::abs(got.lower - want.lower) < 1e-12 * scale);
    CHECK(std::abs(got.upper - want.upper) < 1e-12 * scale);
  }
}

TEST_CASE("property: bounds dominate every per-z term and are attained") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    const auto t = payoffs(oracle::random_spec(rng, 3, 12));
    const int n = t.n();
    const double s = -1.0 / (n - 1) + (1.0 + 1.0 / (n - 1)) * (0.01 + 0.98 * u(rng));
    const auto b = l_bounds(t, s);
    for (int z = 0; z < n; ++z) {
      CHECK(l_lower_term(t, z, s) <= b.lower);
      CHECK(l_upper_term(t, z, s) >= b.upper);
    }
    CHECK(l_lower_term(t, b.lower_argz, s) == b.lower);
    CHECK(l_upper_term(t, b.upper_argz, s) == b.upper);
  }
}

TEST_CASE("s = 1 is rejected by the bounds") {
  CHECK_THROWS_AS(l_bounds(small_pgg(), 1.0), SlopeAtOne);
  CHECK_FALSE(enforceable(small_pgg(), 1.0, 0.0));
}

TEST_CASE("enforceable on worked examples") {
  const auto t = pgg_payoffs(GameSpec::pgg(8, 3, 3.0));
  CHECK(enforceable(t, 0.8, 2.0));
  CHECK(enforceable(t, 5.0 / 7.0 + 1e-9, 2.0));
  CHECK_FALSE(enforceable(t, 0.5, 2.0));
  CHECK_FALSE(enforceable(t, -1.0 / 7.0, 1.0));
  CHECK_FALSE(enforceable(t, -0.5, 1.0));
}

TEST_CASE("property: enforceability is invariant under payoff scaling") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> kdist(0.2, 5.0);
  for (int i = 0; i < 300; ++i) {
    const auto in = random_interior(rng);
    const double k = kdist(rng);
    const auto scaled = in.table.scaled(k);
    CHECK(enforceable(scaled, in.s, k * in.l));
    const auto b = l_bounds(in.table, in.s);
    const auto bk = l_bounds(scaled, in.s);
    CHECK(bk.lower == doctest::Approx(k * b.lower).epsilon(1e-12));
    CHECK(bk.upper == doctest::Approx(k * b.upper).epsilon(1e-12));
  }
}

TEST_CASE("presets and default p0") {
  const auto& t = small_pgg();
  CHECK(preset_baseline(t, ZdClass::Generous) == 1.0);
  CHECK(preset_baseline(t, ZdClass::Extortionate) == 0.0);
  CHECK_THROWS_AS(preset_baseline(t, ZdClass::Equalizer), InvalidArgument);
  CHECK(default_p0(ZdClass::Generous) == 1.0);
  CHECK(default_p0(ZdClass::Extortionate) == 0.0);
  CHECK_FALSE(default_p0(ZdClass::Equalizer).has_value());
  CHECK(parse_class("extortionate") == ZdClass::Extortionate);
  CHECK_THROWS_AS(parse_class("tit-for-tat"), InvalidArgument);
}

TEST_CASE("construct_zd: slope domain") {
  const auto& t = small_pgg();
  CHECK_THROWS_AS(construct_zd(t, {1.0, 1.0, 0.1, 0.9, 1.0}), SlopeOutOfRange);
  CHECK_THROWS_AS(construct_zd(t, {-1.0 / 3.0, 1.0, 0.1, 0.9, 1.0}), SlopeOutOfRange);
  CHECK_THROWS_AS(construct_zd(t, {-2.0, 1.0, 0.1, 0.9, 1.0}), SlopeOutOfRange);
  CHECK_THROWS_AS(construct_zd(t, {0.5, 1.0, 0.0, 0.9, 1.0}), InvalidArgument);
  CHECK_THROWS_AS(construct_zd(t, {0.5, 1.0, 0.1, 1.0, 1.0}), InvalidArgument);
  CHECK_THROWS_AS(construct_zd(t, {0.5, 1.0, 0.1, 0.9, 1.5}), InvalidArgument);
}

TEST_CASE("construct_zd: generous example and an infeasible phi") {
  const auto t = pgg_payoffs(GameSpec::pgg(8, 3, 3.0));
  const auto iv = feasible_phi_interval(t, 0.8, 2.0, 0.999, 1.0);
  REQUIRE(iv.has_value());
  CHECK(iv->lo > 0.0);
  const auto strat = construct_zd(t, {0.8, 2.0, iv->midpoint(), 0.999, 1.0});
  CHECK(strat.n == 8);
  CHECK(strat.probs.size() == 16);
  CHECK(strat.init == 1.0);
  CHECK(strat.probs[0] == doctest::Approx(1.0));  // keeps cooperating after full cooperation
  for (double p : strat.probs) {
    CHECK(p >= 0.0);
    CHECK(p <= 1.0);
  }
  try {
    (void)construct_zd(t, {0.8, 2.0, 10.0 * iv->hi, 0.999, 1.0});
    FAIL("expected InfeasibleParameters");
  } catch (const InfeasibleParameters& e) {
    CHECK_FALSE(e.entries().empty());
    for (auto [k, v] : e.entries()) {
      CHECK(k >= 0);
      CHECK(k < 16);
      CHECK((v < 0.0 || v > 1.0));
    }
  }
}

TEST_CASE("property: constructed strategies satisfy the defining identity") {
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double deltas[] = {0.9, 0.99, 0.999};
  int built = 0;
  for (int i = 0; i < 1500 && built < 400; ++i) {
    const auto in = random_interior(rng);
    const double delta = deltas[i % 3];
    const auto p0 = best_p0(in.table, in.s, in.l, delta);
    if (!p0) continue;
    const auto iv = feasible_phi_interval(in.table, in.s, in.l, delta, *p0);
    REQUIRE(iv.has_value());
    const double phi = iv->lo + (iv->hi - iv->lo) * (0.01 + 0.98 * u(rng));
    const auto strat = construct_zd(in.table, {in.s, in.l, phi, delta, *p0});
    ++built;
    const int n = in.table.n();
    const double scale = std::max(1.0, in.table.magnitude());
    for (int z = 0; z < n; ++z) {
      for (int c = 0; c < 2; ++c) {
        const bool coop = c == 0;
        const double g = coop ? in.table.a(z) : in.table.b(z);
        const double rhs = phi * (in.s * g - coplayer_avg(in.table, coop, z) + (1.0 - in.s) * in.l);
        const double lhs = delta * strat.coop_prob(coop, z) - (coop ? 1.0 : 0.0) + (1.0 - delta) * *p0;
        CHECK(std::abs(lhs - rhs) < 1e-12 * scale);
      }
    }
  }
  CHECK(built >= 200);
}

TEST_CASE("every phi inside the interval is accepted and points beyond it are not") {
  std::mt19937_64 rng(59);
  int checked = 0;
  for (int i = 0; i < 400; ++i) {
    const auto in = random_interior(rng);
    const double delta = 0.99;
    const auto p0 = best_p0(in.table, in.s, in.l, delta);
    if (!p0) continue;
    const auto iv = feasible_phi_interval(in.table, in.s, in.l, delta, *p0);
    REQUIRE(iv.has_value());
    ++checked;
    CHECK_NOTHROW((void)construct_zd(in.table, {in.s, in.l, iv->hi, delta, *p0}));
    if (!iv->lo_open) CHECK_NOTHROW((void)construct_zd(in.table, {in.s, in.l, iv->lo, delta, *p0}));
    CHECK_THROWS_AS((void)construct_zd(in.table, {in.s, in.l, iv->hi * (1 + 1e-6) + 1e-9, delta, *p0}),
                    InfeasibleParameters);
  }
  CHECK(checked > 50);
}

TEST_CASE("phi interval is empty for non-enforceable pairs") {
  const auto t = pgg_payoffs(GameSpec::pgg(8, 3, 3.0));
  for (double delta : {0.5, 0.9, 0.99, 0.999, 0.999999}) {
    for (int k = 0; k <= 10; ++k) {
      CHECK_FALSE(feasible_phi_interval(t, 0.5, 2.0, delta, k / 10.0).has_value());
      CHECK_FALSE(feasible_phi_interval(t, 0.0, 1.0, delta, k / 10.0).has_value());
    }
    CHECK_FALSE(best_p0(t, 0.5, 2.0, delta).has_value());
  }
}

TEST_CASE("phi interval is empty as delta goes to zero") {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 200; ++i) {
    const auto in = random_interior(rng);
    for (int k = 0; k <= 10; ++k) {
      CHECK_FALSE(feasible_phi_interval(in.table, in.s, in.l, 1e-4, k / 10.0).has_value());
    }
  }
}

TEST_CASE("property: the phi interval grows with delta") {
  std::mt19937_64 rng(67);
  std::vector<double> deltas;
  for (int k = 1; k < 100; ++k) deltas.push_back(k / 100.0);
  deltas.push_back(0.995);
  deltas.push_back(0.999);
  for (int i = 0; i < 200; ++i) {
    const auto in = random_interior(rng);
    const double p0 = (i % 11) / 10.0;
    std::optional<PhiInterval> prev;
    for (double d : deltas) {
      const auto cur = feasible_phi_interval(in.table, in.s, in.l, d, p0);
      if (prev) {
        REQUIRE(cur.has_value());
        CHECK(cur->lo <= prev->lo + 1e-12);
        CHECK(cur->hi >= prev->hi - 1e-12);
      }
      if (cur) prev = cur;
    }
  }
}

TEST_CASE("best_p0 is pinned for the class presets") {
  const auto t = pgg_payoffs(GameSpec::pgg(8, 3, 3.0));
  const auto gen = best_p0(t, 0.8, 2.0, 0.999);
  REQUIRE(gen.has_value());
  CHECK(*gen == doctest::Approx(1.0).epsilon(1e-9));
  const auto ext_bound = pgg_extortionate_bound(8, 3, 3.0).s_star;
  const double s_ext = 0.5 * (ext_bound + 1.0);
  const auto ext = best_p0(t, s_ext, 0.0, 0.999);
  REQUIRE(ext.has_value());
  CHECK(*ext == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("best_p0 never does worse than the p0 grid") {
  std::mt19937_64 rng(71);
  for (int i = 0; i < 200; ++i) {
    const auto in = random_interior(rng);
    const double delta = 0.99;
    double grid_best = -1.0;
    for (int k = 0; k <= 10; ++k) {
      if (auto iv = feasible_phi_interval(in.table, in.s, in.l, delta, k / 10.0)) {
        grid_best = std::max(grid_best, iv->width());
      }
    }
    const auto p0 = best_p0(in.table, in.s, in.l, delta);
    if (grid_best < 0.0) continue;
    REQUIRE(p0.has_value());
    const auto iv = feasible_phi_interval(in.table, in.s, in.l, delta, *p0);
    REQUIRE(iv.has_value());
    CHECK(iv->width() >= grid_best * (1 - 1e-9));
  }
}

TEST_CASE("min_enforceable_delta brackets the feasibility threshold") {
  const auto t = pgg_payoffs(GameSpec::pgg(8, 3, 3.0));
  const auto d = min_enforceable_delta(t, 0.8, 2.0);
  REQUIRE(d.has_value());
  CHECK(*d > 0.0);
  CHECK(*d < 1.0);
  CHECK(feasible_phi_interval(t, 0.8, 2.0, *d, 1.0).has_value());
  CHECK_FALSE(feasible_phi_interval(t, 0.8, 2.0, *d - 1e-5, 1.0).has_value());
  CHECK_THROWS_AS((void)min_enforceable_delta(t, 0.5, 2.0), NotEnforceable);

  const auto d_near = min_enforceable_delta(t, 5.0 / 7.0 + 1e-6, 2.0);
  REQUIRE(d_near.has_value());
  MESSAGE("minimum delta just above the generous bound: " << *d_near);

  // the co-player terms shrink like (1 - s), so patience has to grow as s -> 1
  double prev = 0.0;
  for (double s : {0.75, 0.8, 0.9, 0.99, 0.999}) {
    const auto ds = min_enforceable_delta(t, s, 2.0);
    REQUIRE(ds.has_value());
    CHECK(*ds > prev);
    prev = *ds;
  }
  CHECK(prev > 0.99);
}

TEST_CASE("property: min_enforceable_delta is a threshold over the p0 grid") {
  std::mt19937_64 rng(73);
  for (int i = 0; i < 60; ++i) {
    const auto in = random_interior(rng);
    const auto d = min_enforceable_delta(in.table, in.s, in.l);
    if (!d) continue;
    const auto p0 = best_p0(in.table, in.s, in.l, *d);
    REQUIRE(p0.has_value());
    CHECK(feasible_phi_interval(in.table, in.s, in.l, *d, *p0).has_value());
    const double below = *d - 1e-5;
    if (below <= 0.0) continue;
    for (int k = 0; k <= 10; ++k) {
      CHECK_FALSE(feasible_phi_interval(in.table, in.s, in.l, below, k / 10.0).has_value());
    }
  }
}
