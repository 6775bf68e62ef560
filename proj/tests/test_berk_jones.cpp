#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cpdetect/berk_jones.hpp"
#include "cpdetect/bernoulli_kl.hpp"
#include "cpdetect/generators.hpp"
#include "cpdetect/rng.hpp"

using namespace cpdetect;

namespace {

// brute force over the lattice of observed p-values:
// max over q in {p_(1),...,p_(p)} of p * K(count(pvals <= q)/p, q)
double bj_bruteforce(const std::vector<double>& pvals) {
  const double pd = static_cast<double>(pvals.size());
  double best = -1e300;
  for (double q : pvals) {
    std::int64_t count = 0;
    for (double v : pvals)
      if (v <= q) ++count;
    best = std::max(best, pd * bern_kl(static_cast<double>(count) / pd, q));
  }
  return best;
}

} // namespace

TEST_CASE("inner max hand examples") {
  const BjColumn flat = bj_at_column({0.5, 0.5, 0.5, 0.5});
  CHECK(flat.value == doctest::Approx(2.7725887222397812).epsilon(1e-12)); // 4 log 2
  CHECK(flat.argmax_j == 4);

  const BjColumn sorted = bj_at_column({0.4, 0.1, 0.3, 0.2});
  CHECK(sorted.value == doctest::Approx(3.6651629274966203).epsilon(1e-12)); // -4 log 0.4
  CHECK(sorted.argmax_j == 4);

  CHECK_THROWS_WITH_AS(bj_at_column({}), "no rows", std::invalid_argument);
}

TEST_CASE("inner max equals the brute-force q-lattice supremum") {
  RngStream rng(66101);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t p = 1 + rng.next_u64() % 50;
    std::vector<double> pv(p);
    for (auto& v : pv) v = rng.next_unit();
    const BjColumn got = bj_at_column(pv);
    CHECK(got.value == doctest::Approx(bj_bruteforce(pv)).epsilon(1e-9));
  }
}

TEST_CASE("degenerate scan: one row, one grid point") {
  ObservationMatrix x(1, 2);
  x.at(0, 0) = 0.0;
  x.at(0, 1) = 0.0;
  Grid grid;
  grid.points = {1};
  grid.n = 2;
  grid.param = 1.0;
  const BjScanResult r = pbj_statistic(x, grid, Side::one_sided);
  CHECK(r.statistic == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(r.penalized == doctest::Approx(std::log(2.0)).epsilon(1e-12)); // 2 log 1 = 0
}

TEST_CASE("two-sided statistic is invariant under a global sign flip") {
  RngStream rng(3141);
  ObservationMatrix x(20, 64);
  for (auto& v : x.values) v = rng.next_normal() + 0.2;
  ObservationMatrix neg = x;
  for (auto& v : neg.values) v = -v;
  const Grid grid = build_upper_grid(64, 0.25);
  const BjScanResult a = pbj_statistic(x, grid, Side::two_sided);
  const BjScanResult b = pbj_statistic(neg, grid, Side::two_sided);
  CHECK(a.statistic == b.statistic);
  CHECK(a.penalized == b.penalized);
}

TEST_CASE("penalty equals 2 log grid-size exactly across singleton grids") {
  RngStream rng(5521);
  ObservationMatrix x(12, 128);
  for (auto& v : x.values) v = rng.next_normal();
  const Grid grid = build_upper_grid(128, 0.3);
  const BjScanResult whole = pbj_statistic(x, grid, Side::one_sided);

  double best = -1e300;
  for (std::int64_t k = 0; k < grid.size(); ++k) {
    Grid single = grid;
    single.points = {grid.points[static_cast<std::size_t>(k)]};
    best = std::max(best, pbj_statistic(x, single, Side::one_sided).statistic);
  }
  CHECK(whole.statistic == best);
  CHECK(whole.penalized == whole.statistic - 2.0 * std::log(static_cast<double>(grid.size())));
}

TEST_CASE("pbj threshold values") {
  RngStream rng(808);
  ObservationMatrix x(100, 64);
  for (auto& v : x.values) v = rng.next_normal();
  const Grid grid = build_upper_grid(64, 0.25);
  CHECK(pbj_test(x, grid, Side::one_sided, 0.5).threshold ==
        doctest::Approx(23.025850929940457).epsilon(1e-12));
  CHECK(pbj_test(x, grid, Side::one_sided, 2.0).threshold ==
        doctest::Approx(36.841361487904731).epsilon(1e-12));
  CHECK_THROWS_WITH_AS(pbj_test(x, grid, Side::one_sided, 0.0),
                       "penalty exponent must be positive", std::invalid_argument);
}

TEST_CASE("max test threshold and degenerate edge") {
  CHECK(max_test_from(1.0, 100, 50, 2.0).threshold ==
        doctest::Approx(5.8368461317448612).epsilon(1e-12));

  const TestDecision d = max_test_from(3.0, 1, 1, 2.0);
  CHECK(d.threshold == 0.0);
  CHECK(d.reject);
  CHECK(d.degenerate_threshold);
}

TEST_CASE("combined decision is the disjunction with margin reporting") {
  RngStream rng(17);
  ObservationMatrix x(50, 256);
  for (auto& v : x.values) v = rng.next_normal();
  const Grid grid = build_upper_grid(256, 0.25);

  const CombinedDecision quiet = combined_test(x, grid, Side::one_sided, 2.0);
  CHECK_FALSE(quiet.reject);
  CHECK(quiet.margin == std::max(quiet.pbj.statistic - quiet.pbj.threshold,
                                 quiet.max.statistic - quiet.max.threshold));

  // one huge row trips the max component
  ObservationMatrix loud = x;
  for (std::int64_t t = 0; t < 64; ++t) loud.at(7, t) += 6.0;
  const CombinedDecision fire = combined_test(loud, grid, Side::one_sided, 2.0);
  CHECK(fire.max.reject);
  CHECK(fire.reject);
}

TEST_CASE("one-sided rejection is monotone in the planted signal across paired seeds") {
  const Grid grid = build_upper_grid(128, 0.25);
  int weak_rejects = 0, strong_rejects = 0;
  for (int seedi = 0; seedi < 30; ++seedi) {
    AlternativeSpec spec;
    spec.p = 40;
    spec.n = 128;
    spec.t_star = 40;
    spec.rho = 1.4;
    spec.side = Side::one_sided;
    for (std::int64_t j = 0; j < 10; ++j) spec.support.push_back(j);

    const RngStream stream(9000 + static_cast<std::uint64_t>(seedi));
    const bool weak =
        pbj_test(generate_alternative(spec, stream), grid, Side::one_sided, 0.5).reject;
    spec.rho = 2.8;
    const bool strong =
        pbj_test(generate_alternative(spec, stream), grid, Side::one_sided, 0.5).reject;
    CHECK(static_cast<int>(weak) <= static_cast<int>(strong));
    weak_rejects += weak;
    strong_rejects += strong;
  }
  CHECK(weak_rejects <= strong_rejects);
}

TEST_CASE("null calibration smoke test at gamma = 2") {
  const Grid grid = build_upper_grid(256, 0.25);
  int rejections = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const ObservationMatrix x =
        generate_null(50, 256, {}, RngStream(100 + static_cast<std::uint64_t>(trial)));
    rejections += combined_test(x, grid, Side::two_sided, 2.0).reject;
  }
  CHECK(rejections <= 2);
}
