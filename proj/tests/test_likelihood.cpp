#include <doctest.h>

#include <cmath>

#include "cpdetect/likelihood.hpp"
#include "cpdetect/theta.hpp"

using namespace cpdetect;

namespace {

SparseMixture small_prior(std::int64_t n, double eps, double rho) {
  SparseMixture prior;
  prior.epsilon = eps;
  prior.beta_bar = 0.0;
  prior.rho = rho;
  prior.grid = build_lower_grid(n, 4.0);
  prior.side = Side::one_sided;
  return prior;
}

} // namespace

TEST_CASE("log LR collapses to zero as epsilon vanishes") {
  const std::int64_t p = 10, n = 64;
  const ObservationMatrix x = generate_null(p, n, {}, RngStream(1));
  const SparseMixture prior = small_prior(n, 1e-12, 1.0);
  CHECK(std::fabs(log_likelihood_ratio(x, prior)) <= 1e-6);
}

TEST_CASE("single grid point, one row: matches the direct density ratio") {
  const std::int64_t n = 16;
  SparseMixture prior;
  prior.epsilon = 0.3;
  prior.rho = 1.5;
  prior.grid.points = {4};
  prior.grid.n = n;
  prior.grid.flavor = GridFlavor::lower_geometric;
  prior.grid.param = 4.0;
  prior.side = Side::one_sided;

  const std::vector<double> theta = materialize(theta_vector(n, 4));
  for (int i = 0; i < 10; ++i) {
    const ObservationMatrix x = generate_null(1, n, {}, RngStream(40 + i));
    double ip = 0.0;
    for (std::int64_t t = 0; t < n; ++t) ip += x.at(0, t) * theta[static_cast<std::size_t>(t)];
    const double direct =
        std::log(1.0 + prior.epsilon *
                           (std::exp(prior.rho * ip - 0.5 * prior.rho * prior.rho) - 1.0));
    CHECK(log_likelihood_ratio(x, prior) == doctest::Approx(direct).epsilon(1e-9));
  }
}

TEST_CASE("unit expectation under the null (martingale property)") {
  const std::int64_t p = 20, n = 64;
  const SparseMixture prior = small_prior(n, 0.2, 1.0);
  const int trials = 10000;
  double sum = 0.0, sumsq = 0.0;
  for (int i = 0; i < trials; ++i) {
    const ObservationMatrix x =
        generate_null(p, n, {}, RngStream(123456).substream(static_cast<std::uint64_t>(i)));
    const double lr = std::exp(log_likelihood_ratio(x, prior));
    sum += lr;
    sumsq += lr * lr;
  }
  const double mean = sum / trials;
  const double var = sumsq / trials - mean * mean;
  const double se = std::sqrt(std::max(var, 0.0) / trials);
  CHECK(std::fabs(mean - 1.0) <= 3.0 * se + 1e-9);
}

TEST_CASE("lrt decision thresholds at zero") {
  const std::int64_t p = 10, n = 64;
  const SparseMixture prior = small_prior(n, 0.2, 1.2);
  const ObservationMatrix x = generate_null(p, n, {}, RngStream(5));
  const TestDecision d = lrt_test(x, prior);
  CHECK(d.threshold == 0.0);
  CHECK(d.reject == (d.statistic > 0.0));
}

TEST_CASE("likelihood ratio input validation") {
  const std::int64_t p = 4, n = 64;
  const ObservationMatrix x = generate_null(p, n, {}, RngStream(9));
  SparseMixture bad = small_prior(n, 1.0, 1.0);
  CHECK_THROWS_AS(log_likelihood_ratio(x, bad), std::invalid_argument);
  SparseMixture wrong = small_prior(128, 0.2, 1.0);
  CHECK_THROWS_WITH_AS(log_likelihood_ratio(x, wrong), "grid/matrix n disagree",
                       std::invalid_argument);
}

TEST_CASE("extreme signals stay representable in log space") {
  const std::int64_t p = 50, n = 256;
  SparseMixture prior = small_prior(n, 0.5, 30.0);
  AlternativeSpec spec;
  spec.p = p;
  spec.n = n;
  spec.t_star = 64;
  spec.rho = 30.0;
  spec.side = Side::one_sided;
  for (std::int64_t j = 0; j < p; ++j) spec.support.push_back(j);
  const ObservationMatrix x = generate_alternative(spec, RngStream(77));
  const double lr = log_likelihood_ratio(x, prior);
  CHECK(std::isfinite(lr));
  CHECK(lr > 100.0); // far beyond anything expressible without logs
}
