#include "cpdetect/likelihood.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace cpdetect {

namespace {

// log((1-eps) + exp(w)) without overflow; w = log(eps) + rho Y - rho^2/2.
double log_mix_term(double log_one_minus_eps, double w) {
  const double m = std::max(log_one_minus_eps, w);
  return m + std::log(std::exp(log_one_minus_eps - m) + std::exp(w - m));
}

} // namespace

double log_likelihood_ratio(const ObservationMatrix& x, const SparseMixture& prior) {
  if (prior.grid.n != x.n) throw std::invalid_argument("grid/matrix n disagree");
  if (!(prior.epsilon > 0.0 && prior.epsilon < 1.0))
    throw std::invalid_argument("epsilon outside (0,1)");

  const ContrastMatrix y = contrast_matrix(x, prior.grid);
  const std::int64_t g = y.grid.size();
  const double log_eps = std::log(prior.epsilon);
  const double log_1me = std::log1p(-prior.epsilon);
  const double rho = prior.rho;
  const bool two_sided = prior.side == Side::two_sided;

  std::vector<double> per_grid(static_cast<std::size_t>(g), 0.0);
  for (std::int64_t k = 0; k < g; ++k) {
    double acc = 0.0;
    for (std::int64_t j = 0; j < x.p; ++j) {
      const double yv = y.at(j, k);
      double term;
      if (!two_sided) {
        term = log_mix_term(log_1me, log_eps + rho * yv - 0.5 * rho * rho);
      } else {
        // symmetric prior: eps/2 at +rho theta and eps/2 at -rho theta
        const double wp = log_eps - std::log(2.0) + rho * yv - 0.5 * rho * rho;
        const double wm = log_eps - std::log(2.0) - rho * yv - 0.5 * rho * rho;
        const double m = std::max({log_1me, wp, wm});
        term = m + std::log(std::exp(log_1me - m) + std::exp(wp - m) + std::exp(wm - m));
      }
      acc += term;
    }
    per_grid[static_cast<std::size_t>(k)] = acc;
  }

  const double m = *std::max_element(per_grid.begin(), per_grid.end());
  double sum = 0.0;
  for (double v : per_grid) sum += std::exp(v - m);
  const double out = m + std::log(sum) - std::log(static_cast<double>(g));
  if (!std::isfinite(out)) throw numeric_error("likelihood ratio not representable");
  return out;
}

TestDecision lrt_test(const ObservationMatrix& x, const SparseMixture& prior) {
  TestDecision d;
  d.statistic = log_likelihood_ratio(x, prior);
  d.threshold = 0.0;
  d.reject = d.statistic > 0.0;
  return d;
}

} // namespace cpdetect
