#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "cpdetect/contrast.hpp"
#include "cpdetect/grid.hpp"
#include "cpdetect/rng.hpp"

namespace cpdetect {

// Fixed alternative: rows in `support` jump from +delta/2 to -delta/2 at
// t_star (times sign_pattern for the two-sided flavor), where delta is
// chosen so the normalized jump sqrt(t*(n-t*)/n) |mu1-mu2| equals rho.
struct AlternativeSpec {
  std::int64_t p = 0;
  std::int64_t n = 0;
  std::int64_t t_star = 0;
  std::vector<std::int64_t> support;
  double rho = 0.0;
  Side side = Side::one_sided;
  std::vector<int> sign_pattern;   // per support row, +1/-1; two-sided only
  std::vector<double> base_means;  // per-row constants, empty = all zero
};

// Least-favorable priors: each non-null row gets mean rho * theta^(k*) with
// k* uniform over the grid.
struct SparseMixture {
  double epsilon = 0.0; // per-row non-null probability, p^{-beta_bar}
  double beta_bar = 0.0;
  double rho = 0.0;
  Grid grid;
  Side side = Side::one_sided; // two-sided flips the sign with prob 1/2
};
struct SingleRow {
  double rho = 0.0;
  Grid grid;
};
struct EvenSpread {
  std::int64_t s = 0;
  double rho = 0.0;
  Grid grid;
};
using MixturePrior = std::variant<SparseMixture, SingleRow, EvenSpread>;

struct MixtureDraw {
  ObservationMatrix x;
  std::int64_t k_star = 0; // grid index drawn for this realization
  std::int64_t nonnull_count = 0;
  std::vector<std::int64_t> support;
  std::vector<int> sign; // per support row
};

// Preset interpolation for the mixture exponent: beta_bar sits 60% of the
// way from the boundary target beta1 toward the true sparsity beta.
inline double preset_beta_bar(double beta1, double beta) {
  return beta1 + 0.6 * (beta - beta1);
}

ObservationMatrix generate_null(std::int64_t p, std::int64_t n,
                                const std::vector<double>& base_means, RngStream stream);

ObservationMatrix generate_alternative(const AlternativeSpec& spec, RngStream stream);

MixtureDraw generate_mixture(const MixturePrior& prior, std::int64_t p, std::int64_t n,
                             RngStream stream);

// Mean matrix of a mixture realization, for membership checks.
ObservationMatrix mixture_mean_matrix(const MixtureDraw& draw, const MixturePrior& prior,
                                      std::int64_t p, std::int64_t n);

// Membership predicates implemented directly from the alternative-class
// definition: every row is constant or two-piece at a common t*, at least
// min_support rows have normalized jump >= rho (one-sided: decreasing).
bool in_one_sided_class(const ObservationMatrix& theta, double rho,
                        std::int64_t min_support, double tol = 1e-9);
bool in_two_sided_class(const ObservationMatrix& theta, double rho,
                        std::int64_t min_support, double tol = 1e-9);

} // namespace cpdetect
