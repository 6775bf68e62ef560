#pragma once

#include <cstdint>
#include <string>

namespace cpdetect {

// Case labels of the four-piece detection boundary in the triple-log regime.
enum class BoundaryCase { dense, moderate, sparse, ultra_sparse };

// Case labels of the second-regime boundary r2*.
enum class Regime2Case { beta34, beta_1minus, beta_one };

enum class Regime { three_log, two_log };

struct BoundaryValue {
  double rho_squared = 0.0;
  BoundaryCase case_label = BoundaryCase::dense;
};

// Squared critical radius for the one-sided (decreasing-change) problem:
//   p^{a-(1-2b)}                          a <= 1-2b
//   (a-(1-2b)) log p                      1-2b < a <= 1-4b/3
//   2 (sqrt(1-a)-sqrt(1-a-b))^2 log p     1-4b/3 < a <= 1-b
//   p^{a-(1-b)}                           a > 1-b
// Case boundaries owned by the left case. p may be any real > 1.
BoundaryValue boundary_one_sided(double a, double beta, double p);

// Two-sided variant: identical except the dense exponent halves,
// p^{(a-(1-2b))/2} for a <= 1-2b.
BoundaryValue boundary_two_sided(double a, double beta, double p);

// Second-regime boundary coefficient r so that rho^2 = 2 r log p:
//   b - 1/2          on (1/2, 3/4]
//   (1-sqrt(1-b))^2  on (3/4, 1)
//   1 + a            at b == 1
struct Regime2Value {
  double r = 0.0;
  Regime2Case case_label = Regime2Case::beta34;
};
Regime2Value r2_star(double a, double beta);

// Ingster-Donoho-Jin squared critical signal for the sparse normal means
// problem: p^{2b-1} for b <= 1/2, (2b-1) log p on (1/2, 3/4],
// 2 (1-sqrt(1-b))^2 log p above 3/4.
double idj_mu_star(double beta, double p);

// Order-level reference rates (constants set to 1, values are rates up to
// constants and are labeled as such by the CLI).
struct ReferenceRates {
  double collier = 0.0;
  double liu = 0.0;
};
ReferenceRates reference_rates(std::int64_t p, std::int64_t n, std::int64_t s);

struct Calibration {
  Regime regime = Regime::three_log;
  double a = 0.0;
  double beta = 0.0;
  std::int64_t p = 0;
};

// Effective (a, beta) of desk-scale dimensions:
//   three_log: a = logloglog n / log p,  two_log: a = loglog n / log p,
//   beta = 1 - log s / log p (beta = 1 when s = 1).
Calibration calibration_from_dims(std::int64_t p, std::int64_t n, std::int64_t s,
                                  Regime regime);

// Inverse map. n is clamped at 2^62 with the saturation reported; saturated
// n values label plot cells and are never allocated.
struct DeskDims {
  std::int64_t n = 0;
  std::int64_t s = 0;
  bool saturated = false;
};
DeskDims dims_from_calibration(const Calibration& cal);

std::string to_string(BoundaryCase c);
std::string to_string(Regime2Case c);

} // namespace cpdetect
