#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "cpdetect/boundary.hpp"
#include "cpdetect/monte_carlo.hpp"

namespace cpdetect {

// Phase-plane sweep plan. Cells are the product of the n axis (n_values, or
// a_values mapped through dims_from_calibration and clamped at max_run_n
// with a saturation flag) and the sparsity axis (s_values or beta_values).
// Each cell runs every signal multiplier against a shared null run; the H1
// noise substreams do not depend on the multiplier, so power is paired
// across multipliers.
struct SweepPlan {
  std::int64_t p = 500;
  std::vector<std::int64_t> n_values;
  std::vector<double> a_values;
  std::vector<std::int64_t> s_values;
  std::vector<double> beta_values;
  std::vector<double> multipliers;
  Side side = Side::one_sided;
  Regime regime = Regime::three_log;
  TestKind test = TestKind::combined;
  double gamma = 2.0;
  std::optional<double> delta;
  std::int64_t trials = 100;
  std::uint64_t seed = 0;
  double t_star_frac = 0.35;
  std::int64_t max_run_n = 65536;
};

struct PhasePoint {
  double a = 0.0; // effective calibration of the cell actually run
  double beta = 0.0;
  double multiplier = 0.0;
  std::int64_t p = 0;
  std::int64_t n = 0;
  std::int64_t s = 0;
  double rho = 0.0;
  double type1 = 0.0, type1_lo = 0.0, type1_hi = 0.0;
  double type2 = 0.0, type2_lo = 0.0, type2_hi = 0.0;
  double risk = 0.0;
  bool saturated = false;
};

// Squared boundary radius used to scale sweep multipliers at a cell.
// three_log: the four-case formula by side; two_log: 2 r2* log p above
// beta = 1/2 and the rate p^{beta-1/2} at or below it (no constant claimed).
double cell_boundary_rho_squared(Regime regime, Side side, double a, double beta,
                                 double p);

std::vector<PhasePoint> phase_sweep(const SweepPlan& plan);

// One row per cell, header always present:
// a,beta,multiplier,p,n,s,rho,type1,type1_lo,type1_hi,type2,type2_lo,type2_hi,risk,saturated_flag
void write_phase_csv(std::ostream& os, const std::vector<PhasePoint>& points);

} // namespace cpdetect
