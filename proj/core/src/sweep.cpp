#include "cpdetect/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace cpdetect {

double cell_boundary_rho_squared(Regime regime, Side side, double a, double beta,
                                 double p) {
  if (regime == Regime::three_log) {
    return side == Side::one_sided ? boundary_one_sided(a, beta, p).rho_squared
                                   : boundary_two_sided(a, beta, p).rho_squared;
  }
  if (beta > 0.5) return 2.0 * r2_star(a, beta).r * std::log(p);
  return std::pow(p, beta - 0.5);
}

namespace {

struct CellAxis {
  std::int64_t n_run = 0;
  bool saturated = false;
};

std::vector<CellAxis> resolve_n_axis(const SweepPlan& plan) {
  if (!plan.n_values.empty() && !plan.a_values.empty())
    throw std::invalid_argument("give n_values or a_values, not both");
  std::vector<CellAxis> axis;
  for (std::int64_t n : plan.n_values) {
    if (n < 4) throw std::invalid_argument("sequence too short");
    axis.push_back({n, false});
  }
  for (double a : plan.a_values) {
    Calibration cal;
    cal.regime = plan.regime;
    cal.a = a;
    cal.beta = 1.0; // beta handled on the other axis
    cal.p = plan.p;
    const DeskDims dims = dims_from_calibration(cal);
    CellAxis cell;
    cell.saturated = dims.saturated || dims.n > plan.max_run_n;
    cell.n_run = cell.saturated ? plan.max_run_n : dims.n;
    if (cell.n_run < 4) cell.n_run = 4;
    axis.push_back(cell);
  }
  return axis;
}

std::vector<std::int64_t> resolve_s_axis(const SweepPlan& plan) {
  if (!plan.s_values.empty() && !plan.beta_values.empty())
    throw std::invalid_argument("give s_values or beta_values, not both");
  std::vector<std::int64_t> axis = plan.s_values;
  for (double beta : plan.beta_values) {
    if (!(beta > 0.0 && beta <= 1.0)) throw std::invalid_argument("calibration out of range");
    const double sd = std::pow(static_cast<double>(plan.p), 1.0 - beta);
    axis.push_back(std::max<std::int64_t>(1, static_cast<std::int64_t>(std::llround(sd))));
  }
  for (std::int64_t s : axis)
    if (s < 1 || s > plan.p) throw std::invalid_argument("calibration out of range");
  return axis;
}

} // namespace

std::vector<PhasePoint> phase_sweep(const SweepPlan& plan) {
  if (plan.trials < 1 && !(plan.n_values.empty() && plan.a_values.empty()))
    throw std::invalid_argument("trials must be positive");

  if (plan.test == TestKind::lrt) throw std::invalid_argument("lrt is not a sweep test");

  const std::vector<CellAxis> n_axis = resolve_n_axis(plan);
  const std::vector<std::int64_t> s_axis = resolve_s_axis(plan);

  std::vector<PhasePoint> out;
  const RngStream master(plan.seed);
  std::uint64_t cell_id = 0;

  for (const CellAxis& ncell : n_axis) {
    for (std::int64_t s : s_axis) {
      const std::int64_t n = ncell.n_run;
      const Calibration cal = calibration_from_dims(plan.p, n, s, plan.regime);
      const double rho_star =
          std::sqrt(cell_boundary_rho_squared(plan.regime, plan.side, cal.a, cal.beta,
                                              static_cast<double>(plan.p)));
      const Grid grid = build_upper_grid(n, plan.delta);
      std::int64_t t_star = static_cast<std::int64_t>(
          std::llround(plan.t_star_frac * static_cast<double>(n)));
      t_star = std::max<std::int64_t>(1, std::min(t_star, n - 1));

      const RngStream h0_stream = master.substream(cell_id).substream(1);
      const RngStream h1_stream = master.substream(cell_id).substream(2);
      ++cell_id;

      const auto run = [&](const ObservationMatrix& x) {
        switch (plan.test) {
          case TestKind::pbj: return pbj_test(x, grid, plan.side, plan.gamma).reject;
          case TestKind::max_stat: return max_test(x, grid, plan.gamma).reject;
          case TestKind::combined:
            return combined_test(x, grid, plan.side, plan.gamma).reject;
          case TestKind::lrt: break; // rejected at plan validation
        }
        return false;
      };

      // shared null run for every multiplier in this cell
      std::atomic<std::int64_t> h0_rejects{0};
      parallel_trials(plan.trials, [&](std::int64_t i) {
        const ObservationMatrix x0 =
            generate_null(plan.p, n, {}, h0_stream.substream(static_cast<std::uint64_t>(i)));
        if (run(x0)) h0_rejects.fetch_add(1);
      });
      const double type1 =
          static_cast<double>(h0_rejects.load()) / static_cast<double>(plan.trials);
      const WilsonInterval ci1 = wilson_interval(h0_rejects.load(), plan.trials);

      AlternativeSpec spec;
      spec.p = plan.p;
      spec.n = n;
      spec.t_star = t_star;
      spec.side = plan.side;
      for (std::int64_t j = 0; j < s; ++j) {
        spec.support.push_back(j);
        if (plan.side == Side::two_sided) spec.sign_pattern.push_back(j % 2 == 0 ? 1 : -1);
      }

      for (double m : plan.multipliers) {
        spec.rho = m * rho_star;
        std::atomic<std::int64_t> h1_accepts{0};
        parallel_trials(plan.trials, [&](std::int64_t i) {
          const ObservationMatrix x1 = generate_alternative(
              spec, h1_stream.substream(static_cast<std::uint64_t>(i)));
          if (!run(x1)) h1_accepts.fetch_add(1);
        });
        const double type2 =
            static_cast<double>(h1_accepts.load()) / static_cast<double>(plan.trials);
        const WilsonInterval ci2 = wilson_interval(h1_accepts.load(), plan.trials);

        PhasePoint pt;
        pt.a = cal.a;
        pt.beta = cal.beta;
        pt.multiplier = m;
        pt.p = plan.p;
        pt.n = n;
        pt.s = s;
        pt.rho = spec.rho;
        pt.type1 = type1;
        pt.type1_lo = ci1.lo;
        pt.type1_hi = ci1.hi;
        pt.type2 = type2;
        pt.type2_lo = ci2.lo;
        pt.type2_hi = ci2.hi;
        pt.risk = type1 + type2;
        pt.saturated = ncell.saturated;
        out.push_back(pt);
      }
    }
  }
  return out;
}

void write_phase_csv(std::ostream& os, const std::vector<PhasePoint>& points) {
  os << "a,beta,multiplier,p,n,s,rho,type1,type1_lo,type1_hi,"
        "type2,type2_lo,type2_hi,risk,saturated_flag\n";
  char buf[512];
  for (const PhasePoint& pt : points) {
    std::snprintf(buf, sizeof(buf),
                  "%.10g,%.10g,%.10g,%lld,%lld,%lld,%.10g,%.10g,%.10g,%.10g,"
                  "%.10g,%.10g,%.10g,%.10g,%d\n",
                  pt.a, pt.beta, pt.multiplier,
                  static_cast<long long>(pt.p), static_cast<long long>(pt.n),
                  static_cast<long long>(pt.s), pt.rho, pt.type1, pt.type1_lo, pt.type1_hi,
                  pt.type2, pt.type2_lo, pt.type2_hi, pt.risk, pt.saturated ? 1 : 0);
    os << buf;
  }
}

} // namespace cpdetect
