#include "cpdetect/boundary.hpp"

#include <cmath>
#include <stdexcept>

namespace cpdetect {

namespace {

constexpr std::int64_t kNClamp = std::int64_t{1} << 62;

void check_regime1_domain(double a, double beta, double p) {
  if (!(a > 0.0) || !(beta > 0.0 && beta < 1.0) || !(p > 1.0))
    throw std::invalid_argument("calibration out of range");
}

} // namespace

BoundaryValue boundary_one_sided(double a, double beta, double p) {
  check_regime1_domain(a, beta, p);
  const double logp = std::log(p);
  if (a <= 1.0 - 2.0 * beta)
    return {std::pow(p, a - (1.0 - 2.0 * beta)), BoundaryCase::dense};
  if (a <= 1.0 - 4.0 * beta / 3.0)
    return {(a - (1.0 - 2.0 * beta)) * logp, BoundaryCase::moderate};
  if (a <= 1.0 - beta) {
    const double d = std::sqrt(1.0 - a) - std::sqrt(1.0 - a - beta);
    return {2.0 * d * d * logp, BoundaryCase::sparse};
  }
  return {std::pow(p, a - (1.0 - beta)), BoundaryCase::ultra_sparse};
}

BoundaryValue boundary_two_sided(double a, double beta, double p) {
  check_regime1_domain(a, beta, p);
  if (a <= 1.0 - 2.0 * beta)
    return {std::pow(p, (a - (1.0 - 2.0 * beta)) / 2.0), BoundaryCase::dense};
  return boundary_one_sided(a, beta, p);
}

Regime2Value r2_star(double a, double beta) {
  if (!(a > 0.0) || !(beta > 0.5 && beta <= 1.0))
    throw std::invalid_argument("second-regime boundary defined for sparse beta only");
  if (beta == 1.0) return {1.0 + a, Regime2Case::beta_one};
  if (beta <= 0.75) return {beta - 0.5, Regime2Case::beta34};
  const double d = 1.0 - std::sqrt(1.0 - beta);
  return {d * d, Regime2Case::beta_1minus};
}

double idj_mu_star(double beta, double p) {
  if (!(beta > 0.0 && beta < 1.0) || !(p > 1.0))
    throw std::invalid_argument("calibration out of range");
  const double logp = std::log(p);
  if (beta <= 0.5) return std::pow(p, 2.0 * beta - 1.0);
  if (beta <= 0.75) return (2.0 * beta - 1.0) * logp;
  const double d = 1.0 - std::sqrt(1.0 - beta);
  return 2.0 * d * d * logp;
}

ReferenceRates reference_rates(std::int64_t p, std::int64_t n, std::int64_t s) {
  if (s < 1 || s > p || n < 3) throw std::invalid_argument("calibration out of range");
  const double pd = static_cast<double>(p);
  const double sd = static_cast<double>(s);
  const double e = std::exp(1.0);

  ReferenceRates r;
  r.collier = sd >= std::sqrt(pd) ? std::sqrt(pd) : sd * std::log(e * pd / (sd * sd));

  const double ll = std::log(std::log(8.0 * static_cast<double>(n)));
  r.liu = sd > std::sqrt(pd * ll) ? std::sqrt(pd * ll)
                                  : sd * std::log(e * pd * ll / (sd * sd)) + ll;
  return r;
}

Calibration calibration_from_dims(std::int64_t p, std::int64_t n, std::int64_t s,
                                  Regime regime) {
  if (p < 2 || s < 1 || s > p) throw std::invalid_argument("calibration out of range");
  const double logp = std::log(static_cast<double>(p));
  double iterated = 0.0;
  if (regime == Regime::three_log) {
    if (n <= 15) throw std::invalid_argument("n too small for regime");
    iterated = std::log(std::log(std::log(static_cast<double>(n))));
    if (!(iterated > 0.0)) throw std::invalid_argument("n too small for regime");
  } else {
    if (n <= 2) throw std::invalid_argument("n too small for regime");
    iterated = std::log(std::log(static_cast<double>(n)));
    if (!(iterated > 0.0)) throw std::invalid_argument("n too small for regime");
  }
  Calibration cal;
  cal.regime = regime;
  cal.p = p;
  cal.a = iterated / logp;
  cal.beta = s == 1 ? 1.0 : 1.0 - std::log(static_cast<double>(s)) / logp;
  return cal;
}

DeskDims dims_from_calibration(const Calibration& cal) {
  if (cal.p < 2 || !(cal.a > 0.0) || !(cal.beta > 0.0 && cal.beta <= 1.0))
    throw std::invalid_argument("calibration out of range");
  const double logp = std::log(static_cast<double>(cal.p));

  DeskDims d;
  d.s = std::max<std::int64_t>(
      1, static_cast<std::int64_t>(std::llround(std::pow(static_cast<double>(cal.p),
                                                         1.0 - cal.beta))));

  // log n computed first; anything past the 2^62 clamp is reported, not built
  const double log_clamp = std::log(2.0) * 62.0;
  double log_n = 0.0;
  if (cal.regime == Regime::three_log) {
    const double ll = std::exp(cal.a * logp); // loglog n
    log_n = ll > std::log(log_clamp) ? 2.0 * log_clamp : std::exp(ll);
  } else {
    log_n = std::exp(cal.a * logp);
  }
  if (log_n > log_clamp) {
    d.n = kNClamp;
    d.saturated = true;
  } else {
    d.n = static_cast<std::int64_t>(std::llround(std::exp(log_n)));
    d.saturated = false;
  }
  return d;
}

std::string to_string(BoundaryCase c) {
  switch (c) {
    case BoundaryCase::dense: return "Dense";
    case BoundaryCase::moderate: return "Moderate";
    case BoundaryCase::sparse: return "Sparse";
    case BoundaryCase::ultra_sparse: return "UltraSparse";
  }
  return "?";
}

std::string to_string(Regime2Case c) {
  switch (c) {
    case Regime2Case::beta34: return "Beta34";
    case Regime2Case::beta_1minus: return "Beta1Minus";
    case Regime2Case::beta_one: return "BetaOne";
  }
  return "?";
}

} // namespace cpdetect
