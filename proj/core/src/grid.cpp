#include "cpdetect/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cpdetect {

namespace {

// floor(base^k) and floor(n - base^k) with a snap guard so mathematically
// integer powers (e.g. 2^i, 10^k) survive floating-point drift.
long double power_of(double base, std::int64_t k) {
  return std::pow(static_cast<long double>(base), static_cast<long double>(k));
}

std::int64_t snapped_floor(long double v) {
  return static_cast<std::int64_t>(std::floor(v + 1e-9L));
}

std::int64_t exponent_limit(double base, double limit) {
  // largest integer k with base^k <= limit, endpoint included when exact
  return static_cast<std::int64_t>(std::floor(std::log(limit) / std::log(base) + 1e-9));
}

} // namespace

double auto_delta(std::int64_t n) {
  if (n < 4) throw std::invalid_argument("sequence too short");
  const double ll = std::log(std::log(static_cast<double>(n)));
  if (!(ll > 1.0)) throw std::invalid_argument("delta auto-rule undefined at this n");
  return std::min(1.0 / ll, 0.25);
}

double auto_base(std::int64_t n) {
  if (n < 16) throw std::invalid_argument("sequence too short");
  return std::log(static_cast<double>(n));
}

Grid build_upper_grid(std::int64_t n, std::optional<double> delta) {
  if (n < 4) throw std::invalid_argument("sequence too short");
  const double d = delta ? *delta : auto_delta(n);
  if (!(d > 0.0)) throw std::invalid_argument("delta must be positive");

  const std::int64_t i_max = exponent_limit(1.0 + d, static_cast<double>(n) / 2.0);
  std::vector<std::int64_t> pts;
  pts.reserve(2 * static_cast<std::size_t>(i_max + 1));
  for (std::int64_t i = 0; i <= i_max; ++i) {
    const long double v = power_of(1.0 + d, i);
    const std::int64_t left = snapped_floor(v);
    if (left >= 1 && left <= n - 1) pts.push_back(left);
    const std::int64_t right = snapped_floor(static_cast<long double>(n) - v);
    if (right >= 1 && right <= n - 1) pts.push_back(right);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  Grid g;
  g.points = std::move(pts);
  g.n = n;
  g.flavor = GridFlavor::upper_symmetric;
  g.param = d;
  return g;
}

Grid build_lower_grid(std::int64_t n, std::optional<double> base) {
  if (n < 4) throw std::invalid_argument("sequence too short");
  if (!base && n < 16) throw std::invalid_argument("sequence too short");
  const double b = base ? *base : auto_base(n);
  if (!(b > 1.0)) throw std::invalid_argument("base must exceed 1");

  const std::int64_t k_max = exponent_limit(b, static_cast<double>(n - 1));
  std::vector<std::int64_t> pts;
  for (std::int64_t k = 1; k <= k_max; ++k) {
    const std::int64_t t = snapped_floor(power_of(b, k));
    if (t >= 1 && t <= n - 1) pts.push_back(t);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  Grid g;
  g.points = std::move(pts);
  g.n = n;
  g.flavor = GridFlavor::lower_geometric;
  g.param = b;
  return g;
}

double coverage_factor(std::int64_t n, std::int64_t t_star, std::int64_t t_tilde,
                       double delta) {
  if (t_star < 1 || 2 * t_star > n) throw std::invalid_argument("t* must lie in [1, n/2]");
  const bool in_bracket =
      static_cast<double>(t_tilde) * (1.0 + delta) > static_cast<double>(t_star) &&
      t_tilde <= t_star;
  if (!in_bracket) throw std::invalid_argument("grid point does not cover t*");
  return std::sqrt(static_cast<double>(t_tilde) / static_cast<double>(t_star)) *
         std::sqrt(static_cast<double>(n - t_star) / static_cast<double>(n - t_tilde));
}

} // namespace cpdetect
