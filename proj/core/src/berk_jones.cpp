#include "cpdetect/berk_jones.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "cpdetect/bernoulli_kl.hpp"

namespace cpdetect {

namespace {

// Largest reference value fed to K; keeps K(x, 1) finite when a two-sided
// p-value rounds to exactly 1.
const double kPvalueCeil = std::nextafter(1.0, 0.0);

double clamp_reference(double t) {
  if (t < kPvalueFloor) return kPvalueFloor;
  if (t > kPvalueCeil) return kPvalueCeil;
  return t;
}

} // namespace

BjColumn bj_at_column(std::vector<double> pvals) {
  if (pvals.empty()) throw std::invalid_argument("no rows");
  std::sort(pvals.begin(), pvals.end());
  const std::int64_t p = static_cast<std::int64_t>(pvals.size());
  const double pd = static_cast<double>(p);
  BjColumn best;
  best.value = -std::numeric_limits<double>::infinity();
  for (std::int64_t j = 1; j <= p; ++j) {
    const double x = static_cast<double>(j) / pd;
    const double t = clamp_reference(pvals[static_cast<std::size_t>(j - 1)]);
    const double v = pd * bern_kl(x, t);
    if (v > best.value) {
      best.value = v;
      best.argmax_j = j;
    }
  }
  return best;
}

BjScanResult pbj_statistic(const ContrastMatrix& y, Side side) {
  const std::int64_t g = y.grid.size();
  if (g == 0) throw std::invalid_argument("empty grid");
  if (y.p == 0) throw std::invalid_argument("no rows");

  BjScanResult out;
  out.statistic = -std::numeric_limits<double>::infinity();
  std::vector<double> column(static_cast<std::size_t>(y.p));
  for (std::int64_t k = 0; k < g; ++k) {
    for (std::int64_t j = 0; j < y.p; ++j)
      column[static_cast<std::size_t>(j)] = pvalue_of(y.at(j, k), side);
    const BjColumn col = bj_at_column(column);
    if (col.value > out.statistic) {
      out.statistic = col.value;
      out.argmax_grid_index = k;
      out.argmax_order_index = col.argmax_j;
    }
  }
  out.penalized = out.statistic - 2.0 * std::log(static_cast<double>(g));
  return out;
}

BjScanResult pbj_statistic(const ObservationMatrix& x, const Grid& grid, Side side) {
  return pbj_statistic(contrast_matrix(x, grid), side);
}

TestDecision pbj_test_from(const BjScanResult& scan, std::int64_t p, double gamma) {
  if (!(gamma > 0.0)) throw std::invalid_argument("penalty exponent must be positive");
  TestDecision d;
  d.statistic = scan.penalized;
  d.threshold = 2.0 * (2.0 + gamma) * std::log(static_cast<double>(p));
  d.reject = d.statistic > d.threshold;
  d.degenerate_threshold = p == 1;
  return d;
}

TestDecision pbj_test(const ObservationMatrix& x, const Grid& grid, Side side,
                      double gamma) {
  return pbj_test_from(pbj_statistic(x, grid, side), x.p, gamma);
}

double max_contrast(const ContrastMatrix& y) {
  double m = -std::numeric_limits<double>::infinity();
  for (double v : y.values) m = std::max(m, v);
  return m;
}

TestDecision max_test_from(double max_y, std::int64_t p, std::int64_t grid_size,
                           double gamma) {
  if (!(gamma > 0.0)) throw std::invalid_argument("penalty exponent must be positive");
  TestDecision d;
  d.statistic = max_y;
  d.threshold =
      std::sqrt((2.0 + gamma) * std::log(static_cast<double>(p) * static_cast<double>(grid_size)));
  d.reject = d.statistic > d.threshold;
  d.degenerate_threshold = p * grid_size == 1;
  return d;
}

TestDecision max_test(const ObservationMatrix& x, const Grid& grid, double gamma) {
  const ContrastMatrix y = contrast_matrix(x, grid);
  return max_test_from(max_contrast(y), x.p, grid.size(), gamma);
}

CombinedDecision combined_test(const ObservationMatrix& x, const Grid& grid, Side side,
                               double gamma) {
  const ContrastMatrix y = contrast_matrix(x, grid);
  CombinedDecision c;
  c.pbj = pbj_test_from(pbj_statistic(y, side), x.p, gamma);
  c.max = max_test_from(max_contrast(y), x.p, grid.size(), gamma);
  c.reject = c.pbj.reject || c.max.reject;
  c.margin = std::max(c.pbj.statistic - c.pbj.threshold, c.max.statistic - c.max.threshold);
  return c;
}

} // namespace cpdetect
