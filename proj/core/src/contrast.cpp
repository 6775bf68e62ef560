#include "cpdetect/contrast.hpp"

#include <cmath>
#include <stdexcept>

#include "cpdetect/normal.hpp"

namespace cpdetect {

namespace {

// Neumaier-compensated prefix sums; contrasts difference two large sums,
// so the prefixes themselves are kept compensated.
void prefix_sums(const double* row, std::int64_t n, std::vector<double>& prefix) {
  double sum = 0.0;
  double comp = 0.0;
  prefix[0] = 0.0;
  for (std::int64_t t = 0; t < n; ++t) {
    const double v = row[t];
    const double next = sum + v;
    if (std::fabs(sum) >= std::fabs(v))
      comp += (sum - next) + v;
    else
      comp += (v - next) + sum;
    sum = next;
    prefix[static_cast<std::size_t>(t + 1)] = sum + comp;
  }
}

double contrast_from_prefix(const std::vector<double>& prefix, std::int64_t n,
                            std::int64_t t) {
  const double total = prefix[static_cast<std::size_t>(n)];
  const double head = prefix[static_cast<std::size_t>(t)];
  const double td = static_cast<double>(t);
  const double nd = static_cast<double>(n);
  const double scale = std::sqrt(td * (nd - td) / nd);
  return scale * (head / td - (total - head) / (nd - td));
}

} // namespace

std::vector<double> contrast_at(const ObservationMatrix& x, std::int64_t t) {
  if (t < 1 || t > x.n - 1) throw std::invalid_argument("split outside sequence");
  std::vector<double> out(static_cast<std::size_t>(x.p));
  std::vector<double> prefix(static_cast<std::size_t>(x.n + 1));
  for (std::int64_t j = 0; j < x.p; ++j) {
    prefix_sums(x.row(j), x.n, prefix);
    out[static_cast<std::size_t>(j)] = contrast_from_prefix(prefix, x.n, t);
  }
  return out;
}

ContrastMatrix contrast_matrix(const ObservationMatrix& x, const Grid& grid) {
  if (grid.n != x.n) throw std::invalid_argument("grid/matrix n disagree");
  const std::int64_t g = grid.size();
  ContrastMatrix y;
  y.p = x.p;
  y.grid = grid;
  y.values.resize(static_cast<std::size_t>(x.p * g));
  std::vector<double> prefix(static_cast<std::size_t>(x.n + 1));
  for (std::int64_t j = 0; j < x.p; ++j) {
    prefix_sums(x.row(j), x.n, prefix);
    for (std::int64_t k = 0; k < g; ++k) {
      y.values[static_cast<std::size_t>(j * g + k)] =
          contrast_from_prefix(prefix, x.n, grid.points[static_cast<std::size_t>(k)]);
    }
  }
  return y;
}

double pvalue_of(double y, Side side) {
  double p = side == Side::one_sided ? std_normal_sf(y) : 2.0 * std_normal_sf(std::fabs(y));
  if (p > 1.0) p = 1.0;
  if (p < kPvalueFloor) p = kPvalueFloor;
  return p;
}

std::vector<double> pvalues(const ContrastMatrix& y, Side side) {
  std::vector<double> out(y.values.size());
  for (std::size_t i = 0; i < y.values.size(); ++i) out[i] = pvalue_of(y.values[i], side);
  return out;
}

} // namespace cpdetect
