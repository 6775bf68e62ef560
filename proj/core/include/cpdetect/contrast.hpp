#pragma once

#include <cstdint>
#include <vector>

#include "cpdetect/grid.hpp"

namespace cpdetect {

enum class Side { one_sided, two_sided };

// p x n observation matrix X = theta + noise, row-major.
struct ObservationMatrix {
  std::int64_t p = 0;
  std::int64_t n = 0;
  std::vector<double> values;

  ObservationMatrix() = default;
  ObservationMatrix(std::int64_t rows, std::int64_t cols)
      : p(rows), n(cols), values(static_cast<std::size_t>(rows * cols), 0.0) {}

  double& at(std::int64_t j, std::int64_t t) {
    return values[static_cast<std::size_t>(j * n + t)];
  }
  double at(std::int64_t j, std::int64_t t) const {
    return values[static_cast<std::size_t>(j * n + t)];
  }
  const double* row(std::int64_t j) const { return values.data() + j * n; }
  double* row(std::int64_t j) { return values.data() + j * n; }
};

// p x |grid| matrix of contrasts Y_{jk}; column k corresponds to grid point k.
struct ContrastMatrix {
  std::int64_t p = 0;
  Grid grid;
  std::vector<double> values; // row-major p x grid.size()

  double at(std::int64_t j, std::int64_t k) const {
    return values[static_cast<std::size_t>(j * grid.size() + k)];
  }
};

// Floor applied to p-values before anything downstream takes logs.
inline constexpr double kPvalueFloor = 1e-300;

// Per-row contrast at split t: sqrt(t(n-t)/n) * (mean of first t - mean of rest).
std::vector<double> contrast_at(const ObservationMatrix& x, std::int64_t t);

// All grid columns at once via compensated per-row prefix sums,
// O(p (n + |grid|)) total.
ContrastMatrix contrast_matrix(const ObservationMatrix& x, const Grid& grid);

// One-sided: sf(y).  Two-sided: 2 sf(|y|).  Both clamped to [kPvalueFloor, 1].
double pvalue_of(double y, Side side);

// p x |grid| p-value matrix, row-major, same layout as the contrast matrix.
std::vector<double> pvalues(const ContrastMatrix& y, Side side);

} // namespace cpdetect
