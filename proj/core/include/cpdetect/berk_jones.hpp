#pragma once

#include <cstdint>
#include <vector>

#include "cpdetect/contrast.hpp"
#include "cpdetect/grid.hpp"

namespace cpdetect {

// Berk-Jones value of one grid column: sorts the p-values ascending and
// maximizes p * K(j/p, p_(j)) over all j in [p]. argmax_j is 1-based and
// the smallest index on ties.
struct BjColumn {
  double value = 0.0;
  std::int64_t argmax_j = 0;
};
BjColumn bj_at_column(std::vector<double> pvals);

struct BjScanResult {
  double statistic = 0.0;              // max over grid columns of the BJ value
  std::int64_t argmax_grid_index = 0;  // 0-based index into grid.points
  std::int64_t argmax_order_index = 0; // j attaining the inner max
  double penalized = 0.0;              // statistic - 2 log |grid|
};

BjScanResult pbj_statistic(const ContrastMatrix& y, Side side);
BjScanResult pbj_statistic(const ObservationMatrix& x, const Grid& grid, Side side);

struct TestDecision {
  double statistic = 0.0;
  double threshold = 0.0;
  bool reject = false;
  // p * |grid| == 1 makes the max-test threshold (and the PBJ threshold at
  // p == 1) collapse to zero; flagged rather than rejected outright.
  bool degenerate_threshold = false;
};

// Penalized Berk-Jones test: reject iff penalized statistic > 2(2+gamma) log p.
TestDecision pbj_test(const ObservationMatrix& x, const Grid& grid, Side side,
                      double gamma);
TestDecision pbj_test_from(const BjScanResult& scan, std::int64_t p, double gamma);

// Max test: reject iff max_{j,k} Y_{jk} > sqrt((2+gamma) log(p |grid|)).
TestDecision max_test(const ObservationMatrix& x, const Grid& grid, double gamma);
TestDecision max_test_from(double max_contrast, std::int64_t p, std::int64_t grid_size,
                           double gamma);
double max_contrast(const ContrastMatrix& y);

struct CombinedDecision {
  TestDecision pbj;
  TestDecision max;
  bool reject = false;
  double margin = 0.0; // max of the two (statistic - threshold) margins
};
CombinedDecision combined_test(const ObservationMatrix& x, const Grid& grid, Side side,
                               double gamma);

} // namespace cpdetect
