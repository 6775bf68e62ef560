#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace cpdetect {

enum class GridFlavor { upper_symmetric, lower_geometric };

// Ordered set of candidate changepoint columns, all in [1, n-1].
// Upper grids are the dense symmetric scan grids with ratio 1+delta;
// lower grids are the sparse base-b grids used by the mixture priors.
struct Grid {
  std::vector<std::int64_t> points; // strictly increasing
  std::int64_t n = 0;
  GridFlavor flavor = GridFlavor::upper_symmetric;
  double param = 0.0; // delta (upper) or base (lower)

  std::int64_t size() const { return static_cast<std::int64_t>(points.size()); }
};

// Auto rule delta = 1/loglog n, capped at 0.25 so desk-scale grids stay
// dense enough to cover every candidate location. Requires loglog n > 1.
double auto_delta(std::int64_t n);

// Auto rule base = log n.
double auto_base(std::int64_t n);

// Deduplicated sorted union of {floor((1+delta)^i)} and the mirrored
// points {floor(n - (1+delta)^i)} for 0 <= i <= log_{1+delta}(n/2).
// delta = nullopt selects the auto rule.
Grid build_upper_grid(std::int64_t n, std::optional<double> delta = std::nullopt);

// Deduplicated {floor(base^k) : 1 <= k <= log_base(n-1)} intersected with
// [1, n-1]. base = nullopt selects base = log n (requires n >= 16).
Grid build_lower_grid(std::int64_t n, std::optional<double> base = std::nullopt);

// Exact multiplicative attenuation of the contrast mean when scanning at
// grid point t_tilde instead of the true changepoint t_star <= n/2:
//   F = sqrt(t_tilde/t_star) * sqrt((n-t_star)/(n-t_tilde)).
// Requires t_tilde in (t_star/(1+delta), t_star]; then F lies in
// [(1+2*delta)^{-1/2}, 1].
double coverage_factor(std::int64_t n, std::int64_t t_star, std::int64_t t_tilde,
                       double delta);

} // namespace cpdetect
