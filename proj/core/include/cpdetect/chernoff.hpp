#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace cpdetect {

// Tail bound for n K(j/n, p_(j)) over uniform order statistics, n > 2:
//   j == 1:  (1 + 9/e) exp(-s)
//   j >= 2:  e sqrt(2) j exp(-(1 - 1/j) s)
// The bound may exceed 1 (vacuous) and is returned as-is.
inline double chernoff_bound(std::int64_t n, std::int64_t j, double s) {
  if (n <= 2) throw std::invalid_argument("lemma requires n > 2");
  if (j < 1 || j > n) throw std::invalid_argument("order index outside [1, n]");
  if (!(s > 0.0)) throw std::invalid_argument("s must be positive");
  const double e = std::exp(1.0);
  if (j == 1) return (1.0 + 9.0 / e) * std::exp(-s);
  const double jd = static_cast<double>(j);
  return e * std::sqrt(2.0) * jd * std::exp(-(1.0 - 1.0 / jd) * s);
}

} // namespace cpdetect
