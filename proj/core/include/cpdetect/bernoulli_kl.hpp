#pragma once

#include <cmath>
#include <stdexcept>

namespace cpdetect {

// KL divergence between Bernoulli(x) and Bernoulli(t):
//   K(x,t) = x log(x/t) + (1-x) log((1-x)/(1-t)).
// Endpoints x in {0,1} use the 0 log 0 = 0 convention, so
//   K(0,t) = -log(1-t) and K(1,t) = -log(t).
// The reference t must lie strictly inside (0,1).
inline double bern_kl(double x, double t) {
  if (!(t > 0.0 && t < 1.0)) throw std::invalid_argument("degenerate reference");
  if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("bern_kl: x outside [0,1]");
  if (x == 0.0) return -std::log1p(-t);
  if (x == 1.0) return -std::log(t);
  const double v = x * std::log(x / t) + (1.0 - x) * std::log((1.0 - x) / (1.0 - t));
  return v < 0.0 ? 0.0 : v; // rounding can leave a tiny negative near x == t
}

} // namespace cpdetect
