#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cpdetect {

// Unit-norm changepoint direction for a split at column t: the first t
// entries equal head, the remaining n-t equal tail, and the inner product
// with a data row equals the normalized mean-difference contrast at t.
struct ThetaVector {
  std::int64_t n = 0;
  std::int64_t t = 0;
  double head = 0.0; //  sqrt((n-t)/(n t))
  double tail = 0.0; // -sqrt(t/(n (n-t)))
};

inline ThetaVector theta_vector(std::int64_t n, std::int64_t t) {
  if (t < 1 || t > n - 1) throw std::invalid_argument("split outside sequence");
  const double nd = static_cast<double>(n);
  const double td = static_cast<double>(t);
  ThetaVector v;
  v.n = n;
  v.t = t;
  v.head = std::sqrt((nd - td) / (nd * td));
  v.tail = -std::sqrt(td / (nd * (nd - td)));
  return v;
}

// <theta^(t1), theta^(t2)> in closed form, free of the grid base:
//   sqrt(min/max) * sqrt((n-max)/(n-min)).
inline double theta_inner(std::int64_t n, std::int64_t t1, std::int64_t t2) {
  if (t1 < 1 || t1 > n - 1 || t2 < 1 || t2 > n - 1)
    throw std::invalid_argument("split outside sequence");
  const double lo = static_cast<double>(std::min(t1, t2));
  const double hi = static_cast<double>(std::max(t1, t2));
  const double nd = static_cast<double>(n);
  return std::sqrt(lo / hi) * std::sqrt((nd - hi) / (nd - lo));
}

// Full length-n vector; only for oracle tests, hot paths use prefix sums.
inline std::vector<double> materialize(const ThetaVector& v) {
  std::vector<double> out(static_cast<std::size_t>(v.n));
  for (std::int64_t i = 0; i < v.n; ++i)
    out[static_cast<std::size_t>(i)] = i < v.t ? v.head : v.tail;
  return out;
}

} // namespace cpdetect
