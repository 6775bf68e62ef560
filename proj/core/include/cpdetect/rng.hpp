#pragma once

#include <cmath>
#include <cstdint>

namespace cpdetect {

// Counter-based generator: draw i of a stream is a pure function of
// (key, i), so trial and row substreams reproduce bit-identically no matter
// how work is scheduled across threads.
namespace rngdetail {

inline std::uint64_t finalize(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t value_at(std::uint64_t key, std::uint64_t i) {
  return finalize(key + 0x9e3779b97f4a7c15ULL * (i + 1));
}

inline std::uint64_t derive_key(std::uint64_t parent, std::uint64_t id) {
  return value_at(parent ^ 0xd1b54a32d192ed03ULL, id);
}

} // namespace rngdetail

class RngStream {
 public:
  explicit RngStream(std::uint64_t key) : key_(key) {}

  RngStream substream(std::uint64_t id) const {
    return RngStream(rngdetail::derive_key(key_, id));
  }

  std::uint64_t next_u64() { return rngdetail::value_at(key_, ctr_++); }

  // Uniform on (0, 1].
  double next_unit() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1p-53;
  }

  // Standard normal via Box-Muller; pairs come from consecutive counters.
  double next_normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = next_unit();
    const double u2 = next_unit();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double angle = 6.2831853071795864769 * u2;
    spare_ = r * std::sin(angle);
    have_spare_ = true;
    return r * std::cos(angle);
  }

 private:
  std::uint64_t key_;
  std::uint64_t ctr_ = 0;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

} // namespace cpdetect
