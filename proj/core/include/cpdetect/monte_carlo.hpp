#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>

#include "cpdetect/berk_jones.hpp"
#include "cpdetect/generators.hpp"

namespace cpdetect {

struct WilsonInterval {
  double lo = 0.0;
  double hi = 1.0;
};
WilsonInterval wilson_interval(std::int64_t successes, std::int64_t trials,
                               double z = 1.959963984540054);

enum class TestKind { pbj, max_stat, combined, lrt };

using H1Generator = std::variant<AlternativeSpec, SparseMixture, SingleRow, EvenSpread>;

struct ErrorEstimateConfig {
  std::int64_t p = 0;
  std::int64_t n = 0;
  std::vector<double> base_means; // H0 row constants, empty = zero
  H1Generator h1;
  TestKind test = TestKind::combined;
  Side side = Side::one_sided;
  double gamma = 2.0;
  std::optional<double> delta; // upper-grid delta, nullopt = auto
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
};

struct McErrorReport {
  std::int64_t trials = 0;
  double type1_hat = 0.0;
  WilsonInterval type1_ci;
  double type2_hat = 0.0;
  WilsonInterval type2_ci;
  std::int64_t h0_rejections = 0;
  std::int64_t h1_acceptances = 0;
  std::uint64_t seed = 0;
  std::string config_echo;
};

// Paired H0/H1 trial streams on independent substreams; counts are summed
// order-insensitively so the report is bit-identical for any worker count.
McErrorReport estimate_errors(const ErrorEstimateConfig& config);

// Worker count: CPDETECT_WORKERS when set, hardware concurrency otherwise.
int worker_count();

// Splits [0, count) across workers and joins; fn(index) must be thread-safe.
void parallel_trials(std::int64_t count, const std::function<void(std::int64_t)>& fn);

} // namespace cpdetect
