#include "cpdetect/monte_carlo.hpp"

#include <atomic>
#include <cmath>
#include <mutex>
#include <cstdlib>
#include <sstream>
#include <thread>
#include <vector>

#include "cpdetect/likelihood.hpp"

namespace cpdetect {

WilsonInterval wilson_interval(std::int64_t successes, std::int64_t trials, double z) {
  if (trials < 1) throw std::invalid_argument("trials must be positive");
  const double nd = static_cast<double>(trials);
  const double phat = static_cast<double>(successes) / nd;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nd;
  const double center = (phat + z2 / (2.0 * nd)) / denom;
  const double half =
      z / denom * std::sqrt(phat * (1.0 - phat) / nd + z2 / (4.0 * nd * nd));
  WilsonInterval w;
  w.lo = std::max(0.0, center - half);
  w.hi = std::min(1.0, center + half);
  return w;
}

int worker_count() {
  if (const char* env = std::getenv("CPDETECT_WORKERS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<int>(v);
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

void parallel_trials(std::int64_t count, const std::function<void(std::int64_t)>& fn) {
  const int workers = std::min<std::int64_t>(worker_count(), std::max<std::int64_t>(count, 1));
  if (workers <= 1) {
    for (std::int64_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::int64_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      for (;;) {
        const std::int64_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          const std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          next.store(count);
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

namespace detail {

struct TestRunner {
  TestKind kind;
  Side side;
  double gamma;
  Grid grid;                       // scan grid for pbj/max/combined
  const SparseMixture* lrt_prior;  // only for TestKind::lrt

  bool rejects(const ObservationMatrix& x) const {
    switch (kind) {
      case TestKind::pbj:
        return pbj_test(x, grid, side, gamma).reject;
      case TestKind::max_stat:
        return max_test(x, grid, gamma).reject;
      case TestKind::combined:
        return combined_test(x, grid, side, gamma).reject;
      case TestKind::lrt:
        return lrt_test(x, *lrt_prior).reject;
    }
    return false;
  }
};

ObservationMatrix draw_h1(const H1Generator& h1, std::int64_t p, std::int64_t n,
                          RngStream stream) {
  if (const auto* alt = std::get_if<AlternativeSpec>(&h1))
    return generate_alternative(*alt, stream);
  if (const auto* m = std::get_if<SparseMixture>(&h1))
    return generate_mixture(MixturePrior{*m}, p, n, stream).x;
  if (const auto* sr = std::get_if<SingleRow>(&h1))
    return generate_mixture(MixturePrior{*sr}, p, n, stream).x;
  return generate_mixture(MixturePrior{std::get<EvenSpread>(h1)}, p, n, stream).x;
}

std::string echo_config(const ErrorEstimateConfig& c) {
  std::ostringstream os;
  os << "p=" << c.p << " n=" << c.n << " trials=" << c.trials << " seed=" << c.seed
     << " gamma=" << c.gamma << " side=" << (c.side == Side::one_sided ? "one" : "two")
     << " test=";
  switch (c.test) {
    case TestKind::pbj: os << "pbj"; break;
    case TestKind::max_stat: os << "max"; break;
    case TestKind::combined: os << "combined"; break;
    case TestKind::lrt: os << "lrt"; break;
  }
  return os.str();
}

} // namespace detail

McErrorReport estimate_errors(const ErrorEstimateConfig& config) {
  if (config.trials < 1) throw std::invalid_argument("trials must be positive");
  if (config.p < 1 || config.n < 2) throw std::invalid_argument("matrix dimensions too small");

  detail::TestRunner runner;
  runner.kind = config.test;
  runner.side = config.side;
  runner.gamma = config.gamma;
  runner.lrt_prior = nullptr;
  if (config.test == TestKind::lrt) {
    runner.lrt_prior = std::get_if<SparseMixture>(&config.h1);
    if (runner.lrt_prior == nullptr)
      throw std::invalid_argument("lrt test requires a sparse mixture alternative");
  } else {
    runner.grid = build_upper_grid(config.n, config.delta);
  }

  const RngStream master(config.seed);
  const RngStream h0_stream = master.substream(1);
  const RngStream h1_stream = master.substream(2);

  std::atomic<std::int64_t> h0_rejects{0};
  std::atomic<std::int64_t> h1_accepts{0};

  parallel_trials(config.trials, [&](std::int64_t i) {
    const ObservationMatrix x0 = generate_null(
        config.p, config.n, config.base_means, h0_stream.substream(static_cast<std::uint64_t>(i)));
    if (runner.rejects(x0)) h0_rejects.fetch_add(1);

    const ObservationMatrix x1 = detail::draw_h1(
        config.h1, config.p, config.n, h1_stream.substream(static_cast<std::uint64_t>(i)));
    if (!runner.rejects(x1)) h1_accepts.fetch_add(1);
  });

  McErrorReport r;
  r.trials = config.trials;
  r.h0_rejections = h0_rejects.load();
  r.h1_acceptances = h1_accepts.load();
  r.type1_hat = static_cast<double>(r.h0_rejections) / static_cast<double>(config.trials);
  r.type2_hat = static_cast<double>(r.h1_acceptances) / static_cast<double>(config.trials);
  r.type1_ci = wilson_interval(r.h0_rejections, config.trials);
  r.type2_ci = wilson_interval(r.h1_acceptances, config.trials);
  r.seed = config.seed;
  r.config_echo = detail::echo_config(config);
  return r;
}

} // namespace cpdetect
