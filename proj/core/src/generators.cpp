#include "cpdetect/generators.hpp"

#include <cmath>
#include <stdexcept>

#include "cpdetect/theta.hpp"

namespace cpdetect {

namespace {

void fill_noise(ObservationMatrix& x, RngStream& stream) {
  for (std::int64_t j = 0; j < x.p; ++j) {
    RngStream row = stream.substream(static_cast<std::uint64_t>(j));
    double* out = x.row(j);
    for (std::int64_t t = 0; t < x.n; ++t) out[t] = row.next_normal();
  }
}

void add_theta_mean(ObservationMatrix& x, std::int64_t j, std::int64_t t, double rho,
                    int sign) {
  const ThetaVector v = theta_vector(x.n, t);
  double* out = x.row(j);
  const double head = sign * rho * v.head;
  const double tail = sign * rho * v.tail;
  for (std::int64_t i = 0; i < t; ++i) out[i] += head;
  for (std::int64_t i = t; i < x.n; ++i) out[i] += tail;
}

} // namespace

ObservationMatrix generate_null(std::int64_t p, std::int64_t n,
                                const std::vector<double>& base_means, RngStream stream) {
  if (p < 1 || n < 2) throw std::invalid_argument("matrix dimensions too small");
  if (!base_means.empty() && static_cast<std::int64_t>(base_means.size()) != p)
    throw std::invalid_argument("base_means length must be p");
  ObservationMatrix x(p, n);
  fill_noise(x, stream);
  if (!base_means.empty()) {
    for (std::int64_t j = 0; j < p; ++j) {
      double* row = x.row(j);
      for (std::int64_t t = 0; t < n; ++t) row[t] += base_means[static_cast<std::size_t>(j)];
    }
  }
  return x;
}

ObservationMatrix generate_alternative(const AlternativeSpec& spec, RngStream stream) {
  if (spec.p < 1 || spec.n < 2) throw std::invalid_argument("matrix dimensions too small");
  if (spec.t_star < 1 || spec.t_star > spec.n - 1)
    throw std::invalid_argument("split outside sequence");
  if (static_cast<std::int64_t>(spec.support.size()) > spec.p)
    throw std::invalid_argument("support larger than row count");
  if (spec.side == Side::two_sided && spec.sign_pattern.size() != spec.support.size())
    throw std::invalid_argument("sign_pattern length must match support");

  ObservationMatrix x = generate_null(spec.p, spec.n, spec.base_means, stream);

  const double td = static_cast<double>(spec.t_star);
  const double nd = static_cast<double>(spec.n);
  const double jump = spec.rho * std::sqrt(nd / (td * (nd - td)));
  for (std::size_t i = 0; i < spec.support.size(); ++i) {
    const std::int64_t j = spec.support[i];
    if (j < 0 || j >= spec.p) throw std::invalid_argument("support row outside matrix");
    const double sgn = spec.side == Side::two_sided ? spec.sign_pattern[i] : 1;
    double* row = x.row(j);
    const double pre = sgn * jump / 2.0;
    for (std::int64_t t = 0; t < spec.t_star; ++t) row[t] += pre;
    for (std::int64_t t = spec.t_star; t < spec.n; ++t) row[t] -= pre;
  }
  return x;
}

MixtureDraw generate_mixture(const MixturePrior& prior, std::int64_t p, std::int64_t n,
                             RngStream stream) {
  if (p < 1 || n < 2) throw std::invalid_argument("matrix dimensions too small");

  MixtureDraw draw;
  draw.x = ObservationMatrix(p, n);

  // substream 0: the draw of k* and the row indicators; rows get 1..p
  RngStream meta = stream.substream(0);
  RngStream noise = stream.substream(1);
  fill_noise(draw.x, noise);

  const auto pick_k = [&meta](const Grid& g) {
    if (g.size() == 0) throw std::invalid_argument("empty grid");
    return static_cast<std::int64_t>(meta.next_u64() % static_cast<std::uint64_t>(g.size()));
  };

  if (const auto* m = std::get_if<SparseMixture>(&prior)) {
    if (!(m->epsilon > 0.0 && m->epsilon < 1.0) && m->epsilon != 0.0)
      throw std::invalid_argument("epsilon outside [0,1)");
    if (m->grid.n != n) throw std::invalid_argument("grid/matrix n disagree");
    draw.k_star = pick_k(m->grid);
    const std::int64_t t = m->grid.points[static_cast<std::size_t>(draw.k_star)];
    for (std::int64_t j = 0; j < p; ++j) {
      if (meta.next_unit() <= m->epsilon) {
        int sgn = 1;
        if (m->side == Side::two_sided && meta.next_unit() <= 0.5) sgn = -1;
        add_theta_mean(draw.x, j, t, m->rho, sgn);
        draw.support.push_back(j);
        draw.sign.push_back(sgn);
      }
    }
  } else if (const auto* sr = std::get_if<SingleRow>(&prior)) {
    if (sr->grid.n != n) throw std::invalid_argument("grid/matrix n disagree");
    draw.k_star = pick_k(sr->grid);
    const std::int64_t t = sr->grid.points[static_cast<std::size_t>(draw.k_star)];
    const std::int64_t j =
        static_cast<std::int64_t>(meta.next_u64() % static_cast<std::uint64_t>(p));
    add_theta_mean(draw.x, j, t, sr->rho, 1);
    draw.support.push_back(j);
    draw.sign.push_back(1);
  } else {
    const auto& es = std::get<EvenSpread>(prior);
    if (es.grid.n != n) throw std::invalid_argument("grid/matrix n disagree");
    if (es.s < 0 || es.s > p) throw std::invalid_argument("support larger than row count");
    draw.k_star = pick_k(es.grid);
    const std::int64_t t = es.grid.points[static_cast<std::size_t>(draw.k_star)];
    for (std::int64_t j = 0; j < es.s; ++j) {
      add_theta_mean(draw.x, j, t, es.rho, 1);
      draw.support.push_back(j);
      draw.sign.push_back(1);
    }
  }
  draw.nonnull_count = static_cast<std::int64_t>(draw.support.size());
  return draw;
}

ObservationMatrix mixture_mean_matrix(const MixtureDraw& draw, const MixturePrior& prior,
                                      std::int64_t p, std::int64_t n) {
  ObservationMatrix theta(p, n);
  const auto grid_and_rho = [&]() -> std::pair<const Grid*, double> {
    if (const auto* m = std::get_if<SparseMixture>(&prior)) return {&m->grid, m->rho};
    if (const auto* sr = std::get_if<SingleRow>(&prior)) return {&sr->grid, sr->rho};
    return {&std::get<EvenSpread>(prior).grid, std::get<EvenSpread>(prior).rho};
  }();
  const std::int64_t t = grid_and_rho.first->points[static_cast<std::size_t>(draw.k_star)];
  for (std::size_t i = 0; i < draw.support.size(); ++i)
    add_theta_mean(theta, draw.support[i], t, grid_and_rho.second, draw.sign[i]);
  return theta;
}

namespace {

// Scans a mean matrix for the two-piece structure of the alternative class.
// Returns false unless every row is constant or jumps once at a shared t*.
bool class_membership(const ObservationMatrix& theta, double rho, std::int64_t min_support,
                      bool two_sided, double tol) {
  std::int64_t t_star = -1;
  std::int64_t qualifying = 0;
  for (std::int64_t j = 0; j < theta.p; ++j) {
    const double* row = theta.row(j);
    std::int64_t split = -1;
    for (std::int64_t t = 1; t < theta.n; ++t) {
      if (row[t] != row[t - 1]) {
        if (split != -1) return false; // more than one jump
        split = t;
      }
    }
    if (split == -1) continue; // constant row
    if (t_star == -1)
      t_star = split;
    else if (t_star != split)
      return false; // changepoint not shared
    const double td = static_cast<double>(split);
    const double nd = static_cast<double>(theta.n);
    const double diff = row[0] - row[split];
    const double normalized = std::sqrt(td * (nd - td) / nd) * diff;
    const double size = two_sided ? std::fabs(normalized) : normalized;
    if (size >= rho - tol) ++qualifying;
  }
  return qualifying >= min_support;
}

} // namespace

bool in_one_sided_class(const ObservationMatrix& theta, double rho,
                        std::int64_t min_support, double tol) {
  return class_membership(theta, rho, min_support, false, tol);
}

bool in_two_sided_class(const ObservationMatrix& theta, double rho,
                        std::int64_t min_support, double tol) {
  return class_membership(theta, rho, min_support, true, tol);
}

} // namespace cpdetect
