#include "braidfix/fixpoint.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <random>
#include <thread>

namespace braidfix {

void SolverConfig::validate() const {
  if (seeds < 1)
    throw DomainError("solver needs at least one seed");
  if (max_iters < 1)
    throw DomainError("max_iters must be positive");
  if (!(residual_tol > 0.0) || !(dedup_tol > 0.0) || !(fd_step > 0.0))
    throw DomainError("solver tolerances must be positive");
}

const char *to_string(IndexSign s) {
  switch (s) {
  case IndexSign::negative:
    return "-1";
  case IndexSign::positive:
    return "+1";
  case IndexSign::degenerate:
    return "degenerate";
  }
  return "degenerate";
}

namespace detail {

Eigen::MatrixXd propagate_tangents(const BraidWord &b, std::span<const Vec3> vs,
                                   const Eigen::MatrixXd &tangents) {
  const Eigen::Index k = tangents.cols();
  std::vector<Vec3> x(vs.begin(), vs.end());
  Eigen::MatrixXd dx = tangents;
  auto dref = [](const Vec3 &a, const Vec3 &c, const Vec3 &da, const Vec3 &dc) -> Vec3 {
    // d/dt of 2(a.c)a - c
    return 2.0 * ((da.dot(c) + a.dot(dc)) * a + a.dot(c) * da) - dc;
  };
  for (int g : b.letters()) {
    const std::size_t i = static_cast<std::size_t>(std::abs(g) - 1);
    const Eigen::Index r = static_cast<Eigen::Index>(3 * i);
    const Vec3 a = x[i], c = x[i + 1];
    for (Eigen::Index col = 0; col < k; ++col) {
      const Vec3 da = dx.block<3, 1>(r, col);
      const Vec3 dc = dx.block<3, 1>(r + 3, col);
      if (g > 0) {
        dx.block<3, 1>(r, col) = dref(a, c, da, dc);
        dx.block<3, 1>(r + 3, col) = da;
      } else {
        dx.block<3, 1>(r, col) = dc;
        dx.block<3, 1>(r + 3, col) = dref(c, a, dc, da);
      }
    }
    if (g > 0) {
      x[i] = reflect(a, c).normalized();
      x[i + 1] = a;
    } else {
      x[i] = c;
      x[i + 1] = reflect(c, a).normalized();
    }
  }
  return dx;
}

} // namespace detail

namespace {

constexpr double kPi = std::numbers::pi;

// Orthonormal pair spanning the tangent plane at unit v with det[v, a, b] = +1.
std::pair<Vec3, Vec3> tangent_frame(const Vec3 &v) {
  const Vec3 helper = std::abs(v.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
  const Vec3 a = (helper - helper.dot(v) * v).normalized();
  return {a, v.cross(a)};
}

Eigen::VectorXd residual_vector(const BraidWord &b, std::span<const Vec3> vs) {
  std::vector<Vec3> img(vs.begin(), vs.end());
  hurwitz_inplace(b, img);
  Eigen::VectorXd r(static_cast<Eigen::Index>(3 * vs.size()));
  for (std::size_t j = 0; j < vs.size(); ++j)
    r.segment<3>(static_cast<Eigen::Index>(3 * j)) = img[j] - vs[j];
  return r;
}

// Tangent directions of the gauge slice at vs: the pivot turns about z,
// every other vector after the first moves freely on its sphere.
Eigen::MatrixXd slice_tangents(std::span<const Vec3> vs, int pivot) {
  const std::size_t n = vs.size();
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(3 * n),
                                            static_cast<Eigen::Index>(2 * n - 3));
  Eigen::Index col = 0;
  for (std::size_t j = 1; j < n; ++j) {
    const Eigen::Index r = static_cast<Eigen::Index>(3 * j);
    if (static_cast<int>(j) == pivot) {
      t.block<3, 1>(r, col++) = Vec3::UnitZ().cross(vs[j]);
    } else {
      auto [a, c] = tangent_frame(vs[j]);
      t.block<3, 1>(r, col++) = a;
      t.block<3, 1>(r, col++) = c;
    }
  }
  return t;
}

std::vector<Vec3> retract(std::span<const Vec3> vs, int pivot, const Eigen::VectorXd &step) {
  std::vector<Vec3> out(vs.begin(), vs.end());
  Eigen::Index col = 0;
  for (std::size_t j = 1; j < vs.size(); ++j) {
    if (static_cast<int>(j) == pivot) {
      const double ang = step(col++);
      const double c = std::cos(ang), s = std::sin(ang);
      out[j] = Vec3(c * vs[j].x() - s * vs[j].y(), s * vs[j].x() + c * vs[j].y(), 0.0);
      out[j].normalize();
    } else {
      auto [a, b] = tangent_frame(vs[j]);
      const Vec3 d = step(col) * a + step(col + 1) * b;
      col += 2;
      const double len = d.norm();
      out[j] = len > 0.0 ? (std::cos(len) * vs[j] + std::sin(len) * (d / len)).normalized()
                         : vs[j];
    }
  }
  return out;
}

// Moves vs onto the gauge slice; returns the pivot index or -1 when the
// configuration is (numerically) reducible.
int to_slice(std::vector<Vec3> &vs) {
  const auto c = Configuration::from_vectors(vs);
  if (!is_irreducible(c))
    return -1;
  const auto fix = gauge_fix(c);
  for (auto &v : vs)
    v = rotate(fix.g, v);
  return fix.slice.pivot;
}

struct Candidate {
  Configuration config;
  Fingerprint fp;
  double residual = 0.0;
};

std::optional<Candidate> make_candidate(const BraidWord &b, const Configuration &x,
                                        const SolverConfig &cfg) {
  if (!is_irreducible(x))
    return std::nullopt;
  Configuration rep = canonical(x);
  const double res = fixed_point_residual(b, rep);
  if (!(res <= cfg.residual_tol))
    return std::nullopt;
  Candidate c{rep, fingerprint(rep), res};
  return c;
}

Configuration random_configuration(int n, std::uint64_t rng_seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(rng_seed), static_cast<std::uint32_t>(rng_seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 gen(seq);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<Vec3> vs;
  vs.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    Vec3 v;
    do {
      v = Vec3(normal(gen), normal(gen), normal(gen));
    } while (v.norm() < 1e-6);
    vs.push_back(v.normalized());
  }
  return Configuration::from_vectors(vs);
}

// Coplanar tuples with angles 2 pi k / m (first angle 0) that already solve
// the fixed point equation; binary dihedral classes live here.
std::vector<Configuration> coplanar_solutions(const BraidWord &b, const SolverConfig &cfg) {
  std::vector<Configuration> out;
  const int n = b.strands();
  if (n < 2)
    return out;
  std::size_t used = 0;
  std::vector<Vec3> vs(static_cast<std::size_t>(n));
  std::vector<int> k(static_cast<std::size_t>(n), 0);
  for (int m = 2; m <= 64; ++m) {
    double count = std::pow(static_cast<double>(m), n - 1);
    if (static_cast<double>(used) + count > static_cast<double>(cfg.coplanar_budget))
      break;
    used += static_cast<std::size_t>(count);
    std::fill(k.begin(), k.end(), 0);
    while (true) {
      bool planar_line = true;
      for (int j = 0; j < n; ++j) {
        const double t = 2.0 * kPi * k[static_cast<std::size_t>(j)] / m;
        vs[static_cast<std::size_t>(j)] = Vec3(std::cos(t), std::sin(t), 0.0);
        if ((2 * k[static_cast<std::size_t>(j)]) % m != 0)
          planar_line = false;
      }
      if (!planar_line) {
        std::vector<Vec3> img = vs;
        hurwitz_inplace(b, img);
        double r = 0.0;
        for (std::size_t j = 0; j < vs.size(); ++j)
          r = std::max(r, (img[j] - vs[j]).norm());
        if (r < 1e-9)
          out.push_back(Configuration::from_vectors(vs));
      }
      // odometer over k[1..n-1]
      int pos = 1;
      while (pos < n && ++k[static_cast<std::size_t>(pos)] == m) {
        k[static_cast<std::size_t>(pos)] = 0;
        ++pos;
      }
      if (pos == n)
        break;
    }
  }
  return out;
}

std::int64_t grid(double v) { return std::llround(v * 1e8); }

bool grid_less(const Fingerprint &a, const Fingerprint &b) {
  const std::size_t len = std::min(a.values.size(), b.values.size());
  for (std::size_t i = 0; i < len; ++i) {
    const auto ga = grid(a.values[i]), gb = grid(b.values[i]);
    if (ga != gb)
      return ga < gb;
  }
  return a.values.size() < b.values.size();
}

template <class Fn> void parallel_for(std::size_t count, int threads, Fn &&fn) {
  unsigned hw = threads > 0 ? static_cast<unsigned>(threads) : std::thread::hardware_concurrency();
  hw = std::max(1u, std::min<unsigned>(hw, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (hw == 1) {
    for (std::size_t i = 0; i < count; ++i)
      fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < hw; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++)
        fn(i);
    });
  for (auto &th : pool)
    th.join();
}

} // namespace

namespace detail {

std::optional<Configuration> newton_polish(const BraidWord &b, const Configuration &start,
                                           const SolverConfig &cfg) {
  const int n = start.n();
  if (n < 2 || n != b.strands())
    return std::nullopt;
  std::vector<Vec3> vs = start.vectors();
  Eigen::VectorXd r = residual_vector(b, vs);
  double norm = r.norm();
  for (int iter = 0; iter < cfg.max_iters && norm >= cfg.residual_tol; ++iter) {
    const int pivot = to_slice(vs);
    if (pivot < 0)
      return std::nullopt;
    r = residual_vector(b, vs);
    const Eigen::MatrixXd t = slice_tangents(vs, pivot);
    const Eigen::MatrixXd jac = detail::propagate_tangents(b, vs, t) - t;
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(jac);
    cod.setThreshold(1e-10);
    const Eigen::VectorXd step = -cod.solve(r);
    double scale = 1.0;
    bool improved = false;
    for (int halving = 0; halving <= 20; ++halving, scale *= 0.5) {
      auto trial = retract(vs, pivot, scale * step);
      Eigen::VectorXd tr = residual_vector(b, trial);
      const double tn = tr.norm();
      if (tn < norm) {
        vs = std::move(trial);
        r = std::move(tr);
        norm = tn;
        improved = true;
        break;
      }
    }
    if (!improved)
      break;
  }
  if (!(norm < cfg.residual_tol))
    return std::nullopt;
  return Configuration::from_vectors(vs);
}

} // namespace detail

IndexDetail intersection_index_detail(const BraidWord &b, const Configuration &x,
                                      const SolverConfig &cfg) {
  const int n = x.n();
  if (n != b.strands())
    throw DomainError("intersection_index: strand mismatch");
  if (!is_irreducible(x))
    throw DomainError("intersection_index: configuration is reducible");
  if (fixed_point_residual(b, x) > 1e-8)
    throw DomainError("intersection_index: configuration is not a fixed point");

  const auto vs = x.vectors();
  const Eigen::Index dim = 2 * n;
  const Eigen::Index amb = 3 * n;

  // oriented basis of T_X Q_n, sphere by sphere
  Eigen::MatrixXd e = Eigen::MatrixXd::Zero(amb, dim);
  for (int j = 0; j < n; ++j) {
    auto [a, c] = tangent_frame(vs[static_cast<std::size_t>(j)]);
    e.block<3, 1>(3 * j, 2 * j) = a;
    e.block<3, 1>(3 * j, 2 * j + 1) = c;
  }

  Eigen::MatrixXd image(amb, dim);
  if (cfg.index_differential == Differential::analytic) {
    image = detail::propagate_tangents(b, vs, e);
  } else {
    const double h = cfg.fd_step;
    for (Eigen::Index col = 0; col < dim; ++col) {
      const std::size_t j = static_cast<std::size_t>(col / 2);
      const Vec3 dir = e.block<3, 1>(3 * static_cast<Eigen::Index>(j), col);
      auto plus = vs, minus = vs;
      plus[j] = std::cos(h) * vs[j] + std::sin(h) * dir;
      minus[j] = std::cos(h) * vs[j] - std::sin(h) * dir;
      hurwitz_inplace(b, plus);
      hurwitz_inplace(b, minus);
      for (std::size_t i = 0; i < vs.size(); ++i)
        image.block<3, 1>(static_cast<Eigen::Index>(3 * i), col) = (plus[i] - minus[i]) / (2.0 * h);
    }
  }
  const Eigen::MatrixXd lin = e.transpose() * image - Eigen::MatrixXd::Identity(dim, dim);

  // gauge orbit directions e_a x v_j, a = x, y, z
  Eigen::MatrixXd orbit_amb = Eigen::MatrixXd::Zero(amb, 3);
  for (int a = 0; a < 3; ++a)
    for (int j = 0; j < n; ++j)
      orbit_amb.block<3, 1>(3 * j, a) = Vec3::Unit(a).cross(vs[static_cast<std::size_t>(j)]);
  const Eigen::MatrixXd orbit = e.transpose() * orbit_amb;

  // differential of the product map, left translated to su(2) = R^3
  std::vector<Quaternion> q;
  for (const auto &v : vs)
    q.push_back(Quaternion::pure(v));
  std::vector<Quaternion> prefix(static_cast<std::size_t>(n) + 1, Quaternion::identity());
  std::vector<Quaternion> suffix(static_cast<std::size_t>(n) + 1, Quaternion::identity());
  for (int j = 0; j < n; ++j)
    prefix[static_cast<std::size_t>(j) + 1] = prefix[static_cast<std::size_t>(j)] * q[static_cast<std::size_t>(j)];
  for (int j = n - 1; j >= 0; --j)
    suffix[static_cast<std::size_t>(j)] = q[static_cast<std::size_t>(j)] * suffix[static_cast<std::size_t>(j) + 1];
  const Quaternion mu_inv = prefix[static_cast<std::size_t>(n)].inverse();
  Eigen::MatrixXd dmu(3, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    const std::size_t j = static_cast<std::size_t>(col / 2);
    const Vec3 t = e.block<3, 1>(3 * static_cast<Eigen::Index>(j), col);
    const Quaternion d = mu_inv * prefix[j] * Quaternion::pure(t) * suffix[j + 1];
    dmu.col(col) = d.vec();
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd_mu(dmu, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::MatrixXd v_full = svd_mu.matrixV();
  Eigen::MatrixXd kernel = v_full.rightCols(dim - 3);
  Eigen::MatrixXd pinv = Eigen::MatrixXd::Zero(dim, 3);
  for (int s = 0; s < 3; ++s)
    pinv += v_full.col(s) * (svd_mu.matrixU().col(s).transpose() / svd_mu.singularValues()(s));
  {
    Eigen::MatrixXd frame(dim, dim);
    frame << kernel, pinv;
    if (frame.determinant() < 0.0)
      kernel.col(0) *= -1.0;
  }

  // complement of the orbit, oriented so that [orbit | complement] > 0
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(orbit);
  const Eigen::MatrixXd qfull = qr.householderQ() * Eigen::MatrixXd::Identity(dim, dim);
  Eigen::MatrixXd complement = qfull.rightCols(dim - 3);
  {
    Eigen::MatrixXd frame(dim, dim);
    frame << orbit, complement;
    if (frame.determinant() < 0.0)
      complement.col(0) *= -1.0;
  }

  const Eigen::MatrixXd reduced = kernel.transpose() * (lin * complement);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd_red(reduced);
  IndexDetail out;
  out.min_singular_value = svd_red.singularValues().minCoeff();
  out.raw_sign = reduced.determinant() >= 0.0 ? 1 : -1;
  if (out.min_singular_value < 1e-8)
    out.index = IndexSign::degenerate;
  else
    out.index = out.raw_sign * kIndexCalibration > 0 ? IndexSign::positive : IndexSign::negative;
  return out;
}

IndexSign intersection_index(const BraidWord &b, const FixedPointRecord &r,
                             const SolverConfig &cfg) {
  return intersection_index_detail(b, r.config, cfg).index;
}

std::vector<FixedPointRecord> solve_fixed_points(const BraidWord &b, const SolverConfig &cfg) {
  cfg.validate();
  const int n = b.strands();
  std::vector<FixedPointRecord> records;
  if (n < 2)
    return records;

  std::vector<Configuration> starts;
  const auto coplanar = coplanar_solutions(b, cfg);
  starts.insert(starts.end(), coplanar.begin(), coplanar.end());
  const std::size_t n_coplanar = starts.size();
  for (int s = 0; s < cfg.seeds; ++s)
    starts.push_back(random_configuration(n, cfg.rng_seed, static_cast<std::uint64_t>(s)));

  std::vector<std::optional<Candidate>> found(starts.size());
  parallel_for(starts.size(), cfg.threads, [&](std::size_t i) {
    std::optional<Configuration> x;
    if (i < n_coplanar && is_irreducible(starts[i]) &&
        fixed_point_residual(b, starts[i]) < cfg.residual_tol)
      x = starts[i];
    else
      x = detail::newton_polish(b, starts[i], cfg);
    if (x)
      found[i] = make_candidate(b, *x, cfg);
  });

  std::vector<Candidate> cands;
  for (auto &f : found)
    if (f)
      cands.push_back(std::move(*f));
  std::stable_sort(cands.begin(), cands.end(),
                   [](const Candidate &a, const Candidate &c) { return grid_less(a.fp, c.fp); });

  std::vector<Candidate> classes;
  for (auto &c : cands) {
    bool merged = false;
    for (auto &rep : classes) {
      if (fingerprint_distance(rep.fp, c.fp) <= cfg.dedup_tol) {
        if (c.residual < rep.residual)
          rep = c;
        merged = true;
        break;
      }
    }
    if (!merged)
      classes.push_back(std::move(c));
  }
  std::stable_sort(classes.begin(), classes.end(),
                   [](const Candidate &a, const Candidate &c) { return grid_less(a.fp, c.fp); });

  for (auto &c : classes) {
    FixedPointRecord r;
    r.config = std::move(c.config);
    r.residual = c.residual;
    r.fingerprint = std::move(c.fp);
    const auto idx = intersection_index_detail(b, r.config, cfg);
    r.index = idx.index;
    r.min_singular_value = idx.min_singular_value;
    records.push_back(std::move(r));
  }
  return records;
}

LambdaResult summarize(std::vector<FixedPointRecord> records) {
  LambdaResult out;
  int sum = 0;
  for (const auto &r : records) {
    ++out.counts.total;
    if (r.index == IndexSign::degenerate)
      ++out.counts.degenerate;
    else {
      ++out.counts.essential;
      sum += static_cast<int>(r.index);
    }
  }
  if (out.counts.degenerate == 0) {
    out.lambda = sum;
    out.nielsen_bracket = NielsenBracket{std::abs(sum), out.counts.essential};
  }
  out.records = std::move(records);
  return out;
}

LambdaResult casson_lin(const BraidWord &b, const SolverConfig &cfg) {
  if (!is_knot_closure(b))
    throw DomainError("closure is a link, not a knot (cycles " + describe_cycles(permutation(b)) +
                      ")");
  return summarize(solve_fixed_points(b, cfg));
}

} // namespace braidfix
