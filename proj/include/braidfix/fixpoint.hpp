#pragma once

#include "braidfix/braidcore.hpp"
#include "braidfix/repvariety.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace braidfix {

/// How the differential of the braid action is obtained for indices.
enum class Differential { analytic, central };

struct SolverConfig {
  int seeds = 4000;
  int max_iters = 80;
  double residual_tol = 1e-11;
  double dedup_tol = 1e-6;
  double fd_step = 1e-6;
  std::uint64_t rng_seed = 1;
  Differential index_differential = Differential::central;
  /// Upper bound on coplanar angle tuples screened per solve.
  std::size_t coplanar_budget = 400000;
  /// 0 means std::thread::hardware_concurrency().
  int threads = 0;

  /// Throws DomainError on non-positive tolerances or seeds < 1.
  void validate() const;
};

enum class IndexSign { negative = -1, degenerate = 0, positive = 1 };

const char *to_string(IndexSign s);

struct FixedPointRecord {
  /// gauge-fixed representative
  Configuration config;
  double residual = 0.0;
  IndexSign index = IndexSign::degenerate;
  Fingerprint fingerprint;
  double min_singular_value = 0.0;
};

struct ClassCounts {
  int total = 0;
  int essential = 0;
  int degenerate = 0;
};

/// Certified bounds on the Nielsen number: |lambda| <= N <= essential.
struct NielsenBracket {
  int lower = 0;
  int upper = 0;
  friend bool operator==(const NielsenBracket &, const NielsenBracket &) = default;
};

struct LambdaResult {
  /// Empty when some class is degenerate.
  std::optional<int> lambda;
  std::vector<FixedPointRecord> records;
  ClassCounts counts;
  std::optional<NielsenBracket> nielsen_bracket;
};

/// Orientation anchor: makes the trefoil sigma_1^3 come out with
/// lambda = signature / 2 = -1. No other sign is free.
inline constexpr int kIndexCalibration = -1;

/// All conjugacy classes of irreducible X with hurwitz(b, X) == X exactly,
/// found by multi-start damped Gauss-Newton on the gauge slice. Sorted by
/// fingerprint. Every record has its index filled in.
std::vector<FixedPointRecord> solve_fixed_points(const BraidWord &b, const SolverConfig &cfg);

struct IndexDetail {
  /// sign of the oriented determinant before calibration
  int raw_sign = 0;
  double min_singular_value = 0.0;
  IndexSign index = IndexSign::degenerate;
};

/// Oriented sign of (D beta - I) from T Q_n / gauge orbit to ker D mu at a
/// fixed point. Throws DomainError for reducible or non-fixed input.
IndexDetail intersection_index_detail(const BraidWord &b, const Configuration &x,
                                      const SolverConfig &cfg);
IndexSign intersection_index(const BraidWord &b, const FixedPointRecord &r,
                             const SolverConfig &cfg);

/// Sum of indices over all classes. Throws DomainError if the closure of b
/// is not a knot.
LambdaResult casson_lin(const BraidWord &b, const SolverConfig &cfg);

/// Summarizes a record list into counts, lambda and bracket.
LambdaResult summarize(std::vector<FixedPointRecord> records);

namespace detail {

/// Tangent propagation of the braid action: returns d hurwitz(b, .) at vs
/// applied to each column tangent (3n x k).
Eigen::MatrixXd propagate_tangents(const BraidWord &b, std::span<const Vec3> vs,
                                   const Eigen::MatrixXd &tangents);

/// Runs Gauss-Newton from one starting configuration. Returns the end point
/// when the exact residual dropped below cfg.residual_tol.
std::optional<Configuration> newton_polish(const BraidWord &b, const Configuration &start,
                                           const SolverConfig &cfg);

} // namespace detail

} // namespace braidfix
