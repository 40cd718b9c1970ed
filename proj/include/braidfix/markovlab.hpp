#pragma once

#include "braidfix/fixpoint.hpp"

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace braidfix {

struct MarkovAudit {
  /// e.g. "conjugate by 1 -2", "stabilize +1", "destabilize -1"
  std::string move;
  std::string before;
  std::string after;
  std::optional<int> lambda_before;
  std::optional<int> lambda_after;
  int classes_before = 0;
  int classes_after = 0;
  int matched_classes = 0;
  double max_transport_distance = 0.0;
  bool passed = false;
  /// empty when passed; otherwise the first failed check
  std::string reason;
};

/// Cancels adjacent letters g, -g until none remain. The result acts on
/// configurations exactly like the input.
BraidWord cancel_inverse_pairs(const BraidWord &b);

/// Conjugation xi^-1 b xi (adjacent inverse pairs cancelled). Classes of b are
/// carried over by X -> hurwitz(xi, X).
MarkovAudit verify_type1(const BraidWord &b, const BraidWord &xi, const SolverConfig &cfg);

/// Stabilization sigma_n^sign b into B_{n+1}. Classes are carried over by
/// X -> (X_1, ..., X_n, hurwitz(b, X)_n).
MarkovAudit verify_type2(const BraidWord &b, int sign, const SolverConfig &cfg);

/// Inverse of a stabilization, for words with a single letter in the last
/// column. Returns nullopt when the word does not qualify or has fewer than
/// 3 strands.
std::optional<MarkovAudit> verify_destabilize(const BraidWord &b, const SolverConfig &cfg);

struct WalkOptions {
  int max_strands = 4;
  int max_conjugator_length = 2;
};

/// Random sequence of Markov moves starting at b, one audit per step. Each
/// braid is solved once and shared between the audits on either side of it.
std::vector<MarkovAudit> random_markov_walk(const BraidWord &b, int steps,
                                            std::uint64_t rng_seed, const SolverConfig &cfg,
                                            const WalkOptions &opts = {});

/// Applies one random move, without auditing. Used by the walk and by the
/// oracle invariance tests.
struct MarkovStep {
  std::string move;
  BraidWord after;
  std::function<Configuration(const Configuration &)> transport;
};

MarkovStep random_markov_step(const BraidWord &b, std::mt19937_64 &rng, const WalkOptions &opts);

namespace detail {

/// Matches transported classes of `before` against `after` and fills in an
/// audit. Both record lists must be complete solver outputs.
MarkovAudit audit_transport(const std::string &move, const BraidWord &before,
                            const std::vector<FixedPointRecord> &before_records,
                            const BraidWord &after,
                            const std::vector<FixedPointRecord> &after_records,
                            const std::function<Configuration(const Configuration &)> &transport);

} // namespace detail

} // namespace braidfix
