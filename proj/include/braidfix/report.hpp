#pragma once

#include "braidfix/fixpoint.hpp"
#include "braidfix/markovlab.hpp"
#include "braidfix/pillowcase.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidfix {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char *kToolVersion = "0.1.0";

struct ReportError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ClassEntry {
  std::vector<double> fingerprint;
  std::string index; // "+1", "-1" or "degenerate"
  double residual = 0.0;
  friend bool operator==(const ClassEntry &, const ClassEntry &) = default;
};

struct AlexanderEntry {
  int offset = 0; // exponent of the first coefficient
  std::vector<std::int64_t> coefficients;
  friend bool operator==(const AlexanderEntry &, const AlexanderEntry &) = default;
};

/// Exact angles carry "r π" text; inexact ones a decimal.
struct AngleEntry {
  std::string value;
  double radians = 0.0;
  std::string exactness; // "exact" or "decimal"
  friend bool operator==(const AngleEntry &, const AngleEntry &) = default;
};

AngleEntry angle_entry(const PiAngle &a);

struct PillowClassEntry {
  AngleEntry alpha;
  AngleEntry theta;
  friend bool operator==(const PillowClassEntry &, const PillowClassEntry &) = default;
};

struct PillowcaseEntry {
  std::int64_t q = 0;
  bool overlap = false;
  std::string id_curve;
  std::string beta_curve;
  std::vector<PillowClassEntry> classes;
  std::vector<PillowClassEntry> cone_points;
  AngleMatrix lift_matrix{};
  AngleEntry lift_shift_alpha;
  AngleEntry lift_shift_theta;
  std::int64_t det_i_minus_l = 0;
  std::string caveat;
  friend bool operator==(const PillowcaseEntry &, const PillowcaseEntry &) = default;
};

struct AuditEntry {
  std::string move;
  std::string before;
  std::string after;
  std::optional<int> lambda_before;
  std::optional<int> lambda_after;
  int classes_before = 0;
  int classes_after = 0;
  int matched_classes = 0;
  /// serialized as null when infinite
  double max_transport_distance = 0.0;
  bool passed = false;
  std::string reason;
  friend bool operator==(const AuditEntry &, const AuditEntry &) = default;
};

struct SolverEcho {
  int seeds = 0;
  int max_iters = 0;
  double residual_tol = 0.0;
  double dedup_tol = 0.0;
  double fd_step = 0.0;
  std::string index_differential;
  std::uint64_t coplanar_budget = 0;
  friend bool operator==(const SolverEcho &, const SolverEcho &) = default;
};

struct Report {
  int schema_version = kSchemaVersion;
  std::string tool_version = kToolVersion;
  std::string command;
  std::string braid;
  int strands = 0;
  bool is_knot = false;
  std::uint64_t rng_seed = 0;
  SolverEcho solver_config;

  // analyze
  std::optional<std::vector<ClassEntry>> classes;
  /// "defined" or "undefined(degenerate)"; lambda is present iff this is
  std::optional<std::string> lambda_status;
  std::optional<int> lambda;
  std::optional<int> calibration;
  std::optional<int> essential_classes;
  std::optional<int> degenerate_classes;
  std::optional<NielsenBracket> nielsen_bracket;
  std::optional<int> signature;
  std::optional<std::int64_t> determinant;
  std::optional<AlexanderEntry> alexander;
  std::optional<int> binary_dihedral_count;

  std::optional<std::vector<AuditEntry>> markov_audits;
  std::optional<PillowcaseEntry> pillowcase;
  std::vector<std::string> caveats;

  friend bool operator==(const Report &, const Report &) = default;
};

SolverEcho echo(const SolverConfig &cfg);
AuditEntry audit_entry(const MarkovAudit &a);
PillowcaseEntry pillowcase_entry(const BraidWord &b);

/// Oracle + solver + lambda + bracket. Throws DomainError for link closures.
Report analyze_report(const BraidWord &b, const SolverConfig &cfg);
Report markov_report(const BraidWord &b, int steps, const SolverConfig &cfg);
/// Throws DomainError unless b has 2 strands and knot closure.
Report pillowcase_report(const BraidWord &b, const SolverConfig &cfg);

/// Pretty-printed JSON with a fixed key order.
std::string to_json(const Report &r);
/// Strict reader: unknown or missing keys and a wrong schema version throw
/// ReportError.
Report report_from_json(const std::string &text);

} // namespace braidfix
