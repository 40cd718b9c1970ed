#include "braidfix/report.hpp"

#include "braidfix/knotoracle.hpp"

#include "json.hpp"

#include <cmath>
#include <limits>
#include <set>

namespace braidfix {

using Json = nlohmann::ordered_json;

namespace {

const char *const kBracketCaveat =
    "No Nielsen number is reported: counting fixed points of f_beta needs a perturbation by a "
    "compactly support isotopy, which is not constructed here. The certified output is the "
    "bracket |lambda| <= N <= essential classes.";

std::int64_t to_int64(const Rational &r) {
  if (denominator(r) != 1)
    throw std::logic_error("expected an integer coefficient");
  return numerator(r).convert_to<std::int64_t>();
}

PillowClassEntry pillow_class(const ExactPoint &p) {
  return {angle_entry(p.alpha), angle_entry(p.theta)};
}

} // namespace

AngleEntry angle_entry(const PiAngle &a) { return {a.to_string(), a.radians(), "exact"}; }

SolverEcho echo(const SolverConfig &cfg) {
  return {cfg.seeds,
          cfg.max_iters,
          cfg.residual_tol,
          cfg.dedup_tol,
          cfg.fd_step,
          cfg.index_differential == Differential::central ? "central" : "analytic",
          cfg.coplanar_budget};
}

AuditEntry audit_entry(const MarkovAudit &a) {
  return {a.move,           a.before,         a.after,
          a.lambda_before,  a.lambda_after,   a.classes_before,
          a.classes_after,  a.matched_classes, a.max_transport_distance,
          a.passed,         a.reason};
}

PillowcaseEntry pillowcase_entry(const BraidWord &b) {
  const GammaCurves g = gamma_curves(b);
  const ExactIntersection ex = exact_classes(b);
  const TorusLift lift = torus_lift(b);
  PillowcaseEntry e;
  e.q = g.q;
  e.overlap = g.overlap;
  e.id_curve = g.id_relation;
  e.beta_curve = g.beta_relation;
  for (const auto &p : ex.irreducible)
    e.classes.push_back(pillow_class(p));
  for (const auto &p : ex.cone)
    e.cone_points.push_back(pillow_class(p));
  e.lift_matrix = lift.L;
  e.lift_shift_alpha = angle_entry(lift.shift_alpha);
  e.lift_shift_theta = angle_entry(lift.shift_theta);
  e.det_i_minus_l = lift.det_i_minus_l;
  e.caveat = lift.caveat;
  return e;
}

namespace {

Report base_report(const std::string &command, const BraidWord &b, const SolverConfig &cfg) {
  Report r;
  r.command = command;
  r.braid = format_braid(b);
  r.strands = b.strands();
  r.is_knot = is_knot_closure(b);
  r.rng_seed = cfg.rng_seed;
  r.solver_config = echo(cfg);
  return r;
}

} // namespace

Report analyze_report(const BraidWord &b, const SolverConfig &cfg) {
  Report r = base_report("analyze", b, cfg);
  const LambdaResult lr = casson_lin(b, cfg);
  r.classes.emplace();
  for (const auto &rec : lr.records)
    r.classes->push_back({rec.fingerprint.values, to_string(rec.index), rec.residual});
  r.lambda_status = lr.lambda ? "defined" : "undefined(degenerate)";
  r.lambda = lr.lambda;
  r.calibration = kIndexCalibration;
  r.essential_classes = lr.counts.essential;
  r.degenerate_classes = lr.counts.degenerate;
  r.nielsen_bracket = lr.nielsen_bracket;

  r.signature = signature(b);
  r.determinant = determinant(b);
  const LaurentPoly alex = alexander(b);
  AlexanderEntry a;
  a.offset = alex.min_exp();
  for (const auto &c : alex.dense())
    a.coefficients.push_back(to_int64(c));
  r.alexander = a;
  r.binary_dihedral_count = binary_dihedral_count(b);
  if (b.strands() == 2)
    r.pillowcase = pillowcase_entry(b);
  r.caveats.push_back(kBracketCaveat);
  return r;
}

Report markov_report(const BraidWord &b, int steps, const SolverConfig &cfg) {
  Report r = base_report("markov", b, cfg);
  r.markov_audits.emplace();
  for (const auto &a : random_markov_walk(b, steps, cfg.rng_seed, cfg))
    r.markov_audits->push_back(audit_entry(a));
  r.caveats.push_back(kBracketCaveat);
  return r;
}

Report pillowcase_report(const BraidWord &b, const SolverConfig &cfg) {
  if (b.strands() != 2)
    throw DomainError("pillowcase: needs a 2-strand braid, got " + std::to_string(b.strands()));
  Report r = base_report("pillowcase", b, cfg);
  r.pillowcase = pillowcase_entry(b);
  r.caveats.push_back(kPerturbationCaveat);
  return r;
}

// ---- serialization

namespace {

Json opt_int(const std::optional<int> &v) { return v ? Json(*v) : Json(nullptr); }

Json angle_json(const AngleEntry &a) {
  Json j;
  j["value"] = a.value;
  j["radians"] = a.radians;
  j["exactness"] = a.exactness;
  return j;
}

Json pillow_class_json(const PillowClassEntry &p) {
  Json j;
  j["alpha"] = angle_json(p.alpha);
  j["theta"] = angle_json(p.theta);
  return j;
}

Json pillowcase_json(const PillowcaseEntry &p) {
  Json j;
  j["q"] = p.q;
  j["overlap"] = p.overlap;
  j["id_curve"] = p.id_curve;
  j["beta_curve"] = p.beta_curve;
  j["classes"] = Json::array();
  for (const auto &c : p.classes)
    j["classes"].push_back(pillow_class_json(c));
  j["cone_points"] = Json::array();
  for (const auto &c : p.cone_points)
    j["cone_points"].push_back(pillow_class_json(c));
  Json lift;
  lift["matrix"] = {{p.lift_matrix[0][0], p.lift_matrix[0][1]},
                    {p.lift_matrix[1][0], p.lift_matrix[1][1]}};
  lift["shift"] = {angle_json(p.lift_shift_alpha), angle_json(p.lift_shift_theta)};
  lift["det_i_minus_l"] = p.det_i_minus_l;
  lift["caveat"] = p.caveat;
  j["torus_lift"] = lift;
  return j;
}

Json audit_json(const AuditEntry &a) {
  Json j;
  j["move"] = a.move;
  j["before"] = a.before;
  j["after"] = a.after;
  j["lambda_before"] = opt_int(a.lambda_before);
  j["lambda_after"] = opt_int(a.lambda_after);
  j["classes_before"] = a.classes_before;
  j["classes_after"] = a.classes_after;
  j["matched_classes"] = a.matched_classes;
  j["max_transport_distance"] =
      std::isfinite(a.max_transport_distance) ? Json(a.max_transport_distance) : Json(nullptr);
  j["passed"] = a.passed;
  j["reason"] = a.reason;
  return j;
}

// Strict object access: every key must be consumed exactly once.
class Reader {
public:
  Reader(const Json &j, std::string where) : j_(j), where_(std::move(where)) {
    if (!j_.is_object())
      throw ReportError(where_ + ": expected an object");
  }
  ~Reader() = default;

  const Json &req(const std::string &key) {
    auto it = j_.find(key);
    if (it == j_.end())
      throw ReportError(where_ + ": missing key \"" + key + "\"");
    seen_.insert(key);
    return *it;
  }
  const Json *opt(const std::string &key) {
    auto it = j_.find(key);
    if (it == j_.end())
      return nullptr;
    seen_.insert(key);
    return &*it;
  }
  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it)
      if (!seen_.count(it.key()))
        throw ReportError(where_ + ": unknown key \"" + it.key() + "\"");
  }

private:
  const Json &j_;
  std::string where_;
  std::set<std::string> seen_;
};

template <class T> T get(const Json &j, const std::string &where) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception &e) {
    throw ReportError(where + ": " + e.what());
  }
}

std::optional<int> get_opt_int(const Json &j, const std::string &where) {
  if (j.is_null())
    return std::nullopt;
  return get<int>(j, where);
}

AngleEntry read_angle(const Json &j, const std::string &where) {
  Reader r(j, where);
  AngleEntry a;
  a.value = get<std::string>(r.req("value"), where);
  a.radians = get<double>(r.req("radians"), where);
  a.exactness = get<std::string>(r.req("exactness"), where);
  if (a.exactness != "exact" && a.exactness != "decimal")
    throw ReportError(where + ": bad exactness tag \"" + a.exactness + "\"");
  r.finish();
  return a;
}

PillowClassEntry read_pillow_class(const Json &j, const std::string &where) {
  Reader r(j, where);
  PillowClassEntry p{read_angle(r.req("alpha"), where + ".alpha"),
                     read_angle(r.req("theta"), where + ".theta")};
  r.finish();
  return p;
}

std::vector<PillowClassEntry> read_pillow_classes(const Json &j, const std::string &where) {
  if (!j.is_array())
    throw ReportError(where + ": expected an array");
  std::vector<PillowClassEntry> out;
  for (const auto &e : j)
    out.push_back(read_pillow_class(e, where + "[]"));
  return out;
}

PillowcaseEntry read_pillowcase(const Json &j) {
  const std::string w = "pillowcase";
  Reader r(j, w);
  PillowcaseEntry p;
  p.q = get<std::int64_t>(r.req("q"), w);
  p.overlap = get<bool>(r.req("overlap"), w);
  p.id_curve = get<std::string>(r.req("id_curve"), w);
  p.beta_curve = get<std::string>(r.req("beta_curve"), w);
  p.classes = read_pillow_classes(r.req("classes"), w + ".classes");
  p.cone_points = read_pillow_classes(r.req("cone_points"), w + ".cone_points");
  Reader lr(r.req("torus_lift"), w + ".torus_lift");
  const auto m = get<std::vector<std::vector<std::int64_t>>>(lr.req("matrix"), w);
  if (m.size() != 2 || m[0].size() != 2 || m[1].size() != 2)
    throw ReportError(w + ".torus_lift: matrix must be 2x2");
  p.lift_matrix = {{{m[0][0], m[0][1]}, {m[1][0], m[1][1]}}};
  const Json &shift = lr.req("shift");
  if (!shift.is_array() || shift.size() != 2)
    throw ReportError(w + ".torus_lift: shift must have two angles");
  p.lift_shift_alpha = read_angle(shift[0], w + ".torus_lift.shift");
  p.lift_shift_theta = read_angle(shift[1], w + ".torus_lift.shift");
  p.det_i_minus_l = get<std::int64_t>(lr.req("det_i_minus_l"), w);
  p.caveat = get<std::string>(lr.req("caveat"), w);
  lr.finish();
  r.finish();
  return p;
}

AuditEntry read_audit(const Json &j) {
  const std::string w = "markov_audits[]";
  Reader r(j, w);
  AuditEntry a;
  a.move = get<std::string>(r.req("move"), w);
  a.before = get<std::string>(r.req("before"), w);
  a.after = get<std::string>(r.req("after"), w);
  a.lambda_before = get_opt_int(r.req("lambda_before"), w);
  a.lambda_after = get_opt_int(r.req("lambda_after"), w);
  a.classes_before = get<int>(r.req("classes_before"), w);
  a.classes_after = get<int>(r.req("classes_after"), w);
  a.matched_classes = get<int>(r.req("matched_classes"), w);
  const Json &d = r.req("max_transport_distance");
  a.max_transport_distance =
      d.is_null() ? std::numeric_limits<double>::infinity() : get<double>(d, w);
  a.passed = get<bool>(r.req("passed"), w);
  a.reason = get<std::string>(r.req("reason"), w);
  r.finish();
  return a;
}

} // namespace

std::string to_json(const Report &r) {
  Json j;
  j["schema_version"] = r.schema_version;
  j["tool_version"] = r.tool_version;
  j["command"] = r.command;
  j["braid"] = r.braid;
  j["strands"] = r.strands;
  j["is_knot"] = r.is_knot;
  j["rng_seed"] = r.rng_seed;
  Json s;
  s["seeds"] = r.solver_config.seeds;
  s["max_iters"] = r.solver_config.max_iters;
  s["residual_tol"] = r.solver_config.residual_tol;
  s["dedup_tol"] = r.solver_config.dedup_tol;
  s["fd_step"] = r.solver_config.fd_step;
  s["index_differential"] = r.solver_config.index_differential;
  s["coplanar_budget"] = r.solver_config.coplanar_budget;
  j["solver_config"] = s;

  if (r.classes) {
    j["classes"] = Json::array();
    for (const auto &c : *r.classes) {
      Json e;
      e["fingerprint"] = c.fingerprint;
      e["index"] = c.index;
      e["residual"] = c.residual;
      j["classes"].push_back(e);
    }
  }
  if (r.lambda_status) {
    j["lambda_status"] = *r.lambda_status;
    j["lambda"] = opt_int(r.lambda);
  }
  if (r.calibration)
    j["calibration"] = *r.calibration;
  if (r.essential_classes)
    j["essential_classes"] = *r.essential_classes;
  if (r.degenerate_classes)
    j["degenerate_classes"] = *r.degenerate_classes;
  if (r.lambda_status)
    j["nielsen_bracket"] = r.nielsen_bracket
                               ? Json{{"lower", r.nielsen_bracket->lower},
                                      {"upper", r.nielsen_bracket->upper}}
                               : Json(nullptr);
  if (r.signature)
    j["signature"] = *r.signature;
  if (r.determinant)
    j["determinant"] = *r.determinant;
  if (r.alexander)
    j["alexander"] = {{"offset", r.alexander->offset},
                      {"coefficients", r.alexander->coefficients}};
  if (r.binary_dihedral_count)
    j["binary_dihedral_count"] = *r.binary_dihedral_count;
  if (r.markov_audits) {
    j["markov_audits"] = Json::array();
    for (const auto &a : *r.markov_audits)
      j["markov_audits"].push_back(audit_json(a));
  }
  if (r.pillowcase)
    j["pillowcase"] = pillowcase_json(*r.pillowcase);
  j["caveats"] = r.caveats;
  return j.dump(2) + "\n";
}

Report report_from_json(const std::string &text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw ReportError(std::string("report is not valid JSON: ") + e.what());
  }
  const std::string w = "report";
  Reader rd(j, w);
  Report r;
  r.schema_version = get<int>(rd.req("schema_version"), w);
  if (r.schema_version != kSchemaVersion)
    throw ReportError("unsupported schema_version " + std::to_string(r.schema_version));
  r.tool_version = get<std::string>(rd.req("tool_version"), w);
  r.command = get<std::string>(rd.req("command"), w);
  r.braid = get<std::string>(rd.req("braid"), w);
  r.strands = get<int>(rd.req("strands"), w);
  r.is_knot = get<bool>(rd.req("is_knot"), w);
  r.rng_seed = get<std::uint64_t>(rd.req("rng_seed"), w);
  {
    const std::string ws = "solver_config";
    Reader s(rd.req("solver_config"), ws);
    r.solver_config.seeds = get<int>(s.req("seeds"), ws);
    r.solver_config.max_iters = get<int>(s.req("max_iters"), ws);
    r.solver_config.residual_tol = get<double>(s.req("residual_tol"), ws);
    r.solver_config.dedup_tol = get<double>(s.req("dedup_tol"), ws);
    r.solver_config.fd_step = get<double>(s.req("fd_step"), ws);
    r.solver_config.index_differential = get<std::string>(s.req("index_differential"), ws);
    r.solver_config.coplanar_budget = get<std::uint64_t>(s.req("coplanar_budget"), ws);
    s.finish();
  }
  if (const Json *c = rd.opt("classes")) {
    if (!c->is_array())
      throw ReportError("classes: expected an array");
    r.classes.emplace();
    for (const auto &e : *c) {
      Reader ce(e, "classes[]");
      ClassEntry entry;
      entry.fingerprint = get<std::vector<double>>(ce.req("fingerprint"), "classes[]");
      entry.index = get<std::string>(ce.req("index"), "classes[]");
      if (entry.index != "+1" && entry.index != "-1" && entry.index != "degenerate")
        throw ReportError("classes[]: bad index \"" + entry.index + "\"");
      entry.residual = get<double>(ce.req("residual"), "classes[]");
      ce.finish();
      r.classes->push_back(std::move(entry));
    }
  }
  if (const Json *s = rd.opt("lambda_status")) {
    r.lambda_status = get<std::string>(*s, w);
    r.lambda = get_opt_int(rd.req("lambda"), w);
    if ((*r.lambda_status == "defined") != r.lambda.has_value())
      throw ReportError("lambda_status does not match lambda");
    const Json &nb = rd.req("nielsen_bracket");
    if (!nb.is_null()) {
      Reader br(nb, "nielsen_bracket");
      r.nielsen_bracket = NielsenBracket{get<int>(br.req("lower"), "nielsen_bracket"),
                                         get<int>(br.req("upper"), "nielsen_bracket")};
      br.finish();
    }
  }
  if (const Json *v = rd.opt("calibration"))
    r.calibration = get<int>(*v, w);
  if (const Json *v = rd.opt("essential_classes"))
    r.essential_classes = get<int>(*v, w);
  if (const Json *v = rd.opt("degenerate_classes"))
    r.degenerate_classes = get<int>(*v, w);
  if (const Json *v = rd.opt("signature"))
    r.signature = get<int>(*v, w);
  if (const Json *v = rd.opt("determinant"))
    r.determinant = get<std::int64_t>(*v, w);
  if (const Json *v = rd.opt("alexander")) {
    Reader ar(*v, "alexander");
    AlexanderEntry a;
    a.offset = get<int>(ar.req("offset"), "alexander");
    a.coefficients = get<std::vector<std::int64_t>>(ar.req("coefficients"), "alexander");
    ar.finish();
    r.alexander = std::move(a);
  }
  if (const Json *v = rd.opt("binary_dihedral_count"))
    r.binary_dihedral_count = get<int>(*v, w);
  if (const Json *v = rd.opt("markov_audits")) {
    if (!v->is_array())
      throw ReportError("markov_audits: expected an array");
    r.markov_audits.emplace();
    for (const auto &e : *v)
      r.markov_audits->push_back(read_audit(e));
  }
  if (const Json *v = rd.opt("pillowcase"))
    r.pillowcase = read_pillowcase(*v);
  r.caveats = get<std::vector<std::string>>(rd.req("caveats"), w);
  rd.finish();
  return r;
}

} // namespace braidfix
