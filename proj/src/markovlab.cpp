#include "braidfix/markovlab.hpp"

#include <cmath>
#include <limits>

namespace braidfix {

namespace {

constexpr double kTransportTol = 1e-7;

Configuration stabilized(const BraidWord &b, const Configuration &x) {
  auto vs = x.vectors();
  auto moved = vs;
  hurwitz_inplace(b, moved);
  vs.push_back(moved.back());
  return Configuration::from_vectors(vs);
}

Configuration destabilized(const BraidWord &head, const Configuration &x) {
  auto vs = x.vectors();
  hurwitz_inplace(head, vs);
  vs.pop_back();
  return Configuration::from_vectors(vs);
}

std::string signed_text(int sign) { return sign > 0 ? "+1" : "-1"; }

} // namespace

BraidWord cancel_inverse_pairs(const BraidWord &b) {
  std::vector<int> out;
  for (int g : b.letters()) {
    if (!out.empty() && out.back() == -g)
      out.pop_back();
    else
      out.push_back(g);
  }
  return BraidWord(b.strands(), std::move(out));
}

namespace detail {

MarkovAudit audit_transport(const std::string &move, const BraidWord &before,
                            const std::vector<FixedPointRecord> &before_records,
                            const BraidWord &after,
                            const std::vector<FixedPointRecord> &after_records,
                            const std::function<Configuration(const Configuration &)> &transport) {
  MarkovAudit a;
  a.move = move;
  a.before = format_braid(before);
  a.after = format_braid(after);
  const LambdaResult lb = summarize(before_records);
  const LambdaResult la = summarize(after_records);
  a.lambda_before = lb.lambda;
  a.lambda_after = la.lambda;
  a.classes_before = lb.counts.total;
  a.classes_after = la.counts.total;

  std::vector<bool> used(after_records.size(), false);
  bool index_ok = true;
  for (const auto &r : before_records) {
    const Configuration t = transport(r.config);
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_j = after_records.size();
    for (std::size_t j = 0; j < after_records.size(); ++j) {
      if (used[j])
        continue;
      const double d = std::sqrt(std::max(0.0, align(t.elems(), after_records[j].config.elems()).d));
      if (d < best) {
        best = d;
        best_j = j;
      }
    }
    if (best_j == after_records.size()) {
      a.max_transport_distance = std::numeric_limits<double>::infinity();
      continue;
    }
    a.max_transport_distance = std::max(a.max_transport_distance, best);
    if (best <= kTransportTol) {
      used[best_j] = true;
      ++a.matched_classes;
      if (r.index != after_records[best_j].index)
        index_ok = false;
    }
  }

  if (!a.lambda_before || !a.lambda_after)
    a.reason = "degenerate";
  else if (a.classes_before != a.classes_after)
    a.reason = "class count changed";
  else if (a.matched_classes != a.classes_before)
    a.reason = "unmatched class";
  else if (a.max_transport_distance > kTransportTol)
    a.reason = "transport distance too large";
  else if (!index_ok)
    a.reason = "index changed";
  else if (*a.lambda_before != *a.lambda_after)
    a.reason = "lambda changed";
  a.passed = a.reason.empty();
  return a;
}

} // namespace detail

MarkovAudit verify_type1(const BraidWord &b, const BraidWord &xi, const SolverConfig &cfg) {
  if (b.strands() != xi.strands())
    throw DomainError("verify_type1: conjugator has " + std::to_string(xi.strands()) +
                      " strands, braid has " + std::to_string(b.strands()));
  const BraidWord after = cancel_inverse_pairs(markov_conjugate(b, xi));
  return detail::audit_transport(
      "conjugate by " + format_braid(xi), b, solve_fixed_points(b, cfg), after,
      solve_fixed_points(after, cfg), [&](const Configuration &x) { return hurwitz(xi, x); });
}

MarkovAudit verify_type2(const BraidWord &b, int sign, const SolverConfig &cfg) {
  if (sign != 1 && sign != -1)
    throw DomainError("verify_type2: sign must be +1 or -1");
  const BraidWord after = markov_stabilize(b, sign);
  return detail::audit_transport(
      "stabilize " + signed_text(sign), b, solve_fixed_points(b, cfg), after,
      solve_fixed_points(after, cfg), [&](const Configuration &x) { return stabilized(b, x); });
}

std::optional<MarkovAudit> verify_destabilize(const BraidWord &b, const SolverConfig &cfg) {
  if (b.strands() < 3)
    return std::nullopt;
  const auto d = markov_destabilize(b);
  if (!d)
    return std::nullopt;
  return detail::audit_transport(
      "destabilize " + signed_text(d->sign), b, solve_fixed_points(b, cfg), d->result,
      solve_fixed_points(d->result, cfg),
      [head = d->head](const Configuration &x) { return destabilized(head, x); });
}

MarkovStep random_markov_step(const BraidWord &b, std::mt19937_64 &rng, const WalkOptions &opts) {
  const int n = b.strands();
  enum class Kind { conjugate, stabilize, destabilize };
  std::vector<Kind> kinds;
  if (n >= 2)
    kinds.push_back(Kind::conjugate);
  if (n < opts.max_strands)
    kinds.push_back(Kind::stabilize);
  std::optional<Destabilization> d;
  if (n >= 3 && (d = markov_destabilize(b)))
    kinds.push_back(Kind::destabilize);
  if (kinds.empty())
    throw DomainError("random_markov_step: no move applies to " + format_braid(b));

  const Kind kind = kinds[std::uniform_int_distribution<std::size_t>(0, kinds.size() - 1)(rng)];
  MarkovStep step;
  switch (kind) {
  case Kind::conjugate: {
    std::uniform_int_distribution<int> len(1, std::max(1, opts.max_conjugator_length));
    std::uniform_int_distribution<int> col(1, n - 1);
    std::vector<int> letters(static_cast<std::size_t>(len(rng)));
    for (auto &g : letters)
      g = col(rng) * (rng() % 2 == 0 ? 1 : -1);
    BraidWord xi(n, std::move(letters));
    step.move = "conjugate by " + format_braid(xi);
    step.after = cancel_inverse_pairs(markov_conjugate(b, xi));
    step.transport = [xi](const Configuration &x) { return hurwitz(xi, x); };
    break;
  }
  case Kind::stabilize: {
    const int sign = rng() % 2 == 0 ? 1 : -1;
    step.move = "stabilize " + signed_text(sign);
    step.after = markov_stabilize(b, sign);
    step.transport = [b](const Configuration &x) { return stabilized(b, x); };
    break;
  }
  case Kind::destabilize:
    step.move = "destabilize " + signed_text(d->sign);
    step.after = d->result;
    step.transport = [head = d->head](const Configuration &x) { return destabilized(head, x); };
    break;
  }
  return step;
}

std::vector<MarkovAudit> random_markov_walk(const BraidWord &b, int steps,
                                            std::uint64_t rng_seed, const SolverConfig &cfg,
                                            const WalkOptions &opts) {
  if (!is_knot_closure(b))
    throw DomainError("random_markov_walk: closure is a link, not a knot (cycles " +
                      describe_cycles(permutation(b)) + ")");
  std::mt19937_64 rng(rng_seed);
  std::vector<MarkovAudit> audits;
  BraidWord cur = b;
  auto cur_records = solve_fixed_points(cur, cfg);
  for (int s = 0; s < steps; ++s) {
    MarkovStep step = random_markov_step(cur, rng, opts);
    auto next_records = solve_fixed_points(step.after, cfg);
    audits.push_back(detail::audit_transport(step.move, cur, cur_records, step.after,
                                             next_records, step.transport));
    cur = std::move(step.after);
    cur_records = std::move(next_records);
  }
  return audits;
}

} // namespace braidfix
