// braidfix command line: analyze | markov | pillowcase.
//
// Exit codes: 0 success, 1 usage or domain error (including failed audits),
// 2 lambda undefined because some class is degenerate.

#include "braidfix/report.hpp"

#include "CLI11.hpp"

#include <cctype>
#include <fstream>
#include <iostream>

using namespace braidfix;

namespace {

struct Options {
  std::string word;
  std::optional<int> strands;
  int seeds = SolverConfig{}.seeds;
  double tol = SolverConfig{}.residual_tol;
  std::uint64_t rng_seed = SolverConfig{}.rng_seed;
  int threads = 0;
  std::string json_path;
  std::string csv_path;
  int steps = 6;
  int csv_samples = 720;
};

SolverConfig make_config(const Options &o) {
  SolverConfig cfg;
  cfg.seeds = o.seeds;
  cfg.residual_tol = o.tol;
  cfg.rng_seed = o.rng_seed;
  cfg.threads = o.threads;
  cfg.validate();
  return cfg;
}

void emit(const Report &r, const Options &o) {
  const std::string text = to_json(r);
  if (o.json_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.json_path, std::ios::binary);
  if (!f)
    throw DomainError("cannot write " + o.json_path);
  f << text;
}

void summarize(const Report &r) {
  std::cout << r.command << " " << r.braid << " (B_" << r.strands << ")\n";
  if (r.lambda_status) {
    std::cout << "  classes " << r.classes->size() << ", lambda "
              << (r.lambda ? std::to_string(*r.lambda) : *r.lambda_status);
    if (r.signature)
      std::cout << ", signature " << *r.signature;
    if (r.determinant)
      std::cout << ", determinant " << *r.determinant;
    std::cout << "\n";
  }
  if (r.markov_audits) {
    for (const auto &a : *r.markov_audits)
      std::cout << "  " << (a.passed ? "pass" : "FAIL") << "  " << a.move << ": " << a.after
                << (a.passed ? "" : "  (" + a.reason + ")") << "\n";
  }
  if (r.pillowcase) {
    std::cout << "  pillowcase q = " << r.pillowcase->q << ", irreducible classes "
              << r.pillowcase->classes.size() << "\n";
    for (const auto &c : r.pillowcase->classes)
      std::cout << "    alpha = " << c.alpha.value << "\n";
  }
}

int run_analyze(const Options &o) {
  const BraidWord b = parse_braid(o.word, o.strands);
  const Report r = analyze_report(b, make_config(o));
  emit(r, o);
  if (!o.json_path.empty())
    summarize(r);
  if (!r.lambda) {
    std::cerr << "lambda undefined: degenerate class for braid " << r.braid << "\n";
    return 2;
  }
  return 0;
}

int run_markov(const Options &o) {
  if (o.steps < 0)
    throw DomainError("--steps must be nonnegative");
  const BraidWord b = parse_braid(o.word, o.strands);
  const Report r = markov_report(b, o.steps, make_config(o));
  emit(r, o);
  if (!o.json_path.empty())
    summarize(r);
  int code = 0;
  for (const auto &a : *r.markov_audits) {
    if (a.passed)
      continue;
    if (a.reason == "degenerate") {
      std::cerr << "degenerate class in audit: " << a.before << " -> " << a.after << "\n";
      return 2;
    }
    std::cerr << "audit failed (" << a.reason << "): " << a.before << " -> " << a.after << "\n";
    code = 1;
  }
  return code;
}

int run_pillowcase(const Options &o) {
  const BraidWord b = parse_braid(o.word, o.strands);
  const Report r = pillowcase_report(b, make_config(o));
  emit(r, o);
  if (!o.json_path.empty())
    summarize(r);
  if (!o.csv_path.empty()) {
    std::ofstream f(o.csv_path, std::ios::binary);
    if (!f)
      throw DomainError("cannot write " + o.csv_path);
    write_curve_csv(f, curve_samples(b, o.csv_samples));
  }
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Traceless SU(2) fixed points of braids, Casson-Lin counts and Markov audits"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  Options o;
  auto common = [&](CLI::App *sub) {
    sub->add_option("word", o.word, "braid word, e.g. \"1 -2 1 -2\"")
        ->required();
    sub->add_option("--strands", o.strands, "strand count (default: largest generator + 1)");
    sub->add_option("--seeds", o.seeds, "random starts for the solver")->check(CLI::PositiveNumber);
    sub->add_option("--tol", o.tol, "residual tolerance of the fixed point equation")
        ->check(CLI::PositiveNumber);
    sub->add_option("--rng-seed", o.rng_seed, "random seed");
    sub->add_option("--threads", o.threads, "worker threads (0 = all cores)")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--json", o.json_path, "write the JSON report here instead of stdout");
  };

  auto *analyze = app.add_subcommand("analyze", "fixed points, indices, lambda and classical invariants");
  common(analyze);
  auto *markov = app.add_subcommand("markov", "random Markov walk with an audit per move");
  common(markov);
  markov->add_option("--steps", o.steps, "number of moves");
  auto *pillow = app.add_subcommand("pillowcase", "exact pillowcase geometry of a 2-strand braid");
  common(pillow);
  pillow->add_option("--csv", o.csv_path, "write sampled curves as CSV");
  pillow->add_option("--csv-samples", o.csv_samples, "samples per curve")
      ->check(CLI::PositiveNumber);

  // braid words such as "-1 -2" would otherwise be taken for options; a
  // leading space keeps them positional and parse_braid ignores it
  std::vector<std::string> args;
  for (int i = argc - 1; i >= 1; --i) {
    std::string a = argv[i];
    if (a.size() >= 2 && a[0] == '-' && std::isdigit(static_cast<unsigned char>(a[1])))
      a.insert(a.begin(), ' ');
    args.push_back(std::move(a));
  }

  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*analyze)
      return run_analyze(o);
    if (*markov)
      return run_markov(o);
    return run_pillowcase(o);
  } catch (const ParseError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const DomainError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
