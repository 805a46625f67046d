#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "vermalab/suite.hpp"

namespace {

using namespace vermalab;

constexpr int kExitUsage = 2;
constexpr int kExitFailure = 1;

vermalab::Degree parse_degree(const std::string& text) {
  vermalab::Degree d;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw ConfigError("bad --degree entry '" + tok + "'");
    }
    if (used != tok.size()) throw ConfigError("bad --degree entry '" + tok + "'");
    d.push_back(v);
  }
  if (d.empty()) throw ConfigError("empty --degree");
  return d;
}

struct Options {
  int n = 2;
  std::string degree;
  int max_degree = 2;
  std::string mode = "exact";
  std::uint64_t seed = 0;
  int trials = 3;
  std::string format = "json";
  std::string out;
  std::string spec;
  std::string golden;
  bool bless = false;
  double kappa = 0.5;
  std::string path;
  std::string norm = "shift-of-argument";
};

void add_options(CLI::App* sub, Options& o) {
  sub->add_option("--n", o.n, "rank n of gl(n)")->required();
  auto* deg = sub->add_option("--degree", o.degree, "degree vector d_1,...,d_{n-1}");
  sub->add_option("--max-degree", o.max_degree, "run all degrees with |d| <= N")->excludes(deg);
  sub->add_option("--mode", o.mode, "exact or random-eval")->check(CLI::IsMember({"exact", "random-eval"}));
  sub->add_option("--seed", o.seed, "seed for random-eval");
  sub->add_option("--trials", o.trials, "number of random-eval trials");
  sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--out", o.out, "output file (stdout when absent)");
  sub->add_option("--spec", o.spec, "specialization, e.g. x1=0,x2=1,hbar=1");
  sub->add_option("--golden", o.golden, "golden directory to compare against");
  sub->add_flag("--bless", o.bless, "write goldens instead of comparing");
  sub->add_option("--kappa", o.kappa, "connection coupling (monodromy)");
  sub->add_option("--path", o.path, "JSON path file (monodromy)");
  sub->add_option("--normalization", o.norm, "printed or shift-of-argument (qc-check, flatness, monodromy)")
      ->check(CLI::IsMember({"printed", "shift-of-argument"}));
}

RunConfig to_config(const Options& o) {
  RunConfig cfg;
  cfg.n = o.n;
  if (!o.degree.empty()) cfg.degree = parse_degree(o.degree);
  cfg.max_degree = o.max_degree;
  cfg.mode = o.mode == "exact" ? EvalMode::Exact : EvalMode::RandomEval;
  cfg.seed = o.seed;
  cfg.trials = o.trials;
  cfg.spec = o.spec;
  cfg.kappa = o.kappa;
  if (!o.path.empty()) cfg.path_file = o.path;
  cfg.norm = qc_normalization_from_string(o.norm);
  cfg.validate();
  return cfg;
}

int run(const std::string& suite, const Options& o) {
  RunConfig cfg;
  try {
    cfg = to_config(o);
  } catch (const ConfigError& e) {
    std::cerr << "verma-lab: " << e.what() << "\n";
    return kExitUsage;
  }
  const ReportFormat fmt = o.format == "csv" ? ReportFormat::Csv : ReportFormat::Json;
  VerificationReport rep;
  try {
    rep = run_suite(suite, cfg);
  } catch (const ConfigError& e) {
    std::cerr << "verma-lab: " << e.what() << "\n";
    return kExitUsage;
  }
  const std::string text = serialize(rep, fmt);
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!(f << text)) throw std::runtime_error("cannot write " + o.out);
  }
  int code = rep.ok() ? 0 : kExitFailure;
  if (!rep.ok())
    for (const auto& it : rep.items)
      if (it.status == Status::Fail) std::cerr << "FAIL " << it.label << ": " << it.witness.value_or("") << "\n";
  if (!o.golden.empty()) {
    GoldenResult g = golden_diff(rep, cfg, fmt, o.golden, o.bless);
    if (g.blessed) {
      std::cerr << "blessed " << g.file.string() << "\n";
    } else if (!g.match) {
      std::cerr << "golden mismatch " << g.file.string() << "\n";
      for (const auto& m : g.mismatches) std::cerr << "  " << m << "\n";
      code = kExitFailure;
    }
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification suites for the universal Verma module of gl(n)"};
  app.require_subcommand(1);
  Options opts;
  std::string chosen;
  const std::map<std::string, std::string> help = {
      {"patterns", "enumerate fixed-point patterns"},
      {"verify-gl", "gl(n) commutation relations"},
      {"gt-spectrum", "Casimir eigenvalues and spectrum separation"},
      {"whittaker", "Whittaker vector and cyclicity"},
      {"ring", "multiplication table of the determinant classes"},
      {"qc-check", "commutativity of the q-deformed Casimirs"},
      {"flatness", "curvature of the Casimir connection"},
      {"monodromy", "numerical monodromy of the Casimir connection"},
      {"global-verify", "double action on the global module"},
      {"ktheory", "quantum Casimir and determinant class identities"}};
  for (const auto& name : suite_names()) {
    CLI::App* sub = app.add_subcommand(name, help.at(name));
    add_options(sub, opts);
    sub->callback([&chosen, name] { chosen = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  try {
    return run(chosen, opts);
  } catch (const std::exception& e) {
    std::cerr << "verma-lab: internal error: " << e.what() << "\n";
    return kExitFailure;
  }
}
