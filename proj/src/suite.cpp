#include "vermalab/suite.hpp"

#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "vermalab/globalverma.hpp"
#include "vermalab/ktheory.hpp"
#include "vermalab/whittaker.hpp"

namespace vermalab {

namespace {

using Body = std::function<VerificationReport(const Generators&)>;

constexpr int kMaxRedraws = 32;
constexpr double kTransportTolerance = 1e-12;
constexpr double kIdentityTolerance = 1e-8;
constexpr double kHomotopyTolerance = 1e-6;

std::string dlabel(int n, const Degree& d) { return "n=" + std::to_string(n) + " d=" + to_string(d) + " "; }

bool q_symbolic(const Generators& g) {
  for (const auto& q : g.qs)
    if (q.is_constant()) return false;
  return true;
}

Generators base_generators(const RunConfig& cfg) {
  if (cfg.spec.empty()) return Generators::symbolic(cfg.n);
  return Generators::specialized(cfg.n, exact::Assignment::parse(cfg.spec));
}

/// Exact mode runs the body once; random-eval merges cfg.trials draws.
VerificationReport run_trials(const RunConfig& cfg, const Body& body, bool keep_q_symbolic = false) {
  if (cfg.mode == EvalMode::Exact) return body(base_generators(cfg));
  std::mt19937_64 rng(cfg.seed);
  const Generators sym = Generators::symbolic(cfg.n);
  VerificationReport merged;
  for (int t = 0; t < cfg.trials; ++t) {
    for (int attempt = 0;; ++attempt) {
      Generators g = Generators::random(cfg.n, rng);
      if (keep_q_symbolic) g.qs = sym.qs;
      try {
        VerificationReport r = body(g);
        if (t == 0) {
          merged = std::move(r);
        } else {
          merged.merge_trial(r);
        }
        break;
      } catch (const exact::DivisionByZero&) {
      } catch (const exact::PoleError&) {
      }
      if (attempt + 1 >= kMaxRedraws) throw std::runtime_error("random evaluation hit a pole on every redraw");
    }
  }
  return merged;
}

VerificationReport suite_patterns(const RunConfig& cfg) {
  VerificationReport rep;
  for (const auto& d : cfg.degrees()) {
    nlohmann::json list = nlohmann::json::array();
    const auto basis = enumerate_patterns(cfg.n, d);
    for (const auto& p : basis) list.push_back(p.to_string());
    rep.add({dlabel(cfg.n, d) + "patterns", "fixed points of the based space in degree d", Status::Pass, std::nullopt,
             {{"count", basis.size()},
              {"global_count", enumerate_global_fixed_points(cfg.n, d).size()},
              {"patterns", std::move(list)}}});
  }
  return rep;
}

VerificationReport suite_gt_spectrum(const RunConfig& cfg) {
  return run_trials(cfg, [&](const Generators& g) {
    VerificationReport rep = check_casimirs(cfg.n, cfg.degree_bound(), g);
    for (const auto& d : cfg.degrees()) {
      for (auto set : {GeneratorSet::TildeCasimir, GeneratorSet::DetBundles, GeneratorSet::Chern}) {
        VerificationReport sep = check_spectrum_separation(cfg.n, d, set, g);
        if (set == GeneratorSet::TildeCasimir && cfg.mode == EvalMode::Exact && !sep.items.empty())
          sep.items.front().data = joint_spectrum(cfg.n, d, set, g).to_json();
        rep.extend(sep);
      }
    }
    return rep;
  });
}

VerificationReport suite_whittaker(const RunConfig& cfg) {
  return run_trials(cfg, [&](const Generators& g) {
    VerificationReport rep;
    VermaModule v(g);
    WhittakerSolver solver(v);
    for (const auto& d : cfg.degrees()) {
      VerificationReport r = check_cyclicity(cfg.n, d, g);
      if (cfg.mode == EvalMode::Exact && !r.items.empty() && r.items.front().status == Status::Pass)
        r.items.front().data = solver.component(d).to_json();
      rep.extend(r);
    }
    return rep;
  });
}

VerificationReport suite_ring(const RunConfig& cfg) {
  return run_trials(cfg, [&](const Generators& g) {
    VerificationReport rep;
    for (const auto& d : cfg.degrees()) rep.extend(check_ring(cfg.n, d, g));
    return rep;
  });
}

VerificationReport suite_qc(const RunConfig& cfg) {
  return run_trials(
      cfg,
      [&](const Generators& g) {
        VerificationReport rep;
        for (const auto& d : cfg.degrees()) {
          rep.extend(check_qc_commutativity(cfg.n, d, g, cfg.norm));
          if (cfg.norm == QcNormalization::ShiftOfArgument && cfg.n >= 4)
            rep.extend(check_qc_commutativity(cfg.n, d, g, QcNormalization::Printed));
        }
        if (cfg.n >= 3) {
          if (q_symbolic(g)) rep.extend(check_qc_degeneration(cfg.n, cfg.degree_bound(), g));
          rep.extend(check_qc_cross(cfg.n, cfg.degree_bound(), g));
        }
        return rep;
      },
      true);
}

VerificationReport suite_flatness(const RunConfig& cfg) {
  return run_trials(
      cfg,
      [&](const Generators& g) {
        VerificationReport rep;
        for (const auto& d : cfg.degrees()) rep.extend(check_flatness(cfg.n, d, g, cfg.norm));
        return rep;
      },
      true);
}

exact::Assignment default_point(int n) {
  exact::Assignment a;
  for (int i = 1; i <= n; ++i) a.set(exact::Symbol::x(i), i - 1);
  a.set(exact::Symbol::hbar(), 1);
  return a;
}

std::vector<PathSegment> reversed(const std::vector<PathSegment>& path) {
  std::vector<PathSegment> out;
  for (auto it = path.rbegin(); it != path.rend(); ++it) out.push_back({it->to, it->from});
  return out;
}

VerificationReport suite_monodromy(const RunConfig& cfg) {
  using C = std::complex<double>;
  ConnectionSpec spec;
  spec.n = cfg.n;
  spec.degree = *cfg.degree;
  spec.kappa = cfg.kappa;
  spec.point = cfg.spec.empty() ? default_point(cfg.n) : exact::Assignment::parse(cfg.spec);
  spec.norm = cfg.norm;
  StepControl control;
  control.tolerance = kTransportTolerance;
  const std::string pre = dlabel(cfg.n, spec.degree);

  VerificationReport rep;
  auto transport = [&](const std::string& label, const std::vector<PathSegment>& path) -> std::optional<MonodromyResult> {
    try {
      return monodromy_transport(spec, path, control);
    } catch (const TransportError& e) {
      rep.check(pre + label, "parallel transport of the Casimir connection", false, e.what());
      return std::nullopt;
    }
  };

  if (cfg.path_file) {
    std::ifstream in(*cfg.path_file);
    if (!in) throw ConfigError("cannot read path file " + cfg.path_file->string());
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError(std::string("bad path file: ") + e.what());
    }
    if (auto r = transport("transport along path", parse_path(j)))
      rep.add({pre + "transport along path", "parallel transport of the Casimir connection", Status::Pass, std::nullopt,
               r->to_json()});
    return rep;
  }

  const auto contractible = polygon({{C(2.0, 0.0)}, {C(2.5, 0.8)}, {C(3.0, 0.0)}, {C(2.5, -0.6)}});
  const auto circle = polygon({{C(0.5, 0.0)}, {C(0.0, 0.5)}, {C(-0.5, 0.0)}, {C(0.0, -0.5)}});
  std::vector<PathSegment> hexagon = {{{C(0.5, 0.0)}, {C(0.3, 0.0)}}};
  for (const auto& s : polygon({{C(0.3, 0.0)}, {C(0.3, 0.3)}, {C(0.0, 0.6)}, {C(-0.4, 0.4)}, {C(-0.4, -0.4)},
                                {C(0.2, -0.7)}}))
    hexagon.push_back(s);
  hexagon.push_back({{C(0.3, 0.0)}, {C(0.5, 0.0)}});
  std::vector<PathSegment> there_and_back = circle;
  for (const auto& s : reversed(circle)) there_and_back.push_back(s);

  if (auto r = transport("contractible loop is trivial", contractible)) {
    double dist = distance_to_identity(r->matrix);
    rep.check(pre + "contractible loop is trivial", "flat connection has trivial monodromy on contractible loops",
              dist < kIdentityTolerance, "distance " + std::to_string(dist));
    rep.items.back().data = {{"distance", dist}, {"tolerance", kIdentityTolerance}};
  }
  if (auto r = transport("loop followed by its reverse is trivial", there_and_back)) {
    double dist = distance_to_identity(r->matrix);
    rep.check(pre + "loop followed by its reverse is trivial", "transport along a path and back is the identity",
              dist < kIdentityTolerance, "distance " + std::to_string(dist));
  }
  auto a = transport("homotopic loops agree", circle);
  auto b = a ? transport("homotopic loops agree", hexagon) : std::nullopt;
  if (a && b) {
    double dist = max_distance(a->matrix, b->matrix);
    rep.check(pre + "homotopic loops agree", "monodromy depends only on the homotopy class",
              dist < kHomotopyTolerance, "distance " + std::to_string(dist));
    rep.items.back().data = {{"monodromy", a->to_json()}, {"tolerance", kHomotopyTolerance}};
  }
  return rep;
}

VerificationReport suite_global(const RunConfig& cfg) {
  VerificationReport rep = run_trials(cfg, [&](const Generators& g) {
    VerificationReport r = check_double_relations(cfg.n, cfg.degree_bound(), g);
    for (const auto& d : cfg.degrees()) r.extend(check_global_chern(cfg.n, d, g));
    return r;
  });
  // The symmetric group permutes the x_i, so these checks need symbolic x.
  const Generators g = cfg.mode == EvalMode::Exact ? base_generators(cfg) : Generators::symbolic(cfg.n);
  rep.extend(check_sn_action(cfg.n, cfg.degree_bound(), g));
  for (const auto& d : cfg.degrees()) rep.extend(check_global_whittaker(cfg.n, d, g));
  return rep;
}

}  // namespace

std::string to_string(EvalMode m) { return m == EvalMode::Exact ? "exact" : "random-eval"; }
std::string to_string(ReportFormat f) { return f == ReportFormat::Json ? "json" : "csv"; }

void RunConfig::validate() const {
  if (n < 2 || n > exact::kMaxRank) throw ConfigError("--n must lie in [2, " + std::to_string(exact::kMaxRank) + "]");
  if (degree) {
    if (static_cast<int>(degree->size()) != n - 1)
      throw ConfigError("--degree needs n-1 = " + std::to_string(n - 1) + " entries");
    if (!is_nonnegative(*degree)) throw ConfigError("--degree entries must be nonnegative");
  }
  if (max_degree < 0) throw ConfigError("--max-degree must be nonnegative");
  if (mode == EvalMode::RandomEval && trials < 1) throw ConfigError("--trials must be at least 1");
  if (!spec.empty()) {
    try {
      exact::Assignment::parse(spec);
    } catch (const std::exception& e) {
      throw ConfigError(std::string("bad --spec: ") + e.what());
    }
  }
}

std::vector<Degree> RunConfig::degrees() const { return degree ? std::vector<Degree>{*degree} : degrees_up_to(n, max_degree); }

int RunConfig::degree_bound() const { return degree ? total(*degree) : max_degree; }

nlohmann::json RunConfig::echo() const {
  nlohmann::json j = {{"n", n}, {"mode", to_string(mode)}};
  if (degree)
    j["degree"] = *degree;
  else
    j["max_degree"] = max_degree;
  if (mode == EvalMode::RandomEval) {
    j["seed"] = seed;
    j["trials"] = trials;
  }
  if (!spec.empty()) j["spec"] = spec;
  return j;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"patterns",  "verify-gl", "gt-spectrum", "whittaker",     "ring",
                                                 "qc-check",  "flatness",  "monodromy",   "global-verify", "ktheory"};
  return names;
}

VerificationReport run_suite(const std::string& name, const RunConfig& cfg) {
  cfg.validate();
  VerificationReport rep;
  nlohmann::json config = cfg.echo();
  if (name == "patterns") {
    rep = suite_patterns(cfg);
  } else if (name == "verify-gl") {
    rep = run_trials(cfg, [&](const Generators& g) { return check_gl_relations(cfg.n, cfg.degree_bound(), g); });
  } else if (name == "gt-spectrum") {
    rep = suite_gt_spectrum(cfg);
  } else if (name == "whittaker") {
    rep = suite_whittaker(cfg);
  } else if (name == "ring") {
    rep = suite_ring(cfg);
  } else if (name == "qc-check" || name == "flatness") {
    if (cfg.n < 3) throw ConfigError(name + " needs n >= 3");
    config["normalization"] = to_string(cfg.norm);
    rep = name == "qc-check" ? suite_qc(cfg) : suite_flatness(cfg);
  } else if (name == "monodromy") {
    if (!cfg.degree) throw ConfigError("monodromy needs --degree");
    if (cfg.n < 3) throw ConfigError("monodromy needs n >= 3");
    if (!cfg.path_file && cfg.n != 3) throw ConfigError("monodromy with n > 3 needs --path");
    config["kappa"] = cfg.kappa;
    config["normalization"] = to_string(cfg.norm);
    if (cfg.path_file) config["path"] = cfg.path_file->string();
    rep = suite_monodromy(cfg);
  } else if (name == "global-verify") {
    rep = suite_global(cfg);
  } else if (name == "ktheory") {
    rep = check_ktheory(cfg.n, cfg.degree_bound());
  } else {
    throw ConfigError("unknown suite " + name);
  }
  rep.suite = name;
  rep.config = std::move(config);
  rep.seconds.reset();
  return rep;
}

std::string serialize(const VerificationReport& rep, ReportFormat fmt) {
  if (fmt == ReportFormat::Csv) return rep.to_csv();
  return rep.to_json().dump(2) + "\n";
}

std::string golden_name(const std::string& suite, const RunConfig& cfg, ReportFormat fmt) {
  std::string tag;
  if (cfg.degree) {
    tag = "d";
    for (std::size_t i = 0; i < cfg.degree->size(); ++i) tag += (i ? "_" : "") + std::to_string((*cfg.degree)[i]);
  } else {
    tag = "max" + std::to_string(cfg.max_degree);
  }
  std::string name = suite + "-n" + std::to_string(cfg.n) + "-" + tag + "-" + to_string(cfg.mode);
  if (cfg.mode == EvalMode::RandomEval) name += "-s" + std::to_string(cfg.seed) + "-t" + std::to_string(cfg.trials);
  if (!cfg.spec.empty()) {
    name += "-at-";
    for (char c : cfg.spec) name += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  }
  return name + "." + to_string(fmt);
}

std::vector<std::string> report_mismatches(const std::string& expected, const std::string& actual, ReportFormat fmt) {
  std::vector<std::string> out;
  std::vector<std::pair<std::string, std::string>> want, got;
  if (fmt == ReportFormat::Json) {
    nlohmann::json a, b;
    try {
      a = nlohmann::json::parse(expected);
      b = nlohmann::json::parse(actual);
    } catch (const nlohmann::json::exception&) {
      return {"unparseable golden"};
    }
    for (const char* key : {"suite", "config", "summary"})
      if (a.value(key, nlohmann::json()) != b.value(key, nlohmann::json())) out.emplace_back(key);
    for (const auto& it : a.value("items", nlohmann::json::array())) want.emplace_back(it.value("label", ""), it.dump());
    for (const auto& it : b.value("items", nlohmann::json::array())) got.emplace_back(it.value("label", ""), it.dump());
  } else {
    auto rows = [](const std::string& text) {
      std::vector<std::pair<std::string, std::string>> r;
      std::istringstream in(text);
      std::string line;
      std::getline(in, line);
      while (std::getline(in, line)) {
        std::string label = line.front() == '"' ? line.substr(1, line.find('"', 1) - 1) : line.substr(0, line.find(','));
        r.emplace_back(label, line);
      }
      return r;
    };
    want = rows(expected);
    got = rows(actual);
  }
  std::map<std::string, std::string> w(want.begin(), want.end());
  std::set<std::string> seen;
  for (const auto& [label, body] : got) {
    seen.insert(label);
    auto f = w.find(label);
    if (f == w.end())
      out.push_back(label + " (new)");
    else if (f->second != body)
      out.push_back(label);
  }
  for (const auto& [label, body] : want)
    if (!seen.count(label)) out.push_back(label + " (missing)");
  if (out.empty() && expected != actual) out.emplace_back("formatting");
  return out;
}

GoldenResult golden_diff(const VerificationReport& rep, const RunConfig& cfg, ReportFormat fmt,
                         const std::filesystem::path& dir, bool bless) {
  GoldenResult res;
  res.file = dir / golden_name(rep.suite, cfg, fmt);
  const std::string actual = serialize(rep, fmt);
  if (bless) {
    std::filesystem::create_directories(dir);
    std::ofstream(res.file, std::ios::binary) << actual;
    res.match = true;
    res.blessed = true;
    return res;
  }
  std::ifstream in(res.file, std::ios::binary);
  if (!in) throw MissingGolden("missing golden " + res.file.string() + " (rerun with --bless)");
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string expected = buf.str();
  res.match = expected == actual;
  if (!res.match) res.mismatches = report_mismatches(expected, actual, fmt);
  return res;
}

}  // namespace vermalab
