// Acceptance criteria: one PASS/FAIL line per criterion.
// Usage: acceptance [criterion...]   (all criteria when no argument is given)

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "vermalab/globalverma.hpp"
#include "vermalab/ktheory.hpp"
#include "vermalab/suite.hpp"
#include "vermalab/whittaker.hpp"

using namespace vermalab;

namespace {

constexpr double kGlBudgetSeconds = 120.0;
constexpr double kQcBudgetSeconds = 300.0;
constexpr double kTransportTolerance = 1e-12;
constexpr double kIdentityTolerance = 1e-8;
constexpr double kHomotopyTolerance = 1e-6;

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

/// First failing item of a report, or empty.
std::string first_fail(const VerificationReport& rep) {
  for (const auto& it : rep.items)
    if (it.status == Status::Fail) return it.label + ": " + it.witness.value_or("");
  return {};
}

void require(Outcome& o, const VerificationReport& rep, const std::string& what) {
  std::string f = first_fail(rep);
  if (!f.empty() && o.pass) {
    o.pass = false;
    o.detail = what + " failed at " + f;
  }
}

void require(Outcome& o, bool ok, const std::string& what) {
  if (!ok && o.pass) {
    o.pass = false;
    o.detail = what;
  }
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

FieldElem P(const char* s) { return FieldElem::parse(s); }

Outcome gl_relations() {
  Outcome o;
  auto t0 = Clock::now();
  for (int n = 2; n <= 4; ++n) require(o, check_gl_relations(n, 3, Generators::symbolic(n)), "n=" + std::to_string(n));
  double s = seconds_since(t0);
  require(o, s < kGlBudgetSeconds, "took " + fmt(s) + "s");
  if (o.pass) o.detail = "n=2..4, |d|<=3 exact in " + fmt(s) + "s";
  return o;
}

Outcome h1_identity() {
  Outcome o;
  const Generators g = Generators::symbolic(2);
  VermaModule v(g);
  for (int m = 0; m <= 5; ++m) {
    // Hand oracle: E_22 - E_11 = (x2 - x1)/h + 2m + 1 on the pattern m.
    FieldElem want = (g.x(2) - g.x(1)) / g.hbar() + FieldElem(static_cast<long>(2 * m + 1));
    SparseMatrix c = v.engine.commutator({2, 1}, {1, 2}, {m});
    require(o, c.rows() == 1 && c.get(0, 0) == want, "[e1,f1] on m=" + std::to_string(m));
    SparseMatrix h = v.engine.E(2, 2, {m}) - v.engine.E(1, 1, {m});
    require(o, h.get(0, 0) == want, "E22 - E11 on m=" + std::to_string(m));
  }
  if (o.pass) o.detail = "[e1,f1] = (x2-x1)/h + 2m + 1 for m = 0..5";
  return o;
}

Outcome casimirs() {
  Outcome o;
  std::size_t c1_items = 0;
  for (int n = 2; n <= 4; ++n) {
    auto rep = check_casimirs(n, 3, Generators::symbolic(n));
    require(o, rep, "n=" + std::to_string(n));
    for (const auto& it : rep.items)
      if (it.label.find("c1(D_") != std::string::npos && it.status == Status::Pass) ++c1_items;
  }
  require(o, c1_items > 0, "no determinant-bundle identity was checked");
  // Oracle: Cas_2 on V_0 for n = 2 is l1^2 + l2^2 + l1 - l2 with l1 = x1/h, l2 = x2/h + 1.
  VermaModule v(Generators::symbolic(2));
  FieldElem l1 = P("x1/hbar"), l2 = P("x2/hbar + 1");
  require(o, casimir_block(v.engine, 2, {0}).get(0, 0) == l1 * l1 + l2 * l2 + l1 - l2, "Cas_2 hand value");
  if (o.pass) o.detail = "diagonal with closed forms for n<=4, |d|<=3; c1(D_k) = (h/2) tildeCas_k in " +
                         std::to_string(c1_items) + " checks";
  return o;
}

Outcome cyclicity() {
  Outcome o;
  auto t0 = Clock::now();
  std::size_t spaces = 0;
  for (int n = 2; n <= 4; ++n) {
    const Generators g = Generators::symbolic(n);
    for (const auto& d : degrees_up_to(n, 4)) {
      require(o, check_cyclicity(n, d, g), "n=" + std::to_string(n) + " d=" + to_string(d));
      ++spaces;
    }
  }
  VermaModule v(Generators::symbolic(2));
  WhittakerSolver solver(v);
  require(o, solver.component({1}).coefficients.at(0) == P("1/(hbar*(x2 - x1 + hbar))"), "n=2 d=(1) golden value");
  if (o.pass) o.detail = std::to_string(spaces) + " weight spaces for n<=4, |d|<=4 in " + fmt(seconds_since(t0)) + "s";
  return o;
}

Outcome shift_of_argument() {
  Outcome o;
  auto t0 = Clock::now();
  const Generators g4 = Generators::symbolic(4);
  std::size_t checked = 0;
  for (const auto& d : degrees_up_to(4, 2)) {
    auto rep = check_qc_commutativity(4, d, g4);
    require(o, rep, "[QC_2,QC_3] at d=" + to_string(d));
    for (const auto& it : rep.items) checked += it.status == Status::Pass ? 1 : 0;
  }
  require(o, checked > 0, "no commutator was checked");
  for (int n = 3; n <= 4; ++n) require(o, check_qc_degeneration(n, 2, Generators::symbolic(n)), "q -> 0 degeneration");
  double s = seconds_since(t0);
  require(o, s < kQcBudgetSeconds, "took " + fmt(s) + "s");
  if (o.pass) o.detail = "[QC_2,QC_3] = 0 for n=4, |d|<=2; q -> 0 gives tildeCas for n=3,4; " + fmt(s) + "s";
  return o;
}

Outcome monodromy() {
  using C = std::complex<double>;
  Outcome o;
  ConnectionSpec spec;
  spec.n = 3;
  spec.degree = {1, 1};
  spec.kappa = 0.5;
  spec.point = exact::Assignment::parse("x1=0,x2=1,x3=2,hbar=1");
  StepControl control;
  control.tolerance = kTransportTolerance;

  auto contractible = polygon({{C(2.0, 0.0)}, {C(2.5, 0.8)}, {C(3.0, 0.0)}, {C(2.5, -0.6)}});
  double d_id = distance_to_identity(monodromy_transport(spec, contractible, control).matrix);
  require(o, d_id < kIdentityTolerance, "contractible loop off identity by " + fmt(d_id));

  auto circle = polygon({{C(0.5, 0.0)}, {C(0.0, 0.5)}, {C(-0.5, 0.0)}, {C(0.0, -0.5)}});
  std::vector<PathSegment> hexagon = {{{C(0.5, 0.0)}, {C(0.3, 0.0)}}};
  for (const auto& s : polygon({{C(0.3, 0.0)}, {C(0.3, 0.3)}, {C(0.0, 0.6)}, {C(-0.4, 0.4)}, {C(-0.4, -0.4)},
                                {C(0.2, -0.7)}}))
    hexagon.push_back(s);
  hexagon.push_back({{C(0.3, 0.0)}, {C(0.5, 0.0)}});
  auto a = monodromy_transport(spec, circle, control);
  auto b = monodromy_transport(spec, hexagon, control);
  double d_h = max_distance(a.matrix, b.matrix);
  require(o, d_h < kHomotopyTolerance, "homotopic loops differ by " + fmt(d_h));
  if (o.pass)
    o.detail = "contractible " + fmt(d_id) + " < 1e-8, homotopic " + fmt(d_h) + " < 1e-6 at tolerance 1e-12";
  return o;
}

Outcome double_action() {
  Outcome o;
  auto t0 = Clock::now();
  for (int n = 2; n <= 3; ++n) {
    const Generators g = Generators::symbolic(n);
    require(o, check_double_relations(n, 2, g), "double relations n=" + std::to_string(n));
    require(o, check_sn_action(n, 2, g), "S_n action n=" + std::to_string(n));
    for (const auto& d : degrees_up_to(n, 2))
      require(o, check_global_whittaker(n, d, g), "global Whittaker n=" + std::to_string(n));
  }
  if (o.pass) o.detail = "relations, cross-commutation, sums, S_n laws and invariants for n<=3, |d|<=2 in " +
                         fmt(seconds_since(t0)) + "s";
  return o;
}

Outcome ktheory() {
  Outcome o;
  std::map<std::string, std::pair<std::size_t, std::size_t>> tally;  // clause -> (pass, fail)
  std::string witness;
  for (int n = 2; n <= 4; ++n)
    for (const auto& it : check_ktheory(n, 4).items) {
      std::string clause = it.label.substr(it.label.find(' ', it.label.find(" d=") + 1) + 1);
      if (it.status == Status::Pass) ++tally[clause].first;
      if (it.status == Status::Fail) {
        ++tally[clause].second;
        if (witness.empty()) witness = it.label + ": " + it.witness.value_or("");
      }
    }
  std::ostringstream s;
  for (const auto& [clause, pf] : tally) {
    s << clause << " " << pf.first << " pass/" << pf.second << " fail; ";
    require(o, pf.second == 0, "");
  }
  o.detail = s.str() + (witness.empty() ? "" : "first failure " + witness);
  return o;
}

/// Triangular arrays with entries in [0, max] satisfying d_kj >= d_ij for all
/// i >= k >= j, grouped by degree.
std::map<Degree, std::size_t> naive_pattern_counts(int n, int max) {
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= i; ++j) cells.emplace_back(i, j);
  std::map<Degree, std::size_t> counts;
  std::vector<int> val(cells.size(), 0);
  auto at = [&](int i, int j) {
    for (std::size_t c = 0; c < cells.size(); ++c)
      if (cells[c] == std::make_pair(i, j)) return val[c];
    return 0;
  };
  while (true) {
    bool ok = true;
    for (auto [i, j] : cells)
      for (int k = j; k <= i; ++k) ok = ok && at(k, j) >= at(i, j);
    if (ok) {
      Degree d(static_cast<std::size_t>(n - 1), 0);
      for (std::size_t c = 0; c < cells.size(); ++c) d[static_cast<std::size_t>(cells[c].first - 1)] += val[c];
      ++counts[d];
    }
    std::size_t c = 0;
    while (c < val.size() && ++val[c] > max) val[c++] = 0;
    if (c == val.size()) break;
  }
  return counts;
}

/// Bijections found by filtering all maps {1..n} -> {1..n}, times the splits
/// d = d0 + dinf weighted by the naive pattern counts.
std::size_t naive_global_count(int n, const Degree& d, const std::map<Degree, std::size_t>& counts) {
  std::size_t perms = 0;
  std::vector<int> f(static_cast<std::size_t>(n), 0);
  while (true) {
    std::set<int> img(f.begin(), f.end());
    perms += img.size() == f.size() ? 1 : 0;
    std::size_t c = 0;
    while (c < f.size() && ++f[c] >= n) f[c++] = 0;
    if (c == f.size()) break;
  }
  auto count = [&](const Degree& e) {
    auto it = counts.find(e);
    return it == counts.end() ? std::size_t{0} : it->second;
  };
  std::size_t splits = 0;
  Degree d0(d.size(), 0);
  while (true) {
    Degree dinf = d;
    for (std::size_t i = 0; i < d.size(); ++i) dinf[i] -= d0[i];
    splits += count(d0) * count(dinf);
    std::size_t c = 0;
    while (c < d0.size() && ++d0[c] > d[c]) d0[c++] = 0;
    if (c == d0.size()) break;
  }
  return perms * splits;
}

Outcome dimensions() {
  Outcome o;
  auto c3 = naive_pattern_counts(3, 2);
  require(o, enumerate_patterns(3, {1, 1}).size() == 2 && c3[{1, 1}] == 2, "dim V_(1,1) for n=3");
  auto c2 = naive_pattern_counts(2, 1);
  require(o, enumerate_global_fixed_points(2, {1}).size() == 4 && naive_global_count(2, {1}, c2) == 4,
          "global count for n=2, d=(1)");
  std::size_t compared = 0;
  for (int n = 2; n <= 4; ++n) {
    auto counts = naive_pattern_counts(n, 3);
    for (const auto& d : degrees_up_to(n, 3)) {
      require(o, enumerate_patterns(n, d).size() == counts[d], "pattern count n=" + std::to_string(n) + " d=" + to_string(d));
      if (n <= 3 && total(d) <= 2)
        require(o, enumerate_global_fixed_points(n, d).size() == naive_global_count(n, d, counts),
                "global count n=" + std::to_string(n) + " d=" + to_string(d));
      ++compared;
    }
  }
  if (o.pass) o.detail = "dim V_(1,1) = 2, global count 4, and " + std::to_string(compared) + " degrees match the naive oracle";
  return o;
}

std::string full_suite_run() {
  std::string out;
  auto run = [&](const std::string& name, RunConfig cfg) { out += serialize(run_suite(name, cfg), ReportFormat::Json); };
  RunConfig base;
  base.n = 3;
  base.max_degree = 2;
  for (const char* name : {"patterns", "verify-gl", "gt-spectrum", "whittaker", "global-verify", "ktheory"}) run(name, base);
  RunConfig random = base;
  random.mode = EvalMode::RandomEval;
  random.seed = 2024;
  random.trials = 2;
  run("verify-gl", random);
  run("whittaker", random);
  RunConfig ring = base;
  ring.degree = Degree{1, 1};
  ring.spec = "x1=0,x2=1,x3=2,hbar=1";
  run("ring", ring);
  RunConfig qc;
  qc.n = 4;
  qc.degree = Degree{1, 1, 1};
  run("qc-check", qc);
  run("flatness", qc);
  RunConfig mono;
  mono.n = 3;
  mono.degree = Degree{1, 1};
  run("monodromy", mono);
  return out;
}

Outcome determinism() {
  Outcome o;
  const std::string a = full_suite_run();
  const std::string b = full_suite_run();
  require(o, a == b, "reports differ between runs");
  if (o.pass) o.detail = "two full-suite runs byte-identical (" + std::to_string(a.size()) + " bytes)";
  return o;
}

const std::map<int, std::pair<std::string, std::function<Outcome()>>>& criteria() {
  static const std::map<int, std::pair<std::string, std::function<Outcome()>>> c = {
      {1, {"gl(n) relations", gl_relations}},
      {2, {"[e1,f1] eigenvalue", h1_identity}},
      {3, {"Casimir diagonality and eigenvalues", casimirs}},
      {4, {"Whittaker vector and cyclicity", cyclicity}},
      {5, {"shift-of-argument commutativity", shift_of_argument}},
      {6, {"Casimir connection monodromy", monodromy}},
      {7, {"double action", double_action}},
      {8, {"quantum identities", ktheory}},
      {9, {"dimension counts", dimensions}},
      {10, {"determinism", determinism}}};
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> which;
  for (int a = 1; a < argc; ++a) which.push_back(std::atoi(argv[a]));
  if (which.empty())
    for (const auto& [k, v] : criteria()) which.push_back(k);
  bool all = true;
  for (int k : which) {
    auto it = criteria().find(k);
    if (it == criteria().end()) {
      std::fprintf(stderr, "unknown criterion %d\n", k);
      return 2;
    }
    Outcome o;
    try {
      o = it->second.second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("criterion %d %s: %s: %s\n", k, o.pass ? "PASS" : "FAIL", it->second.first.c_str(), o.detail.c_str());
    std::fflush(stdout);
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
