#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "vermalab/suite.hpp"

using namespace vermalab;

namespace {

namespace fs = std::filesystem;

fs::path scratch_dir(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("vermalab-" + name);
  fs::remove_all(p);
  return p;
}

/// Verma seeds with the e_1 coefficients doubled from degree (1, 0) on.
class MutatedSeeds : public SeedProvider {
 public:
  explicit MutatedSeeds(const Generators& g) : base_(g) {}
  int rank() const override { return base_.rank(); }
  std::size_t dim(const Degree& d) const override { return base_.dim(d); }
  SparseMatrix cartan(int i, const Degree& d) const override { return base_.cartan(i, d); }
  SparseMatrix raise(int i, const Degree& d) const override {
    SparseMatrix m = base_.raise(i, d);
    return i == 1 && d[0] >= 1 ? m.scaled(FieldElem(2L)) : m;
  }
  SparseMatrix lower(int i, const Degree& d) const override { return base_.lower(i, d); }

 private:
  VermaSeeds base_;
};

VerificationReport gl_report(std::shared_ptr<const SeedProvider> seeds, const RunConfig& cfg) {
  OperatorEngine eng(std::move(seeds));
  VerificationReport rep = check_gl_relations(eng, cfg.max_degree);
  rep.suite = "verify-gl";
  rep.config = cfg.echo();
  return rep;
}

}  // namespace

TEST_CASE("config validation") {
  RunConfig cfg;
  cfg.n = 1;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg.n = 3;
  cfg.degree = Degree{1};
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg.degree = Degree{1, -1};
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg.degree = Degree{1, 1};
  cfg.validate();
  CHECK(cfg.degrees() == std::vector<Degree>{{1, 1}});
  CHECK(cfg.degree_bound() == 2);
  cfg.mode = EvalMode::RandomEval;
  cfg.trials = 0;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg.trials = 2;
  cfg.spec = "x9=1";
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  CHECK_THROWS_AS(run_suite("nonsense", RunConfig{}), ConfigError);
}

TEST_CASE("suite outputs") {
  RunConfig cfg;
  cfg.n = 3;
  cfg.degree = Degree{1, 1};
  auto rep = run_suite("patterns", cfg);
  REQUIRE(rep.items.size() == 1);
  CHECK(rep.items[0].data["count"] == 2);
  CHECK(rep.items[0].data["patterns"].size() == 2);

  RunConfig gl;
  gl.n = 2;
  gl.max_degree = 3;
  auto r = run_suite("verify-gl", gl);
  CHECK(r.ok());
  CHECK(r.count(Status::Pass) == r.items.size());

  RunConfig qc;
  qc.n = 4;
  qc.degree = Degree{1, 1, 1};
  auto q = run_suite("qc-check", qc);
  CHECK(q.ok());
  bool found = false;
  for (const auto& it : q.items)
    if (it.label == "n=4 d=(1,1,1) [QC_2,QC_3] = 0 (shift-of-argument)") found = it.status == Status::Pass;
  CHECK(found);

  // The ring table needs a specialization; at x = (0, 1, 2), hbar = 1 it is c^2 = c.
  RunConfig ring;
  ring.n = 3;
  ring.degree = Degree{1, 1};
  ring.spec = "x1=0,x2=1,x3=2,hbar=1";
  CHECK(run_suite("ring", ring).ok());

  RunConfig mono;
  mono.n = 3;
  CHECK_THROWS_AS(run_suite("monodromy", mono), ConfigError);
}

TEST_CASE("determinism and seeds") {
  RunConfig cfg;
  cfg.n = 3;
  cfg.max_degree = 2;
  const std::string a = serialize(run_suite("whittaker", cfg), ReportFormat::Json);
  CHECK(a == serialize(run_suite("whittaker", cfg), ReportFormat::Json));
  cfg.seed = 99;
  CHECK(a == serialize(run_suite("whittaker", cfg), ReportFormat::Json));
  CHECK(a.back() == '\n');

  cfg.mode = EvalMode::RandomEval;
  cfg.trials = 2;
  const std::string r = serialize(run_suite("verify-gl", cfg), ReportFormat::Csv);
  CHECK(r == serialize(run_suite("verify-gl", cfg), ReportFormat::Csv));
  CHECK(run_suite("verify-gl", cfg).ok());
}

TEST_CASE("golden files") {
  const fs::path dir = scratch_dir("golden");
  RunConfig cfg;
  cfg.n = 2;
  cfg.max_degree = 2;
  auto rep = run_suite("gt-spectrum", cfg);
  CHECK(golden_name("gt-spectrum", cfg, ReportFormat::Json) == "gt-spectrum-n2-max2-exact.json");
  CHECK_THROWS_AS(golden_diff(rep, cfg, ReportFormat::Json, dir, false), MissingGolden);

  auto blessed = golden_diff(rep, cfg, ReportFormat::Json, dir, true);
  CHECK(blessed.blessed);
  CHECK(fs::exists(blessed.file));
  CHECK(golden_diff(rep, cfg, ReportFormat::Json, dir, false).match);

  // Exact results do not depend on the seed; the seed is not echoed in exact mode.
  RunConfig other = cfg;
  other.seed = 12345;
  CHECK(golden_diff(run_suite("gt-spectrum", other), other, ReportFormat::Json, dir, false).match);

  golden_diff(rep, cfg, ReportFormat::Csv, dir, true);
  CHECK(golden_diff(rep, cfg, ReportFormat::Csv, dir, false).match);
  fs::remove_all(dir);
}

TEST_CASE("mutation is caught by the golden diff") {
  const fs::path dir = scratch_dir("mutation");
  RunConfig cfg;
  cfg.n = 3;
  cfg.max_degree = 2;
  const Generators g = Generators::symbolic(3);
  auto good = gl_report(std::make_shared<VermaSeeds>(g), cfg);
  REQUIRE(good.ok());
  golden_diff(good, cfg, ReportFormat::Json, dir, true);

  auto bad = gl_report(std::make_shared<MutatedSeeds>(g), cfg);
  CHECK_FALSE(bad.ok());
  for (auto fmt : {ReportFormat::Json, ReportFormat::Csv}) {
    golden_diff(good, cfg, fmt, dir, true);
    auto res = golden_diff(bad, cfg, fmt, dir, false);
    CHECK_FALSE(res.match);
    REQUIRE_FALSE(res.mismatches.empty());
    std::string failing;
    for (const auto& it : bad.items)
      if (it.status == Status::Fail) {
        failing = it.label;
        break;
      }
    CHECK(std::find(res.mismatches.begin(), res.mismatches.end(), failing) != res.mismatches.end());
  }
  fs::remove_all(dir);
}
