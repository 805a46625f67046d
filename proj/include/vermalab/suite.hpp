#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vermalab/shiftarg.hpp"

namespace vermalab {

enum class EvalMode { Exact, RandomEval };
enum class ReportFormat { Json, Csv };

std::string to_string(EvalMode m);
std::string to_string(ReportFormat f);

/// Invalid run configuration; the command line maps it to a usage error.
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  int n = 2;
  std::optional<Degree> degree;
  int max_degree = 2;
  EvalMode mode = EvalMode::Exact;
  std::uint64_t seed = 0;
  int trials = 3;
  /// Specialization "x1=0,x2=1,hbar=1"; empty means symbolic.
  std::string spec;
  /// Monodromy only.
  double kappa = 0.5;
  std::optional<std::filesystem::path> path_file;
  QcNormalization norm = QcNormalization::ShiftOfArgument;

  /// Throws ConfigError.
  void validate() const;
  /// The requested degree, or all degrees with |d| <= max_degree.
  std::vector<Degree> degrees() const;
  /// |degree| when a degree is given, max_degree otherwise.
  int degree_bound() const;
  /// Echoed into reports.  The seed appears only in random-eval mode.
  nlohmann::json echo() const;
};

/// patterns, verify-gl, gt-spectrum, whittaker, ring, qc-check, flatness,
/// monodromy, global-verify, ktheory.
const std::vector<std::string>& suite_names();

/// Runs one suite.  In random-eval mode every trial draws integer values for
/// the generators from a generator seeded with cfg.seed, redrawing on poles,
/// and the trial reports are merged keeping the worst status per item.
VerificationReport run_suite(const std::string& name, const RunConfig& cfg);

/// Canonical serialization: sorted keys, two-space indent, trailing newline.
std::string serialize(const VerificationReport& rep, ReportFormat fmt);

struct MissingGolden : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GoldenResult {
  bool match = false;
  bool blessed = false;
  std::filesystem::path file;
  /// Labels of differing items, plus "config", "summary" or "suite" when those differ.
  std::vector<std::string> mismatches;
};

/// "<suite>-n<n>-<degree tag>-<mode>[-s<seed>].<ext>".
std::string golden_name(const std::string& suite, const RunConfig& cfg, ReportFormat fmt);

/// Byte-level comparison of the canonical serialization against dir/golden_name.
/// With bless the file is (re)written and the result reports a match.
/// Throws MissingGolden when the file is absent and bless is false.
GoldenResult golden_diff(const VerificationReport& rep, const RunConfig& cfg, ReportFormat fmt,
                         const std::filesystem::path& dir, bool bless);

/// Item-level differences between two canonical serializations.
std::vector<std::string> report_mismatches(const std::string& expected, const std::string& actual, ReportFormat fmt);

}  // namespace vermalab
