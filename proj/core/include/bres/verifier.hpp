#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bres/bresinsky.hpp"
#include "bres/groebner.hpp"
#include "bres/module.hpp"

namespace bres {

enum class Stage { kGenerate, kGb, kOracle, kSyzygies, kResolution };

std::string to_string(Stage s);
std::optional<Stage> parse_stage(const std::string& name);
std::set<Stage> all_stages();

enum class CheckStatus { kPass, kFail, kNotRun };

std::string to_string(CheckStatus s);

struct CheckResult {
  CheckStatus status = CheckStatus::kNotRun;
  std::string witness;
};

struct Discrepancy {
  std::string kind;    // "correction", "mismatch", "missing", "non-orthogonal"
  std::string family;  // "T3", "H2", ...
  std::string vector;  // vector name or generator pair
  std::string detail;
};

struct ResolutionReport {
  std::int64_t q2 = 0;
  std::vector<std::int64_t> n;
  std::vector<std::string> generator_names;
  std::vector<Polynomial> generators;
  std::optional<SparseMatrix> N;
  std::optional<SparseMatrix> P;
  std::vector<std::int64_t> betti;  // beta_1, beta_2, beta_3
  // True when every minimality and exactness check behind the three numbers
  // passed in this run.
  bool betti_certified = false;
  std::vector<std::pair<std::string, CheckResult>> checks;
  std::vector<Discrepancy> discrepancies;
  std::vector<std::pair<std::string, double>> timings;

  const CheckResult* check(const std::string& name) const;
  // No check failed (not-run entries are allowed).
  bool passed() const;
};

struct VerifyConfig {
  std::set<Stage> stages = all_stages();
  bool allow_large_oracle = false;
};

// Replacements for the constructed objects, e.g. from a fixture file.
struct VerifyInput {
  std::optional<std::vector<Polynomial>> generators;
  std::optional<std::vector<std::string>> generator_names;
  std::optional<SparseMatrix> N;
  std::optional<SparseMatrix> P;
};

// 1 - b1 + b2 - b3 = 0
bool euler_check(std::span<const std::int64_t> betti);

/// Runs the requested stages in the order generate, gb, oracle, syzygies,
/// resolution. Checks that need engine work beyond the oracle limit are
/// recorded as not-run unless `allow_large_oracle` is set.
class Verifier {
 public:
  Verifier(const BresinskyInstance& inst, VerifyConfig cfg, VerifyInput input = {});

  void verify_generators();
  void verify_gb();
  void verify_oracle();
  void verify_first_syzygies();
  void verify_resolution();
  ResolutionReport run();

  const ResolutionReport& report() const { return report_; }

 private:
  void set(const std::string& name, CheckResult r);
  bool heavy_allowed() const;
  CheckResult refused() const;
  bool s_is_gb();
  const ModuleOrder& first_order();
  const Grading& first_grading();
  std::optional<ModuleOrder> second_order(std::string* error);
  std::optional<Grading> second_grading();
  void finish_betti();

  BresinskyInstance inst_;
  VerifyConfig cfg_;
  bool canonical_generators_;
  ResolutionReport report_;
  std::optional<bool> gb_;
  std::optional<ModuleOrder> mord1_;
  std::optional<Grading> grading1_;
};

ResolutionReport verify(const BresinskyInstance& inst, const VerifyConfig& cfg = {}, const VerifyInput& input = {});

}  // namespace bres
