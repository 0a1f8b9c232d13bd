// End-to-end driver: degeneration, monodromy, presentations, kernel, analysis.

#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "galcov/coset_enumeration.hpp"
#include "galcov/perm_monodromy.hpp"
#include "galcov/presentation.hpp"

namespace galcov {

std::string version();

// Bad flags or preconditions; maps to exit code 2.
struct ConfigError : Error {
  using Error::Error;
};

enum class LogLevel { Error = 0, Warn = 1, Info = 2, Debug = 3 };
// Level from GALCOV_LOG (error, warn, info, debug); warn by default.
LogLevel log_level();
void log(LogLevel level, const std::string& msg);

struct Census {
  int lines = 0, vertices = 0, planes = 0, three_points = 0, incidental = 0;
  int branch = 0, cusp = 0, node = 0;
  long degree = 0;  // total exponent sum of the factorization
  bool permutation_identity = false;
};
Census census(int n);

// ψ is a homomorphism on Π̃₁ with projective relation, its images generate
// S_2n, and ψ(φ(σ)) = σ for every σ checked (all of S_2n up to `exhaustive_n`,
// otherwise a rank-strided sample).
struct PsiReport {
  HomReport relators;
  bool surjective = false;
  std::size_t sections_checked = 0;
  std::size_t sections_failing = 0;
  bool ok() const { return relators.ok() && surjective && sections_failing == 0; }
};
PsiReport psi_check(int n, int depth = 0, int exhaustive_n = 3);

struct RunConfig {
  int n = 2;
  int mod = 2;
  int depth = 0;
  int window = 2;
  std::uint64_t max_cosets = 4'000'000;
  std::string format = "text";
  std::string out_path;
  std::string cache_dir;  // empty: GALCOV_CACHE or .galcov-cache
  Strategy strategy = Strategy::Felsch;
  int raw_kernel_max_n = 3;  // raw RS abelianization only up to this n

  void validate() const;
  std::filesystem::path resolved_cache_dir() const;
};

struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct Report {
  RunConfig config;
  std::vector<Check> checks;
  std::vector<std::pair<std::string, double>> timings;
  std::string tool_version;
  bool budget_exceeded = false;
  std::string failure_cause;

  bool pass() const;
  // 0 all pass, 1 check failure, 2 budget exhausted.
  int exit_code() const;
};

Report run_pipeline(const RunConfig& cfg);

nlohmann::json config_json(const RunConfig& cfg);
nlohmann::json report_json(const Report& r);
std::string emit_report(const Report& r, const std::string& format);

// Presentation cache keyed by name; a hit returns the parsed file. Writes go
// through a temporary file and an atomic rename.
GroupPresentation cached_presentation(const std::filesystem::path& dir, const std::string& key,
                                      const std::function<GroupPresentation()>& build);
std::string cache_key(const std::string& kind, int n, int depth, int window, bool projective);

// Writes text to path through a temporary file and rename.
void atomic_write(const std::filesystem::path& path, const std::string& text);

}  // namespace galcov
