#include "galcov/pipeline.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "galcov/kernel.hpp"
#include "galcov/model_group.hpp"
#include "galcov/smith.hpp"

namespace galcov {

namespace fs = std::filesystem;

std::string version() { return GALCOV_VERSION; }

LogLevel log_level() {
  const char* env = std::getenv("GALCOV_LOG");
  if (!env) return LogLevel::Warn;
  const std::string v = env;
  if (v == "error") return LogLevel::Error;
  if (v == "info") return LogLevel::Info;
  if (v == "debug") return LogLevel::Debug;
  return LogLevel::Warn;
}

void log(LogLevel level, const std::string& msg) {
  if (level > log_level()) return;
  static const char* names[] = {"error", "warn", "info", "debug"};
  std::cerr << "galcov [" << names[static_cast<int>(level)] << "] " << msg << "\n";
}

Census census(int n) {
  const auto c = build_complex(n);
  Census out;
  out.lines = c.line_count();
  std::set<int> vertices;
  for (const auto& l : c.lines()) {
    vertices.insert(l.endpoints.first);
    vertices.insert(l.endpoints.second);
  }
  out.vertices = static_cast<int>(vertices.size());
  out.planes = static_cast<int>(c.planes().size());
  out.three_points = static_cast<int>(c.three_points().size());
  out.incidental = static_cast<int>(c.incidental_pairs().size());
  const auto factors = full_factorization(c);
  for (const auto& f : factors) {
    switch (f.kind) {
      case FactorKind::Branch: ++out.branch; break;
      case FactorKind::Cusp: ++out.cusp; break;
      case FactorKind::Node: ++out.node; break;
    }
    out.degree += f.exponent;
  }
  out.permutation_identity = braid_permutation(product(factors), 4 * n).is_identity();
  return out;
}

PsiReport psi_check(int n, int depth, int exhaustive_n) {
  PsiReport r;
  r.relators = verify_homomorphism(pitilde_presentation(n, depth, true), psi_images(n), symmetric_group(2 * n));

  // Transpositions generate S_k iff their graph on k points is connected.
  std::vector<int> parent(static_cast<std::size_t>(2 * n + 1));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int j = 1; j <= 2 * n; ++j) {
    auto [a, b] = psi_points(j, n);
    parent[find(a)] = find(b);
  }
  r.surjective = true;
  for (int k = 2; k <= 2 * n; ++k) r.surjective = r.surjective && find(k) == find(1);

  const auto deg = static_cast<std::size_t>(2 * n);
  auto check = [&](const Permutation& s) {
    ++r.sections_checked;
    if (psi_eval(phi_word(s, n), n) != s) ++r.sections_failing;
  };
  if (n <= exhaustive_n) {
    for (const auto& s : all_permutations(deg)) check(s);
  } else {
    const std::uint64_t total = factorial(deg);
    const std::uint64_t stride = std::max<std::uint64_t>(1, total / 5000);
    for (std::uint64_t k = 0; k < total; k += stride) check(Permutation::unrank(deg, k));
  }
  return r;
}

void RunConfig::validate() const {
  if (n < 2) throw ConfigError("n must be at least 2");
  if (mod < 2) throw ConfigError("mod must be at least 2");
  if (depth < 0) throw ConfigError("depth must be non-negative");
  if (window < 2) throw ConfigError("window must be at least 2");
  if (max_cosets < 1) throw ConfigError("max-cosets must be at least 1");
  if (format != "json" && format != "text") throw ConfigError("format must be json or text");
}

fs::path RunConfig::resolved_cache_dir() const {
  if (!cache_dir.empty()) return cache_dir;
  if (const char* env = std::getenv("GALCOV_CACHE"); env && *env) return env;
  return ".galcov-cache";
}

bool Report::pass() const {
  if (budget_exceeded || !failure_cause.empty()) return false;
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

int Report::exit_code() const {
  if (budget_exceeded) return 2;
  return pass() ? 0 : 1;
}

void atomic_write(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::random_device rd;
  fs::path tmp = path;
  tmp += ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw Error("cannot write " + tmp.string());
    out << text;
    if (!out.flush()) throw Error("cannot write " + tmp.string());
  }
  fs::rename(tmp, path);
}

std::string cache_key(const std::string& kind, int n, int depth, int window, bool projective) {
  std::ostringstream k;
  k << kind << "-n" << n << "-d" << depth << "-w" << window << (projective ? "-proj" : "");
  return k.str();
}

GroupPresentation cached_presentation(const fs::path& dir, const std::string& key,
                                      const std::function<GroupPresentation()>& build) {
  const fs::path file = dir / (key + ".pres");
  if (fs::exists(file)) {
    std::ifstream in(file);
    try {
      auto p = parse_presentation(in);
      log(LogLevel::Debug, "cache hit " + file.string());
      return p;
    } catch (const Error& e) {
      log(LogLevel::Warn, "ignoring unreadable cache file " + file.string() + ": " + e.what());
    }
  }
  auto p = build();
  try {
    atomic_write(file, write_presentation(p));
    log(LogLevel::Debug, "cached " + file.string());
  } catch (const std::exception& e) {
    log(LogLevel::Warn, std::string("cache write failed: ") + e.what());
  }
  return p;
}

namespace {

class Stopwatch {
 public:
  Stopwatch() : t0_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  std::chrono::steady_clock::time_point t0_;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

Report run_pipeline(const RunConfig& cfg) {
  cfg.validate();
  Report rep;
  rep.config = cfg;
  rep.tool_version = version();
  const int n = cfg.n;
  const fs::path cache = cfg.resolved_cache_dir();
  auto add = [&](std::string name, std::string expected, std::string actual) {
    const bool pass = expected == actual;
    if (!pass) log(LogLevel::Warn, "check failed: " + name + " expected " + expected + " got " + actual);
    rep.checks.push_back({std::move(name), std::move(expected), std::move(actual), pass});
  };

  Stopwatch sw;
  log(LogLevel::Info, "degeneration and monodromy, n=" + std::to_string(n));
  const Census c = census(n);
  add("census lines/vertices/planes/3-points", std::to_string(2 * n) + "/" + std::to_string(2 * n) + "/" +
          std::to_string(2 * n) + "/" + std::to_string(2 * n),
      std::to_string(c.lines) + "/" + std::to_string(c.vertices) + "/" + std::to_string(c.planes) + "/" +
          std::to_string(c.three_points));
  add("incidental pairs", std::to_string(2 * n * n - 3 * n), std::to_string(c.incidental));
  add("factor counts branch/cusp/node",
      std::to_string(2 * n) + "/" + std::to_string(6 * n) + "/" + std::to_string(8 * n * n - 12 * n),
      std::to_string(c.branch) + "/" + std::to_string(c.cusp) + "/" + std::to_string(c.node));
  add("factorization degree", std::to_string(16L * n * n - 4L * n), std::to_string(c.degree));
  add("factor permutation product is identity", "yes", yes_no(c.permutation_identity));
  rep.timings.emplace_back("monodromy", sw.seconds());

  Stopwatch sp;
  log(LogLevel::Info, "presentations");
  auto ptilde = cached_presentation(cache, cache_key("pitilde", n, cfg.depth, cfg.window, true),
                                    [&] { return pitilde_presentation(n, cfg.depth, true); });
  auto galois = cached_presentation(cache, cache_key("galois", n, cfg.depth, cfg.window, false),
                                    [&] { return galois_presentation(n, cfg.window); });
  rep.timings.emplace_back("presentations", sp.seconds());

  Stopwatch ss;
  const auto psi = psi_check(n, cfg.depth);
  add("psi homomorphism", "0 failing", std::to_string(psi.relators.failing.size()) + " failing");
  add("psi surjective", "yes", yes_no(psi.surjective));
  add("psi after phi is identity", "0 failing", std::to_string(psi.sections_failing) + " failing");
  rep.timings.emplace_back("psi", ss.seconds());

  Stopwatch sm;
  log(LogLevel::Info, "model check, m=" + std::to_string(cfg.mod));
  ModelGroup model(n, cfg.mod);
  const auto mc = model_hom_check(ptilde, model);
  add("model homomorphism", "0 failing", std::to_string(mc.relators.failing.size()) + " failing");
  add("model derived relations", "0 failing", std::to_string(mc.failing_derived.size()) + " failing");
  add("model lattice images", "yes", yes_no(mc.images_match_formulas));
  rep.timings.emplace_back("model", sm.seconds());

  Stopwatch st;
  log(LogLevel::Info, "coset enumeration");
  const auto fq = finite_quotient_presentation(ptilde, cfg.mod, n);
  EnumerationOptions eo;
  eo.strategy = cfg.strategy;
  eo.max_cosets = cfg.max_cosets;
  const auto table = todd_coxeter(fq, {}, eo);
  if (table.complete()) {
    add("enumerated order", std::to_string(model.order()), std::to_string(table.index));
  } else {
    rep.budget_exceeded = true;
    rep.failure_cause = "coset budget of " + std::to_string(cfg.max_cosets) + " exceeded";
    add("enumerated order", std::to_string(model.order()), "incomplete");
  }
  rep.timings.emplace_back("enumeration", st.seconds());

  Stopwatch sa;
  log(LogLevel::Info, "abelianization");
  const std::string expected = "Z^" + std::to_string(4 * n - 2);
  const auto snf = smith_normal_form(abelianize(galois));
  add("galois abelianization", expected, snf.describe());
  if (n <= cfg.raw_kernel_max_n) {
    const auto raw = smith_normal_form(abelianize(kernel_presentation(ptilde, n)));
    add("raw kernel abelianization", expected, raw.describe());
  }
  rep.timings.emplace_back("abelianization", sa.seconds());
  return rep;
}

nlohmann::json config_json(const RunConfig& cfg) {
  return {{"n", cfg.n},
          {"mod", cfg.mod},
          {"depth", cfg.depth},
          {"window", cfg.window},
          {"max_cosets", cfg.max_cosets},
          {"strategy", strategy_name(cfg.strategy)},
          {"format", cfg.format},
          {"out_path", cfg.out_path},
          {"cache_dir", cfg.resolved_cache_dir().string()}};
}

nlohmann::json report_json(const Report& r) {
  nlohmann::json j;
  j["schema"] = 1;
  j["version"] = r.tool_version;
  j["config"] = config_json(r.config);
  j["checks"] = nlohmann::json::array();
  for (const auto& c : r.checks) {
    j["checks"].push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
  }
  j["timings"] = nlohmann::json::object();
  for (const auto& [k, v] : r.timings) j["timings"][k] = v;
  j["pass"] = r.pass();
  if (!r.failure_cause.empty()) j["failure_cause"] = r.failure_cause;
  return j;
}

std::string emit_report(const Report& r, const std::string& format) {
  if (format == "json") return report_json(r).dump(2) + "\n";
  std::ostringstream out;
  out << "galcov " << r.tool_version << "  n=" << r.config.n << " mod=" << r.config.mod << " depth=" << r.config.depth
      << " window=" << r.config.window << "\n";
  for (const auto& c : r.checks) {
    out << (c.pass ? "  ok    " : "  FAIL  ") << c.name << ": " << c.actual;
    if (!c.pass) out << " (expected " << c.expected << ")";
    out << "\n";
  }
  for (const auto& [k, v] : r.timings) out << "  time " << k << " " << v << "s\n";
  if (!r.failure_cause.empty()) out << "  cause: " << r.failure_cause << "\n";
  out << (r.pass() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace galcov
