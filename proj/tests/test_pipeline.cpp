#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "galcov/pipeline.hpp"

using namespace galcov;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  auto p = fs::temp_directory_path() / ("galcov-test-" + name);
  fs::remove_all(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_SUITE("pipeline") {
  TEST_CASE("config validation") {
    RunConfig c;
    CHECK_NOTHROW(c.validate());
    c.n = 1;
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c = {};
    c.mod = 1;
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c = {};
    c.max_cosets = 0;
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c = {};
    c.format = "xml";
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c = {};
    c.n = 1;
    CHECK_THROWS_AS(run_pipeline(c), ConfigError);
  }

  TEST_CASE("census") {
    for (int n = 2; n <= 6; ++n) {
      auto c = census(n);
      CHECK(c.lines == 2 * n);
      CHECK(c.vertices == 2 * n);
      CHECK(c.node == 8 * n * n - 12 * n);
      CHECK(c.degree == 16L * n * n - 4L * n);
      CHECK(c.permutation_identity);
    }
  }

  TEST_CASE("full run at n = 2") {
    RunConfig c;
    c.cache_dir = scratch("run").string();
    auto r = run_pipeline(c);
    CHECK(r.pass());
    CHECK(r.exit_code() == 0);
    auto j = nlohmann::json::parse(emit_report(r, "json"));
    CHECK(j["schema"] == 1);
    CHECK(j["config"]["n"] == 2);
    CHECK(j["config"]["mod"] == 2);
    CHECK(j["pass"] == true);
    bool saw_order = false;
    for (const auto& ch : j["checks"]) {
      if (ch["name"] == "enumerated order") {
        CHECK(ch["actual"] == "1536");
        saw_order = true;
      }
      if (ch["name"] == "galois abelianization") CHECK(ch["actual"] == "Z^6");
    }
    CHECK(saw_order);
    auto text = emit_report(r, "text");
    CHECK(text.find("PASS") != std::string::npos);
  }

  TEST_CASE("budget exhaustion gives exit code 2") {
    RunConfig c;
    c.cache_dir = scratch("budget").string();
    c.max_cosets = 50;
    auto r = run_pipeline(c);
    CHECK_FALSE(r.pass());
    CHECK(r.budget_exceeded);
    CHECK(r.exit_code() == 2);
    CHECK(report_json(r)["failure_cause"].get<std::string>().find("budget") != std::string::npos);
  }

  TEST_CASE("a failing check gives exit code 1 and is named") {
    Report r;
    r.checks.push_back({"demo", "1", "2", false});
    CHECK(r.exit_code() == 1);
    CHECK(emit_report(r, "text").find("FAIL  demo") != std::string::npos);
  }

  TEST_CASE("cache hits are byte identical") {
    auto dir = scratch("cache");
    int builds = 0;
    auto build = [&] {
      ++builds;
      return pitilde_presentation(2, 0, true);
    };
    auto key = cache_key("pitilde", 2, 0, 2, true);
    auto a = cached_presentation(dir, key, build);
    auto first = slurp(dir / (key + ".pres"));
    auto b = cached_presentation(dir, key, build);
    CHECK(builds == 1);
    CHECK(a == b);
    CHECK(write_presentation(b) == first);
    CHECK(slurp(dir / (key + ".pres")) == first);
    for (const auto& e : fs::directory_iterator(dir)) CHECK(e.path().extension() == ".pres");
  }

  TEST_CASE("environment chooses the cache directory") {
    RunConfig c;
    CHECK(c.resolved_cache_dir() == (std::getenv("GALCOV_CACHE") ? fs::path(std::getenv("GALCOV_CACHE")) : fs::path(".galcov-cache")));
    c.cache_dir = "elsewhere";
    CHECK(c.resolved_cache_dir() == "elsewhere");
  }

  TEST_CASE("atomic write replaces the file") {
    auto dir = scratch("atomic");
    atomic_write(dir / "f.txt", "one");
    atomic_write(dir / "f.txt", "two");
    CHECK(slurp(dir / "f.txt") == "two");
    std::size_t count = 0;
    for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir)) ++count;
    CHECK(count == 1);
  }
}
