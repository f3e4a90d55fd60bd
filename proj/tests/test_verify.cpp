// Copyright (C) 2026 The hallforge Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <fstream>
#include <random>

#include "hallforge/error.hpp"
#include "hallforge/verify.hpp"

using namespace hallforge;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& tag) {
  std::random_device rd;
  const fs::path d = fs::temp_directory_path() / ("hallforge_test_" + tag + "_" + std::to_string(rd()));
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

RunConfig small_a1() {
  RunConfig c;
  c.quiver = "a1";
  c.p = 2;
  c.omega = {2};
  c.max_deg = 3;
  return c;
}

}  // namespace

TEST_CASE("full run on A1 framed passes and writes a report") {
  const fs::path dir = scratch_dir("report");
  RunConfig c = small_a1();
  c.report_path = dir / "out.json";
  const Report r = run(c);
  for (const auto& rec : r.checks) {
    CAPTURE(rec.name);
    CAPTURE(rec.witness);
    CHECK(rec.pass);
  }
  CHECK(r.pass());
  CHECK(r.failures() == 0);
  REQUIRE(fs::exists(*c.report_path));
  std::ifstream in(*c.report_path);
  const nlohmann::json j = nlohmann::json::parse(in);
  CHECK(j["schema"] == kReportSchema);
  CHECK(j["pass"] == true);
  CHECK(j["config"]["p"] == 2);
  CHECK(j["checks"].size() == r.checks.size());
  // every suite ran
  for (const auto& s : suite_names()) {
    bool seen = false;
    for (const auto& rec : r.checks) seen = seen || rec.name.rfind(s == "hallnum" ? "hall" : s, 0) == 0 ||
                                             (s == "relations" && rec.name.rfind("relation.", 0) == 0);
    CAPTURE(s);
    CHECK(seen);
  }
  fs::remove_all(dir);
}

TEST_CASE("reports are deterministic") {
  RunConfig c = small_a1();
  c.max_deg = 2;
  const nlohmann::json a = run(c).to_json(false);
  const nlohmann::json b = run(c).to_json(false);
  CHECK(a == b);
}

TEST_CASE("warm and cold disk cache give the same report") {
  const fs::path dir = scratch_dir("cache");
  RunConfig c;
  c.quiver = "a2";
  c.omega = {1, 1};
  c.max_deg = 2;
  c.suites = {"classes", "hallnum", "relations"};
  c.cache_dir = dir;
  reset_memory_cache();
  const Report cold = run(c);
  reset_memory_cache();
  const Report warm = run(c);
  CHECK(cold.pass());
  CHECK(cold.cache.computed > 0);
  CHECK(warm.cache.disk_hits > 0);
  CHECK(warm.cache.computed == 0);
  CHECK(cold.to_json(false) == warm.to_json(false));

  const auto entries = cache_inspect(dir);
  CHECK_FALSE(entries.empty());
  for (const auto& e : entries) {
    CAPTURE(e.path.string());
    CHECK(e.valid);
    CHECK(e.p == 2);
    CHECK(e.bytes > 0);
  }
  fs::remove_all(dir);
}

TEST_CASE("cache inspect flags corruption and gc removes it") {
  const fs::path dir = scratch_dir("gc");
  CHECK(cache_inspect(dir).empty());
  RunConfig c = small_a1();
  c.max_deg = 2;
  c.suites = {"classes"};
  c.cache_dir = dir;
  reset_memory_cache();
  CHECK(run(c).pass());
  auto entries = cache_inspect(dir);
  REQUIRE(entries.size() >= 1);
  const size_t total = entries.size();

  // flip a count inside one entry without touching its checksum
  {
    std::ifstream in(entries.front().path);
    nlohmann::json j = nlohmann::json::parse(in);
    j["group_order"] = j["group_order"].get<std::uint64_t>() + 1;
    in.close();
    std::ofstream out(entries.front().path, std::ios::trunc);
    out << j.dump();
  }
  // and a file that is not JSON at all
  fs::create_directories(entries.back().path.parent_path());
  std::ofstream(entries.back().path.parent_path() / "junk.json") << "{not json";

  entries = cache_inspect(dir);
  size_t bad = 0;
  for (const auto& e : entries) bad += e.valid ? 0 : 1;
  CHECK(bad == 2);

  const GcResult g = cache_gc(dir);
  CHECK(g.removed == 2);
  CHECK(g.kept == total - 1);
  CHECK(g.bytes_freed > 0);
  for (const auto& e : cache_inspect(dir)) CHECK(e.valid);

  const GcResult all = cache_gc(dir, true);
  CHECK(all.removed == total - 1);
  CHECK(cache_inspect(dir).empty());
  fs::remove_all(dir);
}

TEST_CASE("a corrupted entry is recomputed, not trusted") {
  const fs::path dir = scratch_dir("recompute");
  RunConfig c = small_a1();
  c.max_deg = 2;
  c.suites = {"classes"};
  c.cache_dir = dir;
  reset_memory_cache();
  const nlohmann::json want = run(c).to_json(false);
  for (const auto& e : cache_inspect(dir)) std::ofstream(e.path, std::ios::trunc) << "{}";
  reset_memory_cache();
  const Report again = run(c);
  CHECK(again.cache.corrupt > 0);
  CHECK(again.cache.disk_hits == 0);
  CHECK(again.to_json(false) == want);
  fs::remove_all(dir);
}

TEST_CASE("configuration errors") {
  RunConfig c = small_a1();
  c.p = 4;
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = small_a1();
  c.omega = {1, 1};
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = small_a1();
  c.omega = {-1};
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = small_a1();
  c.max_deg = 99;
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = small_a1();
  c.relations = {7};
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = small_a1();
  c.suites = {"nope"};
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = small_a1();
  c.quiver = "no-such-preset";
  CHECK_THROWS_AS(validate(c), ConfigError);

  const RunConfig d = validate(small_a1());
  CHECK(d.relations == std::vector<int>{1, 2, 3, 4, 5, 6});
  CHECK(d.suites == suite_names());
  RunConfig e = small_a1();
  e.omega.clear();
  CHECK(validate(e).omega == DimVector{1});
}
