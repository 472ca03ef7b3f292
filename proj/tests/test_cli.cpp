#include <doctest.h>

#include <filesystem>

#include "adq/cli.hpp"
#include "adq/fixtures.hpp"

using namespace adq;

namespace {

std::filesystem::path scratch(const std::string &name) {
  auto p = std::filesystem::temp_directory_path() / ("adq_test_" + name);
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

} // namespace

TEST_CASE("group files round trip") {
  for (const char *name : {"sp4_f3", "imprimitive_1152", "dihedral8_f3", "semilinear_1440"}) {
    GroupSpec s = fixtures::by_name(name).spec;
    GroupSpec t = cli::parse_group(cli::group_to_json(s));
    CHECK(t.F == s.F);
    CHECK(t.n == s.n);
    CHECK(t.ambient == s.ambient);
    CHECK(t.J == s.J);
    CHECK(t.gens == s.gens);
    CHECK(t.name == s.name);
  }
  auto both = cli::parse_groups("{\"groups\": [" + cli::group_to_json(fixtures::sl2_in_gl2(5)) + "," +
                                cli::group_to_json(fixtures::gl2_f5()) + "]}");
  CHECK(both.size() == 2);
}

TEST_CASE("group files: prime field entries as integers or strings") {
  const char *text = R"({"p": 5, "ext_degree": 1, "ambient": "GL", "n": 2, "form": null,
                         "generators": [[[2, 0], [0, "1"]], [[1, 1], [0, 1]]]})";
  GroupSpec s = cli::parse_group(text);
  CHECK(s.gens.size() == 2);
  CHECK(Group::enumerate(s)->order() == 20);
}

TEST_CASE("group files: malformed input") {
  CHECK_THROWS_AS(cli::parse_group("not json"), Error);
  CHECK_THROWS_AS(cli::parse_group(R"({"p": 4, "ext_degree": 1, "ambient": "GL", "n": 1, "generators": [[[1]]]})"),
                  Error);
  CHECK_THROWS_AS(cli::parse_group(R"({"p": 3, "ext_degree": 1, "ambient": "GL", "n": 2, "generators": [[[1, 0]]]})"),
                  Error);
  // singular generator
  CHECK_THROWS_AS(
      cli::parse_group(R"({"p": 3, "ext_degree": 1, "ambient": "GL", "n": 2, "generators": [[[1, 1], [1, 1]]]})"),
      Error);
}

TEST_CASE("assess pipeline") {
  cli::JobConfig cfg;
  auto empty = cli::run_assess({}, cfg);
  CHECK(empty.csv == std::string(kCsvHeader) + "\n");

  std::vector<GroupSpec> groups = {fixtures::dihedral8_f3(), fixtures::sl2_in_gl2(5), fixtures::quaternion_sl2_f3()};
  auto a = cli::run_assess(groups, cfg);
  REQUIRE(a.reports.size() == 3);
  CHECK_FALSE(a.capped);
  cfg.threads = 3;
  auto b = cli::run_assess(groups, cfg);
  CHECK(a.csv == b.csv);  // deterministic across thread counts

  // report JSON round trip
  for (const auto &r : a.reports) CHECK(csv_row(cli::report_from_json(cli::report_to_json(r))) == csv_row(r));

  // cache: second run is served from disk and agrees
  cfg.cache_dir = scratch("cache").string();
  auto c1 = cli::run_assess(groups, cfg);
  auto c2 = cli::run_assess(groups, cfg);
  CHECK(c1.cache_hits == 0);
  CHECK(c2.cache_hits == 3);
  CHECK(c1.csv == c2.csv);
  CHECK(c1.csv == a.csv);
}

TEST_CASE("cap exceeded rows") {
  cli::JobConfig cfg;
  cfg.max_order = 100;
  auto out = cli::run_assess({fixtures::by_name("sp4_f3").spec}, cfg);
  CHECK(out.capped);
  REQUIRE(out.reports.size() == 1);
  CHECK(out.reports[0].notes.rfind("CAP_EXCEEDED", 0) == 0);
}

TEST_CASE("cache keys depend on the group and the tag") {
  auto G = Group::enumerate(fixtures::dihedral8_f3());
  auto H = Group::enumerate(fixtures::sl2_in_gl2(3));
  CHECK(cli::cache_key(*G, "a") == cli::cache_key(*G, "a"));
  CHECK(cli::cache_key(*G, "a") != cli::cache_key(*G, "b"));
  CHECK(cli::cache_key(*G, "a") != cli::cache_key(*H, "a"));
}

TEST_CASE("search is reproducible") {
  cli::JobConfig cfg;
  cfg.samples = 20;
  cfg.seed = 9;
  GroupSpec amb = fixtures::sl2_in_gl2(5);
  auto a = cli::run_search(amb, cfg);
  cfg.threads = 2;
  auto b = cli::run_search(amb, cfg);
  CHECK(a.summary_csv == b.summary_csv);
  CHECK_FALSE(a.entries.empty());
  for (const auto &e : a.entries) CHECK(e.enumerated);
}

TEST_CASE("lift self-checks") {
  auto out = cli::run_lift_check(3, 10);
  CHECK(out.checked > 0);
  CHECK(out.failures == 0);
}

TEST_CASE("exit codes") {
  CHECK(cli::exit_code_for(Errc::Input) == 1);
  CHECK(cli::exit_code_for(Errc::CapExceeded) == 2);
  CHECK(cli::exit_code_for(Errc::Invariant) == 3);
}
