#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "hnp/cli.hpp"

using namespace hnp;

namespace {

std::string write_temp(const std::string& body) {
  std::string path = "/tmp/hnp_test_catalog.txt";
  std::ofstream out(path);
  out << body;
  return path;
}

std::vector<CatalogRecord> small_catalog() {
  // degrees 2..4, complete census
  std::vector<std::pair<std::string, std::vector<std::string>>> data = {
      {"2 1", {"(1,2)"}},
      {"3 1", {"(1,2,3)"}},
      {"3 2", {"(1,2,3)", "(1,2)"}},
      {"4 1", {"(1,2,3,4)"}},
      {"4 2", {"(1,2)(3,4)", "(1,3)(2,4)"}},
      {"4 3", {"(1,2,3,4)", "(1,3)"}},
      {"4 4", {"(1,2,3)", "(1,2)(3,4)"}},
      {"4 5", {"(1,2,3,4)", "(1,2)"}},
  };
  std::vector<CatalogRecord> recs;
  for (auto& [dk, gens] : data) {
    CatalogRecord r;
    std::sscanf(dk.c_str(), "%d %d", &r.degree, &r.index);
    r.generators = gens;
    recs.push_back(std::move(r));
  }
  return recs;
}

}  // namespace

TEST_CASE("group spec parsing") {
  GroupSpec d4 = parse_group_spec("D:4");
  CHECK(d4.kind == GroupSpec::Kind::Dihedral);
  CHECK(d4.params == std::vector<long long>{4});

  GroupSpec g0 = parse_group_spec("G0:8,2,3,8");
  CHECK(g0.kind == GroupSpec::Kind::Metacyclic);
  CHECK(g0.params == std::vector<long long>{8, 2, 3, 8});

  GroupSpec f20 = parse_group_spec("perm:(1,2,3,4,5);(2,3,5,4)");
  CHECK(build_group(f20).order() == 20);

  CHECK(parse_group_spec("QD:1|H=b").stab_kind == GroupSpec::StabKind::Words);
  CHECK(parse_group_spec("D:3|H=1").stab_kind == GroupSpec::StabKind::Trivial);
  CHECK(parse_group_spec("C:6|H=point:1").stab_kind == GroupSpec::StabKind::Point);
  CHECK(parse_group_spec("perm:(1,2)|H=(1,2)").stab_kind == GroupSpec::StabKind::Perms);

  CHECK_THROWS_AS(parse_group_spec("nonsense"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("X:3"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("D:abc"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("D:"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("D:4|Z=1"), ParseError);
  try {
    parse_group_spec("G0:8,x");
  } catch (const ParseError& e) {
    CHECK(e.position > 0);  // the error carries a position
  }
}

TEST_CASE("family specs round-trip through their printed form") {
  for (const char* text : {"C:12", "D:6", "QD:2", "Mod:1", "Q:3", "G0:8,2,3,8",
                           "Beyl:8,2,-1,1", "Z:7,3,2", "XS:3", "F:5,4",
                           "G0:9,6,2,9|H=b", "D:4|H=1", "C:6|H=point:1",
                           "perm:(1,2,3,4,5);(2,3,5,4)"}) {
    GroupSpec s = parse_group_spec(text);
    GroupSpec again = parse_group_spec(s.to_string());
    CHECK(again == s);
  }
}

TEST_CASE("catalog loading") {
  // spec anchor: a plain S3 record
  auto recs = load_catalog(write_temp("3 2 (1,2,3);(1,2)\n"));
  REQUIRE(recs.size() == 1);
  CHECK(recs[0].label() == "3T2");
  CHECK(recs[0].generators.size() == 2);

  // comments and blank lines are fine
  CHECK(load_catalog(write_temp("# header\n\n2 1 (1,2)\n")).size() == 1);

  // non-transitive generators are an error naming the line
  try {
    load_catalog(write_temp("2 1 (1,2)\n3 1 (1,2)\n"));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    CHECK(std::string(e.what()).find("not transitive") != std::string::npos);
  }

  // duplicates are rejected
  CHECK_THROWS_AS(load_catalog(write_temp("2 1 (1,2)\n2 1 (1,2)\n")), Error);

  // every diagnostic is listed
  try {
    load_catalog(write_temp("junk\n3 1 (1,2)\n2 1 (1,2)\n2 1 (1,2)\n"));
    CHECK(false);
  } catch (const Error& e) {
    std::string msg = e.what();
    CHECK(msg.find("line 1") != std::string::npos);
    CHECK(msg.find("line 2") != std::string::npos);
    CHECK(msg.find("line 4") != std::string::npos);
  }
}

TEST_CASE("bundled catalog validates") {
  auto recs = load_catalog(std::string(HNP_DATA_DIR) + "/transitive_2_10.txt");
  CHECK(recs.size() >= 95);
  std::map<int, int> per_degree;
  for (const auto& r : recs) ++per_degree[r.degree];
  // complete census counts for degrees 2..7
  CHECK(per_degree[2] == 1);
  CHECK(per_degree[3] == 2);
  CHECK(per_degree[4] == 5);
  CHECK(per_degree[5] == 5);
  CHECK(per_degree[6] == 16);
  CHECK(per_degree[7] == 7);
}

TEST_CASE("table presets reproduce the small-degree census blocks") {
  RunOptions opt;
  opt.jobs = 2;
  // first output block: metacyclic, M(G) = 0, cond0
  auto rows1 = run_table(small_catalog(), 2, 4, TableFilter::preset(1), opt);
  std::vector<std::string> labels1;
  for (auto& r : rows1) labels1.push_back(r.label);
  CHECK(labels1 == std::vector<std::string>{"2T1", "3T1", "3T2", "4T1"});
  // second block: metacyclic, M(G) != 0, M(H) = 0, cond0: 4T2 and 4T3 with [2]
  auto rows2 = run_table(small_catalog(), 2, 4, TableFilter::preset(2), opt);
  REQUIRE(rows2.size() == 2);
  CHECK(rows2[0].label == "4T2");
  CHECK(rows2[0].mg == "[2]");
  CHECK(rows2[1].label == "4T3");
  CHECK(rows2[1].mg == "[2]");
  // not-metacyclic blocks at degree 4: table 4 gives 4T4 and 4T5
  auto rows4 = run_table(small_catalog(), 2, 4, TableFilter::preset(4), opt);
  REQUIRE(rows4.size() == 2);
  CHECK(rows4[0].label == "4T4");
  CHECK(rows4[1].label == "4T5");
  CHECK(run_table(small_catalog(), 2, 4, TableFilter::preset(3), opt).empty());
  // empty catalog: empty report
  CHECK(run_table({}, 2, 30, TableFilter{}, opt).empty());
}

TEST_CASE("reports are deterministic and JSON keys are stable") {
  RunOptions opt;
  opt.jobs = 2;
  auto rows_a = run_table(small_catalog(), 2, 4, TableFilter{}, opt);
  auto rows_b = run_table(small_catalog(), 2, 4, TableFilter{}, opt);
  CHECK(render_rows(rows_a, "tsv") == render_rows(rows_b, "tsv"));
  std::string json = render_rows(rows_a, "json");
  size_t p_label = json.find("\"label\"");
  size_t p_order = json.find("\"order\"");
  size_t p_verdict = json.find("\"verdict\"");
  CHECK(p_label < p_order);
  CHECK(p_order < p_verdict);
  // analyze rows carry the printed spec as their label
  ReportRow row = analyze_spec(parse_group_spec("C:2"), opt);
  CHECK(row.label == "C:2");
  CHECK(row.metacyclic == "yes");
  CHECK(row.verdict.find("ZERO") != std::string::npos);
  CHECK_FALSE(row.inconclusive);
}
