#include "doctest.h"
#include "json.hpp"
#include "pipeline.hpp"
#include "skeleton_enum.hpp"

#include <fstream>
#include <set>

using namespace sextic;

#ifndef SEXTIC_DATA_DIR
#define SEXTIC_DATA_DIR "data"
#endif

namespace {

CombMap load(const std::string& name) {
  std::ifstream f(std::string(SEXTIC_DATA_DIR) + "/skeletons/" + name + ".sk");
  REQUIRE(f.good());
  return parse_skeleton_text(std::string(std::istreambuf_iterator<char>(f),
                                         std::istreambuf_iterator<char>()));
}

}  // namespace

TEST_CASE("shipped skeleton files match the enumerated representatives") {
  SkeletonEnumOptions o6;
  o6.degree = 6;
  o6.require_no_splitting_marking = true;
  std::set<std::string> degree6;
  for (const CombMap& sk : enumerate_skeletons(o6))
    degree6.insert(canonical_code(sk));
  for (const char* name : {"a", "b", "c"}) {
    CombMap sk = load(name);
    CHECK(validate_skeleton(sk).is_valid);
    CHECK(degree6.count(canonical_code(sk)) == 1);
  }

  SkeletonEnumOptions o3;
  o3.degree = 3;
  o3.singular_blacks = 1;
  std::set<std::string> degree3;
  for (const CombMap& sk : enumerate_skeletons(o3))
    degree3.insert(canonical_code(sk));
  for (const char* name : {"d", "e"})
    CHECK(degree3.count(canonical_code(load(name))) == 1);

  // f and g carry the models of the last two classification rows
  std::set<std::string> special;
  for (const SexticModel& m : enumerate_e7_models()) {
    std::string set = singularity_set(m).str();
    if (set == "E7+2E6" || set == "E7+E8+A4")
      special.insert(canonical_code(m.map));
  }
  CHECK(special.count(canonical_code(load("f"))) == 1);
  CHECK(special.count(canonical_code(load("g"))) == 1);
}

TEST_CASE("golden table matches the static row data") {
  std::ifstream f(std::string(SEXTIC_DATA_DIR) + "/table_e7.json");
  REQUIRE(f.good());
  nlohmann::json golden = nlohmann::json::parse(f);
  REQUIRE(golden["rows"].size() == e7_row_table().size());
  int classes = 0;
  for (std::size_t i = 0; i < e7_row_table().size(); ++i) {
    const RowStatic& want = e7_row_table()[i];
    const auto& got = golden["rows"][i];
    CHECK(got["set"] == want.set);
    CHECK(got["figure"] == want.figure);
    CHECK(got["n_r"] == want.n_r);
    CHECK(got["n_c"] == want.n_c);
    CHECK(got["order"] == want.order);
    CHECK(got["s_perp"][0] == want.s_perp[0]);
    CHECK(got["s_perp"][1] == want.s_perp[1]);
    CHECK(got["s_perp"][2] == want.s_perp[2]);
    classes += want.n_r + 2 * want.n_c;
  }
  CHECK(golden["total_classes"] == classes);
  CHECK(classes == 19);
}
