#include "doctest.h"
#include "fp_group.hpp"
#include "pipeline.hpp"

#include <random>

using namespace sextic;

namespace {

FpPresentation parse(const std::string& s) { return FpPresentation::parse(s); }

}  // namespace

TEST_CASE("coset enumeration on small groups") {
  FpPresentation s3 = parse("gens 2\nrel a1^2\nrel a2^2\nrel a1 a2 a1 a2 a1 a2\n");
  CHECK(group_order(s3).value() == 6);

  FpPresentation q8 = parse(
      "gens 2\nrel a1^4\nrel a1^2 a2^-2\nrel a2^-1 a1 a2 a1\n");
  CHECK(group_order(q8).value() == 8);

  FpPresentation a4 = parse("gens 2\nrel a1^3\nrel a2^3\nrel a1 a2 a1 a2\n");
  CHECK(group_order(a4).value() == 12);

  FpPresentation z = parse("gens 1\nrel a1^12\n");
  CHECK(group_order(z).value() == 12);
  CHECK(element_order(z, FreeWord::parse("a1^4")).value() == 3);
  CHECK(element_order(z, FreeWord()).value() == 1);
}

TEST_CASE("both strategies agree and tables close") {
  FpPresentation s3 = parse("gens 2\nrel a1^2\nrel a2^2\nrel a1 a2 a1 a2 a1 a2\n");
  for (auto strat : {CosetEnumOptions::Strategy::RelatorFirst,
                     CosetEnumOptions::Strategy::RowFilling}) {
    CosetEnumOptions opts;
    opts.strategy = strat;
    EnumResult r = coset_enumerate(s3, {}, opts);
    REQUIRE(r.completed);
    CHECK(r.table.coset_count == 6);
    CHECK(table_is_closed(r.table, s3, {}));
  }
  FreeWord a1 = FreeWord::gen(1);
  EnumResult sub = coset_enumerate(s3, {a1});
  REQUIRE(sub.completed);
  CHECK(sub.table.coset_count == 3);
  CHECK(table_is_closed(sub.table, s3, {a1}));
}

TEST_CASE("limit exceeded is inconclusive, not fatal") {
  FpPresentation free2 = parse("gens 2\n");
  CosetEnumOptions opts;
  opts.max_cosets = 500;
  EnumResult r = coset_enumerate(free2, {}, opts);
  CHECK_FALSE(r.completed);
}

TEST_CASE("abelianization") {
  FpPresentation free3 = parse("gens 3\n");
  AbelianInvariants inv = abelianization(free3);
  CHECK(inv.free_rank == 3);
  CHECK(inv.torsion.empty());

  // relators a2 = a3, 3(a1 + a2) = 0 on three generators
  FpPresentation p = parse("gens 3\nrel a2 a3^-1\nrel a1^3 a2^3\n");
  AbelianInvariants i2 = abelianization(p);
  CHECK(i2.free_rank == 1);
  REQUIRE(i2.torsion.size() == 1);
  CHECK(i2.torsion[0] == 3);

  // invariance under relator shuffling, inversion and conjugation
  FpPresentation q = p;
  q.relators = {p.relators[1].inverse().conjugated_by(FreeWord::gen(1)),
                p.relators[0].conjugated_by(FreeWord::parse("a3 a2"))};
  q.normalize();
  CHECK(abelianization(q) == i2);
}

TEST_CASE("smith normal form properties") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> dim(1, 5), val(-6, 6);
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t r = dim(rng), c = dim(rng);
    IntMat a(r, std::vector<cpp_int>(c));
    for (auto& row : a)
      for (auto& x : row) x = val(rng);
    SmithResult s = smith_normal_form(a);
    // u * a * v == d
    IntMat ua(r, std::vector<cpp_int>(c, 0));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t k = 0; k < r; ++k)
        for (std::size_t j = 0; j < c; ++j) ua[i][j] += s.u[i][k] * a[k][j];
    IntMat uav(r, std::vector<cpp_int>(c, 0));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t k = 0; k < c; ++k)
        for (std::size_t j = 0; j < c; ++j) uav[i][j] += ua[i][k] * s.v[k][j];
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        CHECK(uav[i][j] == s.d[i][j]);
        if (i != j) CHECK(s.d[i][j] == 0);
      }
    // divisibility chain
    for (std::size_t i = 0; i + 1 < std::min(r, c); ++i) {
      if (s.d[i + 1][i + 1] == 0) continue;
      REQUIRE(s.d[i][i] != 0);
      CHECK(s.d[i + 1][i + 1] % s.d[i][i] == 0);
    }
  }
}

TEST_CASE("reidemeister-schreier on S3") {
  FpPresentation s3 = parse("gens 2\nrel a1^2\nrel a2^2\nrel a1 a2 a1 a2 a1 a2\n");
  // index-3 subgroup generated by a1: its presentation has order 2
  EnumResult sub = coset_enumerate(s3, {FreeWord::gen(1)});
  REQUIRE(sub.completed);
  FpPresentation h = subgroup_presentation(s3, sub.table);
  CHECK(group_order(h).value() == 2);

  // index-1 subgroup keeps the order
  EnumResult all =
      coset_enumerate(s3, {FreeWord::gen(1), FreeWord::gen(2)});
  REQUIRE(all.completed);
  CHECK(all.table.coset_count == 1);
  FpPresentation whole = subgroup_presentation(s3, all.table);
  CHECK(group_order(whole).value() == 6);
}

TEST_CASE("class-2 quotient of free groups") {
  FpPresentation free2 = parse("gens 2\n");
  Class2Data c2 = class2_quotient(free2);
  CHECK(c2.abelianization.free_rank == 2);
  CHECK(c2.commutant.free_rank == 1);
  CHECK(c2.commutant.torsion.empty());
  CHECK(c2.pairing_order[0][1] == 0);  // infinite order generator
}

TEST_CASE("class-2 quotient commutes with abelianization") {
  FpPresentation p = parse(
      "gens 3\nrel a1 a2 a1^-1 a2^-1 a3\nrel a1^4\nrel a2^6 a3^2\n");
  Class2Data c2 = class2_quotient(p);
  CHECK(c2.abelianization == abelianization(p));
}

TEST_CASE("perfectness detection") {
  FpPresentation a5 = parse(
      "gens 2\nrel a1^2\nrel a2^3\nrel a1 a2 a1 a2 a1 a2 a1 a2 a1 a2\n");
  CHECK(group_order(a5).value() == 60);
  CHECK(is_perfect(a5));
  FpPresentation ab = parse("gens 1\nrel a1^5\n");
  CHECK_FALSE(is_perfect(ab));
}
