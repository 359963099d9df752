#include "doctest.h"
#include "skeleton_enum.hpp"
#include "pipeline.hpp"

#include <map>
#include <random>
#include <set>

using namespace sextic;

TEST_CASE("small-degree enumeration counts") {
  SkeletonEnumOptions o3;
  o3.degree = 3;
  CHECK(enumerate_skeletons(o3).size() == 2);  // theta and the dumbbell
  o3.singular_blacks = 1;
  CHECK(enumerate_skeletons(o3).size() == 2);
  o3.singular_blacks = 2;
  auto segs = enumerate_skeletons(o3);
  REQUIRE(segs.size() == 1);
  CHECK(segs[0].edge_count() == 1);

  SkeletonEnumOptions o6;
  o6.degree = 6;
  CHECK(enumerate_skeletons(o6).size() == 6);
  o6.require_no_splitting_marking = true;
  auto nosplit = enumerate_skeletons(o6);
  CHECK(nosplit.size() == 3);
  // region profiles of the three: the tetrahedron, the triskelion and the
  // two-lobe skeleton
  std::multiset<std::multiset<int>> profiles;
  for (const CombMap& sk : nosplit) {
    std::multiset<int> p;
    for (const Region& r : sk.faces()) p.insert(r.black_corners);
    profiles.insert(p);
  }
  CHECK(profiles.count({3, 3, 3, 3}) == 1);
  CHECK(profiles.count({9, 1, 1, 1}) == 1);
  CHECK(profiles.count({5, 5, 1, 1}) == 1);

  CHECK_THROWS_AS(enumerate_skeletons({12, 0, 0, false}),
                  std::invalid_argument);
}

TEST_CASE("vertex count identity on enumerated skeletons") {
  for (int degree : {3, 6, 9}) {
    for (int sb = 0; sb <= (degree == 9 ? 0 : 2); ++sb) {
      SkeletonEnumOptions o;
      o.degree = degree;
      o.singular_blacks = sb;
      for (const CombMap& sk : enumerate_skeletons(o)) {
        SkeletonReport rep = validate_skeleton(sk);
        REQUIRE(rep.is_valid);
        CHECK(rep.degree == degree);
        CHECK(rep.t == sb);
        int count = 0;
        for (int v = 0; v < sk.vertex_count(); ++v) {
          if (sk.color_of_vertex(v) == Color::Black) {
            ++count;
            if (sk.valency(v) == 2) ++count;
          } else {
            ++count;
          }
        }
        CHECK(3 * count == 2 * degree);  // #black + #white(1) + #black(2)
      }
    }
  }
}

TEST_CASE("splitting markings") {
  SkeletonEnumOptions o6;
  o6.degree = 6;
  auto all = enumerate_skeletons(o6);
  int with = 0;
  for (const CombMap& sk : all) {
    auto markings = find_splitting_markings(sk);
    if (!markings.empty()) ++with;
    for (const Marking& mk : markings) {
      // every edge type sums to 2 mod 3
      for (int d = 0; d < sk.dart_count(); ++d) {
        int e = sk.pairing(d);
        if (sk.color_of_dart(e) != Color::Black) continue;
        CHECK((mk[d] + mk[e]) % 3 == 2);
      }
    }
  }
  CHECK(with == 3);  // exactly the complement of the no-splitting list

  SkeletonEnumOptions o3;
  o3.degree = 3;
  o3.singular_blacks = 1;
  for (const CombMap& sk : enumerate_skeletons(o3))
    CHECK_THROWS_AS(find_splitting_markings(sk), SingularBlackPresent);
}

TEST_CASE("insertion surgery") {
  SkeletonEnumOptions o6;
  o6.degree = 6;
  o6.require_no_splitting_marking = true;
  auto base = enumerate_skeletons(o6);
  for (const CombMap& sk : base) {
    SkeletonReport rep0 = validate_skeleton(sk);
    std::set<int> edges;
    for (int d = 0; d < sk.dart_count(); ++d)
      edges.insert(std::min(d, sk.pairing(d)));
    for (int e : edges) {
      InsertionResult ins = insert_bigon(sk, e);
      SkeletonReport rep = validate_skeleton(ins.map);
      REQUIRE(rep.is_valid);
      CHECK(rep.degree == rep0.degree + 3);
      CHECK(ins.map.vertex_count() == sk.vertex_count() + 2);
      CHECK(ins.map.faces().size() == sk.faces().size() + 1);
      const Region& bigon = ins.map.faces()[ins.map.face_of(ins.bigon_dart_a)];
      CHECK(bigon.black_corners == 2);
      CHECK(ins.map.face_of(ins.bigon_dart_b) == bigon.id);
      // exact inverse surgery
      auto back = remove_insertion(ins.map, ins.bigon_dart_a);
      REQUIRE(back.has_value());
      CHECK(canonical_code(*back) == canonical_code(sk));
      // a marking restricts/extends across the surgery
      CHECK(admits_splitting_marking(ins.map) == admits_splitting_marking(sk));
    }
  }
}

TEST_CASE("insertion at the two inequivalent triskelion edges") {
  SkeletonEnumOptions o6;
  o6.degree = 6;
  o6.require_no_splitting_marking = true;
  const CombMap* triskelion = nullptr;
  auto skeletons = enumerate_skeletons(o6);
  for (const CombMap& sk : skeletons) {
    std::multiset<int> p;
    for (const Region& r : sk.faces()) p.insert(r.black_corners);
    if (p == std::multiset<int>{9, 1, 1, 1}) triskelion = &sk;
  }
  REQUIRE(triskelion);
  std::set<std::string> codes;
  for (int d = 0; d < triskelion->dart_count(); ++d)
    codes.insert(canonical_code(insert_bigon(*triskelion, d).map));
  CHECK(codes.size() == 2);
}

TEST_CASE("nineteen models in eleven sets with the expected counts") {
  auto models = enumerate_e7_models();
  REQUIRE(models.size() == 19);
  int t2 = 0;
  for (const SexticModel& m : models)
    if (m.t == 2) ++t2;
  CHECK(t2 == 1);

  std::map<std::string, std::pair<int, int>> counts;
  for (const DeformationCounts& dc : deformation_classes(models))
    counts[dc.set] = {dc.n_r, dc.n_c};
  REQUIRE(counts.size() == 11);
  for (const RowStatic& row : e7_row_table()) {
    REQUIRE(counts.count(row.set) == 1);
    CHECK(counts[row.set].first == row.n_r);
    CHECK(counts[row.set].second == row.n_c);
  }
}

TEST_CASE("model codes are mirror-consistent") {
  auto models = enumerate_e7_models();
  std::set<std::string> codes;
  for (const SexticModel& m : models) codes.insert(model_code(m));
  CHECK(codes.size() == models.size());
  for (const SexticModel& m : models) {
    SexticModel mir = mirrored_model(m);
    // the mirror of every model is again in the list
    CHECK(codes.count(model_code(mir)) == 1);
    CHECK(model_is_real(m) == model_is_real(mir));
  }
}

TEST_CASE("canonical code invariance on the enumerated corpus") {
  SkeletonEnumOptions o;
  o.degree = 6;
  std::vector<CombMap> corpus = enumerate_skeletons(o);
  o.singular_blacks = 1;
  for (CombMap& sk : enumerate_skeletons(o)) corpus.push_back(sk);
  std::mt19937 rng(99);
  std::set<std::string> codes;
  for (const CombMap& sk : corpus) {
    std::string code = canonical_code(sk);
    CHECK(codes.insert(code).second);  // pairwise distinct
    std::vector<int> perm(sk.dart_count());
    for (int i = 0; i < sk.dart_count(); ++i) perm[i] = i;
    for (int trial = 0; trial < 60; ++trial) {
      std::shuffle(perm.begin(), perm.end(), rng);
      int n = sk.dart_count();
      std::vector<int> pairing(n), rotation(n);
      for (int d = 0; d < n; ++d) {
        pairing[perm[d]] = perm[sk.pairing(d)];
        rotation[perm[d]] = perm[sk.rotation(d)];
      }
      std::vector<std::pair<int, Color>> cyc;
      for (int v = 0; v < sk.vertex_count(); ++v) {
        int mind = n;
        for (int d : sk.darts_of_vertex(v)) mind = std::min(mind, perm[d]);
        cyc.emplace_back(mind, sk.color_of_vertex(v));
      }
      std::sort(cyc.begin(), cyc.end());
      std::vector<Color> colors;
      for (auto& [_, c] : cyc) colors.push_back(c);
      CHECK(canonical_code(CombMap(n, pairing, rotation, colors)) == code);
    }
  }
}
