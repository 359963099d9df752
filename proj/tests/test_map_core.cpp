#include "doctest.h"
#include "map_core.hpp"
#include "skeleton_enum.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

using namespace sextic;

namespace {

CombMap segment_map() {
  // two monovalent black vertices joined by one edge
  return build_map(2, {1, 0}, {0, 1}, {Color::Black, Color::Black});
}

CombMap loop_map() {
  // a single black vertex with a loop
  return build_map(2, {1, 0}, {1, 0}, {Color::Black});
}

CombMap theta_map() {
  // two trivalent vertices joined by three parallel edges
  return build_map(6, {3, 5, 4, 0, 2, 1}, {1, 2, 0, 4, 5, 3},
                   {Color::Black, Color::Black});
}

CombMap relabeled(const CombMap& m, const std::vector<int>& perm) {
  int n = m.dart_count();
  std::vector<int> pairing(n), rotation(n);
  for (int d = 0; d < n; ++d) {
    pairing[perm[d]] = perm[m.pairing(d)];
    rotation[perm[d]] = perm[m.rotation(d)];
  }
  // colors follow the cycles ordered by smallest new dart
  std::vector<std::pair<int, Color>> cyc;
  for (int v = 0; v < m.vertex_count(); ++v) {
    int mind = m.dart_count();
    for (int d : m.darts_of_vertex(v)) mind = std::min(mind, perm[d]);
    cyc.emplace_back(mind, m.color_of_vertex(v));
  }
  std::sort(cyc.begin(), cyc.end());
  std::vector<Color> colors;
  for (auto& [_, c] : cyc) colors.push_back(c);
  return build_map(n, pairing, rotation, colors);
}

}  // namespace

TEST_CASE("segment map is the smallest valid map") {
  CombMap m = segment_map();
  CHECK(m.vertex_count() == 2);
  CHECK(m.edge_count() == 1);
  CHECK(m.faces().size() == 1);
  CHECK(m.faces()[0].black_corners == 2);
}

TEST_CASE("loop map has two faces") {
  CombMap m = loop_map();
  CHECK(m.vertex_count() == 1);
  CHECK(m.faces().size() == 2);
}

TEST_CASE("fixed dart is rejected") {
  CHECK_THROWS_AS(build_map(2, {0, 1}, {0, 1}, {Color::Black, Color::Black}),
                  MapError);
}

TEST_CASE("corner counts partition the darts") {
  std::vector<CombMap> maps{segment_map(), loop_map(), theta_map()};
  for (const CombMap& m : maps) {
    int total = 0;
    for (const Region& r : m.faces()) total += r.black_corners;
    CHECK(total == m.dart_count());
  }
}

TEST_CASE("skeleton validation") {
  SkeletonReport seg = validate_skeleton(segment_map());
  CHECK(seg.is_valid);
  CHECK(seg.degree == 3);
  CHECK(seg.singular_blacks.size() == 2);

  SkeletonReport loop = validate_skeleton(loop_map());
  CHECK(loop.is_valid);
  CHECK(loop.degree == 3);
  CHECK(loop.singular_blacks.size() == 1);

  // black vertex of valency 4
  CombMap bad = build_map(4, {1, 0, 3, 2}, {1, 2, 3, 0}, {Color::Black});
  SkeletonReport rep = validate_skeleton(bad);
  CHECK_FALSE(rep.is_valid);
  REQUIRE(!rep.reasons.empty());
  CHECK(rep.reasons[0].find("ValencyExceeded") == 0);
}

TEST_CASE("canonical code is invariant under relabeling") {
  std::mt19937 rng(7);
  std::vector<CombMap> maps{theta_map(), segment_map()};
  for (const CombMap& m : maps) {
    std::string code = canonical_code(m);
    std::vector<int> perm(m.dart_count());
    for (int i = 0; i < m.dart_count(); ++i) perm[i] = i;
    for (int trial = 0; trial < 50; ++trial) {
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(canonical_code(relabeled(m, perm)) == code);
    }
  }
  CHECK(canonical_code(segment_map()) != canonical_code(loop_map()));
}

TEST_CASE("automorphisms form a group") {
  std::vector<CombMap> maps{segment_map(), loop_map(), theta_map()};
  for (const CombMap& m : maps) {
    auto autos = automorphisms(m, Orientation::Preserving);
    CHECK(!autos.empty());
    bool has_id = false;
    for (auto& a : autos) {
      bool id = true;
      for (int d = 0; d < m.dart_count(); ++d) id = id && a[d] == d;
      has_id = has_id || id;
    }
    CHECK(has_id);
    std::set<std::vector<int>> set(autos.begin(), autos.end());
    for (auto& a : autos)
      for (auto& b : autos) {
        std::vector<int> c(m.dart_count());
        for (int d = 0; d < m.dart_count(); ++d) c[d] = a[b[d]];
        CHECK(set.count(c) == 1);
      }
  }
  CHECK(automorphisms(segment_map(), Orientation::Preserving).size() == 2);
  CHECK(!automorphisms(loop_map(), Orientation::Reversing).empty());
}

TEST_CASE("asymmetric maps have a trivial symmetry group") {
  // trivalent vertex with a loop, bridge to a monovalent vertex
  CombMap m = build_map(4, {1, 0, 3, 2}, {1, 2, 0, 3},
                        {Color::Black, Color::Black});
  auto autos = automorphisms(m, Orientation::Preserving);
  REQUIRE(autos.size() == 1);
  for (int d = 0; d < m.dart_count(); ++d) CHECK(autos[0][d] == d);
}

TEST_CASE("white vertices must attach to black ones") {
  CombMap ww = build_map(2, {1, 0}, {0, 1}, {Color::White, Color::White});
  SkeletonReport rep = validate_skeleton(ww);
  CHECK_FALSE(rep.is_valid);
  bool mentions_neighbor = false;
  for (const std::string& r : rep.reasons)
    mentions_neighbor |= r.find("WhiteNeighbor") == 0;
  CHECK(mentions_neighbor);
}

TEST_CASE("skeleton text round trip") {
  std::vector<CombMap> maps{segment_map(), loop_map(), theta_map()};
  for (const CombMap& m : maps) {
    std::string text = write_skeleton_text(m);
    CombMap back = parse_skeleton_text(text);
    CHECK(canonical_code(back) == canonical_code(m));
  }
  CHECK_THROWS_AS(parse_skeleton_text("skeleton 3\n"), MapError);
  // missing darts
  CHECK_THROWS_AS(
      parse_skeleton_text("skeleton 4\nedge 0 1\nvertex black 0 1\n"),
      MapError);
  CHECK_THROWS_AS(
      parse_skeleton_text("skeleton 2\nedge 0 1\nedge 0 1\nvertex black 0 1\n"),
      MapError);
}
