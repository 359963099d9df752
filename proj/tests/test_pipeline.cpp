#include "doctest.h"
#include "monodromy.hpp"
#include "pipeline.hpp"

#include <map>
#include <set>

using namespace sextic;

namespace {

const std::vector<SexticModel>& all_models() {
  static std::vector<SexticModel> models = enumerate_e7_models();
  return models;
}

const SexticModel& model_for(const std::string& set, int which = 0) {
  int seen = 0;
  for (const SexticModel& m : all_models())
    if (singularity_set(m).str() == set && seen++ == which) return m;
  throw std::runtime_error("no model for " + set);
}

}  // namespace

TEST_CASE("region walks agree with the local monodromy") {
  SkeletonEnumOptions o;
  o.degree = 9;
  for (const CombMap& sk : enumerate_skeletons(o)) {
    std::vector<int> index(sk.dart_count(), 0);
    for (int v = 0; v < sk.vertex_count(); ++v) {
      int d0 = sk.darts_of_vertex(v)[0];
      index[d0] = 1;
      index[sk.rotation(d0)] = 2;
      index[sk.rotation(sk.rotation(d0))] = 3;
    }
    for (const Region& r : sk.faces()) {
      for (int c0 : r.boundary) {
        int b = sk.rotation_inv(c0);
        Braid3 local = Braid3::from_letters(
            std::vector<int>(static_cast<std::size_t>(r.black_corners),
                             index[b]));
        Braid3 walk;
        int c = c0;
        for (int k = 0; k < r.black_corners; ++k) {
          int e = sk.pairing(c);
          walk = walk * edge_transport(index[e], index[c]);
          c = sk.rotation(e);
        }
        CHECK(walk.syllables() == local.syllables());
      }
    }
  }
}

TEST_CASE("budgets and certificates on every model") {
  for (const SexticModel& m : all_models()) {
    SingularitySet set = singularity_set(m);
    CHECK(set.total_milnor() == 19);
    CHECK(sing_points_admissible(set));
    MaximalityCertificate cert = check_maximality(m);
    CHECK(cert.maximal);
    CHECK(cert.mu_bbar == 13);
    CHECK(cert.bound == 13);
    CHECK(cert.unstable == 0);
    CHECK(cert.ncross_equality);
    CHECK(cert.k2_equality);
    CHECK(cert.k3_equality);
  }
}

TEST_CASE("budget violations are reported") {
  // A degree-6 skeleton used directly as a model misses the Milnor budget.
  SkeletonEnumOptions o;
  o.degree = 6;
  for (const CombMap& sk : enumerate_skeletons(o)) {
    for (const Region& r : sk.faces()) {
      if (r.black_corners != 2 || r.boundary.size() != 2) continue;
      SexticModel model{sk, r.boundary[0], 0};
      CHECK_THROWS_AS(singularity_set(model), BudgetError);
      CHECK_FALSE(check_maximality(model).maximal);
      return;
    }
  }
}

TEST_CASE("derived singularity sets of the named rows") {
  CHECK(singularity_set(model_for("E7+2E6")).str() == "E7+2E6");
  const SexticModel& row4 = model_for("E7+2A6");
  std::multiset<int> profile;
  for (const Region& r : row4.map.faces()) profile.insert(r.black_corners);
  CHECK(profile == std::multiset<int>{2, 7, 7, 1, 1});
}

TEST_CASE("monodromy at infinity factors through every model") {
  for (const SexticModel& m : all_models()) {
    Assembly a = assemble_monodromy(m);
    CHECK(a.infinity_factorization_holds());
    int mult = 2;
    for (const LeafSite& l : a.leaves) mult += l.multiplicity;
    CHECK(mult == 18);
    CHECK(a.leaf_product().degree() == 16);
  }
}

TEST_CASE("assembled orders match the table and the written relators") {
  CosetEnumOptions opts;
  std::map<std::string, std::size_t> expected;
  for (const RowStatic& r : e7_row_table()) expected[r.set] = r.order;
  std::map<std::string, int> row_of;
  for (const RowStatic& r : e7_row_table()) row_of[r.set] = r.row;
  for (const SexticModel& m : all_models()) {
    std::string set = singularity_set(m).str();
    auto order = group_order(assemble_presentation(m), opts);
    REQUIRE(order.has_value());
    CHECK(*order == expected[set]);
    // cross-oracle equality against the transcribed relators
    for (BranchChoice br : {BranchChoice::Alpha2, BranchChoice::Alpha3}) {
      auto recorded = group_order(row_relations(row_of[set], br), opts);
      REQUIRE(recorded.has_value());
      CHECK(*recorded == *order);
    }
  }
}

TEST_CASE("choice independence of the presentation") {
  // omitted relator and reference data must not change the group order
  for (const std::string set : {"E7+E8+2A2", "E7+E8+A4", "E7+2E6"}) {
    const SexticModel& m = model_for(set);
    Assembly a = assemble_monodromy(m);
    auto base = group_order(presentation_from(a, -1));
    REQUIRE(base.has_value());
    for (int omit = 0; omit < static_cast<int>(a.leaves.size()); ++omit) {
      auto alt = group_order(presentation_from(a, omit));
      REQUIRE(alt.has_value());
      CHECK(*alt == *base);
    }
  }
  // alternative base corner flips the branch wiring, same order
  const SexticModel& m9 = model_for("E7+E8+2A2");
  const Region& bigon = m9.map.faces()[m9.bigon_face()];
  for (int corner : bigon.boundary) {
    Assembly a = assemble_monodromy(m9, {}, corner);
    CHECK(a.infinity_factorization_holds());
    CHECK(group_order(presentation_from(a)).value() == 6);
  }
  // markings away from the base are a gauge choice
  const SexticModel& m1 = model_for("E7+2A4+2A2");
  Assembly ref = assemble_monodromy(m1);
  for (int rot : {1, 2}) {
    Assembly alt = assemble_monodromy(m1, {}, -1, rot);
    REQUIRE(alt.leaves.size() == ref.leaves.size());
    for (std::size_t i = 0; i < ref.leaves.size(); ++i)
      CHECK(alt.leaves[i].monodromy == ref.leaves[i].monodromy);
  }
}

TEST_CASE("the stem fiber carries the abelian-subgroup relation data") {
  // Models with a loop next to the bigon present, together with the
  // relators at infinity, a group with commutant Z/3 generated by a central
  // pairing value, before the remaining fibers are imposed.
  for (const std::string set : {"E7+A12", "E7+A8+A4", "E7+E6+A6", "E7+E8+A4"}) {
    for (int which : {0, 1}) {
      const SexticModel& m = model_for(set, which);
      Assembly a = assemble_monodromy(m);
      std::set<int> corners;
      for (int c : m.map.faces()[m.bigon_face()].boundary)
        corners.insert(m.map.vertex_of(c));
      int loop_leaf = -1;
      for (std::size_t i = 0; i < a.leaves.size(); ++i) {
        const LeafSite& l = a.leaves[i];
        if (l.kind != FiberKind::A || l.d != 1) continue;
        int w = m.map.vertex_of(m.map.faces()[l.face_id].boundary[0]);
        for (int d : m.map.darts_of_vertex(w))
          if (corners.count(m.map.vertex_of(m.map.pairing(d))))
            loop_leaf = static_cast<int>(i);
      }
      REQUIRE(loop_leaf >= 0);
      FpPresentation p;
      p.ngens = 3;
      p.relators = a.package.relators_at_infinity;
      for (const FreeWord& r : braid_relators(a.leaves[loop_leaf].monodromy))
        p.relators.push_back(r);
      p.normalize();
      AbelianInvariants h1 = abelianization(p);
      CHECK(h1.free_rank == 1);
      REQUIRE(h1.torsion.size() == 1);
      CHECK(h1.torsion[0] == 3);
      Class2Data c2 = class2_quotient(p);
      CHECK(c2.commutant.str() == "Z/3");
      CHECK(c2.pairing_order[0][1] == 3);
    }
  }
}

TEST_CASE("loop-group facts") {
  FpPresentation loop = row_relations(2);  // contains the loop relation
  // eq.+loop alone: infinity package + the loop relator
  FpPresentation p;
  p.ngens = 3;
  p.relators = infinity_package(EType::E7).relators_at_infinity;
  p.relators.push_back(FreeWord::parse("a1^-1 a2 a1 a3^-1"));
  p.normalize();
  AbelianInvariants h1 = abelianization(p);
  CHECK(h1.free_rank == 1);
  REQUIRE(h1.torsion.size() == 1);
  CHECK(h1.torsion[0] == 3);
  Class2Data c2 = class2_quotient(p);
  CHECK(c2.commutant.str() == "Z/3");

  // adjacent 2n-gon relation with n = 2 (not divisible by 3): abelian
  FpPresentation q = p;
  FreeWord a1 = FreeWord::gen(1), a2 = FreeWord::gen(2);
  q.relators.push_back((a1 * a2).pow(2) * (a2 * a1).pow(2).inverse());
  q.normalize();
  Class2Data cq = class2_quotient(q);
  CHECK(cq.commutant.trivial());

  // with n = 3 the commutant survives
  FpPresentation q3 = p;
  q3.relators.push_back((a1 * a2).pow(3) * (a2 * a1).pow(3).inverse());
  q3.normalize();
  CHECK(class2_quotient(q3).commutant.str() == "Z/3");

  // centrality of a2 a3^-1 in finite quotients
  for (int n : {5, 7, 8}) {
    FpPresentation fq = p;
    fq.relators.push_back(FreeWord::gen(2).pow(n));
    fq.normalize();
    EnumResult reg = coset_enumerate(fq, {});
    REQUIRE(reg.completed);
    FreeWord z = FreeWord::parse("a2 a3^-1");
    for (int g = 1; g <= 3; ++g) {
      FreeWord gg = FreeWord::gen(g);
      CHECK(reg.table.trace(0, z * gg * z.inverse() * gg.inverse()) == 0);
    }
  }
  (void)loop;
}

TEST_CASE("segment model satisfies the solid-edge relations") {
  const SexticModel& m = model_for("E7+2E6");
  Assembly a = assemble_monodromy(m);
  CHECK(a.used_fallback);
  FpPresentation p = presentation_from(a, -1);
  EnumResult reg = coset_enumerate(p, {});
  REQUIRE(reg.completed);
  CHECK(reg.table.coset_count == 6);
  FreeWord r1 = FreeWord::parse("a2 a1 a2 a3") *
                FreeWord::parse("a1 a2 a3 a1").inverse();
  FreeWord r2 = FreeWord::parse("a3 a1 a2 a3") *
                FreeWord::parse("a1 a2 a3 a2").inverse();
  CHECK(reg.table.trace(0, r1) == 0);
  CHECK(reg.table.trace(0, r2) == 0);
}

TEST_CASE("b-basis composition agrees inside the row-1 group") {
  FpPresentation g = row_relations(1);
  EnumResult reg = coset_enumerate(g, {});
  REQUIRE(reg.completed);
  auto c = inclusion_images(EType::E7);
  FreeWord c123 = c[0] * c[1] * c[2];
  std::vector<FreeWord> b_from_c = {
      c123 * c[1] * c123.inverse(),
      (c[0] * c[1]) * c[2] * (c[0] * c[1]).inverse(),
      c[0],
  };
  auto b = e7_b_basis_images();
  for (int i = 0; i < 3; ++i)
    CHECK(reg.table.trace(0, b_from_c[i] * b[i].inverse()) == 0);
}

TEST_CASE("perturbations of the nonabelian sextic") {
  const SexticModel& m1 = model_for("E7+2A4+2A2");
  Assembly a = assemble_monodromy(m1);

  auto perts = enumerate_e7_perturbations();
  std::set<std::string> names;
  for (const Perturbation& p : perts) names.insert(p.name);
  CHECK(names.count("A4+A2") == 1);
  CHECK(names.count("D5+A1") == 1);
  CHECK(names.count("A2+3A1") == 1);
  CHECK(names.count("E7") == 0);  // proper only
  int flagged = 0;
  for (const Perturbation& p : perts) flagged += p.nonabelian;
  CHECK(flagged == 5);

  for (const Perturbation& p : perts)
    CHECK(perturb_e7_point(a, p) == 6);

  // the first extra relation of the A4+A2 case already forces order 6
  for (const Perturbation& p : perts) {
    if (p.name != "A4+A2") continue;
    FpPresentation q = presentation_from(a, -1);
    auto images = e7_b_basis_images();
    FreeWord first;
    for (int l : p.local_relators[0].letters()) {
      const FreeWord& img = images[std::abs(l) - 1];
      first = first * (l > 0 ? img : img.inverse());
    }
    q.relators.push_back(first);
    q.normalize();
    CHECK(group_order(q).value() == 6);
  }

  // cusp perturbation: the replacement relation appears
  for (std::size_t i = 0; i < a.leaves.size(); ++i) {
    if (a.leaves[i].d != 3) continue;
    FpPresentation q = presentation_from(a, -1);
    for (const FreeWord& r : braid_relators(leaf_sub_braid(a.leaves[i], 1)))
      q.relators.push_back(r);
    q.normalize();
    CHECK(group_order(q).value() == 6);
  }
  // A4-point smoothings give the two leaf relations with zero exponent
  for (std::size_t i = 0; i < a.leaves.size(); ++i) {
    if (a.leaves[i].d != 5) continue;
    CHECK(perturb_region(a, static_cast<int>(i), {1}) == 6);
  }
}

TEST_CASE("perturbation closure holds on every row") {
  // Fully smoothing any region fiber of any model keeps a group of order 6
  // (the nonabelian row included).
  CosetEnumOptions opts;
  for (const SexticModel& m : all_models()) {
    Assembly a = assemble_monodromy(m);
    for (std::size_t i = 0; i < a.leaves.size(); ++i) {
      const LeafSite& l = a.leaves[i];
      if (l.kind != FiberKind::A || l.d < 2) continue;
      CHECK(perturb_region(a, static_cast<int>(i), {1}) == 6);
    }
    if (!a.used_fallback) {
      // any perturbation of the distinguished point abelianizes the group
      for (const Perturbation& p : enumerate_e7_perturbations()) {
        if (p.name != "A4+A2") continue;
        CHECK(perturb_e7_point(a, p) == 6);
      }
    }
  }
}

TEST_CASE("split families reproduce the reducible classification") {
  auto fams = split_analysis();
  std::map<std::string, const SplitFamily*> two_cubics;
  for (const SplitFamily& f : fams)
    if (f.degrees == "3+3" && f.stem) two_cubics[f.set.str()] = &f;
  REQUIRE(two_cubics.count("2E7+A5") == 1);
  REQUIRE(two_cubics.count("E7+A11+A1") == 1);
  REQUIRE(two_cubics.count("E7+D12") == 1);
  REQUIRE(two_cubics.count("E7+D5+A7") == 1);
  REQUIRE(two_cubics.count("E7+A9+A2+A1") == 1);
  CHECK(two_cubics["2E7+A5"]->class2_commutant.str() == "Z/3");
  CHECK(two_cubics["E7+A11+A1"]->class2_commutant.str() == "Z/3");
  CHECK(two_cubics["E7+D12"]->class2_commutant.trivial());
  CHECK(two_cubics["E7+D5+A7"]->class2_commutant.trivial());
  CHECK(two_cubics["E7+A9+A2+A1"]->class2_commutant.trivial());

  // the A9+A2+A1 set is also realized by non-cubic splittings
  std::set<std::string> other;
  for (const SplitFamily& f : fams)
    if (f.set.str() == "E7+A9+A2+A1" && f.degrees != "3+3")
      other.insert(f.degrees);
  CHECK(other == std::set<std::string>{"5+1", "4+2"});
}
