#include "pipeline.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sextic {

namespace {

int milnor_of(const Singularity& s) { return s.index; }

int family_rank(char f) { return f == 'E' ? 0 : f == 'D' ? 1 : 2; }

}  // namespace

int SingularitySet::total_milnor() const {
  int mu = 0;
  for (const Singularity& s : entries) mu += milnor_of(s);
  return mu;
}

std::string SingularitySet::str() const {
  std::ostringstream os;
  bool first = true;
  std::size_t i = 0;
  while (i < entries.size()) {
    std::size_t j = i;
    while (j < entries.size() && entries[j] == entries[i]) ++j;
    if (!first) os << "+";
    first = false;
    if (j - i > 1) os << (j - i);
    os << entries[i].family << entries[i].index;
    i = j;
  }
  return os.str();
}

SingularitySet singularity_set(const SexticModel& model,
                               const std::vector<char>& d_flags) {
  const CombMap& m = model.map;
  int bigon = model.bigon_face();
  std::vector<Singularity> rest;
  int mult_total = 2;  // the distinguished fiber
  for (const Region& r : m.faces()) {
    bool flagged =
        r.id < static_cast<int>(d_flags.size()) && d_flags[r.id] != 0;
    if (r.id == bigon) {
      if (flagged)
        throw std::invalid_argument("the distinguished bigon cannot carry a D flag");
      continue;
    }
    int d = r.black_corners;
    if (flagged) {
      rest.push_back({'D', d + 4});
      mult_total += d + 6;
    } else {
      if (d >= 2) rest.push_back({'A', d - 1});
      mult_total += d;
    }
  }
  for (int v = 0; v < m.vertex_count(); ++v) {
    if (m.color_of_vertex(v) == Color::White) {
      rest.push_back({'E', 7});
      mult_total += 9;
    } else if (m.valency(v) < 3) {
      if (m.valency(v) % 3 == 1) {
        rest.push_back({'E', 6});
        mult_total += 8;
      } else {
        rest.push_back({'E', 8});
        mult_total += 10;
      }
    }
  }
  std::sort(rest.begin(), rest.end(), [](const Singularity& a,
                                         const Singularity& b) {
    if (family_rank(a.family) != family_rank(b.family))
      return family_rank(a.family) < family_rank(b.family);
    return a.index > b.index;
  });
  SingularitySet set;
  set.entries.push_back({'E', 7});
  set.entries.insert(set.entries.end(), rest.begin(), rest.end());
  if (set.total_milnor() != 19)
    throw BudgetError(BudgetError::Kind::Milnor,
                      "MilnorBudgetViolated: total " +
                          std::to_string(set.total_milnor()) + " for set " +
                          set.str());
  if (mult_total != 18)
    throw BudgetError(BudgetError::Kind::Multiplicity,
                      "MultiplicityBudgetViolated: total " +
                          std::to_string(mult_total) + " for set " +
                          set.str());
  return set;
}

bool sing_points_admissible(const SingularitySet& set) {
  int odd_slot = 0;
  for (const Singularity& s : set.entries) {
    if (s.family == 'D' && s.index % 2 == 0) return false;
    if (s.family == 'A' && s.index % 2 == 1) ++odd_slot;
    if (s.family == 'D' && s.index % 2 == 1) ++odd_slot;
    if (s.family == 'E' && s.index == 7) ++odd_slot;
  }
  return odd_slot <= 1;
}

MaximalityCertificate check_maximality(const SexticModel& model,
                                       const std::vector<char>& d_flags) {
  const CombMap& m = model.map;
  MaximalityCertificate cert;

  int blacks = 0, black1 = 0, black2 = 0, whites_singular = 0;
  for (int v = 0; v < m.vertex_count(); ++v) {
    if (m.color_of_vertex(v) == Color::Black) {
      ++blacks;
      if (m.valency(v) == 1) ++black1;
      if (m.valency(v) == 2) ++black2;
    } else {
      ++whites_singular;
    }
  }
  int bivalent_whites = 0;  // one on every edge joining two black vertices
  for (int d = 0; d < m.dart_count(); ++d) {
    int e = m.pairing(d);
    if (d < e && m.color_of_dart(d) == Color::Black &&
        m.color_of_dart(e) == Color::Black)
      ++bivalent_whites;
  }
  int whites = whites_singular + bivalent_whites;
  int d_points = 0;
  for (char f : d_flags) d_points += f ? 1 : 0;
  int triples = black1 + black2 + whites_singular + d_points;
  int k_reduced = 3 - triples;

  int mu_reduced = 0;  // double-point model of the trigonal curve
  for (const Region& r : m.faces()) mu_reduced += r.black_corners - 1;
  mu_reduced += whites_singular + 2 * black2;

  cert.ncross_equality =
      mu_reduced ==
      blacks + whites + whites_singular + 2 * black2 - 2;
  cert.k2_equality = 2 * k_reduced == blacks + whites_singular + black2;
  cert.k3_equality =
      3 * k_reduced == whites + black1 + whites_singular + 2 * black2;

  cert.mu_bbar = mu_reduced + 6 * (black1 + black2 + whites_singular) +
                 5 * d_points;
  cert.unstable = 0;  // singular vertices are promoted to triple points
  cert.bound = 5 * 3 - 2 - cert.unstable;
  cert.maximal = cert.ncross_equality && cert.k2_equality &&
                 cert.k3_equality && cert.mu_bbar == cert.bound;
  if (!cert.maximal) {
    std::ostringstream os;
    os << "NotMaximal:";
    if (!cert.ncross_equality) os << " mu-estimate";
    if (!cert.k2_equality) os << " 2k-count";
    if (!cert.k3_equality) os << " 3k-count";
    if (cert.mu_bbar != cert.bound) os << " mu!=bound";
    cert.failing = os.str();
  }
  return cert;
}

std::vector<DeformationCounts> deformation_classes(
    const std::vector<SexticModel>& models) {
  std::map<std::string, DeformationCounts> by_set;
  std::map<std::string, int> reals;
  for (const SexticModel& model : models) {
    std::string set = singularity_set(model).str();
    auto& dc = by_set[set];
    dc.set = set;
    dc.model_codes.push_back(model_code(model));
    if (model_is_real(model)) ++reals[set];
  }
  std::vector<DeformationCounts> out;
  for (auto& [set, dc] : by_set) {
    int total = static_cast<int>(dc.model_codes.size());
    dc.n_r = reals[set];
    assert((total - dc.n_r) % 2 == 0);
    dc.n_c = (total - dc.n_r) / 2;
    out.push_back(dc);
  }
  return out;
}

const std::vector<RowStatic>& e7_row_table() {
  static const std::vector<RowStatic> table = {
      {1, "E7+2A4+2A2", "a", 1, 0, 41040, {15, 0, 15}},
      {2, "E7+A12", "b1", 0, 1, 6, {7, 2, 2}},
      {3, "E7+A10+A2", "b2", 2, 0, 6, {11, 0, 3}},
      {4, "E7+2A6", "c1", 0, 1, 6, {7, 0, 7}},
      {5, "E7+A8+A4", "c2", 0, 1, 6, {23, 2, 2}},
      {6, "E7+A6+A4+A2", "c3", 2, 0, 6, {35, 0, 3}},
      {7, "E7+E6+A6", "d1", 0, 1, 6, {11, 2, 2}},
      {8, "E7+E6+A4+A2", "d2", 2, 0, 6, {15, 0, 3}},
      {9, "E7+E8+2A2", "e", 1, 0, 6, {3, 0, 3}},
      {10, "E7+2E6", "f", 1, 0, 6, {3, 0, 3}},
      {11, "E7+E8+A4", "g", 0, 1, 6, {3, 2, 2}},
  };
  return table;
}

ClassifyResult classify_e7(std::size_t max_cosets) {
  ClassifyResult res;
  res.models = enumerate_e7_models();
  CosetEnumOptions opts;
  opts.max_cosets = max_cosets;

  std::map<std::string, ClassificationRow> rows;
  std::map<std::string, int> reals;
  for (const SexticModel& model : res.models) {
    SingularitySet set = singularity_set(model);
    if (!sing_points_admissible(set))
      throw std::logic_error("enumerated model fails the singular-point filter: " +
                             set.str());
    MaximalityCertificate cert = check_maximality(model);
    if (!cert.maximal)
      throw std::logic_error("enumerated model is not maximal: " + set.str() +
                             " " + cert.failing);
    FpPresentation pres = assemble_presentation(model);
    auto order = group_order(pres, opts);
    if (!order)
      throw std::runtime_error("coset enumeration hit the limit on " +
                               set.str());
    auto& row = rows[set.str()];
    row.set = set.str();
    row.model_codes.push_back(model_code(model));
    if (row.group_order != 0 && row.group_order != *order)
      throw std::logic_error("branch variants disagree in order on " +
                             set.str());
    row.group_order = *order;
    if (model_is_real(model)) ++reals[set.str()];
  }
  for (auto& [set, row] : rows) {
    int total = static_cast<int>(row.model_codes.size());
    row.n_r = reals[set];
    row.n_c = (total - row.n_r) / 2;
  }

  for (const RowStatic& rs : e7_row_table()) {
    auto it = rows.find(rs.set);
    if (it == rows.end())
      throw std::logic_error("classification did not produce the set " +
                             std::string(rs.set));
    ClassificationRow row = it->second;
    row.row = rs.row;
    row.figure = rs.figure;
    row.s_perp = rs.s_perp;
    res.rows.push_back(std::move(row));
    rows.erase(it);
  }
  if (!rows.empty())
    throw std::logic_error("classification produced an unexpected set " +
                           rows.begin()->first);
  for (const ClassificationRow& r : res.rows)
    res.total_classes += r.n_r + 2 * r.n_c;
  return res;
}

namespace {

FreeWord swap23(const FreeWord& w) {
  std::vector<int> out;
  for (int l : w.letters()) {
    int g = std::abs(l);
    int n = g == 2 ? 3 : g == 3 ? 2 : g;
    out.push_back(l > 0 ? n : -n);
  }
  return FreeWord(out);
}

FreeWord leaf_relator_a2(int mexp) {
  // (a1 a2)^m a1 = a2 (a1 a2)^m
  FreeWord a1 = FreeWord::gen(1), a2 = FreeWord::gen(2);
  FreeWord lhs = (a1 * a2).pow(mexp) * a1;
  FreeWord rhs = a2 * (a1 * a2).pow(mexp);
  return lhs * rhs.inverse();
}

FreeWord leaf_relator_a3(int nexp) {
  FreeWord a1 = FreeWord::gen(1), a3 = FreeWord::gen(3);
  FreeWord lhs = (a1 * a3).pow(nexp) * a1;
  FreeWord rhs = a3 * (a1 * a3).pow(nexp);
  return lhs * rhs.inverse();
}

}  // namespace

FpPresentation row_relations(int row, BranchChoice branch,
                             bool drop_triangle) {
  if (row < 1 || row > 11)
    throw std::invalid_argument("UnknownRow: " + std::to_string(row));
  FreeWord a1 = FreeWord::gen(1), a2 = FreeWord::gen(2), a3 = FreeWord::gen(3);
  FreeWord loop_rel = a1.inverse() * a2 * a1 * a3.inverse();
  std::vector<FreeWord> extras;
  switch (row) {
    case 1: {
      extras = {leaf_relator_a2(2), leaf_relator_a3(2)};
      if (!drop_triangle) {
        FreeWord w = a1 * a3 * a1.inverse();
        extras.push_back(w * a2 * w * (a2 * w * a2).inverse());
      }
      break;
    }
    case 2:
      extras = {loop_rel, leaf_relator_a2(6)};
      break;
    case 3:
      extras = {leaf_relator_a2(1), leaf_relator_a3(5)};
      break;
    case 4: {
      extras = {leaf_relator_a2(3), leaf_relator_a3(3)};
      FreeWord w = a2 * a1;
      extras.push_back(a1 * (w * a3 * w.inverse()).inverse());
      break;
    }
    case 5:
      extras = {loop_rel, leaf_relator_a2(4)};
      break;
    case 6:
      extras = {leaf_relator_a2(1), leaf_relator_a3(3)};
      break;
    case 7:
      extras = {loop_rel, leaf_relator_a2(3)};
      break;
    case 8:
      extras = {leaf_relator_a2(1), leaf_relator_a3(2)};
      break;
    case 9:
      extras = {leaf_relator_a2(1), leaf_relator_a3(1)};
      break;
    case 10: {
      FreeWord r = rho();
      extras.push_back(a2 * r * (r * a1).inverse());
      extras.push_back(a3 * r * (r * a2).inverse());
      break;
    }
    case 11:
      extras = {loop_rel, leaf_relator_a2(2)};
      break;
  }
  FpPresentation p;
  p.ngens = 3;
  p.relators = infinity_package(EType::E7, branch).relators_at_infinity;
  for (const FreeWord& r : extras)
    p.relators.push_back(branch == BranchChoice::Alpha2 ? r : swap23(r));
  p.normalize();
  return p;
}

namespace {

// E7 Dynkin graph, Bourbaki numbering: chain 1-3-4-5-6-7 with 2 joined to 4.
const std::vector<std::pair<int, int>> kE7Edges = {{1, 3}, {3, 4}, {4, 5},
                                                   {5, 6}, {6, 7}, {2, 4}};

std::string component_name(const std::vector<int>& nodes,
                           const std::vector<std::vector<int>>& adj) {
  int n = static_cast<int>(nodes.size());
  int max_deg = 0;
  int center = -1;
  for (int v : nodes) {
    int deg = 0;
    for (int w : adj[v])
      if (std::find(nodes.begin(), nodes.end(), w) != nodes.end()) ++deg;
    if (deg > max_deg) {
      max_deg = deg;
      center = v;
    }
  }
  if (max_deg <= 2) return "A" + std::to_string(n);
  // One branch vertex: arm lengths decide D vs E.
  std::vector<int> arms;
  for (int w : adj[center]) {
    if (std::find(nodes.begin(), nodes.end(), w) == nodes.end()) continue;
    int len = 0, prev = center, cur = w;
    while (true) {
      ++len;
      int next = -1;
      for (int x : adj[cur]) {
        if (x == prev) continue;
        if (std::find(nodes.begin(), nodes.end(), x) != nodes.end()) next = x;
      }
      if (next < 0) break;
      prev = cur;
      cur = next;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  assert(arms.size() == 3);
  if (arms[0] == 1 && arms[1] == 1) return "D" + std::to_string(n);
  return "E" + std::to_string(n);
}

}  // namespace

std::vector<Perturbation> enumerate_e7_perturbations() {
  std::vector<std::vector<int>> adj(8);
  for (auto [a, b] : kE7Edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::set<std::string> seen;
  std::vector<Perturbation> out;
  for (int mask = 0; mask < 127; ++mask) {  // 127 = all seven nodes = no move
    std::vector<int> nodes;
    for (int v = 1; v <= 7; ++v)
      if (mask & (1 << (v - 1))) nodes.push_back(v);
    // connected components
    std::multiset<std::string> comps;
    std::vector<char> vis(8, 0);
    for (int v : nodes) {
      if (vis[v]) continue;
      std::vector<int> comp{v};
      vis[v] = 1;
      for (std::size_t q = 0; q < comp.size(); ++q)
        for (int w : adj[comp[q]])
          if (!vis[w] &&
              std::find(nodes.begin(), nodes.end(), w) != nodes.end()) {
            vis[w] = 1;
            comp.push_back(w);
          }
      comps.insert(component_name(comp, adj));
    }
    std::string name;
    {
      std::vector<std::string> parts(comps.begin(), comps.end());
      std::sort(parts.begin(), parts.end(), [](const std::string& x,
                                               const std::string& y) {
        auto key = [](const std::string& s) {
          return std::make_pair(-std::stoi(s.substr(1)), s[0]);
        };
        return key(x) < key(y);
      });
      std::map<std::string, int> mult;
      std::vector<std::string> uniq;
      for (auto& s : parts)
        if (mult[s]++ == 0) uniq.push_back(s);
      std::ostringstream os;
      bool first = true;
      for (auto& s : uniq) {
        if (!first) os << "+";
        first = false;
        if (mult[s] > 1) os << mult[s];
        os << s;
      }
      name = first ? "0" : os.str();
    }
    if (!seen.insert(name).second) continue;
    Perturbation pert;
    pert.name = name;
    out.push_back(std::move(pert));
  }

  // Local relation sets of the nonabelian perturbations, in the b-basis.
  FreeWord b1 = FreeWord::gen(1), b2 = FreeWord::gen(2), b3 = FreeWord::gen(3);
  auto braidrel = [](const FreeWord& x, const FreeWord& y) {
    return x * y * x * (y * x * y).inverse();
  };
  auto comm = [](const FreeWord& x, const FreeWord& y) {
    return x * y * x.inverse() * y.inverse();
  };
  std::map<std::string, std::vector<FreeWord>> nonabelian;
  nonabelian["A4+A2"] = {
      braidrel(b1, b2),
      (b2 * b3).pow(2) * b2 * (b3 * (b2 * b3).pow(2)).inverse(),
      b2 * (b3 * b1 * b3.inverse()).inverse()};
  nonabelian["A3+A2+A1"] = {comm(b1, b3),
                            (b1 * b2).pow(2) * (b2 * b1).pow(2).inverse(),
                            braidrel(b2, b3)};
  nonabelian["A5+A1"] = {comm(b2, b3),
                         (b1 * b2).pow(3) * (b2 * b1).pow(3).inverse(),
                         b3 * (b1 * b2 * b1.inverse()).inverse()};
  nonabelian["D5+A1"] = {comm(b1, b2), comm(b1, b3), braidrel(b2, b3)};
  nonabelian["A2+3A1"] = nonabelian["D5+A1"];
  for (Perturbation& p : out) {
    auto it = nonabelian.find(p.name);
    if (it != nonabelian.end()) {
      p.nonabelian = true;
      p.local_relators = it->second;
    }
  }
  return out;
}

namespace {

FreeWord substitute(const FreeWord& w, const std::vector<FreeWord>& images) {
  FreeWord out;
  for (int l : w.letters()) {
    const FreeWord& img = images[std::abs(l) - 1];
    out = out * (l > 0 ? img : img.inverse());
  }
  return out;
}

std::size_t order_with_extras(const Assembly& a,
                              const std::vector<FreeWord>& extras,
                              std::size_t max_cosets) {
  FpPresentation p = presentation_from(a, -1);  // keep every braid relation
  for (const FreeWord& r : extras) p.relators.push_back(r);
  p.normalize();
  CosetEnumOptions opts;
  opts.max_cosets = max_cosets;
  auto order = group_order(p, opts);
  if (!order) throw std::runtime_error("LimitExceeded in perturbation run");
  return *order;
}

}  // namespace

std::size_t perturb_e7_point(const Assembly& a, const Perturbation& pert,
                             std::size_t max_cosets) {
  std::vector<FreeWord> images = e7_b_basis_images();
  std::vector<FreeWord> extras;
  if (pert.nonabelian) {
    for (const FreeWord& r : pert.local_relators)
      extras.push_back(substitute(r, images));
  } else {
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        extras.push_back(images[i] * images[j] * images[i].inverse() *
                         images[j].inverse());
  }
  return order_with_extras(a, extras, max_cosets);
}

std::size_t perturb_region(const Assembly& a, int leaf_index,
                           const std::vector<int>& exponents,
                           std::size_t max_cosets) {
  std::vector<FreeWord> extras;
  for (int c : exponents)
    for (FreeWord& r : braid_relators(leaf_sub_braid(a.leaves[leaf_index], c)))
      extras.push_back(std::move(r));
  return order_with_extras(a, extras, max_cosets);
}

std::vector<std::vector<int>> a_point_perturbations(int p) {
  // Induced subgraphs of the length-p chain, as multisets of chain lengths;
  // exponents are the fiber splittings (A_k piece -> k+1, tangency -> 1).
  std::set<std::vector<int>> classes;
  for (int mask = 0; mask < (1 << p) - 1; ++mask) {
    std::vector<int> comps;
    int run = 0;
    for (int i = 0; i < p; ++i) {
      if (mask & (1 << i)) {
        ++run;
      } else if (run) {
        comps.push_back(run);
        run = 0;
      }
    }
    if (run) comps.push_back(run);
    std::sort(comps.begin(), comps.end(), std::greater<>());
    classes.insert(comps);
  }
  std::vector<std::vector<int>> out;
  for (const auto& comps : classes) {
    std::vector<int> exps;
    int used = 0;
    for (int k : comps) {
      exps.push_back(k + 1);
      used += k + 1;
    }
    if (used < p + 1) exps.push_back(1);
    out.push_back(std::move(exps));
  }
  return out;
}

namespace {

bool has_stem(const SexticModel& model) {
  const CombMap& m = model.map;
  const Region& bigon = m.faces()[model.bigon_face()];
  std::set<int> corners;
  for (int c : bigon.boundary) corners.insert(m.vertex_of(c));
  for (const Region& r : m.faces()) {
    if (r.boundary.size() != 1) continue;  // monogons only
    int w = m.vertex_of(r.boundary[0]);
    for (int d : m.darts_of_vertex(w)) {
      int far = m.vertex_of(m.pairing(d));
      if (far != w && corners.count(far)) return true;
    }
  }
  return false;
}

std::string degree_partition(const AbelianInvariants& h1) {
  if (h1.free_rank == 1 && h1.torsion.size() == 1 && h1.torsion[0] == 3)
    return "3+3";
  if (h1.free_rank == 1 && h1.torsion.empty()) return "5+1";
  if (h1.free_rank == 1 && h1.torsion.size() == 1 && h1.torsion[0] == 2)
    return "4+2";
  return "?" + h1.str();
}

void split_candidate(const SexticModel& model, const std::vector<char>& flags,
                     std::vector<SplitFamily>& out) {
  SingularitySet set;
  try {
    set = singularity_set(model, flags);
  } catch (const BudgetError&) {
    return;
  }
  MaximalityCertificate cert = check_maximality(model, flags);
  if (!cert.maximal) return;
  Assembly a = assemble_monodromy(model, flags);
  FpPresentation p = presentation_from(a, -1);
  Class2Data c2 = class2_quotient(p);
  SplitFamily fam;
  fam.set = set;
  fam.model_code = model_code(model);
  fam.stem = has_stem(model);
  fam.h1 = c2.abelianization;
  fam.degrees = degree_partition(fam.h1);
  fam.class2_commutant = c2.commutant;
  fam.pairing12_order = c2.pairing_order[0][1];
  out.push_back(std::move(fam));
}

}  // namespace

std::vector<SplitFamily> split_analysis() {
  std::vector<SplitFamily> out;

  // Degree-9 reducible skeletons (all vertices trivalent).
  {
    SkeletonEnumOptions opts;
    opts.degree = 9;
    for (const CombMap& sk : enumerate_skeletons(opts)) {
      if (!admits_splitting_marking(sk)) continue;
      std::set<std::string> seen;
      for (const Region& r : sk.faces()) {
        if (r.black_corners != 2 || r.boundary.size() != 2) continue;
        for (int branch : r.boundary) {
          SexticModel model{sk, branch, 0};
          if (!seen.insert(model_code(model)).second) continue;
          split_candidate(model, {}, out);
        }
      }
    }
  }

  // Degree-6 reducible skeletons with one region converted to a D-type
  // point, and with a second E7 carried by a singular white vertex.
  {
    SkeletonEnumOptions opts;
    opts.degree = 6;
    for (const CombMap& sk : enumerate_skeletons(opts)) {
      if (!admits_splitting_marking(sk)) continue;
      std::set<std::string> seen;
      for (const Region& r : sk.faces()) {
        if (r.black_corners != 2 || r.boundary.size() != 2) continue;
        for (int branch : r.boundary) {
          SexticModel model{sk, branch, 0};
          if (!seen.insert(model_code(model)).second) continue;
          for (const Region& f : sk.faces()) {
            if (f.id == model.bigon_face()) continue;
            std::vector<char> flags(sk.faces().size(), 0);
            flags[f.id] = 1;
            split_candidate(model, flags, out);
          }
        }
      }
    }
    SkeletonEnumOptions wopts;
    wopts.degree = 6;
    wopts.singular_whites = 1;
    for (const CombMap& sk : enumerate_skeletons(wopts)) {
      if (!admits_splitting_marking(sk)) continue;
      std::set<std::string> seen;
      for (const Region& r : sk.faces()) {
        if (r.black_corners != 2 || r.boundary.size() != 2) continue;
        for (int branch : r.boundary) {
          SexticModel model{sk, branch, 0};
          if (!seen.insert(model_code(model)).second) continue;
          split_candidate(model, {}, out);
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const SplitFamily& a,
                                       const SplitFamily& b) {
    if (a.set.str() != b.set.str()) return a.set.str() < b.set.str();
    return a.model_code < b.model_code;
  });
  return out;
}

}  // namespace sextic
