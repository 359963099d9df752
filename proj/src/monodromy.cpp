#include "monodromy.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace sextic {

namespace {

// Conventions pinned by the region-walk and factorization tests: transport
// along an edge reads the marking indices as [far end, near end]; lassos
// conjugate by the path transport; the leaf met first in the contour sweep
// is the rightmost factor of the monodromy at infinity.
constexpr bool kProductFirstLeft = false;

int fiber_multiplicity(FiberKind kind, int d) {
  switch (kind) {
    case FiberKind::A:
      return d;
    case FiberKind::D:
      return d + 6;
    case FiberKind::E6Point:
      return 8;
    case FiberKind::E8Point:
      return 10;
    case FiberKind::E7White:
      return 9;
  }
  return 0;
}

struct MarkedMap {
  const CombMap& m;
  std::vector<int> index;  // dart -> 1..3 at trivalent black vertices

  explicit MarkedMap(const CombMap& map) : m(map), index(map.dart_count(), 0) {}

  void mark_vertex(int base_dart) {
    // base_dart gets index 1; rotation order fixes 2 and 3.
    index[base_dart] = 1;
    index[m.rotation(base_dart)] = 2;
    index[m.rotation(m.rotation(base_dart))] = 3;
  }
};

bool is_trivalent_black(const CombMap& m, int v) {
  return m.color_of_vertex(v) == Color::Black && m.valency(v) == 3;
}

}  // namespace

Braid3 Assembly::leaf_product() const {
  Braid3 p;
  if (kProductFirstLeft) {
    for (const LeafSite& l : leaves) p = p * l.monodromy;
  } else {
    for (auto it = leaves.rbegin(); it != leaves.rend(); ++it)
      p = p * it->monodromy;
  }
  return p;
}

bool Assembly::infinity_factorization_holds() const {
  return leaf_product() == package.m_infinity;
}

Braid3 leaf_sub_braid(const LeafSite& leaf, int exponent) {
  if (leaf.kind != FiberKind::A && leaf.kind != FiberKind::D)
    throw std::invalid_argument("sub-braid only defined for region fibers");
  Braid3 local = local_monodromy(FiberKind::A, exponent, leaf.approach_index);
  return local.conjugated_by(leaf.transport);
}

std::vector<FreeWord> braid_relators(const Braid3& m) {
  std::vector<int> letters = m.representative_letters();
  std::vector<FreeWord> out;
  for (int g = 1; g <= 3; ++g) {
    FreeWord img = braid_act(letters, FreeWord::gen(g));
    FreeWord rel = img * FreeWord::gen(g).inverse();
    if (!rel.empty()) out.push_back(rel);
  }
  return out;
}

namespace {

Assembly assemble_fallback(const SexticModel& model) {
  // The bigon has no trivalent corner: the skeleton is the segment map with
  // two monovalent black vertices, both carrying E6-type points.  The basis
  // lives over a point of the solid edge running from the distinguished
  // fiber toward the near vertex, so no bold-edge transport is available;
  // the far monodromy is recovered from the factorization identity.
  Assembly a(model);
  a.used_fallback = true;
  a.branch = BranchChoice::Alpha2;
  a.package = infinity_package(EType::E7, a.branch);
  const CombMap& m = model.map;
  if (m.vertex_count() != 2 || m.edge_count() != 1)
    throw std::invalid_argument(
        "bigon without trivalent corner outside the segment-map case");

  LeafSite near;
  near.kind = FiberKind::E6Point;
  near.d = 1;
  near.multiplicity = 8;
  near.vertex_id = m.vertex_of(model.branch_dart);
  // In the basis over the solid edge the nearby rotation needs no
  // conjugation; this matches the bold-edge rule at index 2.
  near.approach_index = 2;
  near.monodromy = local_monodromy(FiberKind::E6Point, 1, 2);

  LeafSite far = near;
  far.vertex_id = m.vertex_of(m.pairing(model.branch_dart));
  if (kProductFirstLeft)
    far.monodromy = near.monodromy.inverse() * a.package.m_infinity;
  else
    far.monodromy = a.package.m_infinity * near.monodromy.inverse();
  if (!far.monodromy.conjugate_to(near.monodromy))
    throw std::logic_error(
        "fallback: far fiber is not conjugate to a triple-point braid");
  a.leaves = {near, far};
  a.base_vertex = -1;
  a.base_corner_dart = model.branch_dart;
  return a;
}

}  // namespace

Assembly assemble_monodromy(const SexticModel& model,
                            const std::vector<char>& d_flags, int base_corner,
                            int marking_rotate) {
  const CombMap& m = model.map;
  const Region& bigon = m.faces()[model.bigon_face()];
  assert(bigon.boundary.size() == 2);

  // Base vertex: lowest trivalent black corner of the bigon.
  int cv = -1;
  for (int c : bigon.boundary) {
    if (!is_trivalent_black(m, m.vertex_of(c))) continue;
    if (base_corner >= 0 ? c == base_corner : (cv < 0 || c < cv)) cv = c;
  }
  if (cv < 0) return assemble_fallback(model);

  Assembly a(model);
  a.base_corner_dart = cv;
  a.base_vertex = m.vertex_of(cv);
  a.branch =
      model.branch_dart == cv ? BranchChoice::Alpha2 : BranchChoice::Alpha3;
  a.package = infinity_package(EType::E7, a.branch);

  // Markings: at the base the solid edge toward the distinguished fiber is
  // e'_1, which forces e3 = cv; elsewhere the lowest dart gets index 1.
  MarkedMap marked(m);
  marked.mark_vertex(m.rotation(cv));
  for (int v = 0; v < m.vertex_count(); ++v) {
    if (!is_trivalent_black(m, v) || v == a.base_vertex) continue;
    int d0 = m.darts_of_vertex(v)[0];
    for (int k = 0; k < marking_rotate % 3; ++k) d0 = m.rotation(d0);
    marked.mark_vertex(d0);
  }

  // Spanning tree of the trivalent subgraph, rooted at the base.
  std::vector<int> parent_dart(m.vertex_count(), -1);  // dart at child -> parent
  std::vector<char> visited(m.vertex_count(), 0);
  std::vector<char> tree_dart(m.dart_count(), 0);
  visited[a.base_vertex] = 1;
  std::vector<int> bfs{a.base_vertex};
  for (std::size_t q = 0; q < bfs.size(); ++q) {
    int u = bfs[q];
    for (int b : m.darts_of_vertex(u)) {
      int e = m.pairing(b);
      int w = m.vertex_of(e);
      if (!is_trivalent_black(m, w) || visited[w]) continue;
      visited[w] = 1;
      parent_dart[w] = e;
      tree_dart[b] = tree_dart[e] = 1;
      bfs.push_back(w);
    }
  }
  for (int v = 0; v < m.vertex_count(); ++v)
    if (is_trivalent_black(m, v) && !visited[v])
      throw std::logic_error("trivalent subgraph is disconnected");

  // Attachments.  Region fibers hang off the sector that follows a bold
  // dart; triple-point and white fibers hang off their bold edge.
  std::map<int, LeafSite> sector_sites;  // keyed by the preceding bold dart
  std::map<int, LeafSite> edge_sites;    // keyed by the dart at the tree side
  for (const Region& r : m.faces()) {
    if (r.id == bigon.id) continue;
    int corner = -1;
    for (int c : r.boundary)
      if (is_trivalent_black(m, m.vertex_of(c)) && (corner < 0 || c < corner))
        corner = c;
    if (corner < 0) throw std::logic_error("region without trivalent corner");
    LeafSite site;
    site.kind = (r.id < static_cast<int>(d_flags.size()) && d_flags[r.id])
                    ? FiberKind::D
                    : FiberKind::A;
    site.d = r.black_corners;
    site.multiplicity = fiber_multiplicity(site.kind, site.d);
    site.face_id = r.id;
    sector_sites.emplace(m.rotation_inv(corner), site);
  }
  for (int v = 0; v < m.vertex_count(); ++v) {
    if (is_trivalent_black(m, v)) continue;
    LeafSite site;
    site.vertex_id = v;
    if (m.color_of_vertex(v) == Color::White) {
      site.kind = FiberKind::E7White;
      site.d = 1;
    } else if (m.valency(v) % 3 == 1) {
      site.kind = FiberKind::E6Point;
      site.d = m.valency(v);
    } else {
      site.kind = FiberKind::E8Point;
      site.d = m.valency(v);
    }
    site.multiplicity = fiber_multiplicity(site.kind, site.d);
    int attach = m.pairing(m.darts_of_vertex(v)[0]);
    edge_sites.emplace(attach, site);
  }

  // Contour sweep, carrying the transport to the base.
  std::vector<LeafSite>& leaves = a.leaves;
  auto emit_region = [&](LeafSite site, int bold_dart, const Braid3& t) {
    // The sector after bold edge e_j carries the solid edge e'_{j-1}.
    int j = marked.index[bold_dart];
    site.approach_index = (j + 1) % 3 + 1;
    site.transport = t;
    Braid3 local = local_monodromy(site.kind, site.d, site.approach_index);
    site.monodromy = local.conjugated_by(t);
    leaves.push_back(std::move(site));
  };
  auto emit_edge = [&](LeafSite site, int bold_dart, const Braid3& t) {
    site.approach_index = marked.index[bold_dart];
    site.transport = t;
    Braid3 local = local_monodromy(site.kind, site.d, site.approach_index);
    site.monodromy = local.conjugated_by(t);
    leaves.push_back(std::move(site));
  };

  struct Walker {
    const CombMap& m;
    const MarkedMap& marked;
    const std::vector<int>& parent_dart;
    const std::vector<char>& tree_dart;
    std::map<int, LeafSite>& sector_sites;
    std::map<int, LeafSite>& edge_sites;
    decltype(emit_region)& do_region;
    decltype(emit_edge)& do_edge;

    void slot_bold(int d, const Braid3& t) {
      int e = m.pairing(d);
      int w = m.vertex_of(e);
      if (tree_dart[d] && parent_dart[w] == e) {
        Braid3 child_t =
            t * edge_transport(marked.index[e], marked.index[d]);
        visit(w, e, child_t);
      } else if (auto it = edge_sites.find(d); it != edge_sites.end()) {
        do_edge(it->second, d, t);
      }
    }
    void slot_sector(int d, const Braid3& t) {
      if (auto it = sector_sites.find(d); it != sector_sites.end())
        do_region(it->second, d, t);
    }
    // Sweep a vertex counterclockwise after arriving along dart `in`.
    void visit(int /*vertex*/, int in, const Braid3& t) {
      slot_sector(in, t);
      for (int d = m.rotation(in); d != in; d = m.rotation(d)) {
        slot_bold(d, t);
        slot_sector(d, t);
      }
    }
    // Root variant: the sweep starts after the solid edge to the
    // distinguished fiber, which lives in the sector following e2.
    void visit_root(int e2, const Braid3& t) {
      for (int d = m.rotation(e2); d != e2; d = m.rotation(d)) {
        slot_bold(d, t);
        slot_sector(d, t);
      }
      slot_bold(e2, t);
    }
  };

  Walker walker{m,          marked,     parent_dart, tree_dart,
                sector_sites, edge_sites, emit_region, emit_edge};
  walker.visit_root(m.rotation_inv(cv), Braid3());
  return a;
}

int default_omitted_leaf(const Assembly& a) {
  int best = -1, best_mult = -1;
  for (std::size_t i = 0; i < a.leaves.size(); ++i)
    if (a.leaves[i].multiplicity > best_mult) {
      best_mult = a.leaves[i].multiplicity;
      best = static_cast<int>(i);
    }
  return best;
}

FpPresentation presentation_from(const Assembly& a, int omit) {
  if (omit == -2) omit = default_omitted_leaf(a);
  FpPresentation p;
  p.ngens = 3;
  p.relators = a.package.relators_at_infinity;
  for (std::size_t i = 0; i < a.leaves.size(); ++i) {
    if (static_cast<int>(i) == omit) continue;
    for (FreeWord& r : braid_relators(a.leaves[i].monodromy))
      p.relators.push_back(std::move(r));
  }
  p.normalize();
  return p;
}

FpPresentation assemble_presentation(const SexticModel& model,
                                     const std::vector<char>& d_flags) {
  return presentation_from(assemble_monodromy(model, d_flags));
}

}  // namespace sextic
