#include "skeleton_enum.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace sextic {

namespace {

struct VertexSpec {
  int valency;
  Color color;
};

// Backtracking over edge pairings with a fixed standard rotation system.
// Vertices of equal (valency, color) that have no paired dart yet are
// interchangeable, so only the first fresh one of each class is tried.
class PairingSearch {
 public:
  PairingSearch(std::vector<VertexSpec> specs, bool forbid_white_white)
      : specs_(std::move(specs)), forbid_ww_(forbid_white_white) {
    int next = 0;
    for (std::size_t v = 0; v < specs_.size(); ++v) {
      first_dart_.push_back(next);
      for (int i = 0; i < specs_[v].valency; ++i) {
        dart_vertex_.push_back(static_cast<int>(v));
        ++next;
      }
    }
    n_ = next;
    pair_.assign(n_, -1);
    paired_count_.assign(specs_.size(), 0);
  }

  template <typename Fn>
  void run(Fn&& emit) {
    emit_ = [&](const std::vector<int>& pairing) { emit(pairing); };
    recurse();
  }

 private:
  std::vector<VertexSpec> specs_;
  bool forbid_ww_;
  int n_ = 0;
  std::vector<int> dart_vertex_, first_dart_, pair_;
  std::vector<int> paired_count_;
  std::function<void(const std::vector<int>&)> emit_;

  void recurse() {
    int d = -1;
    for (int i = 0; i < n_; ++i)
      if (pair_[i] < 0) {
        d = i;
        break;
      }
    if (d < 0) {
      emit_(pair_);
      return;
    }
    int vd = dart_vertex_[d];
    std::set<std::pair<int, int>> fresh_seen;
    for (int e = d + 1; e < n_; ++e) {
      if (pair_[e] >= 0) continue;
      int ve = dart_vertex_[e];
      if (forbid_ww_ && specs_[vd].color == Color::White &&
          specs_[ve].color == Color::White)
        continue;
      if (ve != vd && paired_count_[ve] == 0) {
        // Darts of a fresh vertex are interchangeable by a cyclic relabel.
        if (e != first_dart_[ve]) continue;
        auto cls = std::make_pair(specs_[ve].valency,
                                  static_cast<int>(specs_[ve].color));
        if (!fresh_seen.insert(cls).second) continue;
      }
      pair_[d] = e;
      pair_[e] = d;
      ++paired_count_[vd];
      ++paired_count_[ve];
      recurse();
      pair_[d] = -1;
      pair_[e] = -1;
      --paired_count_[vd];
      --paired_count_[ve];
    }
  }
};

std::vector<int> standard_rotation(const std::vector<VertexSpec>& specs) {
  std::vector<int> rot;
  int base = 0;
  for (const auto& s : specs) {
    for (int i = 0; i < s.valency; ++i)
      rot.push_back(base + (i + 1) % s.valency);
    base += s.valency;
  }
  return rot;
}

}  // namespace

std::vector<CombMap> enumerate_skeletons(const SkeletonEnumOptions& opts) {
  if (opts.degree > 9 || opts.degree < 3 || opts.degree % 3 != 0)
    throw std::invalid_argument("DegreeUnsupported: degree " +
                                std::to_string(opts.degree) +
                                " outside the validated range {3, 6, 9}");
  int count = 2 * opts.degree / 3;  // #black + #white(1) + #black(2)
  std::vector<CombMap> out;
  std::set<std::string> seen;

  // Vertex profiles: n1/n2 singular blacks of valency 1/2, n3 trivalent.
  for (int n1 = 0; n1 <= opts.singular_blacks; ++n1) {
    int n2 = opts.singular_blacks - n1;
    int n3 = count - n1 - 2 * n2 - opts.singular_whites;
    if (n3 < 0) continue;
    std::vector<VertexSpec> specs;
    for (int i = 0; i < n3; ++i) specs.push_back({3, Color::Black});
    for (int i = 0; i < n2; ++i) specs.push_back({2, Color::Black});
    for (int i = 0; i < n1; ++i) specs.push_back({1, Color::Black});
    for (int i = 0; i < opts.singular_whites; ++i)
      specs.push_back({1, Color::White});
    int darts = 0;
    for (const auto& s : specs) darts += s.valency;
    if (darts == 0 || darts % 2 != 0) continue;

    std::vector<int> rotation = standard_rotation(specs);
    std::vector<Color> colors;
    for (const auto& s : specs) colors.push_back(s.color);

    PairingSearch search(specs, /*forbid_white_white=*/true);
    search.run([&](const std::vector<int>& pairing) {
      try {
        CombMap m(darts, pairing, rotation, colors);
        SkeletonReport rep = validate_skeleton(m);
        if (!rep.is_valid || rep.degree != opts.degree) return;
        if (opts.require_no_splitting_marking) {
          if (rep.t > 0) return;  // markings are undefined with singular blacks
          if (admits_splitting_marking(m)) return;
        }
        std::string code = canonical_code(m);
        if (seen.insert(code).second) out.push_back(std::move(m));
      } catch (const MapError&) {
        // disconnected or nonplanar pairing; skip
      }
    });
  }
  std::sort(out.begin(), out.end(), [](const CombMap& a, const CombMap& b) {
    return canonical_code(a) < canonical_code(b);
  });
  return out;
}

namespace {

void search_markings(const CombMap& m, const std::vector<int>& tri_vertices,
                     std::size_t pos, Marking& marking,
                     std::vector<Marking>& out) {
  if (pos == tri_vertices.size()) {
    out.push_back(marking);
    return;
  }
  int v = tri_vertices[pos];
  const auto& darts = m.darts_of_vertex(v);
  for (int base = 0; base < 3; ++base) {
    // assign index 1 to darts[base], following the rotation for 2 and 3
    int d = darts[base];
    bool ok = true;
    for (int idx = 1; idx <= 3 && ok; ++idx) {
      marking[d] = idx;
      int e = m.pairing(d);
      Color ec = m.color_of_dart(e);
      if (ec == Color::White) {
        ok = idx == 1;
      } else if (marking[e] != 0) {
        ok = (idx + marking[e]) % 3 == 2 % 3;
      }
      d = m.rotation(d);
    }
    if (ok) search_markings(m, tri_vertices, pos + 1, marking, out);
    for (int dd : darts) marking[dd] = 0;
  }
}

}  // namespace

std::vector<Marking> find_splitting_markings(const CombMap& skeleton) {
  std::vector<int> tri;
  for (int v = 0; v < skeleton.vertex_count(); ++v) {
    if (skeleton.color_of_vertex(v) != Color::Black) continue;
    if (skeleton.valency(v) == 3)
      tri.push_back(v);
    else
      throw SingularBlackPresent();
  }
  std::vector<Marking> out;
  Marking marking(skeleton.dart_count(), 0);
  search_markings(skeleton, tri, 0, marking, out);
  return out;
}

bool admits_splitting_marking(const CombMap& skeleton) {
  return !find_splitting_markings(skeleton).empty();
}

InsertionResult insert_bigon(const CombMap& skeleton, int edge_dart) {
  if (edge_dart < 0 || edge_dart >= skeleton.dart_count())
    throw MapError(MapErrorCode::BadInput, "EdgeNotFound");
  int n = skeleton.dart_count();
  int d = edge_dart, db = skeleton.pairing(edge_dart);
  std::vector<int> pairing(n + 6), rotation(n + 6);
  for (int i = 0; i < n; ++i) {
    pairing[i] = skeleton.pairing(i);
    rotation[i] = skeleton.rotation(i);
  }
  int x1 = n, x2 = n + 1, x3 = n + 2, y1 = n + 3, y2 = n + 4, y3 = n + 5;
  pairing[d] = x1;
  pairing[x1] = d;
  pairing[db] = y1;
  pairing[y1] = db;
  pairing[x2] = y3;
  pairing[y3] = x2;
  pairing[x3] = y2;
  pairing[y2] = x3;
  rotation[x1] = x2;
  rotation[x2] = x3;
  rotation[x3] = x1;
  rotation[y1] = y2;
  rotation[y2] = y3;
  rotation[y3] = y1;
  std::vector<Color> colors;
  for (int v = 0; v < skeleton.vertex_count(); ++v)
    colors.push_back(skeleton.color_of_vertex(v));
  colors.push_back(Color::Black);
  colors.push_back(Color::Black);
  InsertionResult res{CombMap(n + 6, pairing, rotation, colors), x3, y3};
  return res;
}

std::optional<CombMap> remove_insertion(const CombMap& skeleton,
                                        int bigon_dart) {
  const Region& r = skeleton.faces()[skeleton.face_of(bigon_dart)];
  if (r.boundary.size() != 2) return std::nullopt;
  int a = r.boundary[0], b = r.boundary[1];
  int x = skeleton.vertex_of(a), y = skeleton.vertex_of(b);
  if (x == y) return std::nullopt;
  if (skeleton.valency(x) != 3 || skeleton.valency(y) != 3) return std::nullopt;
  if (skeleton.color_of_vertex(x) != Color::Black ||
      skeleton.color_of_vertex(y) != Color::Black)
    return std::nullopt;
  // The two corners must be joined by exactly two parallel edges; the third
  // darts reach the rest of the skeleton.
  int x_out = -1, y_out = -1, between = 0;
  for (int dd : skeleton.darts_of_vertex(x)) {
    if (skeleton.vertex_of(skeleton.pairing(dd)) == y)
      ++between;
    else
      x_out = dd;
  }
  for (int dd : skeleton.darts_of_vertex(y))
    if (skeleton.vertex_of(skeleton.pairing(dd)) != x) y_out = dd;
  if (between != 2 || x_out < 0 || y_out < 0) return std::nullopt;
  int d = skeleton.pairing(x_out), db = skeleton.pairing(y_out);

  // Drop the six darts of the insertion and relabel the rest compactly.
  std::vector<int> drop = skeleton.darts_of_vertex(x);
  for (int dd : skeleton.darts_of_vertex(y)) drop.push_back(dd);
  std::vector<int> relabel(skeleton.dart_count(), -1);
  int next = 0;
  for (int i = 0; i < skeleton.dart_count(); ++i)
    if (std::find(drop.begin(), drop.end(), i) == drop.end())
      relabel[i] = next++;
  std::vector<int> pairing(next), rotation(next);
  for (int i = 0; i < skeleton.dart_count(); ++i) {
    if (relabel[i] < 0) continue;
    int pi = skeleton.pairing(i);
    pairing[relabel[i]] = relabel[i == d ? db : (i == db ? d : pi)];
    rotation[relabel[i]] = relabel[skeleton.rotation(i)];
  }
  pairing[relabel[d]] = relabel[db];
  pairing[relabel[db]] = relabel[d];
  std::vector<Color> colors;
  for (int v = 0; v < skeleton.vertex_count(); ++v) {
    if (v == x || v == y) continue;
    colors.push_back(skeleton.color_of_vertex(v));
  }
  // Vertex order is preserved: cycles keep their smallest remaining dart
  // order because relabeling is monotone.
  return CombMap(next, pairing, rotation, colors);
}

std::string model_code(const SexticModel& m) {
  return rooted_code(m.map, m.branch_dart);
}

SexticModel mirrored_model(const SexticModel& m) {
  return SexticModel{m.map.mirror(), m.map.pairing(m.branch_dart), m.t};
}

bool model_is_real(const SexticModel& m) {
  return model_code(m) == model_code(mirrored_model(m));
}

std::vector<SexticModel> enumerate_e7_models() {
  std::vector<SexticModel> out;
  std::set<std::string> seen;
  for (int t = 0; t <= 2; ++t) {
    SkeletonEnumOptions opts;
    opts.degree = 9 - 3 * t;
    opts.singular_blacks = t;
    opts.singular_whites = 0;
    opts.require_no_splitting_marking = t == 0;
    for (const CombMap& sk : enumerate_skeletons(opts)) {
      for (const Region& r : sk.faces()) {
        if (r.black_corners != 2 || r.boundary.size() != 2) continue;
        for (int branch : r.boundary) {
          SexticModel model{sk, branch, t};
          if (seen.insert(model_code(model)).second)
            out.push_back(std::move(model));
        }
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const SexticModel& a, const SexticModel& b) {
              return model_code(a) < model_code(b);
            });
  return out;
}

}  // namespace sextic
