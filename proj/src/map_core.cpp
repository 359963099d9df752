#include "map_core.hpp"

#include <algorithm>
#include <optional>
#include <map>
#include <sstream>

namespace sextic {

namespace {

void check_permutation(const std::vector<int>& perm, int n,
                       const std::string& name) {
  if (static_cast<int>(perm.size()) != n)
    throw MapError(MapErrorCode::NotPermutation, name + ": wrong size");
  std::vector<char> seen(n, 0);
  for (int v : perm) {
    if (v < 0 || v >= n)
      throw MapError(MapErrorCode::NotPermutation,
                     name + ": image out of range");
    if (seen[v])
      throw MapError(MapErrorCode::NotPermutation, name + ": not injective");
    seen[v] = 1;
  }
}

}  // namespace

CombMap::CombMap(int dart_count, std::vector<int> pairing,
                 std::vector<int> rotation, std::vector<Color> colors)
    : dart_count_(dart_count),
      pairing_(std::move(pairing)),
      rotation_(std::move(rotation)),
      colors_(std::move(colors)) {
  if (dart_count_ <= 0 || dart_count_ % 2 != 0)
    throw MapError(MapErrorCode::BadInput, "dart count must be positive even");
  check_permutation(pairing_, dart_count_, "edge_pairing");
  check_permutation(rotation_, dart_count_, "rotation");
  for (int d = 0; d < dart_count_; ++d) {
    if (pairing_[d] == d)
      throw MapError(MapErrorCode::FixedDart,
                     "edge_pairing fixes dart " + std::to_string(d));
    if (pairing_[pairing_[d]] != d)
      throw MapError(MapErrorCode::NotInvolution,
                     "edge_pairing is not an involution at dart " +
                         std::to_string(d));
  }

  rotation_inv_.assign(dart_count_, -1);
  for (int d = 0; d < dart_count_; ++d) rotation_inv_[rotation_[d]] = d;

  // Vertices: rotation cycles, ordered by smallest dart.
  dart_vertex_.assign(dart_count_, -1);
  for (int d = 0; d < dart_count_; ++d) {
    if (dart_vertex_[d] >= 0) continue;
    int v = static_cast<int>(vertex_darts_.size());
    vertex_darts_.emplace_back();
    int x = d;
    do {
      dart_vertex_[x] = v;
      vertex_darts_[v].push_back(x);
      x = rotation_[x];
    } while (x != d);
  }
  if (colors_.size() != vertex_darts_.size())
    throw MapError(MapErrorCode::BadInput,
                   "one color per vertex expected, got " +
                       std::to_string(colors_.size()) + " for " +
                       std::to_string(vertex_darts_.size()) + " vertices");

  // Connectivity over the orbit of <rotation, pairing>.
  std::vector<char> seen(dart_count_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 0;
  while (!stack.empty()) {
    int d = stack.back();
    stack.pop_back();
    ++reached;
    for (int nd : {rotation_[d], pairing_[d]}) {
      if (!seen[nd]) {
        seen[nd] = 1;
        stack.push_back(nd);
      }
    }
  }
  if (reached != dart_count_)
    throw MapError(MapErrorCode::Disconnected, "map is not connected");

  // Faces: cycles of rotation∘pairing, traversed counterclockwise.
  face_of_.assign(dart_count_, -1);
  for (int d = 0; d < dart_count_; ++d) {
    if (face_of_[d] >= 0) continue;
    Region r;
    r.id = static_cast<int>(faces_.size());
    int x = d;
    do {
      face_of_[x] = r.id;
      r.boundary.push_back(x);
      if (colors_[dart_vertex_[x]] == Color::Black) ++r.black_corners;
      x = rotation_[pairing_[x]];
    } while (x != d);
    faces_.push_back(std::move(r));
  }

  int euler = vertex_count() - edge_count() + static_cast<int>(faces_.size());
  if (euler != 2)
    throw MapError(MapErrorCode::NonPlanar,
                   "V-E+F = " + std::to_string(euler) + ", expected 2");
}

CombMap CombMap::mirror() const {
  return CombMap(dart_count_, pairing_, rotation_inv_, colors_);
}

CombMap build_map(int dart_count, const std::vector<int>& pairing,
                  const std::vector<int>& rotation,
                  const std::vector<Color>& colors) {
  return CombMap(dart_count, pairing, rotation, colors);
}

SkeletonReport validate_skeleton(const CombMap& map) {
  SkeletonReport rep;
  rep.is_valid = true;
  int parity_count = 0;
  for (int v = 0; v < map.vertex_count(); ++v) {
    int val = map.valency(v);
    if (map.color_of_vertex(v) == Color::Black) {
      rep.black_valencies.push_back(val);
      if (val < 1 || val > 3) {
        rep.is_valid = false;
        rep.reasons.push_back("ValencyExceeded: black vertex " +
                              std::to_string(v) + " has valency " +
                              std::to_string(val));
      } else {
        ++parity_count;          // every black counts once
        if (val == 2) ++parity_count;
        if (val % 3 != 0) rep.singular_blacks.push_back(v);
      }
    } else {
      rep.singular_whites.push_back(v);
      if (val != 1) {
        rep.is_valid = false;
        rep.reasons.push_back("WhiteValency: white vertex " +
                              std::to_string(v) + " has valency " +
                              std::to_string(val));
      } else {
        ++parity_count;
        int d = map.darts_of_vertex(v)[0];
        if (map.color_of_dart(map.pairing(d)) != Color::Black) {
          rep.is_valid = false;
          rep.reasons.push_back("WhiteNeighbor: white vertex " +
                                std::to_string(v) +
                                " is not attached to a black vertex");
        }
      }
    }
  }
  rep.t = static_cast<int>(rep.singular_blacks.size());
  if (rep.is_valid) {
    if (parity_count % 2 != 0) {
      rep.is_valid = false;
      rep.reasons.push_back("CountParity: vertex count identity violated");
    } else {
      rep.degree = 3 * parity_count / 2;
    }
  }
  return rep;
}

namespace {

// Propagate a dart bijection from root0 -> root1.  For the mirror case the
// image map has its rotation inverted, so we match rotation against
// rotation_inv of the target.
std::optional<std::vector<int>> extend_iso(const CombMap& a, const CombMap& b,
                                           int root_a, int root_b,
                                           bool reversing) {
  if (a.dart_count() != b.dart_count()) return std::nullopt;
  std::vector<int> img(a.dart_count(), -1);
  std::vector<int> stack{root_a};
  img[root_a] = root_b;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    int y = img[x];
    if (a.color_of_dart(x) != b.color_of_dart(y)) return std::nullopt;
    int rx = a.rotation(x);
    int ry = reversing ? b.rotation_inv(y) : b.rotation(y);
    if (img[rx] < 0) {
      img[rx] = ry;
      stack.push_back(rx);
    } else if (img[rx] != ry) {
      return std::nullopt;
    }
    int px = a.pairing(x);
    int py = b.pairing(y);
    if (img[px] < 0) {
      img[px] = py;
      stack.push_back(px);
    } else if (img[px] != py) {
      return std::nullopt;
    }
  }
  std::vector<char> hit(a.dart_count(), 0);
  for (int v : img) {
    if (v < 0 || hit[v]) return std::nullopt;
    hit[v] = 1;
  }
  return img;
}

}  // namespace

std::vector<std::vector<int>> automorphisms(const CombMap& map,
                                            Orientation orientation) {
  std::vector<std::vector<int>> out;
  bool rev = orientation == Orientation::Reversing;
  for (int d = 0; d < map.dart_count(); ++d) {
    auto img = extend_iso(map, map, 0, d, rev);
    if (img) out.push_back(std::move(*img));
  }
  return out;
}

std::string rooted_code(const CombMap& map, int root_dart) {
  int n = map.dart_count();
  std::vector<int> label(n, -1);
  std::vector<int> order;
  order.reserve(n);
  label[root_dart] = 0;
  order.push_back(root_dart);
  // Deterministic traversal: repeatedly extend by rotation, then pairing.
  for (std::size_t i = 0; i < order.size(); ++i) {
    int x = order[i];
    for (int nd : {map.rotation(x), map.pairing(x)}) {
      if (label[nd] < 0) {
        label[nd] = static_cast<int>(order.size());
        order.push_back(nd);
      }
    }
  }
  static const char* digits = "0123456789abcdefghijklmnopqrstuvwxyz";
  auto put = [&](std::string& s, int v) {
    s.push_back(digits[(v / 36) % 36]);
    s.push_back(digits[v % 36]);
  };
  std::string code;
  code.reserve(5 * n);
  for (int i = 0; i < n; ++i) {
    int x = order[i];
    put(code, label[map.rotation(x)]);
    put(code, label[map.pairing(x)]);
    code.push_back(map.color_of_dart(x) == Color::Black ? 'B' : 'W');
  }
  return code;
}

std::string canonical_code(const CombMap& map) {
  std::string best;
  for (int d = 0; d < map.dart_count(); ++d) {
    std::string c = rooted_code(map, d);
    if (best.empty() || c < best) best = std::move(c);
  }
  return best;
}

namespace {

[[noreturn]] void parse_fail(int line, const std::string& msg) {
  throw MapError(MapErrorCode::BadInput,
                 "line " + std::to_string(line) + ": " + msg);
}

}  // namespace

CombMap parse_skeleton_text(std::istream& in) {
  int dart_count = -1;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::pair<Color, std::vector<int>>> vertices;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "skeleton") {
      if (!(ls >> dart_count)) parse_fail(lineno, "expected dart count");
      if (dart_count <= 0 || dart_count % 2 != 0)
        parse_fail(lineno, "dart count must be positive and even");
    } else if (tok == "edge") {
      int a, b;
      if (!(ls >> a >> b)) parse_fail(lineno, "expected 'edge <a> <b>'");
      edges.emplace_back(a, b);
    } else if (tok == "vertex") {
      std::string colname;
      if (!(ls >> colname)) parse_fail(lineno, "expected vertex color");
      Color col;
      if (colname == "black")
        col = Color::Black;
      else if (colname == "white")
        col = Color::White;
      else
        parse_fail(lineno, "unknown color '" + colname + "'");
      std::vector<int> darts;
      int d;
      while (ls >> d) darts.push_back(d);
      if (darts.empty()) parse_fail(lineno, "vertex has no darts");
      vertices.emplace_back(col, std::move(darts));
    } else {
      parse_fail(lineno, "unknown directive '" + tok + "'");
    }
  }
  if (dart_count < 0)
    throw MapError(MapErrorCode::BadInput, "missing 'skeleton' header");

  std::vector<int> pairing(dart_count, -1);
  for (auto& [a, b] : edges) {
    if (a < 0 || a >= dart_count || b < 0 || b >= dart_count)
      throw MapError(MapErrorCode::BadInput, "edge dart out of range");
    if (a == b) throw MapError(MapErrorCode::FixedDart, "edge pairs a dart with itself");
    if (pairing[a] != -1 || pairing[b] != -1)
      throw MapError(MapErrorCode::BadInput,
                     "duplicate dart in edge list");
    pairing[a] = b;
    pairing[b] = a;
  }
  for (int d = 0; d < dart_count; ++d)
    if (pairing[d] < 0)
      throw MapError(MapErrorCode::BadInput,
                     "dart " + std::to_string(d) + " missing from edge list");

  std::vector<int> rotation(dart_count, -1);
  std::vector<char> used(dart_count, 0);
  // Colors are attached per rotation cycle ordered by smallest dart.
  std::vector<std::pair<int, Color>> cycle_colors;
  for (auto& [col, darts] : vertices) {
    int min_dart = dart_count;
    for (std::size_t i = 0; i < darts.size(); ++i) {
      int d = darts[i];
      if (d < 0 || d >= dart_count)
        throw MapError(MapErrorCode::BadInput, "vertex dart out of range");
      if (used[d])
        throw MapError(MapErrorCode::BadInput,
                       "duplicate dart in vertex list");
      used[d] = 1;
      rotation[d] = darts[(i + 1) % darts.size()];
      min_dart = std::min(min_dart, d);
    }
    cycle_colors.emplace_back(min_dart, col);
  }
  for (int d = 0; d < dart_count; ++d)
    if (!used[d])
      throw MapError(MapErrorCode::BadInput,
                     "dart " + std::to_string(d) + " missing from vertex lists");
  std::sort(cycle_colors.begin(), cycle_colors.end());
  std::vector<Color> colors;
  colors.reserve(cycle_colors.size());
  for (auto& [_, col] : cycle_colors) colors.push_back(col);
  return CombMap(dart_count, pairing, rotation, colors);
}

CombMap parse_skeleton_text(const std::string& text) {
  std::istringstream in(text);
  return parse_skeleton_text(in);
}

std::string write_skeleton_text(const CombMap& map) {
  // Relabel so that paired darts are consecutive: edge k gets darts 2k, 2k+1.
  int n = map.dart_count();
  std::vector<int> relabel(n, -1);
  int next = 0;
  for (int d = 0; d < n; ++d) {
    if (relabel[d] >= 0) continue;
    relabel[d] = next++;
    relabel[map.pairing(d)] = next++;
  }
  std::ostringstream out;
  out << "skeleton " << n << "\n";
  for (int d = 0; d < n; ++d)
    if (d < map.pairing(d))
      out << "edge " << relabel[d] << " " << relabel[map.pairing(d)] << "\n";
  for (int v = 0; v < map.vertex_count(); ++v) {
    out << "vertex "
        << (map.color_of_vertex(v) == Color::Black ? "black" : "white");
    for (int d : map.darts_of_vertex(v)) out << " " << relabel[d];
    out << "\n";
  }
  return out.str();
}

}  // namespace sextic
