#ifndef SEXTIC_MAP_CORE_HPP
#define SEXTIC_MAP_CORE_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace sextic {

// Planar combinatorial map: darts 0..2E-1, a fixed-point-free edge
// involution, and a rotation permutation whose cycles are the vertices in
// counterclockwise order.  Vertices carry a black/white color.
//
// Faces are the cycles of rotation∘pairing; a map is accepted only if it is
// connected and satisfies V - E + F = 2 (sphere).

enum class Color : std::uint8_t { Black, White };

enum class MapErrorCode {
  NotInvolution,
  FixedDart,
  NotPermutation,
  Disconnected,
  NonPlanar,
  BadInput,
};

class MapError : public std::runtime_error {
 public:
  MapError(MapErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  MapErrorCode code() const { return code_; }

 private:
  MapErrorCode code_;
};

struct Region {
  int id = -1;
  std::vector<int> boundary;  // face cycle of darts, counterclockwise
  int black_corners = 0;
  bool d_type = false;  // fiber flag; default A-type
};

class CombMap {
 public:
  // rotation and pairing are permutations on 0..dart_count-1; colors has one
  // entry per rotation cycle, cycles ordered by their smallest dart.
  // Throws MapError if any invariant fails.
  CombMap(int dart_count, std::vector<int> pairing, std::vector<int> rotation,
          std::vector<Color> colors);

  int dart_count() const { return dart_count_; }
  int edge_count() const { return dart_count_ / 2; }
  int vertex_count() const { return static_cast<int>(vertex_darts_.size()); }

  int pairing(int d) const { return pairing_[d]; }
  int rotation(int d) const { return rotation_[d]; }
  int rotation_inv(int d) const { return rotation_inv_[d]; }
  int vertex_of(int d) const { return dart_vertex_[d]; }
  Color color_of_vertex(int v) const { return colors_[v]; }
  Color color_of_dart(int d) const { return colors_[dart_vertex_[d]]; }
  int valency(int v) const { return static_cast<int>(vertex_darts_[v].size()); }

  const std::vector<int>& darts_of_vertex(int v) const {
    return vertex_darts_[v];
  }

  const std::vector<Region>& faces() const { return faces_; }
  int face_of(int d) const { return face_of_[d]; }

  // Map with all rotations inverted: the mirror image.
  CombMap mirror() const;

  bool operator==(const CombMap& o) const {
    return dart_count_ == o.dart_count_ && pairing_ == o.pairing_ &&
           rotation_ == o.rotation_ && colors_ == o.colors_;
  }

 private:
  int dart_count_ = 0;
  std::vector<int> pairing_;
  std::vector<int> rotation_;
  std::vector<int> rotation_inv_;
  std::vector<int> dart_vertex_;
  std::vector<std::vector<int>> vertex_darts_;
  std::vector<Color> colors_;
  std::vector<Region> faces_;
  std::vector<int> face_of_;
};

CombMap build_map(int dart_count, const std::vector<int>& pairing,
                  const std::vector<int>& rotation,
                  const std::vector<Color>& colors);

struct SkeletonReport {
  bool is_valid = false;
  std::vector<std::string> reasons;
  std::vector<int> black_valencies;
  std::vector<int> singular_blacks;  // vertices with valency != 0 mod 3
  std::vector<int> singular_whites;  // white vertices (all stored whites)
  int degree = 0;                    // multiple of 3
  int t = 0;                         // singular black count
};

// Checks the skeleton conditions: connected, black valencies in {1,2,3},
// whites monovalent with a black neighbor.  Degree by the 3n/2 rule.
SkeletonReport validate_skeleton(const CombMap& map);

enum class Orientation { Preserving, Reversing };

// All color-preserving symmetries, as dart bijections.  For Reversing, the
// returned maps conjugate the rotation to its inverse.
std::vector<std::vector<int>> automorphisms(const CombMap& map,
                                            Orientation orientation);

// Complete invariant under orientation-preserving color-respecting
// isomorphism; stable under dart relabeling.
std::string canonical_code(const CombMap& map);

// Canonical labeling seeded at a distinguished dart.  Two (map, dart) pairs
// get equal codes iff an orientation-preserving isomorphism carries one
// root dart to the other.
std::string rooted_code(const CombMap& map, int root_dart);

// Skeleton text format.
//   skeleton <dart_count>
//   edge <a> <b>
//   vertex <black|white> <d0> <d1> ...
// '#' starts a comment.  Errors carry 1-based line numbers.
CombMap parse_skeleton_text(std::istream& in);
CombMap parse_skeleton_text(const std::string& text);
std::string write_skeleton_text(const CombMap& map);

}  // namespace sextic

#endif
