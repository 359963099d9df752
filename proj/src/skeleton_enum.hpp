#ifndef SEXTIC_SKELETON_ENUM_HPP
#define SEXTIC_SKELETON_ENUM_HPP

#include <optional>
#include <string>
#include <vector>

#include "map_core.hpp"

namespace sextic {

struct SkeletonEnumOptions {
  int degree = 9;          // 3, 6 or 9
  int singular_blacks = 0; // exact count of valency-1/2 black vertices
  int singular_whites = 0; // exact count of monovalent white vertices
  bool require_no_splitting_marking = false;
};

// All skeletons matching the options, one representative per
// orientation-preserving isomorphism class, sorted by canonical code.
// Throws std::invalid_argument("DegreeUnsupported...") beyond degree 9.
std::vector<CombMap> enumerate_skeletons(const SkeletonEnumOptions& opts);

class SingularBlackPresent : public std::runtime_error {
 public:
  SingularBlackPresent() : std::runtime_error("SingularBlackPresent") {}
};

// dart -> index in 1..3 at trivalent black vertices, 0 elsewhere.  By
// convention index(rotation(d)) = index(d) + 1 mod 3.
using Marking = std::vector<int>;

// All markings in which every edge between trivalent vertices has type
// [1,1], [2,3] or [3,2] (equivalently the endpoint indices sum to 2 mod 3)
// and every edge into a singular white vertex has index 1 at its black end.
// A nonempty result certifies the curve is reducible.  Throws
// SingularBlackPresent if the skeleton has a singular black vertex.
std::vector<Marking> find_splitting_markings(const CombMap& skeleton);

bool admits_splitting_marking(const CombMap& skeleton);

struct InsertionResult {
  CombMap map;
  int bigon_dart_a = -1;  // the two boundary darts of the new bigon
  int bigon_dart_b = -1;
};

// Subdivides the edge of `edge_dart` by two trivalent black vertices joined
// by parallel edges; the new bigonal region's boundary darts are returned.
// Degree rises by exactly 3.
InsertionResult insert_bigon(const CombMap& skeleton, int edge_dart);

// Exact inverse of insert_bigon: collapses the bigon containing
// `bigon_dart` (its two corners must be trivalent, joined by a double edge)
// back to a single edge.  Returns std::nullopt if the region is not a
// removable insertion.
std::optional<CombMap> remove_insertion(const CombMap& skeleton,
                                        int bigon_dart);

// A decorated model: skeleton plus distinguished bigonal region and branch.
// The branch dart is one of the two boundary darts of the bigon; the region
// is recovered as the face containing it.
struct SexticModel {
  CombMap map;
  int branch_dart = -1;
  int t = 0;  // singular black count

  int bigon_face() const { return map.face_of(branch_dart); }
};

std::string model_code(const SexticModel& m);
SexticModel mirrored_model(const SexticModel& m);
bool model_is_real(const SexticModel& m);

// All decorated models with t in {0,1,2}, no singular whites, and (for t=0)
// no splitting marking; one representative per orientation-preserving
// isomorphism class, sorted by model code.
std::vector<SexticModel> enumerate_e7_models();

}  // namespace sextic

#endif
