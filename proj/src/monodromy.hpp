#ifndef SEXTIC_MONODROMY_HPP
#define SEXTIC_MONODROMY_HPP

#include <optional>
#include <string>
#include <vector>

#include "braid.hpp"
#include "fp_group.hpp"
#include "skeleton_enum.hpp"

namespace sextic {

// One non-distinguished singular fiber, with its monodromy transported to
// the reference basis at the base vertex.
struct LeafSite {
  FiberKind kind = FiberKind::A;
  int d = 0;            // region corner count (A/D) or vertex valency (E)
  int multiplicity = 0; // braid degree of the local monodromy
  int face_id = -1;     // for region fibers
  int vertex_id = -1;   // for triple-point / white fibers
  int approach_index = 0;
  Braid3 transport;     // from the attachment vertex to the base
  Braid3 monodromy;     // transported, full braid
};

struct Assembly {
  explicit Assembly(SexticModel m) : model(std::move(m)) {}

  SexticModel model;
  BranchChoice branch = BranchChoice::Alpha2;
  int base_vertex = -1;
  int base_corner_dart = -1;
  bool used_fallback = false;  // no trivalent corner on the bigon
  std::vector<LeafSite> leaves;  // in contour order around the base
  InfinityPackage package;

  Braid3 leaf_product() const;
  bool infinity_factorization_holds() const;
};

// Optional D-type flags, one entry per face id (empty = all A-type).
// base_corner forces the reference corner (a boundary dart of the bigon,
// -1 = lowest trivalent corner); marking_rotate cycles the index-1 choice
// at the non-base vertices, which must not change any monodromy.
Assembly assemble_monodromy(const SexticModel& model,
                            const std::vector<char>& d_flags = {},
                            int base_corner = -1, int marking_rotate = 0);

// Monodromy of the same fiber after replacing the local braid exponent;
// used when a region fiber is perturbed into smaller pieces.
Braid3 leaf_sub_braid(const LeafSite& leaf, int exponent);

// Relators of one braid relation m = id on the standard generators.
std::vector<FreeWord> braid_relators(const Braid3& m);

// Zariski-van Kampen presentation: infinity package plus the braid
// relations of every leaf except `omit` (-1 keeps all, -2 applies the
// default rule: drop a fiber of maximal multiplicity).
FpPresentation presentation_from(const Assembly& a, int omit = -2);

int default_omitted_leaf(const Assembly& a);

FpPresentation assemble_presentation(const SexticModel& model,
                                     const std::vector<char>& d_flags = {});

}  // namespace sextic

#endif
