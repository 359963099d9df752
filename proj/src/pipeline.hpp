#ifndef SEXTIC_PIPELINE_HPP
#define SEXTIC_PIPELINE_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fp_group.hpp"
#include "monodromy.hpp"
#include "skeleton_enum.hpp"

namespace sextic {

struct Singularity {
  char family;  // 'A', 'D', 'E'
  int index;
  int milnor() const { return index; }
  bool operator==(const Singularity& o) const {
    return family == o.family && index == o.index;
  }
};

struct SingularitySet {
  std::vector<Singularity> entries;  // distinguished E7 first, rest sorted
  int total_milnor() const;
  std::string str() const;  // e.g. "E7+2A4+2A2"
};

class BudgetError : public std::runtime_error {
 public:
  enum class Kind { Milnor, Multiplicity };
  BudgetError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Derives the sextic's singularities from a decorated model: the bigon is
// the E7 point, regions map through the fiber dictionary, singular blacks
// give E6/E8 points, singular whites a second E7.  Throws BudgetError when
// the Milnor total is not 19 or the fiber multiplicities do not sum to 18.
SingularitySet singularity_set(const SexticModel& model,
                               const std::vector<char>& d_flags = {});

// Admissibility filter for irreducible maximal sextics: no D_{2k} and at
// most one singularity from {A_odd, D_odd, E7} (the distinguished E7
// already uses up that slot).
bool sing_points_admissible(const SingularitySet& set);

struct MaximalityCertificate {
  bool maximal = false;
  int mu_bbar = 0;      // total Milnor number of the trigonal model
  int bound = 0;        // 5k - 2 - #unstable
  int unstable = 0;
  bool ncross_equality = false;  // the mu estimate is sharp
  bool k2_equality = false;      // black-vertex count identity
  bool k3_equality = false;      // white-vertex count identity
  std::string failing;
};

MaximalityCertificate check_maximality(const SexticModel& model,
                                       const std::vector<char>& d_flags = {});

struct DeformationCounts {
  std::string set;
  int n_r = 0;
  int n_c = 0;
  std::vector<std::string> model_codes;
};

std::vector<DeformationCounts> deformation_classes(
    const std::vector<SexticModel>& models);

struct ClassificationRow {
  int row = 0;
  std::string set;
  std::string figure;
  int n_r = 0;
  int n_c = 0;
  std::size_t group_order = 0;
  std::array<int, 3> s_perp{};  // static display data
  std::vector<std::string> model_codes;
};

struct ClassifyResult {
  std::vector<ClassificationRow> rows;
  int total_classes = 0;
  std::vector<SexticModel> models;
};

// Full classification pipeline for the E7 family.
ClassifyResult classify_e7(std::size_t max_cosets = 2'000'000);

// Static expectations: row order, figure tags and lattice data.
struct RowStatic {
  int row;
  const char* set;
  const char* figure;
  int n_r, n_c;
  std::size_t order;
  std::array<int, 3> s_perp;
};
const std::vector<RowStatic>& e7_row_table();

// Hand-recorded relator sets for each classification row, kept as an
// independent cross-check of the assembled presentations.  The alternate
// branch swaps the roles of a2 and a3 throughout.  Throws
// std::invalid_argument("UnknownRow...") outside 1..11.
// drop_triangle omits the redundant triangle relator of row 1.
FpPresentation row_relations(int row,
                             BranchChoice branch = BranchChoice::Alpha2,
                             bool drop_triangle = false);

struct Perturbation {
  std::string name;  // e.g. "A4+A2", "A1", "0" for full smoothing
  bool nonabelian = false;
  std::vector<FreeWord> local_relators;  // in the b-basis (letters 1..3)
};

// Proper perturbations of an E7 singular point: induced subgraphs of its
// Dynkin graph up to isomorphism, with the nonabelian ones carrying their
// local relation sets.
std::vector<Perturbation> enumerate_e7_perturbations();

// Group order after perturbing the E7 point of the given assembled model.
std::size_t perturb_e7_point(const Assembly& a, const Perturbation& pert,
                             std::size_t max_cosets = 2'000'000);

// Group order after perturbing one region fiber into pieces with the given
// local braid exponents (A_{k} piece -> exponent k+1, tangency -> 1).
std::size_t perturb_region(const Assembly& a, int leaf_index,
                           const std::vector<int>& exponents,
                           std::size_t max_cosets = 2'000'000);

// Proper perturbation classes of an A_{p} point as exponent multisets.
std::vector<std::vector<int>> a_point_perturbations(int p);

struct SplitFamily {
  SingularitySet set;
  std::string model_code;
  bool stem = false;  // a loop hangs next to the distinguished bigon
  AbelianInvariants h1;
  std::string degrees;  // component degree partition, e.g. "3+3"
  AbelianInvariants class2_commutant;
  cpp_int pairing12_order = 0;  // order of [a1, a2] in the class-2 commutant
};

// Reducible (splitting-marking) models satisfying both budgets, including
// D-flag variants and the second-E7 (singular white) family.
std::vector<SplitFamily> split_analysis();

}  // namespace sextic

#endif
