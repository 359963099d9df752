#ifndef SEXTIC_FP_GROUP_HPP
#define SEXTIC_FP_GROUP_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "braid.hpp"

namespace sextic {

using boost::multiprecision::cpp_int;
using IntMat = std::vector<std::vector<cpp_int>>;

struct FpPresentation {
  int ngens = 0;
  std::vector<FreeWord> relators;

  // Freely and cyclically reduce, drop empty relators, dedup.
  void normalize();

  std::string serialize() const;  // `gens n` + `rel <word>` lines
  static FpPresentation parse(const std::string& text);
};

struct CosetEnumOptions {
  std::size_t max_cosets = 2'000'000;
  enum class Strategy { RelatorFirst, RowFilling };
  Strategy strategy = Strategy::RelatorFirst;
};

// Compact coset table: rows are live cosets 0..coset_count-1, columns are
// generators and inverses.  Row 0 is the subgroup coset.
struct CosetTable {
  int ngens = 0;
  std::size_t coset_count = 0;
  std::vector<std::int32_t> tab;  // row-major, 2*ngens columns

  std::int32_t at(std::size_t coset, int gen) const {
    int col = gen > 0 ? 2 * (gen - 1) : 2 * (-gen - 1) + 1;
    return tab[coset * 2 * ngens + col];
  }
  std::size_t trace(std::size_t start, const FreeWord& w) const;
};

struct EnumResult {
  bool completed = false;
  std::size_t total_defined = 0;
  CosetTable table;  // valid only when completed
};

// Todd-Coxeter coset enumeration over the given subgroup generators.
// A result with completed == false means the bound was hit; that is
// inconclusive, not a proof of infinite index.
EnumResult coset_enumerate(const FpPresentation& p,
                           const std::vector<FreeWord>& subgroup_generators,
                           const CosetEnumOptions& opts = {});

// Verifies closure: every relator scans completely from every coset and
// every subgroup generator from coset 0.
bool table_is_closed(const CosetTable& t, const FpPresentation& p,
                     const std::vector<FreeWord>& subgroup_generators);

std::optional<std::size_t> group_order(const FpPresentation& p,
                                       const CosetEnumOptions& opts = {});

// Order of <word> in the group; both enumerations must complete.
std::optional<std::size_t> element_order(const FpPresentation& p,
                                         const FreeWord& word,
                                         const CosetEnumOptions& opts = {});

// Reidemeister-Schreier: presentation of the subgroup on Schreier
// generators, computed from a completed coset table.
FpPresentation subgroup_presentation(const FpPresentation& p,
                                     const CosetTable& table);

struct AbelianInvariants {
  std::vector<cpp_int> torsion;  // divisibility chain d1 | d2 | ..., each > 1
  int free_rank = 0;

  bool trivial() const { return torsion.empty() && free_rank == 0; }
  bool operator==(const AbelianInvariants& o) const {
    return torsion == o.torsion && free_rank == o.free_rank;
  }
  std::string str() const;
  // Primary decomposition into prime-power factors, e.g. Z6 -> [2, 3].
  std::vector<cpp_int> primary() const;
};

AbelianInvariants abelianization(const FpPresentation& p);

bool is_perfect(const FpPresentation& p);

struct SmithResult {
  IntMat d, u, v;  // u * a * v = d, with u, v unimodular
};

SmithResult smith_normal_form(const IntMat& a);

// Class-2 nilpotent quotient G/gamma_3(G).
struct Class2Data {
  AbelianInvariants abelianization;
  AbelianInvariants commutant;  // structure of [N, N]
  // pairing_order[i][j]: order of [a_i, a_j] in the commutant (0 = infinite);
  // index by generator, diagonal entries are 1.
  std::vector<std::vector<cpp_int>> pairing_order;
};

Class2Data class2_quotient(const FpPresentation& p);

// Element comparison via a completed table over the trivial subgroup.
inline bool words_equal_in_group(const CosetTable& regular, const FreeWord& a,
                                 const FreeWord& b) {
  return regular.trace(0, a) == regular.trace(0, b);
}

}  // namespace sextic

#endif
