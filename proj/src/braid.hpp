#ifndef SEXTIC_BRAID_HPP
#define SEXTIC_BRAID_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace sextic {

// Freely reduced word; letter k > 0 is the k-th generator, -k its inverse.
// Generators print as a1, a2, ... in the ASCII form `a1 a2^-1`.
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(std::vector<int> letters);
  static FreeWord gen(int k) { return FreeWord({k}); }

  const std::vector<int>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  FreeWord operator*(const FreeWord& o) const;
  FreeWord inverse() const;
  FreeWord conjugated_by(const FreeWord& u) const;  // u * w * u^-1
  FreeWord pow(int e) const;
  FreeWord cyclically_reduced() const;

  bool operator==(const FreeWord& o) const { return letters_ == o.letters_; }
  bool operator<(const FreeWord& o) const { return letters_ < o.letters_; }

  std::string str(char symbol = 'a') const;
  static FreeWord parse(const std::string& text, char symbol = 'a');

 private:
  std::vector<int> letters_;
};

// Element of the 3-strand braid group in (degree, reduced word) normal form.
// The reduced word lives in the quotient by the full twist, a free product
// of an order-2 and an order-3 factor, and is stored as an alternating
// syllable sequence.
class Braid3 {
 public:
  enum Syllable : std::uint8_t { X = 1, Y = 2, Y2 = 3 };

  Braid3() = default;

  // letters over s1, s2, s3 and inverses: +1,+2,+3,-1,-2,-3.
  // s3 is expanded as s1^-1 s2 s1 before anything else happens.
  static Braid3 from_letters(const std::vector<int>& letters);
  static Braid3 parse(const std::string& text);  // `s1 s2^-1 s1`

  int degree() const { return degree_; }
  const std::vector<std::uint8_t>& syllables() const { return syll_; }
  bool is_identity() const { return degree_ == 0 && syll_.empty(); }
  bool reduced_trivial() const { return syll_.empty(); }

  Braid3 operator*(const Braid3& o) const;
  Braid3 inverse() const;
  Braid3 pow(int e) const;
  Braid3 conjugated_by(const Braid3& u) const;  // u * b * u^-1

  bool operator==(const Braid3& o) const {
    return degree_ == o.degree_ && syll_ == o.syll_;
  }
  bool operator!=(const Braid3& o) const { return !(*this == o); }

  // True iff the two braids are conjugate in B3: equal degrees and
  // conjugate reduced parts in the free product.
  bool conjugate_to(const Braid3& o) const;

  // A word in s1, s2 representing this braid (exact, including degree).
  std::vector<int> representative_letters() const;

  std::string str() const;

 private:
  int degree_ = 0;
  std::vector<std::uint8_t> syll_;
  void append_syllable(std::uint8_t s);
};

// Left action on the free group <a1, a2, a3>:
//   s1: (a1,a2,a3) -> (a1 a2 a1^-1, a1, a3)
//   s2: (a1,a2,a3) -> (a1, a2 a3 a2^-1, a2)
// For a word b1 b2, b2 acts first.
FreeWord braid_act(const std::vector<int>& braid_letters, const FreeWord& w);
FreeWord braid_act(const Braid3& braid, const FreeWord& w);

Braid3 braid_normal_form(const std::vector<int>& letters);

inline FreeWord rho() { return FreeWord({1, 2, 3}); }

// Reduced transport along one skeleton edge whose marking indices at the two
// endpoints are `from_index` and `to_index` (values 1..3, taken mod 3):
//   [i,i+1] -> s_i,  [i+1,i] -> s_i^-1,  [i,i] -> s_i s_{i-1} s_i.
Braid3 edge_transport(int from_index, int to_index);

// Transport along a path of marked edges, each written as the pair of
// marking indices (at the start end, at the far end) in travel order.  The
// result of an open path is reduced; a closed loop is lifted to the full
// braid whose degree is the total multiplicity of the singular fibers it
// encompasses.  Throws "UnmarkedVertex" when an index is outside 1..3.
Braid3 transport(const std::vector<std::pair<int, int>>& edge_types);
Braid3 transport_loop(const std::vector<std::pair<int, int>>& edge_types,
                      int encompassed_multiplicity);

enum class FiberKind { A, D, E6Point, E8Point, E7White };

// Monodromy about a singular fiber in the canonical basis of an adjacent
// marked vertex.  For A/D fibers the approach runs along the solid edge
// e'_i (i = marking_index) into a region with d black corners:
//   A: s_{i+1}^d,   D: s_{i+1}^d (s1 s2)^3.
// For the triple-point fibers the approach runs along the bold edge of
// marking index i; the braid is the conjugated rotation power of matching
// multiplicity (degree 8 for an E6 point, 10 for E8, 9 for the second E7 of
// a split curve).  InvalidValency on d < 1.
Braid3 local_monodromy(FiberKind kind, int d, int marking_index);

namespace detail {
// Conjugator words for the triple-point monodromies, per approach index;
// pinned by the monodromy-at-infinity factorization tests.
const std::vector<int>& epoint_conjugator(FiberKind kind, int index);
}  // namespace detail

enum class EType { E6, E7, E8 };
enum class BranchChoice { Alpha2, Alpha3 };

struct InfinityPackage {
  EType e_type;
  BranchChoice branch = BranchChoice::Alpha2;
  std::vector<FreeWord> relators_at_infinity;
  Braid3 m_infinity;
  // For E6 the braid relations of m_infinity already follow from the single
  // relator; noted so downstream code does not add them twice.
  bool m_inf_relations_implied = false;
};

// E7 requires a branch choice; for E6/E8 the argument is ignored.
InfinityPackage infinity_package(EType e_type,
                                 BranchChoice branch = BranchChoice::Alpha2);

// Images of the Milnor-ball generators (c1, c2, c3) in the a-basis.
std::vector<FreeWord> inclusion_images(EType e_type);

// E7 only: images of the b-basis, which differs from (c1,c2,c3) by half the
// local monodromy; used for perturbation relators.
std::vector<FreeWord> e7_b_basis_images();

}  // namespace sextic

#endif
