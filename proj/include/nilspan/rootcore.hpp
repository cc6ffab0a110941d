#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nilspan/rational.hpp"
#include "nilspan/subspace.hpp"

namespace nilspan {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

// A complex simple Lie algebra type such as A5 or E8.
// Valid ranks: A>=1, B>=2, C>=2, D>=4, E in {6,7,8}, F4, G2.
class SimpleType {
 public:
  SimpleType(Family family, int rank);
  static SimpleType parse(std::string_view name);  // "E6", "D4", ...

  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::string name() const;

  friend auto operator<=>(const SimpleType&, const SimpleType&) = default;

 private:
  Family family_;
  int rank_;
};

using IntVector = std::vector<int>;
using IntMatrix = std::vector<IntVector>;

// Node order follows the usual pictures: A/B/C/D chains with the special end
// at the last node(s); D forks at a_{l-1}, a_l; E6 branch a6 on a3; E7 branch
// a7 on a4; E8 branch a8 on a5; F4 long a1,a2; G2 long a1.
// cartan[i][j] = <a_i, a_j^vee>.
IntMatrix cartan_matrix(SimpleType t);

struct RootSystem {
  SimpleType type;
  IntMatrix cartan;
  // (a_i, a_i)/2 normalized so the shortest simple root has 1.
  IntVector half_norms;
  // Positive roots in simple-root coordinates, sorted by height then lexicographically.
  std::vector<IntVector> positive_roots;

  int rank() const { return type.rank(); }
  // Inner product of two roots given in simple-root coordinates.
  long long inner(const IntVector& a, const IntVector& b) const;
  // <beta, a_j^vee> for beta in simple-root coordinates.
  int pairing(const IntVector& beta, int j) const;
  IntVector reflect(const IntVector& beta, int j) const;
};

RootSystem build_root_system(SimpleType t);

// A node permutation of order at most 2.
struct DiagramInvolution {
  std::vector<int> image;

  bool is_identity() const;
  // Pairs (i, image[i]) with i < image[i].
  std::vector<std::pair<int, int>> swapped_pairs() const;
  friend bool operator==(const DiagramInvolution&, const DiagramInvolution&) = default;
};

// iota = -w0 on the simple roots.
DiagramInvolution opposition_involution(const RootSystem& rs);

// Weight vectors fixed by iota.
RationalSubspace iota_fixed_subspace(const RootSystem& rs);

// A real-valued labelling of the nodes of one Dynkin diagram.
struct WeightedDiagram {
  SimpleType type;
  RationalVector weights;

  WeightedDiagram(SimpleType t, RationalVector w);
  WeightedDiagram(SimpleType t, const IntVector& w);

  // Integer view; throws if some weight is not an integer.
  IntVector integer_weights() const;
  // "2 0 2 0 2 0"
  std::string to_string() const;

  friend bool operator==(const WeightedDiagram&, const WeightedDiagram&) = default;
};

}  // namespace nilspan
