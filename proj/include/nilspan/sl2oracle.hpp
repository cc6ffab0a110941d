#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilspan/rootcore.hpp"

namespace nilspan {

// g_C with the Chevalley basis h_1..h_l, e_r for every root r.
// Basis index i < l is h_i; index l + k is e_{roots()[k]}, positive roots first.
class ChevalleyModel {
 public:
  static constexpr int default_rank_bound = 6;

  explicit ChevalleyModel(SimpleType t, int rank_bound = default_rank_bound);

  const RootSystem& root_system() const { return rs_; }
  int rank() const { return rs_.rank(); }
  std::size_t dimension() const { return static_cast<std::size_t>(rank()) + roots_.size(); }
  const std::vector<IntVector>& roots() const { return roots_; }
  // -1 if v is not a root.
  int root_index(const IntVector& v) const;
  // N_{r,s} with [e_r, e_s] = N_{r,s} e_{r+s}; 0 if r+s is not a root.
  int structure_constant(int r, int s) const { return n_[r][s]; }

  // Bracket of basis vectors as (index, coefficient) terms.
  std::vector<std::pair<int, int>> bracket_basis(int a, int b) const;
  RationalVector bracket(const RationalVector& x, const RationalVector& y) const;

  // Checks the Jacobi identity on every triple of basis vectors drawn from
  // `sample` (all basis vectors if empty).
  bool jacobi_holds(const std::vector<int>& sample = {}) const;

 private:
  RootSystem rs_;
  std::vector<IntVector> roots_;
  std::vector<std::vector<int>> n_;
  std::vector<int> negative_;  // index of -r
  std::vector<std::vector<int>> sum_;  // index of r+s or -1
};

struct TripleWitness {
  WeightedDiagram h_diagram;
  RationalVector h, e, f;  // full coordinate vectors in the model basis
};

struct CharacteristicResult {
  bool accepted = false;
  std::optional<TripleWitness> witness;
};

// Searches for E in g_2(H) and F in g_{-2}(H) with [E,F] = H, where H has
// the diagram d. A positive answer carries a witness; a negative one is
// probabilistic (random trials, then a {0,1}-coefficient sweep).
CharacteristicResult is_characteristic(const ChevalleyModel& model, const WeightedDiagram& d, int trials = 20,
                                       std::uint64_t seed = 0x5eed);

// [H,E] = 2E, [H,F] = -2F, [E,F] = H.
bool witness_holds(const ChevalleyModel& model, const TripleWitness& w);

}  // namespace nilspan
