#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "nilspan/rational.hpp"

namespace nilspan {

// A subspace of Q^n held in reduced row-echelon form. The canonical form is
// unique per subspace, so operator== is subspace equality.
class RationalSubspace {
 public:
  explicit RationalSubspace(std::size_t ambient_dimension = 0) : ambient_(ambient_dimension) {}

  static RationalSubspace span(std::size_t ambient_dimension, std::span<const RationalVector> vectors);
  static RationalSubspace full(std::size_t ambient_dimension);
  // {x : c . x = 0 for every c in constraints}
  static RationalSubspace kernel(std::size_t ambient_dimension,
                                 std::span<const RationalVector> constraints);

  std::size_t ambient_dimension() const { return ambient_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<RationalVector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const RationalVector& v) const;
  bool contains(const RationalSubspace& other) const;

  // Adds v to the span. Returns true iff the dimension grew.
  bool extend(const RationalVector& v);

  RationalSubspace intersect(const RationalSubspace& other) const;
  // The subspace of linear functionals vanishing on this one.
  RationalSubspace annihilator() const;

  std::string to_string() const;

  friend bool operator==(const RationalSubspace& a, const RationalSubspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  void check_length(const RationalVector& v) const;
  RationalVector reduce(RationalVector v) const;

  std::size_t ambient_;
  std::vector<RationalVector> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace nilspan
