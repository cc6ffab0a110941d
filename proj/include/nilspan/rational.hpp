#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace nilspan {

// Arbitrary-precision rational. Everything in this library is exact.
using Rational = boost::multiprecision::cpp_rational;
using RationalVector = std::vector<Rational>;

inline RationalVector to_rational(const std::vector<int>& v) {
  RationalVector out;
  out.reserve(v.size());
  for (int x : v) out.emplace_back(x);
  return out;
}

inline bool is_zero(const RationalVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

// "3", "-1/2"
std::string format_rational(const Rational& x);

// Reduced row-echelon form over the rationals; pivots normalized to 1,
// zero rows dropped. Returns the pivot column of each remaining row.
std::vector<std::size_t> row_reduce(std::vector<RationalVector>& rows, std::size_t columns);

}  // namespace nilspan
