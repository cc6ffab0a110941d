#include "doctest.h"

#include <vector>

#include "nilspan/subspace.hpp"

using namespace nilspan;

namespace {
RationalVector v(std::initializer_list<int> xs) { return to_rational(std::vector<int>(xs)); }
}  // namespace

TEST_CASE("row reduction normalizes pivots and drops zero rows") {
  std::vector<RationalVector> rows = {v({2, 4, 6}), v({1, 2, 3}), v({0, 3, 3})};
  auto piv = row_reduce(rows, 3);
  REQUIRE(rows.size() == 2);
  CHECK(piv == std::vector<std::size_t>{0, 1});
  CHECK(rows[0] == v({1, 0, 1}));
  CHECK(rows[1] == v({0, 1, 1}));
}

TEST_CASE("subspace equality does not depend on the spanning set") {
  std::vector<RationalVector> a = {v({1, 1, 0}), v({0, 1, 1})};
  std::vector<RationalVector> b = {v({1, 2, 1}), v({1, 0, -1}), v({2, 2, 0})};
  CHECK(RationalSubspace::span(3, a) == RationalSubspace::span(3, b));
}

TEST_CASE("kernel, annihilator and intersection") {
  std::vector<RationalVector> c = {v({1, 0, -1, 0})};
  auto k = RationalSubspace::kernel(4, c);
  CHECK(k.dimension() == 3);
  CHECK(k.contains(v({1, 5, 1, -2})));
  CHECK_FALSE(k.contains(v({1, 0, 0, 0})));
  CHECK(k.annihilator() == RationalSubspace::span(4, c));

  std::vector<RationalVector> xy = {v({1, 0, 0, 0}), v({0, 1, 0, 0})};
  std::vector<RationalVector> yz = {v({0, 1, 0, 0}), v({0, 0, 1, 0})};
  auto meet = RationalSubspace::span(4, xy).intersect(RationalSubspace::span(4, yz));
  CHECK(meet.dimension() == 1);
  CHECK(meet.contains(v({0, 7, 0, 0})));
}

TEST_CASE("extend reports growth") {
  RationalSubspace s(3);
  CHECK(s.extend(v({1, 2, 3})));
  CHECK_FALSE(s.extend(v({-2, -4, -6})));
  CHECK(s.extend(v({0, 0, 1})));
  CHECK(s.dimension() == 2);
  CHECK(RationalSubspace::full(3).contains(s));
}

TEST_CASE("rationals format exactly") {
  CHECK(format_rational(Rational(-1, 2)) == "-1/2");
  CHECK(format_rational(Rational(6, 3)) == "2");
}
