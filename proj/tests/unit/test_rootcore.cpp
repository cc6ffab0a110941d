#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "nilspan/rootcore.hpp"
#include "support/oracles.hpp"

using namespace nilspan;

namespace {

std::vector<SimpleType> types_up_to(int bound) {
  std::vector<SimpleType> out;
  for (int l = 1; l <= bound; ++l) out.emplace_back(Family::A, l);
  for (int l = 2; l <= bound; ++l) out.emplace_back(Family::B, l);
  for (int l = 2; l <= bound; ++l) out.emplace_back(Family::C, l);
  for (int l = 4; l <= bound; ++l) out.emplace_back(Family::D, l);
  for (int l : {6, 7, 8}) out.emplace_back(Family::E, l);
  out.emplace_back(Family::F, 4);
  out.emplace_back(Family::G, 2);
  return out;
}

int expected_positive_roots(SimpleType t) {
  const int l = t.rank();
  switch (t.family()) {
    case Family::A: return l * (l + 1) / 2;
    case Family::B:
    case Family::C: return l * l;
    case Family::D: return l * (l - 1);
    case Family::E: return l == 6 ? 36 : l == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return -1;
}

}  // namespace

TEST_CASE("type names parse and validate") {
  CHECK(SimpleType::parse("E6") == SimpleType(Family::E, 6));
  CHECK(SimpleType::parse("D12").name() == "D12");
  CHECK_THROWS_AS(SimpleType(Family::D, 3), std::invalid_argument);
  CHECK_THROWS_AS(SimpleType(Family::E, 9), std::invalid_argument);
  CHECK_THROWS_AS(SimpleType(Family::B, 1), std::invalid_argument);
  CHECK_THROWS_AS(SimpleType::parse("X3"), std::invalid_argument);
}

TEST_CASE("positive root counts match the classical formulas") {
  for (auto t : types_up_to(12)) {
    CAPTURE(t.name());
    const auto rs = build_root_system(t);
    CHECK(static_cast<int>(rs.positive_roots.size()) == expected_positive_roots(t));
    CHECK(oracle::longest_word_length(rs) == expected_positive_roots(t));
  }
}

TEST_CASE("root systems are closed under simple reflections") {
  for (auto t : types_up_to(6)) {
    CAPTURE(t.name());
    const auto rs = build_root_system(t);
    for (const auto& r : rs.positive_roots)
      for (int j = 0; j < rs.rank(); ++j) {
        auto s = rs.reflect(r, j);
        int height = 0;
        for (int x : s) height += x;
        const bool negative = height < 0;
        for (int& x : s)
          if (negative) x = -x;
        bool found = false;
        for (const auto& q : rs.positive_roots) found = found || q == s;
        CHECK(found);
      }
  }
}

TEST_CASE("Cartan orientation conventions") {
  // F4: a1, a2 long; G2: a1 long.
  CHECK(cartan_matrix(SimpleType(Family::G, 2)) == IntMatrix{{2, -3}, {-1, 2}});
  const auto f4 = cartan_matrix(SimpleType(Family::F, 4));
  CHECK(f4[1][2] == -2);
  CHECK(f4[2][1] == -1);
  const auto b3 = cartan_matrix(SimpleType(Family::B, 3));
  CHECK(b3[1][2] == -2);  // a3 short
  const auto c3 = cartan_matrix(SimpleType(Family::C, 3));
  CHECK(c3[2][1] == -2);  // a3 long
  const auto e6 = cartan_matrix(SimpleType(Family::E, 6));
  CHECK(e6[2][5] == -1);
  CHECK(e6[5][2] == -1);
  const auto e8 = cartan_matrix(SimpleType(Family::E, 8));
  CHECK(e8[4][7] == -1);
}

TEST_CASE("opposition involution agrees with the reduced-word oracle") {
  for (auto t : types_up_to(12)) {
    CAPTURE(t.name());
    const auto rs = build_root_system(t);
    CHECK(opposition_involution(rs).image == oracle::reduced_word_iota(rs));
  }
}

TEST_CASE("iota-fixed subspace dimension is the number of iota orbits") {
  for (auto t : types_up_to(9)) {
    CAPTURE(t.name());
    const auto rs = build_root_system(t);
    const auto iota = opposition_involution(rs);
    CHECK(static_cast<int>(iota_fixed_subspace(rs).dimension()) ==
          rs.rank() - static_cast<int>(iota.swapped_pairs().size()));
  }
}

TEST_CASE("weighted diagrams check their length") {
  const SimpleType a3(Family::A, 3);
  CHECK_THROWS_AS(WeightedDiagram(a3, IntVector{1, 2}), std::invalid_argument);
  WeightedDiagram d(a3, IntVector{2, 0, 2});
  CHECK(d.to_string() == "2 0 2");
  CHECK(d.integer_weights() == IntVector{2, 0, 2});
  WeightedDiagram half(a3, RationalVector{Rational(1, 2), 0, 0});
  CHECK_THROWS(half.integer_weights());
}
