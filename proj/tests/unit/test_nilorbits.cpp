#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "nilspan/nilorbits.hpp"
#include "support/bala_carter.hpp"
#include "support/oracles.hpp"

using namespace nilspan;

namespace {

std::vector<SimpleType> classical_types(int bound) {
  std::vector<SimpleType> out;
  for (int l = 1; l <= bound; ++l) out.emplace_back(Family::A, l);
  for (int l = 2; l <= bound; ++l) out.emplace_back(Family::B, l);
  for (int l = 2; l <= bound; ++l) out.emplace_back(Family::C, l);
  for (int l = 4; l <= bound; ++l) out.emplace_back(Family::D, l);
  return out;
}

std::vector<SimpleType> exceptional_types() {
  return {SimpleType(Family::G, 2), SimpleType(Family::F, 4), SimpleType(Family::E, 6), SimpleType(Family::E, 7),
          SimpleType(Family::E, 8)};
}

}  // namespace

TEST_CASE("partition text form") {
  const auto p = Partition::parse("[3^2,1^4]");
  CHECK(p.parts == std::vector<int>{3, 3, 1, 1, 1, 1});
  CHECK(p.to_string() == "[3^2,1^4]");
  CHECK(p.size() == 10);
  CHECK(p.multiplicity(1) == 4);
  CHECK(Partition::parse("[2^4]").all_even());
  CHECK(OrbitLabel::parse("[2^4]_II").tag == VeryEvenTag::II);
  CHECK(OrbitLabel::parse("E_8(a_1)").bala_carter == "E_8(a_1)");
  CHECK(Partition::parse("[1,3]").to_string() == "[3,1]");
  CHECK_THROWS(Partition::parse("[3,0]"));
  CHECK_THROWS(Partition::parse("[3,x]"));
}

TEST_CASE("Bala-Carter names normalize") {
  CHECK(normalize_bala_carter("\\tilde{A}_2") == normalize_bala_carter("~A_2"));
  CHECK(normalize_bala_carter("Ã_2") == normalize_bala_carter("~A_2"));
  CHECK(normalize_bala_carter("3A_1''") == normalize_bala_carter("(3A_1)''"));
  CHECK(normalize_bala_carter("E_8(a_1)") == normalize_bala_carter("E8(a1)"));
}

TEST_CASE("classical partitions agree with brute-force enumeration") {
  for (auto t : classical_types(12)) {
    CAPTURE(t.name());
    auto brute = oracle::brute_partitions(t);
    std::set<std::vector<int>> expected(brute.begin(), brute.end());
    std::set<std::vector<int>> got;
    for (const auto& p : classical_partitions(t)) got.insert(p.parts);
    CHECK(got == expected);

    const auto parts = classical_partitions(t);
    CHECK(std::is_sorted(parts.begin(), parts.end(), [](const Partition& a, const Partition& b) { return a > b; }));
  }
}

TEST_CASE("orbit count includes both very even classes in type D") {
  for (auto t : classical_types(12)) {
    CAPTURE(t.name());
    std::size_t very_even = 0;
    for (const auto& p : oracle::brute_partitions(t))
      if (t.family() == Family::D && std::all_of(p.begin(), p.end(), [](int x) { return x % 2 == 0; }))
        ++very_even;
    CHECK(enumerate_complex_characteristics(t).size() == oracle::brute_partitions(t).size() + very_even);
  }
}

TEST_CASE("characteristics are dominant, in {0,1,2} and distinct") {
  auto all = classical_types(12);
  for (auto t : exceptional_types()) all.push_back(t);
  for (auto t : all) {
    CAPTURE(t.name());
    std::set<IntVector> seen;
    for (const auto& o : enumerate_complex_characteristics(t)) {
      const auto w = o.diagram.integer_weights();
      for (int x : w) CHECK((x == 0 || x == 1 || x == 2));
      CHECK(seen.insert(w).second);
    }
  }
}

TEST_CASE("diagram orbit dimension matches the partition formula") {
  for (auto t : classical_types(10)) {
    CAPTURE(t.name());
    const auto rs = build_root_system(t);
    for (const auto& o : enumerate_complex_characteristics(t)) {
      CAPTURE(o.label.to_string());
      CHECK(oracle::orbit_dimension(rs, o.diagram.integer_weights()) ==
            oracle::partition_orbit_dimension(t, o.label.partition.parts));
    }
  }
}

TEST_CASE("very even tags swap the fork weights") {
  for (int l : {4, 6, 8, 10, 12}) {
    const SimpleType d(Family::D, l);
    for (const auto& p : classical_partitions(d)) {
      if (!p.all_even()) continue;
      const auto one = diagram_of_partition(d, p, VeryEvenTag::I).diagram.integer_weights();
      const auto two = diagram_of_partition(d, p, VeryEvenTag::II).diagram.integer_weights();
      CHECK(one[l - 2] == two[l - 1]);
      CHECK(one[l - 1] == two[l - 2]);
      CHECK(one != two);
      CHECK_THROWS(diagram_of_partition(d, p));
    }
  }
}

TEST_CASE("selected classical characteristics") {
  auto w = [](const char* type, const char* part, VeryEvenTag tag = VeryEvenTag::none) {
    return diagram_of_partition(SimpleType::parse(type), Partition::parse(part), tag).diagram.integer_weights();
  };
  CHECK(w("A3", "[4]") == IntVector{2, 2, 2});
  CHECK(w("A3", "[2,2]") == IntVector{0, 2, 0});
  CHECK(w("A5", "[2,1^4]") == IntVector{1, 0, 0, 0, 1});
  CHECK(w("B3", "[3,1^4]") == IntVector{2, 0, 0});
  CHECK(w("C3", "[2^3]") == IntVector{0, 0, 2});
  CHECK(w("D4", "[2^4]", VeryEvenTag::I) == IntVector{0, 0, 0, 2});
  CHECK(w("D4", "[3,1^5]") == IntVector{2, 0, 0, 0});
  CHECK(w("D4", "[7,1]") == IntVector{2, 2, 2, 2});
}

TEST_CASE("exceptional tables agree with the Levi-subalgebra generator") {
  for (auto t : exceptional_types()) {
    CAPTURE(t.name());
    const auto generated = oracle::bala_carter_orbits(t);
    const auto& table = exceptional_table(t);
    REQUIRE(table.size() == generated.size());
    for (std::size_t i = 0; i < table.size(); ++i) {
      CAPTURE(generated[i].name);
      CHECK(normalize_bala_carter(table[i].label.bala_carter) == normalize_bala_carter(generated[i].name));
      CHECK(table[i].diagram.integer_weights() == generated[i].weights);
    }
  }
}

TEST_CASE("exceptional table sizes") {
  CHECK(exceptional_table(SimpleType(Family::G, 2)).size() == 5);
  CHECK(exceptional_table(SimpleType(Family::F, 4)).size() == 16);
  CHECK(exceptional_table(SimpleType(Family::E, 6)).size() == 21);
  CHECK(exceptional_table(SimpleType(Family::E, 7)).size() == 45);
  CHECK(exceptional_table(SimpleType(Family::E, 8)).size() == 70);
}

TEST_CASE("selected exceptional rows") {
  auto w = [](const char* type, const char* name) {
    return find_orbit(SimpleType::parse(type), OrbitLabel::parse(name)).diagram.integer_weights();
  };
  CHECK(w("G2", "G_2(a_1)") == IntVector{2, 0});
  CHECK(w("E6", "2A_2") == IntVector{2, 0, 0, 0, 2, 0});
  CHECK(w("F4", "~A_2") == IntVector{0, 0, 0, 2});
  CHECK(w("E8", "E_8(a_1)") == IntVector{2, 2, 2, 2, 0, 2, 2, 2});
  CHECK(w("E7", "3A_1''") == IntVector{2, 0, 0, 0, 0, 0, 0});
  CHECK_THROWS(find_orbit(SimpleType::parse("E6"), OrbitLabel::parse("E_7")));
}
