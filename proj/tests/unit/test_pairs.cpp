#include "doctest.h"

#include <stdexcept>
#include <string>

#include "nilspan/pairs.hpp"

using namespace nilspan;

TEST_CASE("the table has 45 rows and four corrected rows") {
  const auto& rows = proper_sl2_pairs();
  CHECK(rows.size() == 45);
  int corrected = 0;
  for (const auto& r : rows)
    if (!r.corrected_from.empty()) ++corrected;
  CHECK(corrected == 4);
}

TEST_CASE("corrected rows appear only in corrected form") {
  CHECK(lookup_pair("su(4,2)", "sp(2,1)").has_value());
  CHECK_FALSE(lookup_pair("sl(4,R)", "so(2,2)").has_value());
  CHECK_FALSE(lookup_pair("sl(5,R)", "so(3,2)").has_value());
  CHECK(lookup_pair("sl(5,R)", "so(4,1)").has_value());
  CHECK_FALSE(lookup_pair("so(4,4)", "so(8,C) + so(2)").has_value());
  CHECK(lookup_pair("so(4,4)", "so(4,C) + so(2)").has_value());
  CHECK(lookup_pair("su(2,2)", "so*(4)").has_value());
  CHECK(lookup_pair("su(4,4)", "so*(8)").has_value());
  CHECK(lookup_pair("slC(5)", "su(4,1)").has_value());
  CHECK_FALSE(lookup_pair("slC(5)", "so(4,1)").has_value());
}

TEST_CASE("bindings and summand order") {
  const auto m = lookup_pair("su(4,2)", "sp(2,1)");
  REQUIRE(m);
  CHECK(m->entry->row == 4);
  CHECK(m->bindings.at('p') == 2);
  CHECK(m->bindings.at('q') == 1);
  CHECK(lookup_pair("e7(7)", "su(2) + so*(12)").has_value());
  CHECK(lookup_pair("e6(2)", "so(2) + so*(10)").has_value());
}

TEST_CASE("split-form constraint") {
  // min{p,q} > min{i,j} + min{p-i,q-j}
  CHECK(lookup_pair("su(3,3)", "su(3,0) + su(0,3) + so(2)").has_value());
  CHECK(lookup_pair("su(3,3)", "su(2,1) + su(1,2) + so(2)").has_value());
  CHECK_FALSE(lookup_pair("su(3,3)", "su(2,2) + su(1,1) + so(2)").has_value());
}

TEST_CASE("queries by g") {
  CHECK(pairs_for_g("e8(8)").size() == 2);
  CHECK(pairs_for_g("e7(7)").size() == 4);
  CHECK_THROWS_AS(lookup_pair("nonsense(", "sp(2,1)"), std::invalid_argument);
}

TEST_CASE("serialized table") {
  std::vector<const SymmetricPairEntry*> rows;
  for (const auto& r : proper_sl2_pairs()) rows.push_back(&r);
  const auto csv = pairs_to_csv(rows);
  CHECK(csv.rfind("row,g,h,constraint,corrected_from\n", 0) == 0);
  const auto json = pairs_to_json(rows);
  CHECK(json.find("\"corrected_from\"") != std::string::npos);
}
