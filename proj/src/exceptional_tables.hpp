#pragma once

#include <vector>

namespace nilspan::detail {

// Bala-Carter label and weights a_1..a_l, ordered by orbit dimension.
struct ExceptionalRow {
  const char* name;
  const char* weights;
};

const std::vector<ExceptionalRow>& g2_rows();
const std::vector<ExceptionalRow>& f4_rows();
const std::vector<ExceptionalRow>& e6_rows();
const std::vector<ExceptionalRow>& e7_rows();
const std::vector<ExceptionalRow>& e8_rows();

}  // namespace nilspan::detail
