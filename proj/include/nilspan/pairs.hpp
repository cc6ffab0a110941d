#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nilspan {

// One row of the table of symmetric pairs (g, h) with simple g whose
// symmetric space admits a proper SL(2,R) action. g and h are patterns in
// the integer parameters k, m, n >= 1 (n >= 2), p, q >= 1, i, j >= 0.
struct SymmetricPairEntry {
  int row;                      // 1-based position in the table
  std::string g;                // "sl(n,R)"
  std::string h;                // "so(n-i,i)"; summands joined by " + "
  std::string constraint;       // "2i < n-1", empty if none
  std::string corrected_from;   // the earlier published form of a corrected row, else empty
};

const std::vector<SymmetricPairEntry>& proper_sl2_pairs();

struct PairMatch {
  const SymmetricPairEntry* entry;
  std::map<char, int> bindings;
};

// Full lookup: the row whose g and h patterns both fit and whose constraint
// holds. Labels use the usual grammar ("su(4,2)", "sl(2,C) + so(2)", "e6C").
// Throws std::invalid_argument on malformed input.
std::optional<PairMatch> lookup_pair(std::string_view g, std::string_view h);

// Rows whose g pattern fits; h parameters stay free.
std::vector<PairMatch> pairs_for_g(std::string_view g);

std::string pairs_to_json(const std::vector<const SymmetricPairEntry*>& rows);
std::string pairs_to_csv(const std::vector<const SymmetricPairEntry*>& rows);

}  // namespace nilspan
