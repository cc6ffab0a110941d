#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nilspan/rootcore.hpp"

namespace nilspan {

// Weakly decreasing positive parts.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);
  // "[3,1^2]"; exponents are literal integers.
  static Partition parse(std::string_view text);

  int size() const;
  int multiplicity(int part) const;
  bool all_even() const;
  // "[3^2,1^4]"
  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
};

enum class VeryEvenTag { none, I, II };

struct OrbitLabel {
  Partition partition;     // classical types
  VeryEvenTag tag = VeryEvenTag::none;
  std::string bala_carter;  // exceptional types

  static OrbitLabel classical(Partition p, VeryEvenTag tag = VeryEvenTag::none);
  static OrbitLabel exceptional(std::string name);
  // "[2^4]_I", "[3,1]" or a Bala-Carter name.
  static OrbitLabel parse(std::string_view text);

  bool is_classical() const { return bala_carter.empty(); }
  std::string to_string() const;

  friend bool operator==(const OrbitLabel&, const OrbitLabel&) = default;
};

// Bala-Carter names compare after dropping '_', spaces, braces and outer
// parentheses before primes, and folding "Ã" / "\tilde" to '~'.
std::string normalize_bala_carter(std::string_view name);

struct OrbitDiagram {
  OrbitLabel label;
  WeightedDiagram diagram;
};

// Partitions for the type in descending lexicographic order.
std::vector<Partition> classical_partitions(SimpleType t);

OrbitDiagram diagram_of_partition(SimpleType t, const Partition& p, VeryEvenTag tag = VeryEvenTag::none);

// Full Bala-Carter table for G2, F4, E6, E7, E8.
const std::vector<OrbitDiagram>& exceptional_table(SimpleType t);

// Every complex nilpotent orbit of the type, in canonical order.
// Results are cached per type; the returned reference stays valid.
const std::vector<OrbitDiagram>& enumerate_complex_characteristics(SimpleType t);

// Looks up an orbit by label text ("[2^4]_I", "E_8(a_1)", "3A_1''").
const OrbitDiagram& find_orbit(SimpleType t, const OrbitLabel& label);

}  // namespace nilspan
