#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nilspan/rootcore.hpp"
#include "nilspan/subspace.hpp"

namespace nilspan {

enum class FormKind {
  sl_R, su_star, su, so, sp_R, sp, so_star,
  e6_6, e6_2, e6_m14, e6_m26, e7_7, e7_m5, e7_m25, e8_8, e8_m24, f4_4, f4_m20, g2_2,
  sl_C, so_C, sp_C, e6_C, e7_C, e8_C, f4_C, g2_C,
};

// Unknown or out-of-range labels. hint() may name an isomorphic valid label.
class LabelError : public std::invalid_argument {
 public:
  LabelError(const std::string& what, std::string hint = {})
      : std::invalid_argument(hint.empty() ? what : what + " (" + hint + ")"), hint_(std::move(hint)) {}
  const std::string& hint() const { return hint_; }

 private:
  std::string hint_;
};

// A noncompact real form, or a complex simple Lie algebra viewed as real.
// Parameters are the displayed integers: sl(n,R) -> p=n, su*(2k) -> p=2k,
// so*(2n) -> p=2n, slC(n) -> p=n. Pairs (p,q) are stored with p >= q.
class RealFormLabel {
 public:
  static RealFormLabel make(FormKind kind, int p = 0, int q = 0);
  static RealFormLabel parse(std::string_view text);

  FormKind kind() const { return kind_; }
  int p() const { return p_; }
  int q() const { return q_; }

  bool is_complex() const;
  SimpleType underlying_type() const;
  // Complex labels map to the split real form of the same type.
  RealFormLabel split_form() const;
  std::string to_string() const;

  friend auto operator<=>(const RealFormLabel&, const RealFormLabel&) = default;

 private:
  RealFormLabel(FormKind k, int p, int q) : kind_(k), p_(p), q_(q) {}
  FormKind kind_;
  int p_;
  int q_;
};

struct SatakeDiagram {
  SimpleType type;
  std::vector<bool> black;
  std::vector<std::pair<int, int>> arrows;  // 0-based, first < second

  int white_orbit_count() const;
};

SatakeDiagram satake_diagram(const RealFormLabel& label);

// Zero on black nodes and equal across every arrow.
bool matches(const WeightedDiagram& d, const SatakeDiagram& s);
RationalSubspace matching_subspace(const SatakeDiagram& s);

// b-form subspace: matching and iota-fixed.
RationalSubspace b_subspace(const RealFormLabel& label);

// Every label with rank <= bound (complex labels included), then the
// exceptional real forms and exceptional complex labels. Order is stable.
std::vector<RealFormLabel> catalog(int rank_bound);

std::string satake_to_dot(const RealFormLabel& label);

}  // namespace nilspan
