#pragma once

#include <optional>
#include <span>
#include <vector>

#include "nilspan/nilorbits.hpp"
#include "nilspan/satake.hpp"
#include "nilspan/subspace.hpp"

namespace nilspan {

struct VerificationReport {
  RealFormLabel label;
  std::vector<OrbitDiagram> matching_orbits;
  int dim_b = 0;
  int dim_span = 0;
  bool theorem_holds = false;
  bool easy_inclusion_holds = false;
  std::vector<OrbitLabel> greedy_basis;
  std::optional<bool> paper_basis_verified;
};

// Complex characteristics matching the label's Satake diagram, in canonical order.
std::vector<OrbitDiagram> h_n_a_plus(const RealFormLabel& label);

// Every matching characteristic is iota-fixed.
bool check_easy_inclusion(const RealFormLabel& label);

// Throws if the diagrams do not share one type.
RationalSubspace span_of(std::span<const WeightedDiagram> diagrams);

VerificationReport verify_theorem(const RealFormLabel& label);

// The basis listed for the label in the published tables.
std::vector<OrbitLabel> paper_basis(const RealFormLabel& label);

// Listed diagrams match, are independent, span b and have weights in {0,2}.
bool verify_paper_basis(const RealFormLabel& label);

// Literal transcription of the published b-form column.
RationalSubspace expected_b_form(const RealFormLabel& label);

// Reports in input order. workers == 0 picks the hardware concurrency.
std::vector<VerificationReport> verify_catalog(std::span<const RealFormLabel> labels, unsigned workers = 1);

}  // namespace nilspan
