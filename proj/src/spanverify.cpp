#include "nilspan/spanverify.hpp"

#include <atomic>
#include <exception>
#include <thread>

namespace nilspan {

std::vector<OrbitDiagram> h_n_a_plus(const RealFormLabel& label) {
  const SatakeDiagram s = satake_diagram(label);
  std::vector<OrbitDiagram> out;
  for (const auto& o : enumerate_complex_characteristics(s.type))
    if (matches(o.diagram, s)) out.push_back(o);
  return out;
}

namespace {

bool iota_fixed(const WeightedDiagram& d, const DiagramInvolution& iota) {
  for (std::size_t i = 0; i < iota.image.size(); ++i)
    if (d.weights[i] != d.weights[iota.image[i]]) return false;
  return true;
}

}  // namespace

bool check_easy_inclusion(const RealFormLabel& label) {
  const auto iota = opposition_involution(build_root_system(label.underlying_type()));
  for (const auto& o : h_n_a_plus(label))
    if (!iota_fixed(o.diagram, iota)) return false;
  return true;
}

RationalSubspace span_of(std::span<const WeightedDiagram> diagrams) {
  if (diagrams.empty()) return RationalSubspace(0);
  const SimpleType t = diagrams.front().type;
  std::vector<RationalVector> rows;
  for (const auto& d : diagrams) {
    if (d.type != t) throw std::invalid_argument("span of diagrams of types " + t.name() + " and " + d.type.name());
    rows.push_back(d.weights);
  }
  return RationalSubspace::span(static_cast<std::size_t>(t.rank()), rows);
}

VerificationReport verify_theorem(const RealFormLabel& label) {
  VerificationReport r{label, h_n_a_plus(label), 0, 0, false, false, {}, std::nullopt};
  const SimpleType t = label.underlying_type();
  const RationalSubspace b = b_subspace(label);
  const auto iota = opposition_involution(build_root_system(t));
  r.dim_b = static_cast<int>(b.dimension());
  r.easy_inclusion_holds = true;
  for (const auto& o : r.matching_orbits)
    if (!iota_fixed(o.diagram, iota)) r.easy_inclusion_holds = false;

  // Greedy pass in canonical order. Once the span fills b and nothing lies
  // outside b, no later diagram can raise the dimension.
  RationalSubspace span(static_cast<std::size_t>(t.rank()));
  for (const auto& o : r.matching_orbits) {
    if (r.easy_inclusion_holds && span.dimension() == b.dimension()) break;
    if (span.extend(o.diagram.weights)) r.greedy_basis.push_back(o.label);
  }
  r.dim_span = static_cast<int>(span.dimension());
  r.theorem_holds = r.dim_span == r.dim_b && b.contains(span);
  r.paper_basis_verified = verify_paper_basis(label);
  return r;
}

bool verify_paper_basis(const RealFormLabel& label) {
  const SatakeDiagram s = satake_diagram(label);
  std::vector<WeightedDiagram> diagrams;
  for (const auto& name : paper_basis(label)) {
    const OrbitDiagram* found = nullptr;
    try {
      found = &find_orbit(s.type, name);
    } catch (const std::invalid_argument&) {
      return false;
    }
    if (!matches(found->diagram, s)) return false;
    for (const auto& w : found->diagram.weights)
      if (w != 0 && w != 2) return false;
    diagrams.push_back(found->diagram);
  }
  const RationalSubspace span = span_of(diagrams);
  const RationalSubspace b = b_subspace(label);
  return span.dimension() == diagrams.size() && span.dimension() == b.dimension() && b.contains(span);
}

std::vector<VerificationReport> verify_catalog(std::span<const RealFormLabel> labels, unsigned workers) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::optional<VerificationReport>> slots(labels.size());
  std::vector<std::exception_ptr> errors(labels.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < labels.size();) {
      try {
        slots[i] = verify_theorem(labels[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<VerificationReport> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace nilspan
