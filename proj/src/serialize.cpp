#include "nilspan/serialize.hpp"

namespace nilspan {

Json rational_to_json(const Rational& x) {
  if (denominator(x) == 1 && abs(numerator(x)) < 1000000000) return static_cast<long long>(numerator(x));
  return format_rational(x);
}

Json weights_to_json(const WeightedDiagram& d) {
  Json out = Json::array();
  for (const auto& w : d.weights) out.push_back(rational_to_json(w));
  return out;
}

Json satake_to_json(const RealFormLabel& label) {
  const SatakeDiagram s = satake_diagram(label);
  Json j;
  j["label"] = label.to_string();
  j["type"] = s.type.name();
  j["rank"] = s.type.rank();
  Json black = Json::array();
  for (std::size_t i = 0; i < s.black.size(); ++i)
    if (s.black[i]) black.push_back(i + 1);
  j["black"] = black;
  Json arrows = Json::array();
  for (auto [a, b] : s.arrows) arrows.push_back({a + 1, b + 1});
  j["arrows"] = arrows;
  return j;
}

Json orbits_to_json(const std::vector<OrbitDiagram>& orbits) {
  Json out = Json::array();
  for (const auto& o : orbits) {
    Json j;
    j["label"] = o.label.to_string();
    j["weights"] = weights_to_json(o.diagram);
    out.push_back(j);
  }
  return out;
}

Json report_to_json(const VerificationReport& r, bool verbose) {
  const SimpleType t = r.label.underlying_type();
  Json j;
  j["label"] = r.label.to_string();
  j["type"] = t.name();
  j["rank"] = t.rank();
  j["dim_b"] = r.dim_b;
  j["dim_span"] = r.dim_span;
  j["theorem_holds"] = r.theorem_holds;
  j["easy_inclusion"] = r.easy_inclusion_holds;
  Json basis = Json::array();
  for (const auto& b : r.greedy_basis) basis.push_back(b.to_string());
  j["basis"] = basis;
  if (r.paper_basis_verified) j["paper_basis_verified"] = *r.paper_basis_verified;
  else j["paper_basis_verified"] = nullptr;
  if (verbose) j["matching_orbits"] = orbits_to_json(r.matching_orbits);
  return j;
}

Json witness_to_json(const ChevalleyModel& model, const TripleWitness& w) {
  auto root_key = [&](int k) {
    std::string s;
    for (int c : model.roots()[k]) {
      if (!s.empty()) s += ',';
      s += std::to_string(c);
    }
    return s;
  };
  auto root_part = [&](const RationalVector& v) {
    Json out = Json::object();
    for (std::size_t k = 0; k < model.roots().size(); ++k) {
      const auto& x = v[model.rank() + k];
      if (x != 0) out[root_key(static_cast<int>(k))] = rational_to_json(x);
    }
    return out;
  };
  Json j;
  j["H"] = weights_to_json(w.h_diagram);
  j["E"] = root_part(w.e);
  j["F"] = root_part(w.f);
  return j;
}

}  // namespace nilspan
