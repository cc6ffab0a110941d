#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "nilspan/nilorbits.hpp"
#include "nilspan/satake.hpp"
#include "nilspan/sl2oracle.hpp"
#include "nilspan/spanverify.hpp"

namespace nilspan {

using Json = nlohmann::ordered_json;

// Rationals serialize as integers when integral, else as "p/q" strings.
Json rational_to_json(const Rational& x);
Json weights_to_json(const WeightedDiagram& d);

// {type, rank, black, arrows}; nodes are 1-based.
Json satake_to_json(const RealFormLabel& label);

// [{label, weights}]
Json orbits_to_json(const std::vector<OrbitDiagram>& orbits);

// {label, type, rank, dim_b, dim_span, theorem_holds, easy_inclusion, basis,
// paper_basis_verified} plus matching_orbits when verbose.
Json report_to_json(const VerificationReport& r, bool verbose = false);

// {H, E, F}; root-vector coefficients keyed by root coordinates "1,0,-1".
Json witness_to_json(const ChevalleyModel& model, const TripleWitness& w);

}  // namespace nilspan
