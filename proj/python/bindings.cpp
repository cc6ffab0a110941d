#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "nilspan/nilorbits.hpp"
#include "nilspan/pairs.hpp"
#include "nilspan/rootcore.hpp"
#include "nilspan/satake.hpp"
#include "nilspan/serialize.hpp"
#include "nilspan/sl2oracle.hpp"
#include "nilspan/spanverify.hpp"

namespace py = pybind11;
using namespace nilspan;

namespace {

py::object to_python(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null: return py::none();
    case Json::value_t::boolean: return py::bool_(j.get<bool>());
    case Json::value_t::number_integer: return py::int_(j.get<long long>());
    case Json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
    case Json::value_t::number_float: return py::float_(j.get<double>());
    case Json::value_t::string: return py::str(j.get<std::string>());
    case Json::value_t::array: {
      py::list out;
      for (const auto& x : j) out.append(to_python(x));
      return out;
    }
    case Json::value_t::object: {
      py::dict out;
      for (const auto& [k, v] : j.items()) out[py::str(k)] = to_python(v);
      return out;
    }
    default: throw std::runtime_error("unsupported JSON value");
  }
}

py::object fraction(const Rational& x) {
  static py::object Fraction = py::module_::import("fractions").attr("Fraction");
  return Fraction(py::int_(py::str(numerator(x).str())), py::int_(py::str(denominator(x).str())));
}

py::list subspace_basis(const RationalSubspace& s) {
  py::list rows;
  for (const auto& v : s.basis()) {
    py::list row;
    for (const auto& x : v) row.append(fraction(x));
    rows.append(row);
  }
  return rows;
}

py::dict pair_match(const PairMatch& m) {
  py::dict d;
  d["row"] = m.entry->row;
  d["g"] = m.entry->g;
  d["h"] = m.entry->h;
  d["constraint"] = m.entry->constraint;
  py::dict b;
  for (auto [k, v] : m.bindings) b[py::str(std::string(1, k))] = v;
  d["bindings"] = b;
  return d;
}

}  // namespace

PYBIND11_MODULE(_nilspan, m) {
  m.doc() = "Hyperbolic orbits of real sl2 triples and the b-form span check";

  py::register_exception<LabelError>(m, "LabelError", PyExc_ValueError);

  m.def("normalize_label", [](const std::string& s) { return RealFormLabel::parse(s).to_string(); },
        py::arg("label"));

  m.def("catalog", [](int bound) {
    std::vector<std::string> out;
    for (const auto& l : catalog(bound)) out.push_back(l.to_string());
    return out;
  }, py::arg("bound") = 12);

  m.def("satake", [](const std::string& s) { return to_python(satake_to_json(RealFormLabel::parse(s))); },
        py::arg("label"));
  m.def("satake_dot", [](const std::string& s) { return satake_to_dot(RealFormLabel::parse(s)); },
        py::arg("label"));

  m.def("b_subspace", [](const std::string& s) { return subspace_basis(b_subspace(RealFormLabel::parse(s))); },
        py::arg("label"), "Row-reduced basis of b in weighted-diagram coordinates.");

  m.def("h_n_a_plus", [](const std::string& s) {
    return to_python(orbits_to_json(h_n_a_plus(RealFormLabel::parse(s))));
  }, py::arg("label"));

  m.def("verify", [](const std::string& s, bool verbose) {
    auto label = RealFormLabel::parse(s);
    Json j;
    {
      py::gil_scoped_release release;
      j = report_to_json(verify_theorem(label), verbose);
    }
    return to_python(j);
  }, py::arg("label"), py::arg("verbose") = false);

  m.def("verify_all", [](int bound, unsigned jobs) {
    auto labels = catalog(bound);
    std::vector<VerificationReport> reports;
    {
      py::gil_scoped_release release;
      reports = verify_catalog(labels, jobs);
    }
    py::list out;
    for (const auto& r : reports) out.append(to_python(report_to_json(r)));
    return out;
  }, py::arg("bound") = 12, py::arg("jobs") = 1);

  m.def("orbits", [](const std::string& type) {
    return to_python(orbits_to_json(enumerate_complex_characteristics(SimpleType::parse(type))));
  }, py::arg("type"));

  m.def("opposition_involution", [](const std::string& type) {
    return opposition_involution(build_root_system(SimpleType::parse(type))).image;
  }, py::arg("type"), "0-based image of each node under iota.");

  m.def("is_characteristic", [](const std::string& type, const std::vector<int>& weights, int trials) {
    SimpleType t = SimpleType::parse(type);
    ChevalleyModel model(t, 8);
    auto res = is_characteristic(model, WeightedDiagram(t, weights), trials);
    py::object witness = py::none();
    if (res.witness) witness = to_python(witness_to_json(model, *res.witness));
    return py::make_tuple(res.accepted, witness);
  }, py::arg("type"), py::arg("weights"), py::arg("trials") = 20);

  m.def("lookup_pair", [](const std::string& g, const std::string& h) -> py::object {
    auto match = lookup_pair(g, h);
    if (!match) return py::none();
    return pair_match(*match);
  }, py::arg("g"), py::arg("h"));

  m.def("proper_sl2_pairs", [] {
    py::list out;
    for (const auto& e : proper_sl2_pairs()) {
      py::dict d;
      d["row"] = e.row;
      d["g"] = e.g;
      d["h"] = e.h;
      d["constraint"] = e.constraint;
      d["corrected_from"] = e.corrected_from;
      out.append(d);
    }
    return out;
  });
}
