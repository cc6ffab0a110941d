#include "nilspan/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "nilspan/pairs.hpp"
#include "nilspan/serialize.hpp"

namespace nilspan {

namespace {

struct FormPattern {
  const char* pattern;
  const char* constraint;
};

const std::vector<FormPattern>& form_patterns() {
  static const std::vector<FormPattern> patterns = {
      {"sl(n,R)", "n >= 2"},
      {"su*(2k)", "k >= 2"},
      {"su(p,q)", "p >= q >= 1"},
      {"so(p,q)", "p >= q >= 1, p+q = 5, 7 or >= 8 (so(2,1) = sl(2,R), so(3,1) = slC(2), so(3,3) = sl(4,R), "
                  "so(4,2) = su(2,2), so(5,1) = su*(4))"},
      {"sp(n,R)", "n >= 2 (sp(1,R) = sl(2,R))"},
      {"sp(p,q)", "p >= q >= 1"},
      {"so*(2n)", "n >= 4 (so*(6) = su(3,1))"},
      {"e6(6)", ""},  {"e6(2)", ""},  {"e6(-14)", ""}, {"e6(-26)", ""}, {"e7(7)", ""},
      {"e7(-5)", ""}, {"e7(-25)", ""}, {"e8(8)", ""},  {"e8(-24)", ""}, {"f4(4)", ""},
      {"f4(-20)", ""}, {"g2(2)", ""},
      {"slC(n)", "n >= 2, complex, treated as sl(n,R)"},
      {"soC(n)", "n = 5, 7 or >= 8, complex, treated as the split so"},
      {"spC(n)", "n >= 2, complex, treated as sp(n,R)"},
      {"e6C", "complex, treated as e6(6)"}, {"e7C", "complex, treated as e7(7)"},
      {"e8C", "complex, treated as e8(8)"}, {"f4C", "complex, treated as f4(4)"},
      {"g2C", "complex, treated as g2(2)"},
  };
  return patterns;
}

std::string join_labels(const std::vector<OrbitLabel>& labels) {
  std::string s;
  for (const auto& l : labels) {
    if (!s.empty()) s += ", ";
    s += l.to_string();
  }
  return s;
}

bool report_ok(const VerificationReport& r) {
  return r.theorem_holds && r.easy_inclusion_holds && r.paper_basis_verified.value_or(true);
}

std::string report_text(const VerificationReport& r, bool verbose) {
  std::ostringstream os;
  os << r.label.to_string() << " [" << r.label.underlying_type().name() << "]: dim_b=" << r.dim_b
     << " dim_span=" << r.dim_span << " theorem=" << (r.theorem_holds ? "holds" : "FAILS")
     << " easy_inclusion=" << (r.easy_inclusion_holds ? "holds" : "FAILS");
  if (r.paper_basis_verified) os << " published_basis=" << (*r.paper_basis_verified ? "verified" : "FAILS");
  os << "\n  basis: " << join_labels(r.greedy_basis) << "\n";
  if (verbose)
    for (const auto& o : r.matching_orbits) os << "    " << o.label.to_string() << "  " << o.diagram.to_string() << "\n";
  return os.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weighted Dynkin diagrams of nilpotent orbits against Satake diagrams.", "nilspan"};
  app.require_subcommand(1);
  std::string format = "text";
  std::string out_path;
  bool verbose = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "dot", "csv"}));
  app.add_option("--out", out_path, "Write output to this file instead of stdout");
  app.add_flag("-v,--verbose", verbose, "Include every matching diagram in reports");
  app.fallthrough();
  app.footer(
      "Labels: sl(n,R) su*(2k) su(p,q) so(p,q) sp(n,R) sp(p,q) so*(2n), e6(6) e6(2) e6(-14) e6(-26)\n"
      "e7(7) e7(-5) e7(-25) e8(8) e8(-24) f4(4) f4(-20) g2(2), and complex algebras slC(n) soC(n)\n"
      "spC(n) e6C e7C e8C f4C g2C. Exit status: 0 verified, 1 verification failed, 2 usage error.");

  auto* forms = app.add_subcommand("forms", "List the supported real form labels");
  std::string filter;
  forms->add_option("filter", filter, "Only patterns containing this text");

  auto* verify = app.add_subcommand("verify", "Check the span theorem for real forms");
  std::vector<std::string> labels;
  bool all = false;
  int bound = 12;
  unsigned jobs = 1;
  verify->add_option("labels", labels, "Real form labels");
  verify->add_flag("--all", all, "Every catalog label up to the rank bound");
  verify->add_option("--bound", bound, "Rank bound for --all")->check(CLI::Range(2, 40));
  verify->add_option("-j,--jobs", jobs, "Worker threads (0 = all cores)");

  auto* orbits = app.add_subcommand("orbits", "Matching characteristics of a real form");
  std::string orbit_label;
  orbits->add_option("label", orbit_label, "Real form label")->required();

  auto* render = app.add_subcommand("render", "Draw a Satake diagram");
  std::string render_label;
  render->add_option("label", render_label, "Real form label")->required();

  auto* pairs = app.add_subcommand("pairs", "Symmetric pairs with proper SL(2,R) actions");
  pairs->set_help_flag("--help", "Print this help message and exit");
  std::string pair_g, pair_h;
  pairs->add_option("--g", pair_g, "Simple algebra g, e.g. su(4,2)");
  pairs->add_option("--h", pair_h, "Subalgebra h, e.g. sp(2,1); requires --g");

  auto* characteristic = app.add_subcommand("characteristic", "Search an sl2-triple for a weighted diagram");
  std::string char_type;
  std::vector<int> char_weights;
  int trials = 20;
  int oracle_bound = ChevalleyModel::default_rank_bound;
  characteristic->add_option("type", char_type, "Simple type, e.g. G2")->required();
  characteristic->add_option("weights", char_weights, "Weights a_1 .. a_l")->required();
  characteristic->add_option("--trials", trials, "Random trials before the sweep")->check(CLI::NonNegativeNumber);
  characteristic->add_option("--rank-bound", oracle_bound, "Largest rank the oracle will build");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "nilspan: " << e.what() << "\n" << "Run with --help for usage.\n";
    return 2;
  }

  std::ostringstream buffer;
  int status = 0;
  auto usage = [&](const std::string& msg) {
    err << "nilspan: " << msg << "\n";
    return 2;
  };
  auto want = [&](std::initializer_list<const char*> allowed) {
    return std::any_of(allowed.begin(), allowed.end(), [&](const char* f) { return format == f; });
  };

  try {
    if (*forms) {
      if (!want({"text", "json"})) return usage("forms supports --format text or json");
      Json arr = Json::array();
      for (const auto& f : form_patterns()) {
        if (!filter.empty() && std::string(f.pattern).find(filter) == std::string::npos) continue;
        if (format == "json") arr.push_back({{"pattern", f.pattern}, {"constraint", f.constraint}});
        else buffer << f.pattern << (*f.constraint ? "  " : "") << f.constraint << "\n";
      }
      if (format == "json") buffer << arr.dump(2) << "\n";
    } else if (*verify) {
      if (!want({"text", "json"})) return usage("verify supports --format text or json");
      if (all == !labels.empty()) return usage("verify takes labels or --all");
      std::vector<RealFormLabel> todo;
      if (all) todo = catalog(bound);
      for (const auto& l : labels) todo.push_back(RealFormLabel::parse(l));
      for (const auto& r : verify_catalog(todo, jobs)) {
        if (!report_ok(r)) status = 1;
        if (format == "json") buffer << report_to_json(r, verbose).dump() << "\n";
        else buffer << report_text(r, verbose);
      }
    } else if (*orbits) {
      if (!want({"text", "json"})) return usage("orbits supports --format text or json");
      const RealFormLabel label = RealFormLabel::parse(orbit_label);
      const auto found = h_n_a_plus(label);
      if (format == "json") {
        buffer << orbits_to_json(found).dump(2) << "\n";
      } else {
        buffer << label.to_string() << " [" << label.underlying_type().name() << "], " << found.size()
               << " matching orbits\n";
        for (const auto& o : found) buffer << "  " << o.label.to_string() << "  " << o.diagram.to_string() << "\n";
      }
    } else if (*render) {
      const RealFormLabel label = RealFormLabel::parse(render_label);
      if (format == "json") buffer << satake_to_json(label).dump(2) << "\n";
      else if (format == "dot" || format == "text") buffer << satake_to_dot(label);
      else return usage("render supports --format dot or json");
    } else if (*pairs) {
      if (!want({"text", "json", "csv"})) return usage("pairs supports --format text, json or csv");
      if (!pair_h.empty() && pair_g.empty()) return usage("--h needs --g");
      std::vector<const SymmetricPairEntry*> rows;
      std::vector<std::map<char, int>> bindings;
      if (!pair_h.empty()) {
        if (auto m = lookup_pair(pair_g, pair_h)) {
          rows.push_back(m->entry);
          bindings.push_back(m->bindings);
        }
      } else if (!pair_g.empty()) {
        for (const auto& m : pairs_for_g(pair_g)) {
          rows.push_back(m.entry);
          bindings.push_back(m.bindings);
        }
      } else {
        for (const auto& e : proper_sl2_pairs()) rows.push_back(&e);
      }
      if (format == "json") {
        buffer << pairs_to_json(rows) << "\n";
      } else if (format == "csv") {
        buffer << pairs_to_csv(rows);
      } else {
        for (std::size_t k = 0; k < rows.size(); ++k) {
          const auto* e = rows[k];
          buffer << e->row << ". " << e->g << "  |  " << e->h;
          if (!e->constraint.empty()) buffer << "  (" << e->constraint << ")";
          if (k < bindings.size() && !bindings[k].empty()) {
            buffer << "  with";
            for (auto [v, x] : bindings[k]) buffer << " " << v << "=" << x;
          }
          buffer << "\n";
        }
        if (rows.empty()) buffer << "no matching row\n";
      }
    } else if (*characteristic) {
      if (!want({"text", "json"})) return usage("characteristic supports --format text or json");
      const SimpleType t = SimpleType::parse(char_type);
      const ChevalleyModel model(t, oracle_bound);
      const WeightedDiagram d(t, char_weights);
      const auto result = is_characteristic(model, d, trials);
      if (format == "json") {
        Json j;
        j["type"] = t.name();
        j["weights"] = weights_to_json(d);
        j["characteristic"] = result.accepted;
        j["witness"] = result.witness ? witness_to_json(model, *result.witness) : Json(nullptr);
        buffer << j.dump(2) << "\n";
      } else {
        buffer << t.name() << " (" << d.to_string() << "): "
               << (result.accepted ? "characteristic (witness found)" : "no sl2-triple found") << "\n";
        if (result.witness && verbose) buffer << witness_to_json(model, *result.witness).dump(2) << "\n";
      }
    }
  } catch (const std::invalid_argument& e) {
    return usage(e.what());
  } catch (const std::domain_error& e) {
    return usage(e.what());
  }

  if (out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) return usage("cannot write " + out_path);
    file << buffer.str();
  }
  return status;
}

}  // namespace nilspan
