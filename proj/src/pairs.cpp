#include "nilspan/pairs.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <functional>
#include <stdexcept>

#include "json.hpp"

namespace nilspan {

namespace {

using Bindings = std::map<char, int>;

// constant + sum coeff * var
struct Expr {
  int constant = 0;
  std::map<char, int> coeff;
};

struct Arg {
  char field = 0;  // 'R' or 'C'; 0 for an integer expression
  Expr expr;
};

struct Term {
  std::string head;
  std::vector<Arg> args;
};

std::string clean(std::string_view text) {
  std::string s;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c == 0xE2 && i + 2 < text.size()) {
      const auto c1 = static_cast<unsigned char>(text[i + 1]), c2 = static_cast<unsigned char>(text[i + 2]);
      if (c1 == 0x88 && c2 == 0x92) {  // minus sign
        s += '-';
        i += 2;
        continue;
      }
      if (c1 == 0x8A && c2 == 0x95) {  // circled plus
        s += '|';
        i += 2;
        continue;
      }
    }
    if (!std::isspace(c)) s += static_cast<char>(c);
  }
  return s;
}

Expr parse_expr(const std::string& s, std::string_view original) {
  Expr e;
  std::size_t i = 0;
  if (s.empty()) throw std::invalid_argument("empty parameter in '" + std::string(original) + "'");
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') sign = s[i++] == '-' ? -1 : 1;
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i - start > 6) throw std::invalid_argument("parameter out of range in '" + std::string(original) + "'");
    const bool has_number = i > start;
    const int number = has_number ? std::stoi(s.substr(start, i - start)) : 1;
    if (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) {
      e.coeff[s[i]] += sign * number;
      ++i;
    } else if (has_number) {
      e.constant += sign * number;
    } else {
      throw std::invalid_argument("bad parameter '" + s + "' in '" + std::string(original) + "'");
    }
  }
  return e;
}

// "so(4m-2i+1,C)", "slC(4)", "e6C", "sl(4)"; `patterns` allows variables.
Term parse_term(const std::string& s, std::string_view original, bool patterns) {
  Term t;
  const auto open = s.find('(');
  std::string head = s.substr(0, open);
  std::transform(head.begin(), head.end(), head.begin(), [](unsigned char c) { return std::tolower(c); });
  bool complex_suffix = false;
  if (head.size() > 1 && head.back() == 'c' && head != "c") {
    complex_suffix = true;
    head.pop_back();
  }
  t.head = head;
  if (open != std::string::npos) {
    if (s.back() != ')') throw std::invalid_argument("unbalanced parentheses in '" + std::string(original) + "'");
    const std::string inner = s.substr(open + 1, s.size() - open - 2);
    std::size_t start = 0;
    for (;;) {
      const auto comma = inner.find(',', start);
      std::string piece = inner.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      Arg a;
      if (piece == "R" || piece == "r" || piece == "C" || piece == "c") {
        a.field = static_cast<char>(std::toupper(static_cast<unsigned char>(piece[0])));
      } else {
        a.expr = parse_expr(piece, original);
        if (!patterns && !a.expr.coeff.empty())
          throw std::invalid_argument("labels take integer parameters: '" + std::string(original) + "'");
      }
      t.args.push_back(a);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  if (complex_suffix) t.args.push_back(Arg{'C', {}});
  static const std::vector<std::string> heads = {"sl", "su", "su*", "so", "so*", "sp", "e6", "e7", "e8", "f4", "g2"};
  if (std::find(heads.begin(), heads.end(), t.head) == heads.end())
    throw std::invalid_argument("unknown algebra '" + s + "' in '" + std::string(original) + "'");
  // sl(n) means sl(n,R)
  if (t.head == "sl" && t.args.size() == 1 && !t.args[0].field) t.args.push_back(Arg{'R', {}});
  return t;
}

std::vector<Term> parse_sum(std::string_view text, bool patterns) {
  std::string s = clean(text);
  std::vector<Term> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i < s.size() && s[i] == '(') ++depth;
    if (i < s.size() && s[i] == ')') --depth;
    if (i == s.size() || (depth == 0 && (s[i] == '+' || s[i] == '|'))) {
      if (i == start) throw std::invalid_argument("empty summand in '" + std::string(text) + "'");
      out.push_back(parse_term(s.substr(start, i - start), text, patterns));
      start = i + 1;
    }
  }
  if (depth != 0) throw std::invalid_argument("unbalanced parentheses in '" + std::string(text) + "'");
  return out;
}

struct Equation {
  Expr lhs;
  int value;
};

bool solve(std::vector<Equation> eqs, Bindings& b) {
  for (bool progress = true; progress;) {
    progress = false;
    for (const auto& eq : eqs) {
      int rest = eq.lhs.constant;
      char unknown = 0;
      int unknowns = 0, c = 0;
      for (auto [v, k] : eq.lhs.coeff) {
        if (k == 0) continue;
        if (auto it = b.find(v); it != b.end()) {
          rest += k * it->second;
        } else {
          ++unknowns;
          unknown = v;
          c = k;
        }
      }
      if (unknowns == 0 && rest != eq.value) return false;
      if (unknowns == 1) {
        if ((eq.value - rest) % c) return false;
        b[unknown] = (eq.value - rest) / c;
        progress = true;
      }
    }
  }
  for (const auto& eq : eqs) {
    int total = eq.lhs.constant;
    for (auto [v, k] : eq.lhs.coeff) {
      if (k == 0) continue;
      if (!b.count(v)) return false;
      total += k * b.at(v);
    }
    if (total != eq.value) return false;
  }
  return true;
}

bool domain_ok(const Bindings& b) {
  for (auto [v, x] : b) {
    const int lo = v == 'n' ? 2 : (v == 'i' || v == 'j') ? 0 : 1;
    if (x < lo) return false;
  }
  return true;
}

// Adds equations for pattern term vs concrete term; false if shapes differ.
bool unify(const Term& pattern, const Term& concrete, bool swap, std::vector<Equation>& eqs) {
  if (pattern.head != concrete.head || pattern.args.size() != concrete.args.size()) return false;
  for (std::size_t a = 0; a < pattern.args.size(); ++a) {
    const Arg& pa = pattern.args[a];
    const Arg& ca = concrete.args[swap ? pattern.args.size() - 1 - a : a];
    if (pa.field != ca.field) return false;
    if (pa.field) continue;
    if (ca.expr.constant < 0 && !pa.expr.coeff.empty()) return false;
    eqs.push_back({pa.expr, ca.expr.constant});
  }
  return true;
}

bool swappable(const Term& t) {
  return (t.head == "su" || t.head == "so" || t.head == "sp") && t.args.size() == 2 && !t.args[0].field &&
         !t.args[1].field;
}

// Every assignment of concrete summands to pattern summands.
bool match_terms(const std::vector<Term>& pattern, const std::vector<Term>& concrete, std::vector<Equation> eqs,
                 Bindings& out) {
  if (pattern.size() != concrete.size()) return false;
  std::vector<std::size_t> order(concrete.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  do {
    const std::size_t n = pattern.size();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<Equation> all = eqs;
      bool ok = true;
      for (std::size_t k = 0; k < n && ok; ++k) {
        const Term& c = concrete[order[k]];
        const bool swap = mask >> k & 1;
        if (swap && !swappable(c)) ok = false;
        else ok = unify(pattern[k], c, swap, all);
      }
      if (!ok) continue;
      Bindings b;
      if (solve(all, b) && domain_ok(b)) {
        out = b;
        return true;
      }
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

struct Row {
  SymmetricPairEntry entry;
  std::vector<Term> g, h;
  std::function<bool(const Bindings&)> holds;
};

int min2(int a, int b) { return std::min(a, b); }

const std::vector<Row>& rows() {
  using B = const Bindings&;
  auto none = [](B) { return true; };
  auto split_min = [](B b) {
    const int p = b.at('p'), q = b.at('q'), i = b.at('i'), j = b.at('j');
    return min2(p, q) > min2(i, j) + min2(p - i, q - j);
  };
  struct Spec {
    const char* g;
    const char* h;
    const char* constraint;
    std::function<bool(B)> holds;
    const char* corrected_from;
  };
  static const std::vector<Row> table = [&] {
    const std::vector<Spec> specs = {
        {"sl(2k,R)", "sl(k,C) + so(2)", "", none, ""},
        {"sl(n,R)", "so(n-i,i)", "2i < n-1", [](B b) { return 2 * b.at('i') < b.at('n') - 1; },
         "(sl(n,R), so(n-i,i)) for 2i < n"},
        {"su*(2k)", "sp(k-i,i)", "2i < k-1", [](B b) { return 2 * b.at('i') < b.at('k') - 1; }, ""},
        {"su(2p,2q)", "sp(p,q)", "", none, ""},
        {"su(n,n)", "so*(2n)", "", none, "(su(2m-1,2m-1), so*(4m-2))"},
        {"su(p,q)", "su(i,j) + su(p-i,q-j) + so(2)", "min{p,q} > min{i,j} + min{p-i,q-j}", split_min, ""},
        {"so(p,q)", "so(i,j) + so(p-i,q-j)", "p+q odd; min{p,q} > min{i,j} + min{p-i,q-j}",
         [=](B b) { return (b.at('p') + b.at('q')) % 2 == 1 && split_min(b); }, ""},
        {"sp(n,R)", "su(n-i,i) + so(2)", "", none, ""},
        {"sp(2k,R)", "sp(k,C)", "", none, ""},
        {"sp(p,q)", "sp(i,j) + sp(p-i,q-j)", "min{p,q} > min{i,j} + min{p-i,q-j}", split_min, ""},
        {"so(p,q)", "so(i,j) + so(p-i,q-j)",
         "p+q even; min{p,q} > min{i,j} + min{p-i,q-j} unless p=q=2m+1 and |i-j|=1",
         [=](B b) {
           const int p = b.at('p'), q = b.at('q'), i = b.at('i'), j = b.at('j');
           if ((p + q) % 2) return false;
           if (p == q && p % 2 == 1 && std::abs(i - j) == 1) return false;
           return split_min(b);
         },
         ""},
        {"so(2p,2q)", "su(p,q) + so(2)", "", none, ""},
        {"so*(2k)", "su(k-i,i) + so(2)", "2i < k-1", [](B b) { return 2 * b.at('i') < b.at('k') - 1; }, ""},
        {"so(k,k)", "so(k,C) + so(2)", "", none, "(so(k,k), so(2k,C) + so(2))"},
        {"so*(4m)", "so*(4m-4i+2) + so*(4i-2)", "", none, ""},
        {"e6(6)", "sp(2,2)", "", none, ""},
        {"e6(6)", "su*(6) + su(2)", "", none, ""},
        {"e6(2)", "so*(10) + so(2)", "", none, ""},
        {"e6(2)", "su(4,2) + su(2)", "", none, ""},
        {"e6(2)", "sp(3,1)", "", none, ""},
        {"e6(-14)", "f4(-20)", "", none, ""},
        {"e7(7)", "e6(2) + so(2)", "", none, ""},
        {"e7(7)", "su(4,4)", "", none, ""},
        {"e7(7)", "so*(12) + su(2)", "", none, ""},
        {"e7(7)", "su*(8)", "", none, ""},
        {"e7(-5)", "e6(-14) + so(2)", "", none, ""},
        {"e7(-5)", "su(6,2)", "", none, ""},
        {"e7(-25)", "e6(-14) + so(2)", "", none, ""},
        {"e7(-25)", "su(6,2)", "", none, ""},
        {"e8(8)", "e7(-5) + su(2)", "", none, ""},
        {"e8(8)", "so*(16)", "", none, ""},
        {"f4(4)", "sp(2,1) + su(2)", "", none, ""},
        {"sl(2k,C)", "su*(2k)", "", none, ""},
        {"sl(n,C)", "su(n-i,i)", "2i < n-1", [](B b) { return 2 * b.at('i') < b.at('n') - 1; },
         "(sl(n,C), so(n-i,i)) for 2i < n"},
        {"so(2k+1,C)", "so(2k+1-i,i)", "i < k", [](B b) { return b.at('i') < b.at('k'); }, ""},
        {"sp(n,C)", "sp(n-i,i)", "", none, ""},
        {"so(2k,C)", "so(2k-i,i)", "i < k unless k = i+1 is odd",
         [](B b) {
           const int k = b.at('k'), i = b.at('i');
           return i < k && !(k == i + 1 && k % 2 == 1);
         },
         ""},
        {"so(4m,C)", "so(4m-2i+1,C) + so(2i-1,C)", "", none, ""},
        {"so(2k,C)", "so*(2k)", "", none, ""},
        {"e6(C)", "e6(-14)", "", none, ""},
        {"e6(C)", "e6(-26)", "", none, ""},
        {"e7(C)", "e7(-5)", "", none, ""},
        {"e7(C)", "e7(-25)", "", none, ""},
        {"e8(C)", "e8(-24)", "", none, ""},
        {"f4(C)", "f4(-20)", "", none, ""},
    };
    std::vector<Row> out;
    int n = 0;
    for (const auto& s : specs)
      out.push_back(Row{{++n, s.g, s.h, s.constraint, s.corrected_from}, parse_sum(s.g, true), parse_sum(s.h, true), s.holds});
    return out;
  }();
  return table;
}

}  // namespace

const std::vector<SymmetricPairEntry>& proper_sl2_pairs() {
  static const std::vector<SymmetricPairEntry> entries = [] {
    std::vector<SymmetricPairEntry> out;
    for (const auto& r : rows()) out.push_back(r.entry);
    return out;
  }();
  return entries;
}

std::optional<PairMatch> lookup_pair(std::string_view g, std::string_view h) {
  const auto gq = parse_sum(g, false);
  const auto hq = parse_sum(h, false);
  if (gq.size() != 1) throw std::invalid_argument("g must be simple: '" + std::string(g) + "'");
  const auto& entries = proper_sl2_pairs();
  for (std::size_t k = 0; k < rows().size(); ++k) {
    const Row& row = rows()[k];
    // bind g first, then h with g's bindings as extra equations
    Bindings gb;
    if (!match_terms(row.g, gq, {}, gb)) continue;
    std::vector<Equation> fixed;
    for (auto [v, x] : gb) fixed.push_back({Expr{0, {{v, 1}}}, x});
    Bindings all;
    if (!match_terms(row.h, hq, fixed, all)) continue;
    if (!row.holds(all)) continue;
    return PairMatch{&entries[k], all};
  }
  return std::nullopt;
}

std::vector<PairMatch> pairs_for_g(std::string_view g) {
  const auto gq = parse_sum(g, false);
  if (gq.size() != 1) throw std::invalid_argument("g must be simple: '" + std::string(g) + "'");
  const auto& entries = proper_sl2_pairs();
  std::vector<PairMatch> out;
  for (std::size_t k = 0; k < rows().size(); ++k) {
    Bindings b;
    if (match_terms(rows()[k].g, gq, {}, b)) out.push_back({&entries[k], b});
  }
  return out;
}

std::string pairs_to_json(const std::vector<const SymmetricPairEntry*>& selected) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto* e : selected) {
    nlohmann::ordered_json j;
    j["row"] = e->row;
    j["g"] = e->g;
    j["h"] = e->h;
    j["constraint"] = e->constraint;
    if (!e->corrected_from.empty()) j["corrected_from"] = e->corrected_from;
    arr.push_back(j);
  }
  return arr.dump(2);
}

std::string pairs_to_csv(const std::vector<const SymmetricPairEntry*>& selected) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"') out += '"';
      out += c;
    }
    return out + "\"";
  };
  std::string out = "row,g,h,constraint,corrected_from\n";
  for (const auto* e : selected)
    out += std::to_string(e->row) + "," + quote(e->g) + "," + quote(e->h) + "," + quote(e->constraint) + "," +
           quote(e->corrected_from) + "\n";
  return out;
}

}  // namespace nilspan
