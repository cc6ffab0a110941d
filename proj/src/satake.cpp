#include "nilspan/satake.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <sstream>

namespace nilspan {

namespace {

struct ExceptionalName {
  FormKind kind;
  const char* text;
  SimpleType type;
};

const std::vector<ExceptionalName>& exceptional_names() {
  static const std::vector<ExceptionalName> names = {
      {FormKind::e6_6, "e6(6)", {Family::E, 6}},       {FormKind::e6_2, "e6(2)", {Family::E, 6}},
      {FormKind::e6_m14, "e6(-14)", {Family::E, 6}},   {FormKind::e6_m26, "e6(-26)", {Family::E, 6}},
      {FormKind::e7_7, "e7(7)", {Family::E, 7}},       {FormKind::e7_m5, "e7(-5)", {Family::E, 7}},
      {FormKind::e7_m25, "e7(-25)", {Family::E, 7}},   {FormKind::e8_8, "e8(8)", {Family::E, 8}},
      {FormKind::e8_m24, "e8(-24)", {Family::E, 8}},   {FormKind::f4_4, "f4(4)", {Family::F, 4}},
      {FormKind::f4_m20, "f4(-20)", {Family::F, 4}},   {FormKind::g2_2, "g2(2)", {Family::G, 2}},
      {FormKind::e6_C, "e6C", {Family::E, 6}},         {FormKind::e7_C, "e7C", {Family::E, 7}},
      {FormKind::e8_C, "e8C", {Family::E, 8}},         {FormKind::f4_C, "f4C", {Family::F, 4}},
      {FormKind::g2_C, "g2C", {Family::G, 2}},
  };
  return names;
}

const ExceptionalName* find_exceptional(FormKind k) {
  for (const auto& e : exceptional_names())
    if (e.kind == k) return &e;
  return nullptr;
}

std::string pq(const char* head, int p, int q) {
  return std::string(head) + "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

}  // namespace

RealFormLabel RealFormLabel::make(FormKind kind, int p, int q) {
  if (find_exceptional(kind)) {
    if (p || q) throw LabelError("exceptional labels take no parameters");
    return {kind, 0, 0};
  }
  if (p < q) std::swap(p, q);
  if (q < 0) throw LabelError("negative parameter");
  const bool has_q = kind == FormKind::su || kind == FormKind::so || kind == FormKind::sp;
  if (!has_q && q != 0) throw LabelError("unexpected second parameter");
  if (p > 4096) throw LabelError("parameter out of range");
  switch (kind) {
    case FormKind::sl_R:
      if (p < 2) throw LabelError("sl(n,R) needs n >= 2");
      break;
    case FormKind::su_star:
      if (p % 2) throw LabelError("su*(n) needs n even");
      if (p < 4) throw LabelError("su*(2) is compact", "su*(2) = su(2)");
      break;
    case FormKind::su:
      if (q == 0) throw LabelError(pq("su", p, q) + " is compact");
      break;
    case FormKind::so: {
      if (q == 0) throw LabelError(pq("so", p, q) + " is compact");
      const int n = p + q;
      if (n == 2) throw LabelError("so(1,1) is abelian");
      if (n == 3) throw LabelError("so(2,1) is not listed separately", "use sl(2,R)");
      if (n == 4) {
        if (p == 3) throw LabelError("so(3,1) is not listed separately", "use slC(2)");
        throw LabelError("so(2,2) is not simple", "so(2,2) = sl(2,R) + sl(2,R)");
      }
      if (n == 6) {
        if (p == 3) throw LabelError("so(3,3) is not listed separately", "use sl(4,R)");
        if (p == 4) throw LabelError("so(4,2) is not listed separately", "use su(2,2)");
        throw LabelError("so(5,1) is not listed separately", "use su*(4)");
      }
      break;
    }
    case FormKind::sp_R:
      if (p < 1) throw LabelError("sp(n,R) needs n >= 1");
      if (p == 1) throw LabelError("sp(1,R) is not listed separately", "use sl(2,R)");
      break;
    case FormKind::sp:
      if (q == 0) throw LabelError(pq("sp", p, q) + " is compact");
      break;
    case FormKind::so_star:
      if (p % 2) throw LabelError("so*(n) needs n even");
      if (p == 6) throw LabelError("so*(6) is not listed separately", "use su(3,1)");
      if (p == 4) throw LabelError("so*(4) is not simple");
      if (p < 4) throw LabelError("so*(2) is abelian");
      break;
    case FormKind::sl_C:
      if (p < 2) throw LabelError("slC(n) needs n >= 2");
      break;
    case FormKind::so_C:
      if (p == 3) throw LabelError("soC(3) is not listed separately", "use slC(2)");
      if (p == 4) throw LabelError("soC(4) is not simple");
      if (p == 6) throw LabelError("soC(6) is not listed separately", "use slC(4)");
      if (p < 5) throw LabelError("soC(n) needs n >= 5");
      break;
    case FormKind::sp_C:
      if (p == 1) throw LabelError("spC(1) is not listed separately", "use slC(2)");
      if (p < 2) throw LabelError("spC(n) needs n >= 2");
      break;
    default:
      break;
  }
  return {kind, p, q};
}

RealFormLabel RealFormLabel::parse(std::string_view text) {
  std::string s;
  for (std::size_t i = 0; i < text.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    // U+2212 MINUS SIGN
    if (c == 0xE2 && i + 2 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0x88 &&
        static_cast<unsigned char>(text[i + 2]) == 0x92) {
      s += '-';
      i += 2;
      continue;
    }
    if (!std::isspace(c)) s += static_cast<char>(std::tolower(c));
  }
  const std::string original(text);
  auto num = [&](const std::string& digits) {
    if (digits.size() > 5) throw LabelError("parameter out of range in '" + original + "'");
    return std::stoi(digits);
  };
  static const std::regex one(R"(^(sl|su\*|so\*|sp|slc|soc|spc)\((\d+)(?:,([rc]))?\)$)");
  static const std::regex two(R"(^(su|so|sp)\((\d+),(\d+)\)$)");
  static const std::regex exc(R"(^(e6|e7|e8|f4|g2)(?:\((-?\d+|c)\)|(c))$)");
  std::smatch m;
  if (std::regex_match(s, m, two)) {
    FormKind k = m[1] == "su" ? FormKind::su : m[1] == "so" ? FormKind::so : FormKind::sp;
    return make(k, num(m[2]), num(m[3]));
  }
  if (std::regex_match(s, m, one)) {
    const std::string head = m[1];
    const std::string field = m[3];
    const int n = num(m[2]);
    if (head == "slc" || head == "soc" || head == "spc") {
      if (!field.empty()) throw LabelError("unknown label '" + original + "'");
      return make(head == "slc" ? FormKind::sl_C : head == "soc" ? FormKind::so_C : FormKind::sp_C, n);
    }
    if (head == "sl") return make(field == "c" ? FormKind::sl_C : FormKind::sl_R, n);
    if (head == "sp" && field == "r") return make(FormKind::sp_R, n);
    if (head == "sp" && field == "c") return make(FormKind::sp_C, n);
    if (head == "so" && field == "c") return make(FormKind::so_C, n);
    if (head == "su*" && field.empty()) return make(FormKind::su_star, n);
    if (head == "so*" && field.empty()) return make(FormKind::so_star, n);
    throw LabelError("unknown label '" + original + "'");
  }
  if (std::regex_match(s, m, exc)) {
    const std::string head = m[1];
    const std::string index = m[2].matched ? std::string(m[2]) : std::string("c");
    const std::string canonical = index == "c" ? head + "C" : head + "(" + index + ")";
    for (const auto& e : exceptional_names())
      if (e.text == canonical) return {e.kind, 0, 0};
    throw LabelError("unknown label '" + original + "'", "no real form " + canonical);
  }
  throw LabelError("unknown label '" + original + "'");
}

bool RealFormLabel::is_complex() const { return kind_ >= FormKind::sl_C; }

SimpleType RealFormLabel::underlying_type() const {
  if (const auto* e = find_exceptional(kind_)) return e->type;
  switch (kind_) {
    case FormKind::sl_R:
    case FormKind::su_star:
    case FormKind::sl_C: return {Family::A, p_ - 1};
    case FormKind::su: return {Family::A, p_ + q_ - 1};
    case FormKind::so: {
      const int n = p_ + q_;
      return n % 2 ? SimpleType(Family::B, (n - 1) / 2) : SimpleType(Family::D, n / 2);
    }
    case FormKind::so_C: return p_ % 2 ? SimpleType(Family::B, (p_ - 1) / 2) : SimpleType(Family::D, p_ / 2);
    case FormKind::sp_R:
    case FormKind::sp_C: return {Family::C, p_};
    case FormKind::sp: return {Family::C, p_ + q_};
    case FormKind::so_star: return {Family::D, p_ / 2};
    default: break;
  }
  throw std::logic_error("unhandled label kind");
}

RealFormLabel RealFormLabel::split_form() const {
  switch (kind_) {
    case FormKind::sl_C: return make(FormKind::sl_R, p_);
    case FormKind::so_C: return make(FormKind::so, (p_ + 1) / 2, p_ / 2);
    case FormKind::sp_C: return make(FormKind::sp_R, p_);
    case FormKind::e6_C: return make(FormKind::e6_6);
    case FormKind::e7_C: return make(FormKind::e7_7);
    case FormKind::e8_C: return make(FormKind::e8_8);
    case FormKind::f4_C: return make(FormKind::f4_4);
    case FormKind::g2_C: return make(FormKind::g2_2);
    default: return *this;
  }
}

std::string RealFormLabel::to_string() const {
  if (const auto* e = find_exceptional(kind_)) return e->text;
  const std::string n = std::to_string(p_);
  switch (kind_) {
    case FormKind::sl_R: return "sl(" + n + ",R)";
    case FormKind::su_star: return "su*(" + n + ")";
    case FormKind::su: return pq("su", p_, q_);
    case FormKind::so: return pq("so", p_, q_);
    case FormKind::sp_R: return "sp(" + n + ",R)";
    case FormKind::sp: return pq("sp", p_, q_);
    case FormKind::so_star: return "so*(" + n + ")";
    case FormKind::sl_C: return "slC(" + n + ")";
    case FormKind::so_C: return "soC(" + n + ")";
    case FormKind::sp_C: return "spC(" + n + ")";
    default: break;
  }
  throw std::logic_error("unhandled label kind");
}

int SatakeDiagram::white_orbit_count() const {
  int white = static_cast<int>(std::count(black.begin(), black.end(), false));
  return white - static_cast<int>(arrows.size());
}

SatakeDiagram satake_diagram(const RealFormLabel& label) {
  const RealFormLabel form = label.split_form();
  const SimpleType t = form.underlying_type();
  const int l = t.rank();
  SatakeDiagram s{t, std::vector<bool>(l, false), {}};
  // Helpers take 1-based node numbers.
  auto paint = [&](int from, int to) {
    for (int j = from; j <= to; ++j) s.black[j - 1] = true;
  };
  auto arrow = [&](int i, int j) { s.arrows.emplace_back(std::min(i, j) - 1, std::max(i, j) - 1); };
  auto paint_odd = [&](int upto) {
    for (int j = 1; j <= upto; j += 2) s.black[j - 1] = true;
  };
  const int p = form.p(), q = form.q();
  switch (form.kind()) {
    case FormKind::su_star:
      paint_odd(l);
      break;
    case FormKind::su:
      for (int j = 1; j <= q; ++j)
        if (j < l + 1 - j) arrow(j, l + 1 - j);
      paint(q + 1, l - q);
      break;
    case FormKind::so:
      if (t.family() == Family::B) {
        paint(q + 1, l);
      } else if (p == q + 2) {
        arrow(l - 1, l);
      } else if (p > q + 2) {
        paint(q + 1, l);
      }
      break;
    case FormKind::sp:
      paint_odd(2 * q - 1);
      paint(2 * q + 1, l);
      break;
    case FormKind::so_star:
      if (l % 2 == 0) {
        paint_odd(l);
      } else {
        paint_odd(l - 2);
        arrow(l - 1, l);
      }
      break;
    case FormKind::e6_2:
      arrow(1, 5);
      arrow(2, 4);
      break;
    case FormKind::e6_m14:
      paint(2, 4);
      arrow(1, 5);
      break;
    case FormKind::e6_m26:
      paint(2, 4);
      paint(6, 6);
      break;
    case FormKind::e7_m5:
      paint(1, 1);
      paint(3, 3);
      paint(7, 7);
      break;
    case FormKind::e7_m25:
      paint(3, 5);
      paint(7, 7);
      break;
    case FormKind::e8_m24:
      paint(4, 6);
      paint(8, 8);
      break;
    case FormKind::f4_m20:
      paint(1, 3);
      break;
    default:  // split
      break;
  }
  std::sort(s.arrows.begin(), s.arrows.end());
  return s;
}

bool matches(const WeightedDiagram& d, const SatakeDiagram& s) {
  if (d.type != s.type) throw std::invalid_argument("diagram of type " + d.type.name() + " against Satake diagram of type " + s.type.name());
  for (std::size_t i = 0; i < s.black.size(); ++i)
    if (s.black[i] && d.weights[i] != 0) return false;
  for (auto [i, j] : s.arrows)
    if (d.weights[i] != d.weights[j]) return false;
  return true;
}

RationalSubspace matching_subspace(const SatakeDiagram& s) {
  const auto l = s.black.size();
  std::vector<RationalVector> constraints;
  for (std::size_t i = 0; i < l; ++i)
    if (s.black[i]) {
      RationalVector c(l);
      c[i] = 1;
      constraints.push_back(std::move(c));
    }
  for (auto [i, j] : s.arrows) {
    RationalVector c(l);
    c[i] = 1;
    c[j] = -1;
    constraints.push_back(std::move(c));
  }
  return RationalSubspace::kernel(l, constraints);
}

RationalSubspace b_subspace(const RealFormLabel& label) {
  const SatakeDiagram s = satake_diagram(label);
  return matching_subspace(s).intersect(iota_fixed_subspace(build_root_system(s.type)));
}

std::vector<RealFormLabel> catalog(int bound) {
  std::vector<RealFormLabel> out;
  using K = FormKind;
  auto add = [&](K k, int p, int q = 0) { out.push_back(RealFormLabel::make(k, p, q)); };
  for (int n = 2; n <= bound + 1; ++n) add(K::sl_R, n);
  for (int n = 4; n - 1 <= bound; n += 2) add(K::su_star, n);
  for (int n = 2; n <= bound + 1; ++n)
    for (int q = 1; 2 * q <= n; ++q) add(K::su, n - q, q);
  for (int l = 2; l <= bound; ++l)
    for (int q = 1; q <= l; ++q) add(K::so, 2 * l + 1 - q, q);
  for (int l = 4; l <= bound; ++l)
    for (int q = 1; q <= l; ++q) add(K::so, 2 * l - q, q);
  for (int l = 2; l <= bound; ++l) add(K::sp_R, l);
  for (int l = 2; l <= bound; ++l)
    for (int q = 1; 2 * q <= l; ++q) add(K::sp, l - q, q);
  for (int l = 4; l <= bound; ++l) add(K::so_star, 2 * l);
  for (K k : {K::e6_6, K::e6_2, K::e6_m14, K::e6_m26, K::e7_7, K::e7_m5, K::e7_m25, K::e8_8, K::e8_m24,
              K::f4_4, K::f4_m20, K::g2_2})
    add(k, 0);
  for (int n = 2; n <= bound + 1; ++n) add(K::sl_C, n);
  for (int l = 2; l <= bound; ++l) add(K::so_C, 2 * l + 1);
  for (int l = 4; l <= bound; ++l) add(K::so_C, 2 * l);
  for (int l = 2; l <= bound; ++l) add(K::sp_C, l);
  for (K k : {K::e6_C, K::e7_C, K::e8_C, K::f4_C, K::g2_C}) add(k, 0);
  return out;
}

std::string satake_to_dot(const RealFormLabel& label) {
  const SatakeDiagram s = satake_diagram(label);
  const RootSystem rs = build_root_system(s.type);
  const int l = s.type.rank();
  std::ostringstream os;
  os << "graph \"" << label.to_string() << "\" {\n";
  os << "  node [shape=circle, fixedsize=true, width=0.4];\n";
  for (int i = 0; i < l; ++i) {
    os << "  a" << i + 1 << " [label=\"" << i + 1 << "\"";
    if (s.black[i]) os << ", style=filled, fillcolor=black, fontcolor=white";
    os << "];\n";
  }
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j) {
      const int bonds = rs.cartan[i][j] * rs.cartan[j][i];
      if (bonds == 0) continue;
      if (bonds == 1) {
        os << "  a" << i + 1 << " -- a" << j + 1 << ";\n";
        continue;
      }
      // arrowhead points at the short root
      const bool i_long = rs.half_norms[i] > rs.half_norms[j];
      const int from = i_long ? i : j, to = i_long ? j : i;
      os << "  a" << from + 1 << " -- a" << to + 1 << " [label=\"" << bonds << "\", dir=forward];\n";
    }
  for (auto [i, j] : s.arrows)
    os << "  a" << i + 1 << " -- a" << j + 1 << " [style=dashed, dir=both, constraint=false];\n";
  os << "}\n";
  return os.str();
}

}  // namespace nilspan
