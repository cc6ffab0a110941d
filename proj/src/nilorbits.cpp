#include "nilspan/nilorbits.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "exceptional_tables.hpp"

namespace nilspan {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  if (!parts.empty() && parts.back() <= 0) throw std::invalid_argument("partition parts must be positive");
}

Partition Partition::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '[' && c != ']' && c != '(' && c != ')') s += c;
  std::vector<int> parts;
  std::size_t pos = 0;
  auto number = [&](std::size_t& at) {
    std::size_t start = at;
    while (at < s.size() && std::isdigit(static_cast<unsigned char>(s[at]))) ++at;
    if (start == at || at - start > 5) throw std::invalid_argument("bad partition '" + std::string(text) + "'");
    return std::stoi(s.substr(start, at - start));
  };
  while (pos < s.size()) {
    const int part = number(pos);
    int times = 1;
    if (pos < s.size() && s[pos] == '^') times = number(++pos);
    if (pos < s.size() && s[pos] != ',') throw std::invalid_argument("bad partition '" + std::string(text) + "'");
    if (pos < s.size()) ++pos;
    if (times > 10000) throw std::invalid_argument("bad partition '" + std::string(text) + "'");
    parts.insert(parts.end(), times, part);
  }
  return Partition(std::move(parts));
}

int Partition::size() const {
  int s = 0;
  for (int x : parts) s += x;
  return s;
}

int Partition::multiplicity(int part) const { return static_cast<int>(std::count(parts.begin(), parts.end(), part)); }

bool Partition::all_even() const {
  return std::all_of(parts.begin(), parts.end(), [](int x) { return x % 2 == 0; });
}

std::string Partition::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (i) s += ',';
    s += std::to_string(parts[i]);
    if (j - i > 1) s += '^' + std::to_string(j - i);
    i = j;
  }
  return s + "]";
}

OrbitLabel OrbitLabel::classical(Partition p, VeryEvenTag tag) { return {std::move(p), tag, {}}; }

OrbitLabel OrbitLabel::exceptional(std::string name) {
  if (name.empty()) throw std::invalid_argument("empty orbit name");
  return {{}, VeryEvenTag::none, std::move(name)};
}

OrbitLabel OrbitLabel::parse(std::string_view text) {
  if (!text.empty() && text.front() == '[') {
    const auto close = text.rfind(']');
    if (close == std::string_view::npos) throw std::invalid_argument("bad orbit label '" + std::string(text) + "'");
    std::string_view suffix = text.substr(close + 1);
    if (!suffix.empty() && suffix.front() == '_') suffix.remove_prefix(1);
    VeryEvenTag tag = VeryEvenTag::none;
    if (suffix == "I") tag = VeryEvenTag::I;
    else if (suffix == "II") tag = VeryEvenTag::II;
    else if (!suffix.empty()) throw std::invalid_argument("bad very-even tag in '" + std::string(text) + "'");
    return classical(Partition::parse(text.substr(0, close + 1)), tag);
  }
  return exceptional(std::string(text));
}

std::string OrbitLabel::to_string() const {
  if (!is_classical()) return bala_carter;
  std::string s = partition.to_string();
  if (tag == VeryEvenTag::I) s += "_I";
  if (tag == VeryEvenTag::II) s += "_II";
  return s;
}

std::string normalize_bala_carter(std::string_view name) {
  std::string s(name);
  auto replace_all = [&](std::string_view from, std::string_view to) {
    for (auto at = s.find(from); at != std::string::npos; at = s.find(from, at + to.size()))
      s.replace(at, from.size(), to);
  };
  replace_all("\\tilde", "~");
  replace_all("\xC3\x83", "~A");  // A with tilde
  std::string out;
  for (char c : s)
    if (c != '_' && c != ' ' && c != '{' && c != '}' && c != '$') out += c;
  if (!out.empty() && out.front() == '(') {
    const auto close = out.find(')');
    if (close != std::string::npos && close + 1 < out.size() && out[close + 1] == '\'') {
      out.erase(close, 1);
      out.erase(0, 1);
    }
  }
  return out;
}

namespace {

int defining_size(SimpleType t) {
  switch (t.family()) {
    case Family::A: return t.rank() + 1;
    case Family::B: return 2 * t.rank() + 1;
    case Family::C:
    case Family::D: return 2 * t.rank();
    default: throw std::invalid_argument(t.name() + " is exceptional; use the exceptional table");
  }
}

bool parity_ok(Family f, const Partition& p) {
  for (int part : p.parts) {
    const int m = p.multiplicity(part);
    if ((f == Family::B || f == Family::D) && part % 2 == 0 && m % 2) return false;
    if (f == Family::C && part % 2 && m % 2) return false;
  }
  return true;
}

void partitions_into(int n, int largest, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(n, largest); part >= 1; --part) {
    prefix.push_back(part);
    partitions_into(n - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> classical_partitions(SimpleType t) {
  const int n = defining_size(t);
  std::vector<Partition> all;
  std::vector<int> prefix;
  partitions_into(n, n, prefix, all);
  std::vector<Partition> out;
  for (auto& p : all)
    if (parity_ok(t.family(), p)) out.push_back(std::move(p));
  return out;
}

OrbitDiagram diagram_of_partition(SimpleType t, const Partition& p, VeryEvenTag tag) {
  const int n = defining_size(t);
  const Family f = t.family();
  const int l = t.rank();
  if (p.size() != n)
    throw std::invalid_argument("partition " + p.to_string() + " of " + std::to_string(p.size()) + " does not fit " +
                                t.name() + " (needs " + std::to_string(n) + ")");
  if (!parity_ok(f, p)) throw std::invalid_argument("partition " + p.to_string() + " violates the " + t.name() + " parity rule");
  const bool very_even = f == Family::D && p.all_even();
  if (very_even && tag == VeryEvenTag::none)
    throw std::invalid_argument("very even partition " + p.to_string() + " needs tag I or II");
  if (!very_even && tag != VeryEvenTag::none)
    throw std::invalid_argument("partition " + p.to_string() + " is not very even in " + t.name());

  std::vector<int> h;
  for (int m : p.parts)
    for (int v = m - 1; v >= 1 - m; v -= 2) h.push_back(v);
  std::sort(h.begin(), h.end(), std::greater<>());
  IntVector w(l, 0);
  if (f == Family::A) {
    for (int i = 0; i < l; ++i) w[i] = h[i] - h[i + 1];
  } else {
    for (int i = 0; i + 1 < l; ++i) w[i] = h[i] - h[i + 1];
    if (f == Family::B) w[l - 1] = h[l - 1];
    if (f == Family::C) w[l - 1] = 2 * h[l - 1];
    if (f == Family::D) {
      w[l - 2] = h[l - 2] - h[l - 1];
      w[l - 1] = h[l - 2] + h[l - 1];
      if (tag == VeryEvenTag::II) std::swap(w[l - 2], w[l - 1]);
    }
  }
  return {OrbitLabel::classical(p, tag), WeightedDiagram(t, w)};
}

const std::vector<OrbitDiagram>& exceptional_table(SimpleType t) {
  auto load = [t](const std::vector<detail::ExceptionalRow>& rows) {
    std::vector<OrbitDiagram> out;
    for (const auto& row : rows) {
      IntVector w;
      for (const char* c = row.weights; *c; ++c) w.push_back(*c - '0');
      out.push_back({OrbitLabel::exceptional(row.name), WeightedDiagram(t, w)});
    }
    return out;
  };
  switch (t.family()) {
    case Family::G: {
      static const auto table = load(detail::g2_rows());
      return table;
    }
    case Family::F: {
      static const auto table = load(detail::f4_rows());
      return table;
    }
    case Family::E:
      if (t.rank() == 6) {
        static const auto table = load(detail::e6_rows());
        return table;
      }
      if (t.rank() == 7) {
        static const auto table = load(detail::e7_rows());
        return table;
      }
      {
        static const auto table = load(detail::e8_rows());
        return table;
      }
    default:
      throw std::invalid_argument(t.name() + " is classical; use its partitions");
  }
}

const std::vector<OrbitDiagram>& enumerate_complex_characteristics(SimpleType t) {
  switch (t.family()) {
    case Family::E:
    case Family::F:
    case Family::G: return exceptional_table(t);
    default: break;
  }
  static std::mutex mutex;
  static std::map<SimpleType, std::unique_ptr<const std::vector<OrbitDiagram>>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[t];
  if (!slot) {
    auto out = std::make_unique<std::vector<OrbitDiagram>>();
    for (const auto& p : classical_partitions(t)) {
      if (t.family() == Family::D && p.all_even()) {
        out->push_back(diagram_of_partition(t, p, VeryEvenTag::I));
        out->push_back(diagram_of_partition(t, p, VeryEvenTag::II));
      } else {
        out->push_back(diagram_of_partition(t, p));
      }
    }
    slot = std::move(out);
  }
  return *slot;
}

const OrbitDiagram& find_orbit(SimpleType t, const OrbitLabel& label) {
  const auto& all = enumerate_complex_characteristics(t);
  if (label.is_classical()) {
    for (const auto& o : all)
      if (o.label == label) return o;
  } else {
    const std::string key = normalize_bala_carter(label.bala_carter);
    for (const auto& o : all)
      if (!o.label.is_classical() && normalize_bala_carter(o.label.bala_carter) == key) return o;
  }
  throw std::invalid_argument("no orbit " + label.to_string() + " in " + t.name());
}

}  // namespace nilspan
