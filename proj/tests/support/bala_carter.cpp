#include "bala_carter.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace nilspan::oracle {

namespace {

bool supported_in(const IntVector& root, const std::vector<int>& nodes) {
  for (std::size_t i = 0; i < root.size(); ++i)
    if (root[i] && std::find(nodes.begin(), nodes.end(), static_cast<int>(i)) == nodes.end()) return false;
  return true;
}

int degree(const IntVector& root, const IntVector& w) {
  int s = 0;
  for (std::size_t i = 0; i < root.size(); ++i) s += root[i] * w[i];
  return s;
}

std::vector<std::vector<int>> components(const IntMatrix& a, const std::vector<int>& subset) {
  std::vector<std::vector<int>> out;
  std::set<int> left(subset.begin(), subset.end());
  while (!left.empty()) {
    std::vector<int> comp{*left.begin()};
    left.erase(left.begin());
    for (std::size_t k = 0; k < comp.size(); ++k)
      for (auto it = left.begin(); it != left.end();) {
        if (a[comp[k]][*it] != 0) {
          comp.push_back(*it);
          it = left.erase(it);
        } else {
          ++it;
        }
      }
    std::sort(comp.begin(), comp.end());
    out.push_back(comp);
  }
  return out;
}

struct Kind {
  int priority;  // E, F, D, C, B, G, A
  char letter;
  bool shortroots;
};

Kind component_kind(const RootSystem& rs, const std::vector<int>& nodes) {
  const auto& a = rs.cartan;
  const int n = static_cast<int>(nodes.size());
  int bond2 = -1, bond3 = 0;
  std::vector<int> degree(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      const int m = a[nodes[x]][nodes[y]] * a[nodes[y]][nodes[x]];
      if (m) ++degree[x];
      if (m == 3) bond3 = 1;
      if (m == 2) bond2 = x;
    }
  if (bond3) return {5, 'G', false};
  if (bond2 >= 0) {
    if (n == 4) return {1, 'F', false};
    if (n == 2) return {4, 'B', false};
    // the double bond sits at one end of the chain; B if that end is short
    bool leaf_short = false;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (x != y && degree[x] == 1 && a[nodes[x]][nodes[y]] * a[nodes[y]][nodes[x]] == 2)
          leaf_short = rs.half_norms[nodes[x]] < rs.half_norms[nodes[y]];
    return leaf_short ? Kind{4, 'B', false} : Kind{3, 'C', false};
  }
  const int lo = *std::min_element(rs.half_norms.begin(), rs.half_norms.end());
  const int hi = *std::max_element(rs.half_norms.begin(), rs.half_norms.end());
  const bool shortroots = lo != hi && rs.half_norms[nodes[0]] == lo;
  int branch = -1;
  for (int x = 0; x < n; ++x)
    if (degree[x] == 3) branch = x;
  if (branch < 0) return {6, 'A', shortroots};
  // arm lengths from the branch node
  std::vector<int> arms;
  for (int y = 0; y < n; ++y) {
    if (y == branch || a[nodes[branch]][nodes[y]] == 0) continue;
    int len = 1, prev = branch, cur = y;
    for (;;) {
      int next = -1;
      for (int z = 0; z < n; ++z)
        if (z != prev && z != cur && a[nodes[cur]][nodes[z]] != 0) next = z;
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return {2, 'D', false};
  return {0, 'E', false};
}

int graded_dimension(const std::vector<IntVector>& positive, const IntVector& w) {
  int n0 = 0, n1 = 0;
  for (const auto& r : positive) {
    const int d = degree(r, w);
    if (d == 0) ++n0;
    if (d == 1) ++n1;
  }
  return 2 * static_cast<int>(positive.size()) - 2 * n0 - n1;
}

struct Distinguished {
  std::string name;
  IntVector weights;  // on the full node set, zero outside the component
};

std::vector<Distinguished> distinguished_orbits(const RootSystem& rs, const std::vector<int>& nodes) {
  const Kind kind = component_kind(rs, nodes);
  const int n = static_cast<int>(nodes.size());
  std::vector<IntVector> positive;
  for (const auto& r : rs.positive_roots)
    if (supported_in(r, nodes)) positive.push_back(r);
  struct Found {
    IntVector w;
    int zeros;
    int dim;
  };
  std::vector<Found> found;
  for (int mask = 0; mask < (1 << n); ++mask) {
    IntVector w(rs.rank(), 0);
    int zeros = 0;
    for (int x = 0; x < n; ++x) {
      if (mask >> x & 1) w[nodes[x]] = 2;
      else ++zeros;
    }
    int n0 = 0, n2 = 0;
    for (const auto& r : positive) {
      const int d = degree(r, w);
      if (d == 0) ++n0;
      if (d == 2) ++n2;
    }
    if (n + 2 * n0 == n2) found.push_back({w, zeros, graded_dimension(positive, w)});
  }
  std::string base;
  if (kind.shortroots) base += '~';
  base += kind.letter;
  base += "_" + std::to_string(n);
  std::vector<Distinguished> out;
  for (const auto& f : found) {
    if (f.zeros == 0) {
      out.push_back({base, f.w});
      continue;
    }
    int same = 0, larger = 0;
    for (const auto& g : found)
      if (g.zeros == f.zeros) {
        ++same;
        if (g.dim > f.dim) ++larger;
      }
    if (same > 2) throw std::logic_error("three distinguished orbits with equal zero count");
    const char tag = (same == 2 && larger == 1) ? 'b' : 'a';
    out.push_back({base + "(" + tag + "_" + std::to_string(f.zeros) + ")", f.w});
  }
  return out;
}

IntVector dominant(const RootSystem& rs, IntVector v) {
  const int l = rs.rank();
  for (;;) {
    int j = 0;
    while (j < l && v[j] >= 0) ++j;
    if (j == l) return v;
    const int c = v[j];
    for (int k = 0; k < l; ++k) v[k] -= c * rs.cartan[k][j];
  }
}

// Values a_i(h) for the h in the coroot span of J with a_j(h) = w_j on J.
IntVector extend_from_levi(const RootSystem& rs, const std::vector<int>& subset, const IntVector& w) {
  const std::size_t m = subset.size();
  std::vector<RationalVector> rows;
  for (std::size_t r = 0; r < m; ++r) {
    RationalVector row(m + 1);
    for (std::size_t k = 0; k < m; ++k) row[k] = rs.cartan[subset[r]][subset[k]];
    row[m] = w[subset[r]];
    rows.push_back(row);
  }
  row_reduce(rows, m + 1);
  IntVector out(rs.rank(), 0);
  for (int i = 0; i < rs.rank(); ++i) {
    Rational s = 0;
    for (std::size_t k = 0; k < m; ++k) s += rows[k][m] * rs.cartan[i][subset[k]];
    if (denominator(s) != 1) throw std::logic_error("non-integral characteristic");
    out[i] = static_cast<int>(numerator(s));
  }
  return out;
}

std::string compose_name(std::vector<std::pair<Kind, std::string>> parts) {
  if (parts.empty()) return "0";
  std::sort(parts.begin(), parts.end(), [](const auto& x, const auto& y) {
    auto key = [](const auto& p) {
      int rank = 0;
      auto u = p.second.find('_');
      rank = std::stoi(p.second.substr(u + 1));
      return std::make_tuple(p.first.priority, -rank, p.first.shortroots, p.second);
    };
    return key(x) < key(y);
  });
  std::string name;
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j].second == parts[i].second) ++j;
    if (!name.empty()) name += '+';
    if (j - i > 1) name += std::to_string(j - i);
    name += parts[i].second;
    i = j;
  }
  return name;
}

}  // namespace

int orbit_dimension(const RootSystem& rs, const IntVector& weights) {
  return graded_dimension(rs.positive_roots, weights);
}

std::vector<GeneratedOrbit> bala_carter_orbits(SimpleType t) {
  const RootSystem rs = build_root_system(t);
  const int l = rs.rank();
  std::map<IntVector, std::string> names;
  for (int mask = 0; mask < (1 << l); ++mask) {
    std::vector<int> subset;
    for (int i = 0; i < l; ++i)
      if (mask >> i & 1) subset.push_back(i);
    const auto comps = components(rs.cartan, subset);
    std::vector<std::vector<Distinguished>> choices;
    std::vector<Kind> kinds;
    for (const auto& c : comps) {
      choices.push_back(distinguished_orbits(rs, c));
      kinds.push_back(component_kind(rs, c));
    }
    std::vector<std::size_t> pick(comps.size(), 0);
    for (;;) {
      IntVector w(l, 0);
      std::vector<std::pair<Kind, std::string>> parts;
      for (std::size_t c = 0; c < comps.size(); ++c) {
        const auto& d = choices[c][pick[c]];
        for (int i = 0; i < l; ++i) w[i] += d.weights[i];
        parts.emplace_back(kinds[c], d.name);
      }
      const IntVector h = dominant(rs, extend_from_levi(rs, subset, w));
      const std::string name = compose_name(parts);
      auto [it, fresh] = names.emplace(h, name);
      if (!fresh && it->second != name)
        throw std::logic_error("orbit " + it->second + " also reached as " + name);
      std::size_t c = 0;
      while (c < comps.size() && ++pick[c] == choices[c].size()) pick[c++] = 0;
      if (c == comps.size()) break;
    }
  }
  std::map<std::string, std::vector<IntVector>> by_name;
  for (const auto& [w, name] : names) by_name[name].push_back(w);
  std::vector<GeneratedOrbit> out;
  for (const auto& [name, ws] : by_name) {
    if (ws.size() == 1) {
      out.push_back({name, ws[0], orbit_dimension(rs, ws[0])});
      continue;
    }
    if (ws.size() != 2) throw std::logic_error("more than two orbits named " + name);
    auto even = [](const IntVector& w) { return std::all_of(w.begin(), w.end(), [](int x) { return x % 2 == 0; }); };
    if (even(ws[0]) == even(ws[1])) throw std::logic_error("cannot tell primes apart for " + name);
    for (const auto& w : ws) out.push_back({"(" + name + ")" + (even(w) ? "''" : "'"), w, orbit_dimension(rs, w)});
  }
  std::sort(out.begin(), out.end(), [](const GeneratedOrbit& x, const GeneratedOrbit& y) {
    return std::tie(x.dimension, x.name) < std::tie(y.dimension, y.name);
  });
  return out;
}

}  // namespace nilspan::oracle
