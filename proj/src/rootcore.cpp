#include "nilspan/rootcore.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <stdexcept>

namespace nilspan {

SimpleType::SimpleType(Family family, int rank) : family_(family), rank_(rank) {
  bool ok = false;
  switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::B:
    case Family::C: ok = rank >= 2; break;
    case Family::D: ok = rank >= 4; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
  }
  if (!ok)
    throw std::invalid_argument(std::string("no simple type ") + static_cast<char>(family) +
                                std::to_string(rank));
}

SimpleType SimpleType::parse(std::string_view name) {
  if (name.size() < 2) throw std::invalid_argument("bad type name '" + std::string(name) + "'");
  char f = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
  if (f < 'A' || f > 'G') throw std::invalid_argument("bad type name '" + std::string(name) + "'");
  std::string digits(name.substr(1));
  if (!digits.empty() && digits[0] == '_') digits.erase(0, 1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit) || digits.size() > 4)
    throw std::invalid_argument("bad type name '" + std::string(name) + "'");
  return SimpleType(static_cast<Family>(f), std::stoi(digits));
}

std::string SimpleType::name() const { return static_cast<char>(family_) + std::to_string(rank_); }

IntMatrix cartan_matrix(SimpleType t) {
  const int l = t.rank();
  IntMatrix a(l, IntVector(l, 0));
  for (int i = 0; i < l; ++i) a[i][i] = 2;
  auto bond = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (t.family()) {
    case Family::A:
      for (int i = 0; i + 1 < l; ++i) bond(i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 1 < l; ++i) bond(i, i + 1);
      a[l - 2][l - 1] = -2;  // a_l short
      break;
    case Family::C:
      for (int i = 0; i + 1 < l; ++i) bond(i, i + 1);
      a[l - 1][l - 2] = -2;  // a_l long
      break;
    case Family::D:
      for (int i = 0; i + 2 < l; ++i) bond(i, i + 1);
      bond(l - 3, l - 1);
      break;
    case Family::E:
      for (int i = 0; i + 2 < l; ++i) bond(i, i + 1);
      bond(l == 6 ? 2 : l == 7 ? 3 : 4, l - 1);
      break;
    case Family::F:
      bond(0, 1);
      bond(1, 2);
      bond(2, 3);
      a[1][2] = -2;
      break;
    case Family::G:
      a[0][1] = -3;
      a[1][0] = -1;
      break;
  }
  return a;
}

long long RootSystem::inner(const IntVector& x, const IntVector& y) const {
  // (a_i, a_j) = cartan[i][j] * half_norms[j]
  long long s = 0;
  for (int i = 0; i < rank(); ++i) {
    if (!x[i]) continue;
    for (int j = 0; j < rank(); ++j) s += 1LL * x[i] * y[j] * cartan[i][j] * half_norms[j];
  }
  return s;
}

int RootSystem::pairing(const IntVector& beta, int j) const {
  int s = 0;
  for (int i = 0; i < rank(); ++i) s += beta[i] * cartan[i][j];
  return s;
}

IntVector RootSystem::reflect(const IntVector& beta, int j) const {
  IntVector out = beta;
  out[j] -= pairing(beta, j);
  return out;
}

namespace {

IntVector symmetrizer(const IntMatrix& a) {
  // d_j = d_i * a[j][i] / a[i][j] along the (connected) diagram.
  const int l = static_cast<int>(a.size());
  std::vector<Rational> d(l, Rational(0));
  d[0] = 1;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < l; ++j)
      if (j != i && a[i][j] != 0 && d[j] == 0) {
        d[j] = d[i] * a[j][i] / a[i][j];
        stack.push_back(j);
      }
  }
  Rational lo = *std::min_element(d.begin(), d.end());
  IntVector out(l);
  for (int i = 0; i < l; ++i) {
    Rational v = d[i] / lo;
    if (denominator(v) != 1) throw std::logic_error("non-integral symmetrizer");
    out[i] = static_cast<int>(numerator(v));
  }
  return out;
}

}  // namespace

RootSystem build_root_system(SimpleType t) {
  RootSystem rs{t, cartan_matrix(t), {}, {}};
  rs.half_norms = symmetrizer(rs.cartan);
  const int l = t.rank();
  std::set<IntVector> seen;
  std::vector<IntVector> frontier;
  for (int i = 0; i < l; ++i) {
    IntVector e(l, 0);
    e[i] = 1;
    seen.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<IntVector> next;
    for (const auto& beta : frontier)
      for (int j = 0; j < l; ++j) {
        IntVector r = rs.reflect(beta, j);
        if (seen.insert(r).second) next.push_back(std::move(r));
      }
    frontier = std::move(next);
  }
  for (const auto& r : seen)
    if (std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; })) rs.positive_roots.push_back(r);
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end(), [](const IntVector& x, const IntVector& y) {
    int hx = std::accumulate(x.begin(), x.end(), 0), hy = std::accumulate(y.begin(), y.end(), 0);
    return hx != hy ? hx < hy : x > y;
  });
  return rs;
}

bool DiagramInvolution::is_identity() const {
  for (std::size_t i = 0; i < image.size(); ++i)
    if (image[i] != static_cast<int>(i)) return false;
  return true;
}

std::vector<std::pair<int, int>> DiagramInvolution::swapped_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < image.size(); ++i)
    if (static_cast<int>(i) < image[i]) out.emplace_back(static_cast<int>(i), image[i]);
  return out;
}

DiagramInvolution opposition_involution(const RootSystem& rs) {
  const int l = rs.rank();
  // -w0 sends w_i to w_{iota(i)}, so the dominant conjugate of -w_i names iota(i).
  // Weights are kept in fundamental-weight coordinates; s_j subtracts <lambda, a_j^vee> a_j.
  DiagramInvolution iota{std::vector<int>(l, -1)};
  for (int i = 0; i < l; ++i) {
    IntVector w(l, 0);
    w[i] = -1;
    for (;;) {
      int j = 0;
      while (j < l && w[j] >= 0) ++j;
      if (j == l) break;
      const int c = w[j];
      for (int k = 0; k < l; ++k) w[k] -= c * rs.cartan[j][k];
    }
    for (int k = 0; k < l; ++k) {
      IntVector unit(l, 0);
      unit[k] = 1;
      if (w == unit) iota.image[i] = k;
    }
    if (iota.image[i] < 0) throw std::logic_error("dominant conjugate of -w_i is not fundamental");
  }
  return iota;
}

RationalSubspace iota_fixed_subspace(const RootSystem& rs) {
  const auto l = static_cast<std::size_t>(rs.rank());
  std::vector<RationalVector> constraints;
  for (auto [i, j] : opposition_involution(rs).swapped_pairs()) {
    RationalVector c(l);
    c[i] = 1;
    c[j] = -1;
    constraints.push_back(std::move(c));
  }
  return RationalSubspace::kernel(l, constraints);
}

WeightedDiagram::WeightedDiagram(SimpleType t, RationalVector w) : type(t), weights(std::move(w)) {
  if (weights.size() != static_cast<std::size_t>(t.rank()))
    throw std::invalid_argument(t.name() + " needs " + std::to_string(t.rank()) + " weights, got " +
                                std::to_string(weights.size()));
}

WeightedDiagram::WeightedDiagram(SimpleType t, const IntVector& w) : WeightedDiagram(t, to_rational(w)) {}

IntVector WeightedDiagram::integer_weights() const {
  IntVector out;
  for (const auto& x : weights) {
    if (denominator(x) != 1) throw std::domain_error("non-integral weight " + format_rational(x));
    out.push_back(static_cast<int>(numerator(x)));
  }
  return out;
}

std::string WeightedDiagram::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (i) s += ' ';
    s += format_rational(weights[i]);
  }
  return s;
}

}  // namespace nilspan
