#include "nilspan/sl2oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

namespace nilspan {

namespace {

int height(const IntVector& r) { return std::accumulate(r.begin(), r.end(), 0); }

IntVector add(const IntVector& a, const IntVector& b, int k = 1) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + k * b[i];
  return out;
}

IntVector negate(const IntVector& a) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

}  // namespace

ChevalleyModel::ChevalleyModel(SimpleType t, int rank_bound) : rs_(build_root_system(t)) {
  if (t.rank() > rank_bound)
    throw std::invalid_argument(t.name() + " exceeds the oracle rank bound " + std::to_string(rank_bound) +
                                "; raise the bound explicitly to build it");
  const auto& pos = rs_.positive_roots;
  const int np = static_cast<int>(pos.size());
  roots_ = pos;
  for (const auto& r : pos) roots_.push_back(negate(r));
  const int nr = static_cast<int>(roots_.size());

  std::map<IntVector, int> index;
  for (int i = 0; i < nr; ++i) index[roots_[i]] = i;
  negative_.resize(nr);
  for (int i = 0; i < nr; ++i) negative_[i] = i < np ? i + np : i - np;
  sum_.assign(nr, std::vector<int>(nr, -1));
  for (int a = 0; a < nr; ++a)
    for (int b = 0; b < nr; ++b) {
      auto it = index.find(add(roots_[a], roots_[b]));
      if (it != index.end()) sum_[a][b] = it->second;
    }
  std::vector<long long> norm(nr);
  for (int i = 0; i < nr; ++i) norm[i] = rs_.inner(roots_[i], roots_[i]);

  // Structure constants for pairs of positive roots, by height of the sum,
  // from the extraspecial pairs (all signs +). Everything else follows from
  // N_{-r,-s} = -N_{r,s} and the cyclic relations.
  std::vector<std::vector<int>> npos(np, std::vector<int>(np, 0));
  auto ratio = [&](long long num, int n, long long den) {
    if ((num * n) % den) throw std::logic_error("non-integral structure constant");
    return static_cast<int>(num * n / den);
  };
  std::function<int(int, int)> general = [&](int a, int b) -> int {
    const int s = sum_[a][b];
    if (s < 0) return 0;
    const bool pa = a < np, pb = b < np;
    if (pa && pb) return npos[a][b];
    if (!pa && !pb) return -general(negative_[a], negative_[b]);
    if (!pa) return -general(b, a);
    const int t = negative_[s];  // a + b + t = 0
    if (t < np) return ratio(norm[t], general(t, a), norm[b]);
    return ratio(norm[t], -general(negative_[b], negative_[t]), norm[a]);
  };
  for (int xi = 0; xi < np; ++xi) {
    if (height(pos[xi]) == 1) continue;
    int e1 = -1;
    for (int a = 0; a < np && e1 < 0; ++a) {
      const int b = index.count(add(pos[xi], pos[a], -1)) ? index[add(pos[xi], pos[a], -1)] : -1;
      if (b >= 0 && b < np) e1 = a;
    }
    const int e2 = index[add(pos[xi], pos[e1], -1)];
    int p = 0;
    while (index.count(add(pos[e2], pos[e1], -(p + 1)))) ++p;
    npos[e1][e2] = p + 1;
    npos[e2][e1] = -(p + 1);
    for (int a = 0; a < np; ++a) {
      const int b = sum_[a][negative_[xi]] >= 0 ? negative_[sum_[a][negative_[xi]]] : -1;
      if (b < 0 || b >= np || a >= b || a == e1) continue;
      // four-root identity with (a, b, -e1, -e2)
      const int ne1 = negative_[e1], ne2 = negative_[e2];
      Rational total = 0;
      const int d1 = sum_[b][ne1];
      if (d1 >= 0) total += Rational(general(b, ne1) * general(a, ne2), norm[d1]);
      const int d2 = sum_[a][ne1];
      if (d2 >= 0) total += Rational(general(ne1, a) * general(b, ne2), norm[d2]);
      const Rational value = total * norm[xi] / (p + 1);
      if (denominator(value) != 1) throw std::logic_error("non-integral structure constant");
      npos[a][b] = static_cast<int>(numerator(value));
      npos[b][a] = -npos[a][b];
    }
  }
  n_.assign(nr, std::vector<int>(nr, 0));
  for (int a = 0; a < nr; ++a)
    for (int b = 0; b < nr; ++b) n_[a][b] = general(a, b);
}

int ChevalleyModel::root_index(const IntVector& v) const {
  for (std::size_t i = 0; i < roots_.size(); ++i)
    if (roots_[i] == v) return static_cast<int>(i);
  return -1;
}

std::vector<std::pair<int, int>> ChevalleyModel::bracket_basis(int a, int b) const {
  const int l = rank();
  if (a < l && b < l) return {};
  if (a >= l && b < l) {
    auto out = bracket_basis(b, a);
    for (auto& [i, c] : out) c = -c;
    return out;
  }
  if (a < l) {
    const int c = rs_.pairing(roots_[b - l], a);
    if (c == 0) return {};
    return {{b, c}};
  }
  const int r = a - l, s = b - l;
  if (negative_[r] == s) {
    // [e_r, e_{-r}] = r^vee = sum_j c_j (a_j,a_j)/(r,r) h_j
    const IntVector& c = roots_[r];
    const long long half = rs_.inner(c, c) / 2;
    std::vector<std::pair<int, int>> out;
    for (int j = 0; j < l; ++j)
      if (c[j]) out.emplace_back(j, static_cast<int>(c[j] * rs_.half_norms[j] / half));
    return out;
  }
  if (sum_[r][s] < 0) return {};
  return {{l + sum_[r][s], n_[r][s]}};
}

RationalVector ChevalleyModel::bracket(const RationalVector& x, const RationalVector& y) const {
  const int dim = static_cast<int>(dimension());
  RationalVector out(dim);
  for (int a = 0; a < dim; ++a) {
    if (x[a] == 0) continue;
    for (int b = 0; b < dim; ++b) {
      if (y[b] == 0) continue;
      for (auto [i, c] : bracket_basis(a, b)) out[i] += x[a] * y[b] * c;
    }
  }
  return out;
}

bool ChevalleyModel::jacobi_holds(const std::vector<int>& sample) const {
  std::vector<int> basis = sample;
  if (basis.empty()) {
    basis.resize(dimension());
    std::iota(basis.begin(), basis.end(), 0);
  }
  const int dim = static_cast<int>(dimension());
  std::vector<long long> acc(dim);
  auto nested = [&](int a, int b, int c) {
    for (auto [i, x] : bracket_basis(b, c))
      for (auto [j, y] : bracket_basis(a, i)) acc[j] += 1LL * x * y;
  };
  for (int a : basis)
    for (int b : basis)
      for (int c : basis) {
        std::fill(acc.begin(), acc.end(), 0);
        nested(a, b, c);
        nested(b, c, a);
        nested(c, a, b);
        for (long long v : acc)
          if (v) return false;
      }
  return true;
}

bool witness_holds(const ChevalleyModel& model, const TripleWitness& w) {
  auto scaled = [](RationalVector v, int k) {
    for (auto& x : v) x *= k;
    return v;
  };
  return model.bracket(w.h, w.e) == scaled(w.e, 2) && model.bracket(w.h, w.f) == scaled(w.f, -2) &&
         model.bracket(w.e, w.f) == w.h;
}

CharacteristicResult is_characteristic(const ChevalleyModel& model, const WeightedDiagram& d, int trials,
                                       std::uint64_t seed) {
  const RootSystem& rs = model.root_system();
  const int l = rs.rank();
  if (d.type != rs.type) throw std::invalid_argument("diagram of type " + d.type.name() + " for a model of " + rs.type.name());
  const IntVector w = d.integer_weights();
  for (int x : w)
    if (x < 0) throw std::invalid_argument("characteristic candidates need nonnegative weights");

  // H = sum x_i h_i with a_j(H) = sum_i x_i A[j][i] = w_j
  std::vector<RationalVector> system;
  for (int j = 0; j < l; ++j) {
    RationalVector row(l + 1);
    for (int i = 0; i < l; ++i) row[i] = rs.cartan[j][i];
    row[l] = w[j];
    system.push_back(row);
  }
  row_reduce(system, l + 1);
  const std::size_t dim = model.dimension();
  RationalVector h(dim);
  for (int i = 0; i < l; ++i) h[i] = system[i][l];

  std::vector<int> g2, gm2, g0;
  for (std::size_t k = 0; k < model.roots().size(); ++k) {
    int deg = 0;
    for (int i = 0; i < l; ++i) deg += model.roots()[k][i] * w[i];
    if (deg == 2) g2.push_back(static_cast<int>(k));
    if (deg == -2) gm2.push_back(static_cast<int>(k));
    if (deg == 0) g0.push_back(static_cast<int>(k));
  }
  if (std::all_of(w.begin(), w.end(), [](int x) { return x == 0; }))
    return {true, TripleWitness{d, h, RationalVector(dim), RationalVector(dim)}};
  if (g2.empty()) return {};

  // rows: coordinates of g_0 (h_1..h_l, then degree-0 root vectors)
  std::vector<int> rows_of(dim, -1);
  for (int i = 0; i < l; ++i) rows_of[i] = i;
  for (std::size_t k = 0; k < g0.size(); ++k) rows_of[l + g0[k]] = l + static_cast<int>(k);
  const std::size_t nrows = l + g0.size(), ncols = gm2.size();

  auto attempt = [&](const std::vector<int>& coeffs) -> std::optional<TripleWitness> {
    RationalVector e(dim);
    for (std::size_t k = 0; k < g2.size(); ++k) e[l + g2[k]] = coeffs[k];
    std::vector<RationalVector> m(nrows, RationalVector(ncols + 1));
    for (std::size_t c = 0; c < ncols; ++c)
      for (std::size_t a = 0; a < g2.size(); ++a) {
        if (coeffs[a] == 0) continue;
        for (auto [i, v] : model.bracket_basis(l + g2[a], l + gm2[c])) m[rows_of[i]][c] += coeffs[a] * v;
      }
    for (int i = 0; i < l; ++i) m[i][ncols] = h[i];
    const auto pivots = row_reduce(m, ncols + 1);
    if (!pivots.empty() && pivots.back() == ncols) return std::nullopt;
    RationalVector f(dim);
    for (std::size_t r = 0; r < pivots.size(); ++r) f[l + gm2[pivots[r]]] = m[r][ncols];
    TripleWitness witness{d, h, e, f};
    if (!witness_holds(model, witness)) return std::nullopt;
    return witness;
  };

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, 5);
  static constexpr int values[] = {-3, -2, -1, 1, 2, 3};
  for (int t = 0; t < trials; ++t) {
    std::vector<int> coeffs(g2.size());
    for (auto& c : coeffs) c = values[pick(rng)];
    if (auto found = attempt(coeffs)) return {true, std::move(found)};
  }
  // deterministic sweep over {0,1} coefficient vectors by increasing support
  constexpr int sweep_cap = 256;
  int tried = 0;
  const int n = static_cast<int>(g2.size());
  for (int ones = 1; ones <= n && tried < sweep_cap; ++ones) {
    std::vector<int> coeffs(n, 0);
    std::fill(coeffs.end() - ones, coeffs.end(), 1);
    do {
      if (auto found = attempt(coeffs)) return {true, std::move(found)};
    } while (++tried < sweep_cap && std::next_permutation(coeffs.begin(), coeffs.end()));
  }
  return {};
}

}  // namespace nilspan
