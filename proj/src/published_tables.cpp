// Golden data: the b-form column and the basis column of the published
// per-type tables, transcribed row by row.

#include <stdexcept>
#include <utility>

#include "nilspan/spanverify.hpp"

namespace nilspan {

namespace {

using Parts = std::vector<std::pair<int, int>>;  // (part, multiplicity)

OrbitLabel partition(const Parts& spec, VeryEvenTag tag = VeryEvenTag::none) {
  std::vector<int> parts;
  for (auto [part, times] : spec)
    for (int i = 0; i < times; ++i) parts.push_back(part);
  return OrbitLabel::classical(Partition(parts), tag);
}

std::vector<OrbitLabel> names(std::initializer_list<const char*> list) {
  std::vector<OrbitLabel> out;
  for (const char* n : list) out.push_back(OrbitLabel::exceptional(n));
  return out;
}

// Node j (1-based) carries parameter b_{index(j)}; index 0 means weight 0.
template <class F>
RationalSubspace pattern(int l, F index) {
  std::vector<RationalVector> rows;
  for (int j = 1; j <= l; ++j) {
    const int k = index(j);
    if (k == 0) continue;
    if (static_cast<int>(rows.size()) < k) rows.resize(k, RationalVector(l));
    rows[k - 1][j - 1] = 1;
  }
  return RationalSubspace::span(static_cast<std::size_t>(l), rows);
}

RationalSubspace literal(std::initializer_list<int> idx) {
  std::vector<int> v(idx);
  return pattern(static_cast<int>(v.size()), [&](int j) { return v[j - 1]; });
}

}  // namespace

RationalSubspace expected_b_form(const RealFormLabel& given) {
  const RealFormLabel label = given.split_form();
  const int l = label.underlying_type().rank();
  const int p = label.p(), q = label.q();
  switch (label.kind()) {
    case FormKind::sl_R:
      return pattern(l, [&](int j) { return std::min(j, l + 1 - j); });
    case FormKind::su_star: {
      const int k = p / 2;
      return pattern(l, [&](int j) { return j % 2 ? 0 : std::min(j, 2 * k - j) / 2; });
    }
    case FormKind::su:
      if (p > q + 1) return pattern(l, [&](int j) { return j <= q ? j : j >= l + 1 - q ? l + 1 - j : 0; });
      if (p == q + 1) return pattern(l, [&](int j) { return j <= q ? j : 2 * q + 1 - j; });
      return pattern(l, [&](int j) { return std::min(j, 2 * q - j); });
    case FormKind::so:
      if (label.underlying_type().family() == Family::B) {
        if (p == q + 1) return pattern(l, [](int j) { return j; });
        return pattern(l, [&](int j) { return j <= q ? j : 0; });
      }
      if (p > q + 2) return pattern(l, [&](int j) { return j <= q ? j : 0; });
      if (l % 2 == 0) {
        const int m = l / 2;
        if (p == q) return pattern(l, [](int j) { return j; });
        // so(2m+1, 2m-1)
        return pattern(l, [&](int j) { return j <= 2 * m - 2 ? j : 2 * m - 1; });
      }
      {
        // so(2m+2, 2m) and so(2m+1, 2m+1)
        const int m = (l - 1) / 2;
        return pattern(l, [&](int j) { return j <= 2 * m - 1 ? j : 2 * m; });
      }
    case FormKind::sp_R:
      return pattern(l, [](int j) { return j; });
    case FormKind::sp:
      return pattern(l, [&](int j) { return j % 2 == 0 && j <= 2 * q ? j / 2 : 0; });
    case FormKind::so_star:
      if (l % 2 == 0) {
        const int m = l / 2;
        return pattern(l, [&](int j) {
          if (j == 2 * m) return m;
          if (j == 2 * m - 1) return 0;
          return j % 2 ? 0 : j / 2;
        });
      } else {
        const int m = (l - 1) / 2;
        return pattern(l, [&](int j) { return j >= 2 * m ? m : j % 2 ? 0 : j / 2; });
      }
    case FormKind::e6_6:
    case FormKind::e6_2: return literal({1, 2, 3, 2, 1, 4});
    case FormKind::e6_m14: return literal({1, 0, 0, 0, 1, 2});
    case FormKind::e6_m26: return literal({1, 0, 0, 0, 1, 0});
    case FormKind::e7_7: return literal({1, 2, 3, 4, 5, 6, 7});
    case FormKind::e7_m5: return literal({0, 1, 0, 2, 3, 4, 0});
    case FormKind::e7_m25: return literal({1, 2, 0, 0, 0, 3, 0});
    case FormKind::e8_8: return literal({1, 2, 3, 4, 5, 6, 7, 8});
    case FormKind::e8_m24: return literal({1, 2, 3, 0, 0, 0, 4, 0});
    case FormKind::f4_4: return literal({1, 2, 3, 4});
    case FormKind::f4_m20: return literal({0, 0, 0, 1});
    case FormKind::g2_2: return literal({1, 2});
    default: break;
  }
  throw std::logic_error("no b-form row for " + given.to_string());
}

std::vector<OrbitLabel> paper_basis(const RealFormLabel& given) {
  const RealFormLabel label = given.split_form();
  const SimpleType t = label.underlying_type();
  const int l = t.rank();
  const int p = label.p(), q = label.q();
  std::vector<OrbitLabel> out;
  // [2s+1, 1^{n-2s-1}] for s = 1..last, n the size of the defining representation
  auto hooks = [&](int n, int last) {
    for (int s = 1; s <= last; ++s) out.push_back(partition({{2 * s + 1, 1}, {1, n - 2 * s - 1}}));
  };
  // [(2s+1)^2, 1^{n-4s-2}] for s = 1..last
  auto double_hooks = [&](int n, int last) {
    for (int s = 1; s <= last; ++s) out.push_back(partition({{2 * s + 1, 2}, {1, n - 4 * s - 2}}));
  };
  switch (label.kind()) {
    case FormKind::sl_R: {
      const int n = p;
      hooks(n, (n - 1) / 2);
      if (n % 2 == 0) out.push_back(partition({{n, 1}}));
      return out;
    }
    case FormKind::su_star: {
      const int n = p, m = n / 4;
      if (n % 4 == 0) {
        double_hooks(n, m - 1);
        out.push_back(partition({{2 * m, 2}}));
      } else {
        double_hooks(n, m);
      }
      return out;
    }
    case FormKind::su:
      if (p == q) {
        hooks(2 * q, q - 1);
        out.push_back(partition({{2 * q, 1}}));
      } else {
        hooks(p + q, q);
      }
      return out;
    case FormKind::so:
      if (t.family() == Family::B) {
        hooks(2 * l + 1, q);
      } else if (p == q) {
        hooks(2 * l, l - 1);
        if (l % 2 == 0) out.push_back(partition({{2, l}}, VeryEvenTag::I));
      } else {
        hooks(2 * l, q);
      }
      return out;
    case FormKind::sp_R:
      for (int s = 0; s < l; ++s) out.push_back(partition({{2 * s + 2, 1}, {2, l - s - 1}}));
      return out;
    case FormKind::sp:
      if (p == q) {
        double_hooks(2 * l, q - 1);
        out.push_back(partition({{2 * q, 2}}));
      } else {
        double_hooks(2 * l, q);
      }
      return out;
    case FormKind::so_star:
      if (l % 2 == 0) {
        double_hooks(2 * l, l / 2 - 1);
        out.push_back(partition({{2, l}}, VeryEvenTag::I));
      } else {
        double_hooks(2 * l, (l - 1) / 2);
      }
      return out;
    case FormKind::e6_6:
    case FormKind::e6_2: return names({"A_2", "2A_2", "D_4", "E_6"});
    case FormKind::e6_m14: return names({"A_2", "2A_2"});
    case FormKind::e6_m26: return names({"2A_2"});
    case FormKind::e7_7: return names({"3A_1''", "A_2", "2A_2", "D_4", "A_3+A_2+A_1", "A_4+A_2", "E_7"});
    case FormKind::e7_m5: return names({"A_2", "2A_2", "D_4", "A_4+A_2"});
    case FormKind::e7_m25: return names({"3A_1''", "A_2", "2A_2"});
    case FormKind::e8_8:
      return names({"A_2", "2A_2", "D_4", "A_4+A_2", "D_4+A_2", "D_5+A_2", "E_8(a_1)", "E_8"});
    case FormKind::e8_m24: return names({"A_2", "2A_2", "D_4", "A_4+A_2"});
    case FormKind::f4_4: return names({"A_2", "~A_2", "B_3", "F_4"});
    case FormKind::f4_m20: return names({"~A_2"});
    case FormKind::g2_2: return names({"G_2(a_1)", "G_2"});
    default: break;
  }
  throw std::logic_error("no basis row for " + given.to_string());
}

}  // namespace nilspan
