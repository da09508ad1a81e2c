// Shared test fixtures: every group of order at most 8, assorted
// non-group semigroups, and a deterministic relabeling shuffle.

#ifndef ISG_TESTS_FIXTURES_HPP_
#define ISG_TESTS_FIXTURES_HPP_

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "isg/constructions.hpp"
#include "isg/semigroup.hpp"

namespace isg::fixtures {

// Closure of a set of permutations under composition, as a group table.
inline FiniteSemigroup permutation_group(const std::vector<std::vector<int>>& gens) {
  const int deg = static_cast<int>(gens.front().size());
  std::vector<int> id(deg);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<int>> elems{id};
  for (size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : gens) {
      std::vector<int> prod(deg);
      for (int x = 0; x < deg; ++x) prod[x] = g[elems[i][x]];
      if (std::find(elems.begin(), elems.end(), prod) == elems.end()) {
        elems.push_back(prod);
      }
    }
  }
  const int n = static_cast<int>(elems.size());
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      std::vector<int> prod(deg);
      for (int x = 0; x < deg; ++x) prod[x] = elems[b][elems[a][x]];
      table[a * n + b] = static_cast<int>(
          std::find(elems.begin(), elems.end(), prod) - elems.begin());
    }
  }
  return group_from_table(table, n);
}

inline FiniteSemigroup direct_product(const FiniteSemigroup& a,
                                      const FiniteSemigroup& b) {
  const int n = a.order * b.order;
  std::vector<int> table(static_cast<size_t>(n) * n);
  auto idx = [&](int x, int y) { return x * b.order + y; };
  for (int x1 = 0; x1 < a.order; ++x1) {
    for (int y1 = 0; y1 < b.order; ++y1) {
      for (int x2 = 0; x2 < a.order; ++x2) {
        for (int y2 = 0; y2 < b.order; ++y2) {
          table[idx(x1, y1) * n + idx(x2, y2)] = idx(a.mul(x1, x2), b.mul(y1, y2));
        }
      }
    }
  }
  return group_from_table(table, n);
}

inline FiniteSemigroup quaternion_group() {
  // elements s*u with sign s and unit u in {e,i,j,k}; index = sign*4 + unit
  auto unit_mul = [](int u, int v, int& sign) {
    if (u == 0) return v;
    if (v == 0) return u;
    if (u == v) {
      sign ^= 1;
      return 0;
    }
    // i*j=k, j*k=i, k*i=j; reversed order flips the sign
    const int w = 6 - u - v;
    if ((u == 1 && v == 2) || (u == 2 && v == 3) || (u == 3 && v == 1)) return w;
    sign ^= 1;
    return w;
  };
  std::vector<int> table(64);
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) {
      int sign = (x / 4) ^ (y / 4);
      const int u = unit_mul(x % 4, y % 4, sign);
      table[x * 8 + y] = sign * 4 + u;
    }
  }
  return group_from_table(table, 8);
}

struct NamedGroup {
  std::string name;
  FiniteSemigroup group;
};

// All 14 groups of order 1..8, up to isomorphism.
inline std::vector<NamedGroup> all_groups_up_to_8() {
  std::vector<NamedGroup> out;
  for (int n = 1; n <= 8; ++n) {
    out.push_back({"C" + std::to_string(n), cyclic_group(n)});
  }
  out.push_back({"V4", klein_four_group()});
  out.push_back({"S3", permutation_group({{1, 2, 0}, {1, 0, 2}})});
  out.push_back({"D4", permutation_group({{1, 2, 3, 0}, {3, 2, 1, 0}})});
  out.push_back({"Q8", quaternion_group()});
  out.push_back({"C2xC4", direct_product(cyclic_group(2), cyclic_group(4))});
  out.push_back({"C2xC2xC2",
                 direct_product(cyclic_group(2), klein_four_group())});
  return out;
}

// Relabels a semigroup by a seeded random permutation.
inline FiniteSemigroup shuffle(const FiniteSemigroup& s, unsigned seed) {
  std::vector<int> perm(s.order);
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  FiniteSemigroup out;
  out.order = s.order;
  out.table.resize(s.table.size());
  for (int x = 0; x < s.order; ++x) {
    for (int y = 0; y < s.order; ++y) {
      out.table[perm[x] * s.order + perm[y]] = perm[s.mul(x, y)];
    }
  }
  if (s.zero) out.zero = perm[*s.zero];
  if (s.identity) out.identity = perm[*s.identity];
  if (s.has_labels()) {
    out.labels.resize(s.order);
    for (int x = 0; x < s.order; ++x) out.labels[perm[x]] = s.labels[x];
  }
  return out;
}

// x * y = x on two elements; the smallest non-inverse semigroup.
inline FiniteSemigroup left_zero_two() {
  FiniteSemigroup s;
  s.order = 2;
  s.table = {0, 0, 1, 1};
  return s;
}

// Chain semilattice 0 < e < f under meet (min).
inline FiniteSemigroup chain_semilattice(int n) {
  FiniteSemigroup s;
  s.order = n;
  s.table.resize(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) s.table[x * n + y] = std::min(x, y);
  }
  s.zero = 0;
  s.identity = n - 1;
  return s;
}

}  // namespace isg::fixtures

#endif  // ISG_TESTS_FIXTURES_HPP_
