#include "isg/green.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace isg {

namespace {

// Renumbers arbitrary keys into dense class ids by first occurrence.
std::pair<std::vector<int>, int> classify(const std::vector<std::vector<int>>& keys) {
  std::map<std::vector<int>, int> ids;
  std::vector<int> cls(keys.size());
  int next = 0;
  for (size_t x = 0; x < keys.size(); ++x) {
    auto [it, fresh] = ids.try_emplace(keys[x], next);
    if (fresh) ++next;
    cls[x] = it->second;
  }
  return {cls, next};
}

std::vector<int> right_ideal(const FiniteSemigroup& s, int x) {
  std::vector<char> in(s.order, 0);
  in[x] = 1;
  for (int a = 0; a < s.order; ++a) in[s.mul(x, a)] = 1;
  std::vector<int> out;
  for (int v = 0; v < s.order; ++v) {
    if (in[v]) out.push_back(v);
  }
  return out;
}

std::vector<int> left_ideal(const FiniteSemigroup& s, int x) {
  std::vector<char> in(s.order, 0);
  in[x] = 1;
  for (int a = 0; a < s.order; ++a) in[s.mul(a, x)] = 1;
  std::vector<int> out;
  for (int v = 0; v < s.order; ++v) {
    if (in[v]) out.push_back(v);
  }
  return out;
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::pair<std::vector<int>, int> renumber(Dsu& dsu, int n) {
  std::vector<int> cls(n, -1);
  int next = 0;
  std::vector<int> rep_id(n, -1);
  for (int x = 0; x < n; ++x) {
    int r = dsu.find(x);
    if (rep_id[r] < 0) rep_id[r] = next++;
    cls[x] = rep_id[r];
  }
  return {cls, next};
}

}  // namespace

GreenClasses green_relations(const FiniteSemigroup& s) {
  const int n = s.order;
  GreenClasses g;

  std::vector<std::vector<int>> rkeys(n), lkeys(n), jkeys(n);
  for (int x = 0; x < n; ++x) {
    rkeys[x] = right_ideal(s, x);
    lkeys[x] = left_ideal(s, x);
    jkeys[x] = principal_two_sided_ideal(s, x);
  }
  std::tie(g.r_class, g.num_r) = classify(rkeys);
  std::tie(g.l_class, g.num_l) = classify(lkeys);
  std::tie(g.j_class, g.num_j) = classify(jkeys);

  // H = R meet L
  std::vector<std::vector<int>> hkeys(n);
  for (int x = 0; x < n; ++x) hkeys[x] = {g.r_class[x], g.l_class[x]};
  std::tie(g.h_class, g.num_h) = classify(hkeys);

  // D = R join L, via union-find over both partitions
  Dsu dsu(n);
  std::vector<int> r_rep(g.num_r, -1), l_rep(g.num_l, -1);
  for (int x = 0; x < n; ++x) {
    int& rr = r_rep[g.r_class[x]];
    if (rr < 0) rr = x; else dsu.unite(x, rr);
    int& lr = l_rep[g.l_class[x]];
    if (lr < 0) lr = x; else dsu.unite(x, lr);
  }
  std::tie(g.d_class, g.num_d) = renumber(dsu, n);

  return g;
}

std::vector<int> h_class_of(const FiniteSemigroup& s, const GreenClasses& g, int x) {
  std::vector<int> out;
  for (int y = 0; y < s.order; ++y) {
    if (g.h_class[y] == g.h_class[x]) out.push_back(y);
  }
  return out;
}

}  // namespace isg
