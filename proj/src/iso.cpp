#include "isg/iso.hpp"

#include <algorithm>
#include <climits>
#include <map>

#include "isg/green.hpp"

namespace isg {

namespace {

// Index and period of the cyclic subsemigroup generated by x.
std::pair<int, int> cyclic_profile(const FiniteSemigroup& s, int x) {
  std::vector<int> seen_at(s.order, -1);
  int cur = x, step = 0;
  while (seen_at[cur] < 0) {
    seen_at[cur] = step++;
    cur = s.mul(cur, x);
  }
  return {seen_at[cur], step - seen_at[cur]};
}

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

std::vector<std::vector<int>> invariant_keys(const FiniteSemigroup& s) {
  const int n = s.order;
  const auto g = green_relations(s);
  std::vector<int> rsz(g.num_r, 0), lsz(g.num_l, 0), hsz(g.num_h, 0), jsz(g.num_j, 0);
  for (int x = 0; x < n; ++x) {
    ++rsz[g.r_class[x]];
    ++lsz[g.l_class[x]];
    ++hsz[g.h_class[x]];
    ++jsz[g.j_class[x]];
  }
  std::vector<std::vector<int>> keys(n);
  for (int x = 0; x < n; ++x) {
    auto [idx, per] = cyclic_profile(s, x);
    keys[x] = {s.mul(x, x) == x ? 1 : 0, idx, per,
               rsz[g.r_class[x]], lsz[g.l_class[x]], hsz[g.h_class[x]],
               jsz[g.j_class[x]]};
  }
  return keys;
}

// Invariant coloring of both semigroups at once, refined to a fixpoint,
// with color ids drawn from a shared namespace so that corresponding
// elements of isomorphic semigroups receive equal colors. Refinement keys
// combine the element's color with the multiset of
// (color(y), color(xy), color(yx)) over all y.
std::pair<std::vector<int>, std::vector<int>> joint_coloring(
    const FiniteSemigroup& s, const FiniteSemigroup& t) {
  auto keys = invariant_keys(s);
  auto tkeys = invariant_keys(t);
  keys.insert(keys.end(), tkeys.begin(), tkeys.end());
  auto [color, count] = classify(keys);

  const int n = s.order;
  auto refine_one = [&](const FiniteSemigroup& g, int base, int cnt,
                        const std::vector<int>& col,
                        std::vector<std::vector<int>>& out) {
    for (int x = 0; x < g.order; ++x) {
      std::vector<int> sig;
      sig.reserve(g.order + 1);
      for (int y = 0; y < g.order; ++y) {
        sig.push_back((col[base + y] * cnt + col[base + g.mul(x, y)]) * cnt +
                      col[base + g.mul(y, x)]);
      }
      std::sort(sig.begin(), sig.end());
      sig.push_back(col[base + x]);
      out[base + x] = std::move(sig);
    }
  };

  for (;;) {
    std::vector<std::vector<int>> next(n + t.order);
    refine_one(s, 0, count, color, next);
    refine_one(t, n, count, color, next);
    auto [ncolor, ncount] = classify(next);
    if (ncount == count) break;
    color = std::move(ncolor);
    count = ncount;
  }
  return {std::vector<int>(color.begin(), color.begin() + n),
          std::vector<int>(color.begin() + n, color.end())};
}

struct IsoSearch {
  const FiniteSemigroup& s;
  const FiniteSemigroup& t;
  std::vector<int> cs, ct;
  std::vector<int> f, finv;
  std::vector<std::pair<int, int>> trail;

  IsoSearch(const FiniteSemigroup& s_, const FiniteSemigroup& t_)
      : s(s_), t(t_), f(s_.order, -1), finv(t_.order, -1) {}

  bool try_set(int a, int b) {
    if (f[a] != -1) return f[a] == b;
    if (finv[b] != -1 || cs[a] != ct[b]) return false;
    f[a] = b;
    finv[b] = a;
    trail.emplace_back(a, b);
    return true;
  }

  // Closes the partial map under products with everything already assigned.
  bool propagate(size_t from) {
    for (size_t qi = from; qi < trail.size(); ++qi) {
      const auto [x, y] = trail[qi];
      for (size_t j = 0; j < trail.size(); ++j) {
        const auto [u, v] = trail[j];
        if (!try_set(s.mul(x, u), t.mul(y, v))) return false;
        if (!try_set(s.mul(u, x), t.mul(v, y))) return false;
      }
    }
    return true;
  }

  void rewind(size_t mark) {
    while (trail.size() > mark) {
      auto [a, b] = trail.back();
      trail.pop_back();
      f[a] = -1;
      finv[b] = -1;
    }
  }

  bool extend() {
    // branch on the unassigned source element with the rarest color
    int pick = -1, pick_cands = INT_MAX;
    for (int a = 0; a < s.order; ++a) {
      if (f[a] != -1) continue;
      int cands = 0;
      for (int b = 0; b < t.order; ++b) {
        if (finv[b] == -1 && ct[b] == cs[a]) ++cands;
      }
      if (cands < pick_cands) {
        pick = a;
        pick_cands = cands;
      }
    }
    if (pick < 0) return true;
    for (int b = 0; b < t.order; ++b) {
      if (finv[b] != -1 || ct[b] != cs[pick]) continue;
      const size_t mark = trail.size();
      if (try_set(pick, b) && propagate(mark) && extend()) return true;
      rewind(mark);
    }
    return false;
  }
};

}  // namespace

std::optional<ElementMap> semigroups_isomorphic(const FiniteSemigroup& s,
                                                const FiniteSemigroup& t,
                                                int max_order) {
  if (s.order > max_order || t.order > max_order) {
    throw size_limit_error("semigroups_isomorphic: order exceeds search bound " +
                           std::to_string(max_order));
  }
  if (s.order != t.order) return std::nullopt;

  IsoSearch search(s, t);
  std::tie(search.cs, search.ct) = joint_coloring(s, t);

  std::vector<int> hs = search.cs, ht = search.ct;
  std::sort(hs.begin(), hs.end());
  std::sort(ht.begin(), ht.end());
  if (hs != ht) return std::nullopt;

  if (!search.extend()) return std::nullopt;
  ElementMap map;
  map.source_order = s.order;
  map.target_order = t.order;
  map.image = search.f;
  return map;
}

}  // namespace isg
