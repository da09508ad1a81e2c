#include "isg/congruence.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "isg/constructions.hpp"

namespace isg {

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

Congruence from_dsu(Dsu& dsu) {
  const int n = static_cast<int>(dsu.parent.size());
  std::vector<int> assignment(n);
  for (int x = 0; x < n; ++x) assignment[x] = dsu.find(x);
  return Congruence::from_assignment(assignment);
}

// Pair closure: merge seeds, then for every merged pair (u,v) and every s
// merge (su, sv) and (us, vs) until stable.
Congruence close_pairs(const FiniteSemigroup& s,
                       const std::vector<std::pair<int, int>>& seeds) {
  Dsu dsu(s.order);
  std::vector<std::pair<int, int>> queue;
  for (auto [x, y] : seeds) {
    if (dsu.unite(x, y)) queue.emplace_back(x, y);
  }
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    const auto [u, v] = queue[qi];
    for (int t = 0; t < s.order; ++t) {
      if (dsu.unite(s.mul(t, u), s.mul(t, v))) {
        queue.emplace_back(s.mul(t, u), s.mul(t, v));
      }
      if (dsu.unite(s.mul(u, t), s.mul(v, t))) {
        queue.emplace_back(s.mul(u, t), s.mul(v, t));
      }
    }
  }
  return from_dsu(dsu);
}

}  // namespace

std::vector<std::vector<int>> Congruence::blocks() const {
  std::vector<std::vector<int>> out(num_blocks);
  for (int x = 0; x < order(); ++x) out[block_of[x]].push_back(x);
  return out;
}

Congruence Congruence::from_assignment(const std::vector<int>& assignment) {
  Congruence c;
  c.block_of.resize(assignment.size());
  std::vector<int> id;
  for (size_t x = 0; x < assignment.size(); ++x) {
    int found = -1;
    for (size_t j = 0; j < id.size() && found < 0; ++j) {
      if (id[j] == assignment[x]) found = static_cast<int>(j);
    }
    if (found < 0) {
      found = static_cast<int>(id.size());
      id.push_back(assignment[x]);
    }
    c.block_of[x] = found;
  }
  c.num_blocks = static_cast<int>(id.size());
  return c;
}

Congruence principal_congruence(const FiniteSemigroup& s, int x, int y) {
  if (x < 0 || x >= s.order || y < 0 || y >= s.order) {
    throw malformed_input_error("principal_congruence: element out of range");
  }
  return close_pairs(s, {{x, y}});
}

CongruenceCheck is_congruence(const FiniteSemigroup& s, const Congruence& c) {
  if (c.order() != s.order) {
    throw validation_error("is_congruence: partition order mismatch");
  }
  for (int b : c.block_of) {
    if (b < 0 || b >= c.num_blocks) {
      throw validation_error("is_congruence: malformed partition");
    }
  }
  for (int x = 0; x < s.order; ++x) {
    for (int y = x + 1; y < s.order; ++y) {
      if (c.block_of[x] != c.block_of[y]) continue;
      for (int t = 0; t < s.order; ++t) {
        if (c.block_of[s.mul(t, x)] != c.block_of[s.mul(t, y)] ||
            c.block_of[s.mul(x, t)] != c.block_of[s.mul(y, t)]) {
          return {false, x, y, t};
        }
      }
    }
  }
  return {};
}

Congruence join_congruences(const FiniteSemigroup& s, const Congruence& c1,
                            const Congruence& c2) {
  // merging the two partitions preserves compatibility, but the closure
  // pass also restores it if a caller hands in plain equivalences
  std::vector<std::pair<int, int>> seeds;
  std::vector<int> rep1(c1.num_blocks, -1), rep2(c2.num_blocks, -1);
  for (int x = 0; x < s.order; ++x) {
    int& r1 = rep1[c1.block_of[x]];
    if (r1 < 0) r1 = x; else seeds.emplace_back(r1, x);
    int& r2 = rep2[c2.block_of[x]];
    if (r2 < 0) r2 = x; else seeds.emplace_back(r2, x);
  }
  return close_pairs(s, seeds);
}

CongruenceLattice all_congruences(const FiniteSemigroup& s, int max_order) {
  if (s.order > max_order) {
    throw size_limit_error("all_congruences: order " + std::to_string(s.order) +
                           " exceeds bound " + std::to_string(max_order));
  }
  std::vector<Congruence> list;
  auto add = [&](Congruence c) -> int {
    for (size_t i = 0; i < list.size(); ++i) {
      if (list[i] == c) return static_cast<int>(i);
    }
    list.push_back(std::move(c));
    return static_cast<int>(list.size()) - 1;
  };

  // identity plus all principal congruences, then close under join
  Congruence identity;
  identity.block_of.resize(s.order);
  std::iota(identity.block_of.begin(), identity.block_of.end(), 0);
  identity.num_blocks = s.order;
  add(identity);
  for (int x = 0; x < s.order; ++x) {
    for (int y = x + 1; y < s.order; ++y) {
      add(principal_congruence(s, x, y));
    }
  }
  for (size_t i = 0; i < list.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      add(join_congruences(s, list[i], list[j]));
    }
  }

  CongruenceLattice lattice;
  lattice.congruences = std::move(list);
  const int m = static_cast<int>(lattice.congruences.size());
  lattice.join.assign(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j <= i; ++j) {
      const auto joined =
          join_congruences(s, lattice.congruences[i], lattice.congruences[j]);
      int at = -1;
      for (int k = 0; k < m && at < 0; ++k) {
        if (lattice.congruences[k] == joined) at = k;
      }
      lattice.join[i][j] = lattice.join[j][i] = at;
    }
  }
  return lattice;
}

CongruenceFreeResult is_congruence_free_serial(const FiniteSemigroup& s) {
  if (s.order < 2) {
    throw domain_error(
        "is_congruence_free: order must be >= 2 (identity and universal "
        "congruences coincide)");
  }
  for (int x = 0; x < s.order; ++x) {
    for (int y = x + 1; y < s.order; ++y) {
      auto c = principal_congruence(s, x, y);
      if (!c.is_universal()) {
        return {false, std::move(c)};
      }
    }
  }
  return {true, std::nullopt};
}

CongruenceFreeResult is_congruence_free(const FiniteSemigroup& s) {
  if (s.order < 2) {
    throw domain_error(
        "is_congruence_free: order must be >= 2 (identity and universal "
        "congruences coincide)");
  }
  const int n = s.order;
  const int64_t total = static_cast<int64_t>(n) * n;
  int64_t best = INT64_MAX;  // smallest encoded non-universal seed pair
#pragma omp parallel for schedule(dynamic, 16) reduction(min : best)
  for (int64_t code = 0; code < total; ++code) {
    const int x = static_cast<int>(code / n);
    const int y = static_cast<int>(code % n);
    if (y <= x || code >= best) continue;
    if (!principal_congruence(s, x, y).is_universal()) {
      best = code;
    }
  }
  if (best == INT64_MAX) return {true, std::nullopt};
  return {false, principal_congruence(s, static_cast<int>(best / n),
                                      static_cast<int>(best % n))};
}

Congruence rees_congruence(const FiniteSemigroup& s, const std::vector<int>& ideal) {
  if (ideal.empty() || !is_ideal(s, ideal)) {
    throw validation_error("rees_congruence: the given set is not a two-sided ideal");
  }
  std::vector<int> assignment(s.order);
  std::iota(assignment.begin(), assignment.end(), 0);
  const int rep = *std::min_element(ideal.begin(), ideal.end());
  for (int v : ideal) assignment[v] = rep;
  return Congruence::from_assignment(assignment);
}

Congruence kernel_of(const ElementMap& f) {
  return Congruence::from_assignment(f.image);
}

HomH hom_h(const FiniteSemigroup& b) {
  if (!b.has_labels()) {
    throw unsupported_structure_error("hom_h: input carries no Brandt label table");
  }
  int lambda = 0;
  for (const auto& label : b.labels) {
    if (!label.is_zero()) lambda = std::max({lambda, label.row + 1, label.col + 1});
  }
  if (lambda < 1) {
    throw unsupported_structure_error("hom_h: label table has no triples");
  }
  HomH out;
  out.lambda = lambda;
  out.map.source_order = b.order;
  out.map.target_order = lambda * lambda + 1;
  out.map.image.resize(b.order);
  for (int x = 0; x < b.order; ++x) {
    const auto& label = b.labels[x];
    // matrix_units(lambda) places (r, c) at 1 + r*lambda + c
    out.map.image[x] = label.is_zero() ? 0 : 1 + label.row * lambda + label.col;
  }
  out.kernel = kernel_of(out.map);
  return out;
}

Quotient quotient(const FiniteSemigroup& s, const Congruence& c) {
  auto check = is_congruence(s, c);
  if (!check.ok) {
    throw validation_error("quotient: partition is not a congruence (pair (" +
                           std::to_string(check.x) + ", " + std::to_string(check.y) +
                           ") under translator " + std::to_string(check.translator) +
                           ")");
  }
  const int m = c.num_blocks;
  std::vector<int> rep(m, -1);
  for (int x = 0; x < s.order; ++x) {
    if (rep[c.block_of[x]] < 0) rep[c.block_of[x]] = x;
  }
  std::vector<int> table(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      table[i * m + j] = c.block_of[s.mul(rep[i], rep[j])];
    }
  }
  Quotient out;
  out.semigroup.order = m;
  out.semigroup.table = std::move(table);
  out.semigroup.zero = find_zero(out.semigroup);
  out.semigroup.identity = find_identity(out.semigroup);
  out.projection.source_order = s.order;
  out.projection.target_order = m;
  out.projection.image = c.block_of;
  return out;
}

}  // namespace isg
