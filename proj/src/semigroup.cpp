#include "isg/semigroup.hpp"

#include <algorithm>
#include <cstdint>

namespace isg {

namespace {

// Encodes a triple for min-reduction; INT64_MAX means "no violation".
int64_t encode_triple(int x, int y, int z, int n) {
  return (static_cast<int64_t>(x) * n + y) * n + z;
}

}  // namespace

AssociativityReport check_associativity_serial(const std::vector<int>& table,
                                               int order) {
  for (int x = 0; x < order; ++x) {
    for (int y = 0; y < order; ++y) {
      const int xy = table[x * order + y];
      for (int z = 0; z < order; ++z) {
        if (table[xy * order + z] != table[x * order + table[y * order + z]]) {
          return {false, x, y, z};
        }
      }
    }
  }
  return {};
}

AssociativityReport check_associativity(const std::vector<int>& table,
                                        int order) {
  if (order < 0 || table.size() != static_cast<size_t>(order) * order) {
    throw malformed_input_error("check_associativity: table is not order x order");
  }
  for (int v : table) {
    if (v < 0 || v >= order) {
      throw malformed_input_error("check_associativity: entry out of range [0, order)");
    }
  }
  int64_t best = INT64_MAX;
#pragma omp parallel for schedule(static) reduction(min : best)
  for (int x = 0; x < order; ++x) {
    int64_t local = INT64_MAX;
    for (int y = 0; y < order && local == INT64_MAX; ++y) {
      const int xy = table[x * order + y];
      for (int z = 0; z < order; ++z) {
        if (table[xy * order + z] != table[x * order + table[y * order + z]]) {
          local = encode_triple(x, y, z, order);
          break;
        }
      }
    }
    if (local < best) best = local;
  }
  if (best == INT64_MAX) return {};
  const int z = static_cast<int>(best % order);
  const int y = static_cast<int>((best / order) % order);
  const int x = static_cast<int>(best / order / order);
  return {false, x, y, z};
}

FiniteSemigroup make_semigroup(int order, std::vector<int> table,
                               std::optional<int> zero,
                               std::optional<int> identity) {
  if (order <= 0) {
    throw malformed_input_error("semigroup order must be positive");
  }
  auto report = check_associativity(table, order);
  if (!report.ok) {
    throw validation_error("table is not associative: violating triple (" +
                           std::to_string(report.x) + ", " + std::to_string(report.y) +
                           ", " + std::to_string(report.z) + ")");
  }
  FiniteSemigroup s;
  s.order = order;
  s.table = std::move(table);
  if (zero) {
    if (*zero < 0 || *zero >= order) {
      throw validation_error("zero marker out of range");
    }
    for (int x = 0; x < order; ++x) {
      if (s.mul(*zero, x) != *zero || s.mul(x, *zero) != *zero) {
        throw validation_error("zero marker points at a non-absorbing element");
      }
    }
    s.zero = zero;
  }
  if (identity) {
    if (*identity < 0 || *identity >= order) {
      throw validation_error("identity marker out of range");
    }
    for (int x = 0; x < order; ++x) {
      if (s.mul(*identity, x) != x || s.mul(x, *identity) != x) {
        throw validation_error("identity marker points at a non-neutral element");
      }
    }
    s.identity = identity;
  }
  return s;
}

std::optional<int> find_zero(const FiniteSemigroup& s) {
  for (int z = 0; z < s.order; ++z) {
    bool absorbing = true;
    for (int x = 0; x < s.order && absorbing; ++x) {
      absorbing = s.mul(z, x) == z && s.mul(x, z) == z;
    }
    if (absorbing) return z;
  }
  return std::nullopt;
}

std::optional<int> find_identity(const FiniteSemigroup& s) {
  for (int e = 0; e < s.order; ++e) {
    bool neutral = true;
    for (int x = 0; x < s.order && neutral; ++x) {
      neutral = s.mul(e, x) == x && s.mul(x, e) == x;
    }
    if (neutral) return e;
  }
  return std::nullopt;
}

std::vector<int> idempotents(const FiniteSemigroup& s) {
  std::vector<int> out;
  for (int x = 0; x < s.order; ++x) {
    if (s.mul(x, x) == x) out.push_back(x);
  }
  return out;
}

InverseCheck is_inverse_semigroup(const FiniteSemigroup& s) {
  InverseCheck result;
  for (int x = 0; x < s.order; ++x) {
    bool regular = false;
    for (int y = 0; y < s.order && !regular; ++y) {
      regular = s.mul(s.mul(x, y), x) == x;
    }
    if (!regular) {
      result.irregular = x;
      return result;
    }
  }
  const auto es = idempotents(s);
  for (size_t i = 0; i < es.size(); ++i) {
    for (size_t j = i + 1; j < es.size(); ++j) {
      if (s.mul(es[i], es[j]) != s.mul(es[j], es[i])) {
        result.idempotent_pair = {es[i], es[j]};
        return result;
      }
    }
  }
  result.ok = true;
  return result;
}

int inverse_of(const FiniteSemigroup& s, int x) {
  int found = -1;
  for (int y = 0; y < s.order; ++y) {
    if (s.mul(s.mul(x, y), x) == x && s.mul(s.mul(y, x), y) == y) {
      if (found >= 0) {
        throw unsupported_structure_error(
            "inverse_of: element " + std::to_string(x) +
            " has multiple inverses (not an inverse semigroup)");
      }
      found = y;
    }
  }
  if (found < 0) {
    throw unsupported_structure_error("inverse_of: element " + std::to_string(x) +
                                      " is not regular");
  }
  return found;
}

std::vector<int> principal_two_sided_ideal(const FiniteSemigroup& s, int x) {
  const int n = s.order;
  std::vector<char> in(n, 0);
  in[x] = 1;
  // S^1 x S^1 = {x} u xS u Sx u SxS
  std::vector<int> sx(n);
  for (int a = 0; a < n; ++a) {
    in[s.mul(x, a)] = 1;
    sx[a] = s.mul(a, x);
    in[sx[a]] = 1;
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      in[s.mul(sx[a], b)] = 1;
    }
  }
  std::vector<int> out;
  for (int v = 0; v < n; ++v) {
    if (in[v]) out.push_back(v);
  }
  return out;
}

bool is_ideal(const FiniteSemigroup& s, const std::vector<int>& elems) {
  std::vector<char> in(s.order, 0);
  for (int v : elems) {
    if (v < 0 || v >= s.order) return false;
    in[v] = 1;
  }
  for (int a : elems) {
    for (int x = 0; x < s.order; ++x) {
      if (!in[s.mul(a, x)] || !in[s.mul(x, a)]) return false;
    }
  }
  return true;
}

bool is_0_simple(const FiniteSemigroup& s) {
  if (!s.zero) {
    throw missing_zero_error("is_0_simple: no zero marked");
  }
  const int zero = *s.zero;
  if (s.order < 2) return false;
  bool nonzero_product = false;
  for (int x = 0; x < s.order && !nonzero_product; ++x) {
    for (int y = 0; y < s.order && !nonzero_product; ++y) {
      nonzero_product = s.mul(x, y) != zero;
    }
  }
  if (!nonzero_product) return false;
  // every nonzero element generates the whole semigroup as an ideal
  for (int x = 0; x < s.order; ++x) {
    if (x == zero) continue;
    if (principal_two_sided_ideal(s, x).size() != static_cast<size_t>(s.order)) {
      return false;
    }
  }
  return true;
}

std::optional<std::pair<int, int>> find_bicyclic_witness(const FiniteSemigroup& s) {
  if (!s.identity) {
    throw missing_identity_error("find_bicyclic_witness: no identity marked");
  }
  const int one = *s.identity;
  for (int p = 0; p < s.order; ++p) {
    for (int q = 0; q < s.order; ++q) {
      if (s.mul(p, q) == one && s.mul(q, p) != one) {
        return std::make_pair(p, q);
      }
    }
  }
  return std::nullopt;
}

bool ElementMap::is_bijective() const {
  if (source_order != target_order) return false;
  std::vector<char> seen(target_order, 0);
  for (int v : image) {
    if (v < 0 || v >= target_order || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

HomCheck is_homomorphism(const FiniteSemigroup& s, const FiniteSemigroup& t,
                         const ElementMap& f) {
  if (f.source_order != s.order || f.target_order != t.order ||
      f.image.size() != static_cast<size_t>(s.order)) {
    throw malformed_input_error("is_homomorphism: map arity mismatch");
  }
  for (int v : f.image) {
    if (v < 0 || v >= t.order) {
      throw malformed_input_error("is_homomorphism: image out of range");
    }
  }
  for (int x = 0; x < s.order; ++x) {
    for (int y = 0; y < s.order; ++y) {
      if (f(s.mul(x, y)) != t.mul(f(x), f(y))) {
        return {false, x, y};
      }
    }
  }
  return {};
}

bool is_group(const FiniteSemigroup& s) {
  const int n = s.order;
  for (int x = 0; x < n; ++x) {
    std::vector<char> row(n, 0), col(n, 0);
    for (int y = 0; y < n; ++y) {
      row[s.mul(x, y)] = 1;
      col[s.mul(y, x)] = 1;
    }
    for (int v = 0; v < n; ++v) {
      if (!row[v] || !col[v]) return false;
    }
  }
  return true;
}

}  // namespace isg
