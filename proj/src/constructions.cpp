#include "isg/constructions.hpp"

#include <algorithm>

namespace isg {

namespace {

int triple_index(int r, int e, int c, int n1, int lambda) {
  return 1 + (r * n1 + e) * lambda + c;
}

}  // namespace

FiniteSemigroup brandt_extension(const FiniteSemigroup& s, int lambda) {
  if (lambda < 1) {
    throw domain_error("brandt_extension: lambda must be >= 1");
  }
  const FiniteSemigroup s1 = s.identity ? s : adjoin_identity(s);
  const int n1 = s1.order;
  const int order = lambda * lambda * n1 + 1;

  std::vector<int> table(static_cast<size_t>(order) * order, 0);
  for (int a = 0; a < lambda; ++a) {
    for (int x = 0; x < n1; ++x) {
      for (int b = 0; b < lambda; ++b) {
        const int left = triple_index(a, x, b, n1, lambda);
        for (int y = 0; y < n1; ++y) {
          for (int d = 0; d < lambda; ++d) {
            // (a,x,b)(b,y,d) = (a,xy,d); mismatched inner indices give 0
            const int right = triple_index(b, y, d, n1, lambda);
            table[left * order + right] =
                triple_index(a, s1.mul(x, y), d, n1, lambda);
          }
        }
      }
    }
  }

  FiniteSemigroup out;
  out.order = order;
  out.table = std::move(table);
  out.zero = 0;
  out.identity = find_identity(out);
  out.labels.resize(order);
  out.labels[0] = BrandtLabel::zero();
  for (int a = 0; a < lambda; ++a) {
    for (int x = 0; x < n1; ++x) {
      for (int b = 0; b < lambda; ++b) {
        out.labels[triple_index(a, x, b, n1, lambda)] = BrandtLabel::triple(a, x, b);
      }
    }
  }
  return out;
}

FiniteSemigroup matrix_units(int lambda) {
  if (lambda < 1) {
    throw domain_error("matrix_units: lambda must be >= 1");
  }
  return brandt_extension(trivial_semigroup(), lambda);
}

bool SandwichMatrix::is_regular() const {
  for (int r = 0; r < rows; ++r) {
    bool has = false;
    for (int c = 0; c < cols && !has; ++c) has = at(r, c) != kZero;
    if (!has) return false;
  }
  for (int c = 0; c < cols; ++c) {
    bool has = false;
    for (int r = 0; r < rows && !has; ++r) has = at(r, c) != kZero;
    if (!has) return false;
  }
  return true;
}

FiniteSemigroup rees_matrix(const FiniteSemigroup& g, const SandwichMatrix& p) {
  if (!is_group(g)) {
    throw domain_error("rees_matrix: the base semigroup is not a group");
  }
  if (p.rows < 1 || p.cols < 1 ||
      p.entries.size() != static_cast<size_t>(p.rows) * p.cols) {
    throw malformed_input_error("rees_matrix: sandwich matrix shape mismatch");
  }
  for (int v : p.entries) {
    if (v != SandwichMatrix::kZero && (v < 0 || v >= g.order)) {
      throw malformed_input_error("rees_matrix: sandwich entry out of range");
    }
  }
  if (!p.is_regular()) {
    throw validation_error("rees_matrix: sandwich matrix is not regular");
  }

  const int ni = p.cols, nl = p.rows, ng = g.order;
  const int order = ni * ng * nl + 1;
  auto index = [&](int i, int ge, int l) { return 1 + (i * ng + ge) * nl + l; };

  std::vector<int> table(static_cast<size_t>(order) * order, 0);
  for (int i = 0; i < ni; ++i) {
    for (int ge = 0; ge < ng; ++ge) {
      for (int l = 0; l < nl; ++l) {
        const int left = index(i, ge, l);
        for (int j = 0; j < ni; ++j) {
          const int pe = p.at(l, j);
          for (int he = 0; he < ng; ++he) {
            for (int m = 0; m < nl; ++m) {
              const int right = index(j, he, m);
              if (pe != SandwichMatrix::kZero) {
                table[left * order + right] =
                    index(i, g.mul(g.mul(ge, pe), he), m);
              }
            }
          }
        }
      }
    }
  }

  FiniteSemigroup out;
  out.order = order;
  out.table = std::move(table);
  out.zero = 0;
  out.identity = find_identity(out);
  return out;
}

FiniteSemigroup adjoin_zero(const FiniteSemigroup& s, bool reuse_existing) {
  if (reuse_existing && s.zero) return s;
  const int order = s.order + 1;
  // the fresh zero takes index 0, existing elements shift up by one
  std::vector<int> table(static_cast<size_t>(order) * order, 0);
  for (int x = 0; x < s.order; ++x) {
    for (int y = 0; y < s.order; ++y) {
      table[(x + 1) * order + (y + 1)] = s.mul(x, y) + 1;
    }
  }
  FiniteSemigroup out;
  out.order = order;
  out.table = std::move(table);
  out.zero = 0;
  if (s.identity) out.identity = *s.identity + 1;
  if (s.has_names()) {
    out.names.push_back("0");
    out.names.insert(out.names.end(), s.names.begin(), s.names.end());
  }
  return out;
}

FiniteSemigroup adjoin_identity(const FiniteSemigroup& s, bool reuse_existing) {
  if (reuse_existing && s.identity) return s;
  const int order = s.order + 1;
  const int one = s.order;  // appended at the end
  std::vector<int> table(static_cast<size_t>(order) * order, 0);
  for (int x = 0; x < s.order; ++x) {
    for (int y = 0; y < s.order; ++y) {
      table[x * order + y] = s.mul(x, y);
    }
  }
  for (int x = 0; x < order; ++x) {
    table[one * order + x] = x;
    table[x * order + one] = x;
  }
  FiniteSemigroup out;
  out.order = order;
  out.table = std::move(table);
  out.zero = s.zero;
  out.identity = one;
  if (s.has_names()) {
    out.names = s.names;
    out.names.push_back("1");
  }
  return out;
}

FiniteSemigroup trivial_semigroup() {
  FiniteSemigroup out;
  out.order = 1;
  out.table = {0};
  out.zero = 0;
  out.identity = 0;
  return out;
}

FiniteSemigroup cyclic_group(int n) {
  if (n < 1) {
    throw domain_error("cyclic_group: n must be >= 1");
  }
  FiniteSemigroup out;
  out.order = n;
  out.table.resize(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      out.table[x * n + y] = (x + y) % n;
    }
  }
  out.identity = 0;
  if (n == 1) out.zero = 0;
  return out;
}

FiniteSemigroup klein_four_group() {
  FiniteSemigroup out;
  out.order = 4;
  out.table.resize(16);
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) {
      out.table[x * 4 + y] = x ^ y;
    }
  }
  out.identity = 0;
  return out;
}

FiniteSemigroup group_from_table(const std::vector<int>& table, int order) {
  if (order < 1 || table.size() != static_cast<size_t>(order) * order) {
    throw malformed_input_error("group_from_table: table is not order x order");
  }
  for (int v : table) {
    if (v < 0 || v >= order) {
      throw validation_error("group axiom failed: closure (entry out of range)");
    }
  }
  auto report = check_associativity(table, order);
  if (!report.ok) {
    throw validation_error("group axiom failed: associativity at (" +
                           std::to_string(report.x) + ", " + std::to_string(report.y) +
                           ", " + std::to_string(report.z) + ")");
  }
  FiniteSemigroup s;
  s.order = order;
  s.table = table;
  auto identity = find_identity(s);
  if (!identity) {
    throw validation_error("group axiom failed: no identity element");
  }
  s.identity = identity;
  for (int x = 0; x < order; ++x) {
    bool has_inverse = false;
    for (int y = 0; y < order && !has_inverse; ++y) {
      has_inverse = s.mul(x, y) == *identity && s.mul(y, x) == *identity;
    }
    if (!has_inverse) {
      throw validation_error("group axiom failed: element " + std::to_string(x) +
                             " has no inverse");
    }
  }
  if (order == 1) s.zero = 0;
  return s;
}

FiniteSemigroup inverse_symmetric_monoid(int n) {
  if (n < 1 || n > 3) {
    throw domain_error("inverse_symmetric_monoid: n must be in [1, 3]");
  }
  // partial injections on n points, as arrays with -1 for "undefined";
  // lexicographic enumeration puts the empty map (the zero) at index 0
  std::vector<std::vector<int>> maps;
  std::vector<int> cur(n, -1);
  auto emit = [&](auto&& self, int pos) -> void {
    if (pos == n) {
      maps.push_back(cur);
      return;
    }
    for (int v = -1; v < n; ++v) {
      bool clash = false;
      for (int j = 0; j < pos && !clash; ++j) clash = v >= 0 && cur[j] == v;
      if (clash) continue;
      cur[pos] = v;
      self(self, pos + 1);
    }
    cur[pos] = -1;
  };
  emit(emit, 0);

  const int order = static_cast<int>(maps.size());
  auto index_of = [&](const std::vector<int>& m) {
    return static_cast<int>(std::lower_bound(maps.begin(), maps.end(), m) -
                            maps.begin());
  };

  FiniteSemigroup out;
  out.order = order;
  out.table.resize(static_cast<size_t>(order) * order);
  for (int f = 0; f < order; ++f) {
    for (int g = 0; g < order; ++g) {
      std::vector<int> comp(n, -1);  // apply f, then g
      for (int x = 0; x < n; ++x) {
        const int fx = maps[f][x];
        if (fx >= 0) comp[x] = maps[g][fx];
      }
      out.table[f * order + g] = index_of(comp);
    }
  }
  out.zero = 0;
  out.identity = find_identity(out);
  return out;
}

}  // namespace isg
