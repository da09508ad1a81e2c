#include "isg/structure.hpp"

#include <algorithm>

#include "isg/constructions.hpp"
#include "isg/green.hpp"

namespace isg {

bool is_primitive_idempotent(const FiniteSemigroup& s, int e) {
  if (!s.zero) {
    throw missing_zero_error("is_primitive_idempotent: no zero marked");
  }
  if (e < 0 || e >= s.order || s.mul(e, e) != e) {
    throw domain_error("is_primitive_idempotent: not an idempotent");
  }
  if (e == *s.zero) return false;
  for (int f : idempotents(s)) {
    if (f == *s.zero || f == e) continue;
    if (s.mul(e, f) == f && s.mul(f, e) == f) return false;
  }
  return true;
}

bool is_completely_0_simple_inverse(const FiniteSemigroup& s) {
  if (!s.zero) {
    throw missing_zero_error("is_completely_0_simple_inverse: no zero marked");
  }
  if (!is_inverse_semigroup(s).ok || !is_0_simple(s)) return false;
  for (int e : idempotents(s)) {
    if (e != *s.zero && !is_primitive_idempotent(s, e)) return false;
  }
  return true;
}

std::vector<int> BlockPartition::block_elements(int alpha, int beta) const {
  std::vector<int> out;
  for (size_t x = 0; x < block_of.size(); ++x) {
    if (block_of[x] == std::make_pair(alpha, beta)) out.push_back(static_cast<int>(x));
  }
  return out;
}

BlockPartition block_partition(const FiniteSemigroup& s) {
  if (!is_completely_0_simple_inverse(s)) {
    throw unsupported_structure_error(
        "block_partition: input is not a completely 0-simple inverse semigroup");
  }
  BlockPartition out;
  out.zero = *s.zero;
  std::vector<int> coord_of(s.order, -1);
  for (int e : idempotents(s)) {
    if (e == out.zero) continue;
    coord_of[e] = static_cast<int>(out.idempotent_of_coord.size());
    out.idempotent_of_coord.push_back(e);
  }
  out.lambda = static_cast<int>(out.idempotent_of_coord.size());
  out.block_of.assign(s.order, {-1, -1});
  for (int x = 0; x < s.order; ++x) {
    if (x == out.zero) continue;
    const int xi = inverse_of(s, x);
    out.block_of[x] = {coord_of[s.mul(x, xi)], coord_of[s.mul(xi, x)]};
  }
  return out;
}

namespace {

// Smallest-index representative of block (0, beta); r_0 lives in the base
// block itself.
std::vector<int> transversal(const FiniteSemigroup& s, const BlockPartition& blocks) {
  std::vector<int> reps(blocks.lambda, -1);
  for (int beta = 0; beta < blocks.lambda; ++beta) {
    const auto elems = blocks.block_elements(0, beta);
    if (elems.empty()) {
      throw error("internal invariant violated: empty block in a completely "
                  "0-simple inverse semigroup");
    }
    reps[beta] = elems.front();
  }
  return reps;
}

}  // namespace

std::vector<std::pair<int, int>> block_translation(const FiniteSemigroup& s,
                                                   const BlockPartition& blocks,
                                                   std::pair<int, int> from,
                                                   std::pair<int, int> to) {
  auto in_range = [&](std::pair<int, int> c) {
    return c.first >= 0 && c.first < blocks.lambda && c.second >= 0 &&
           c.second < blocks.lambda;
  };
  if (!in_range(from) || !in_range(to)) {
    throw domain_error("block_translation: block coordinates out of range");
  }
  const auto reps = transversal(s, blocks);
  const auto [alpha, beta] = from;
  const auto [gamma, delta] = to;
  // u in block (gamma, alpha), v in block (beta, delta); x -> u x v
  const int u = s.mul(inverse_of(s, reps[gamma]), reps[alpha]);
  const int v = s.mul(inverse_of(s, reps[beta]), reps[delta]);
  std::vector<std::pair<int, int>> out;
  for (int x : blocks.block_elements(alpha, beta)) {
    out.emplace_back(x, s.mul(s.mul(u, x), v));
  }
  return out;
}

FiniteSemigroup extract_maximal_subgroup(const FiniteSemigroup& s, int e,
                                         std::vector<int>* elements) {
  if (e < 0 || e >= s.order || s.mul(e, e) != e) {
    throw domain_error("extract_maximal_subgroup: not an idempotent");
  }
  const auto g = green_relations(s);
  const auto elems = h_class_of(s, g, e);
  const int m = static_cast<int>(elems.size());
  std::vector<int> pos(s.order, -1);
  for (int i = 0; i < m; ++i) pos[elems[i]] = i;

  FiniteSemigroup out;
  out.order = m;
  out.table.resize(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const int prod = s.mul(elems[i], elems[j]);
      if (pos[prod] < 0) {
        throw error("internal invariant violated: H-class of an idempotent is "
                    "not closed under the product");
      }
      out.table[i * m + j] = pos[prod];
    }
  }
  out.identity = pos[e];
  if (m == 1) out.zero = 0;
  if (!is_group(out)) {
    throw error("internal invariant violated: H-class of an idempotent is not "
                "a group");
  }
  if (elements) *elements = elems;
  return out;
}

BrandtDecomposition decompose_brandt(const FiniteSemigroup& s) {
  BrandtDecomposition out;
  out.blocks = block_partition(s);  // also enforces the precondition
  out.lambda = out.blocks.lambda;
  const int lambda = out.lambda;

  // H = block (0,0) with the induced product
  out.group_elements = out.blocks.block_elements(0, 0);
  const int gsize = static_cast<int>(out.group_elements.size());
  std::vector<int> pos(s.order, -1);
  for (int i = 0; i < gsize; ++i) pos[out.group_elements[i]] = i;
  out.group.order = gsize;
  out.group.table.resize(static_cast<size_t>(gsize) * gsize);
  for (int i = 0; i < gsize; ++i) {
    for (int j = 0; j < gsize; ++j) {
      const int prod = s.mul(out.group_elements[i], out.group_elements[j]);
      if (pos[prod] < 0) {
        throw error("internal invariant violated: base block is not closed");
      }
      out.group.table[i * gsize + j] = pos[prod];
    }
  }
  out.group.identity = pos[out.blocks.idempotent_of_coord[0]];
  if (gsize == 1) out.group.zero = 0;
  if (!is_group(out.group)) {
    throw error("internal invariant violated: base block is not a group");
  }

  // x in block (beta, gamma) maps to the triple (beta, r_beta x r_gamma^-1, gamma)
  const auto reps = transversal(s, out.blocks);
  out.iso.source_order = s.order;
  out.iso.target_order = lambda * lambda * gsize + 1;
  out.iso.image.assign(s.order, 0);
  for (int x = 0; x < s.order; ++x) {
    if (x == out.blocks.zero) continue;
    const auto [beta, gamma] = out.blocks.block_of[x];
    const int h = s.mul(s.mul(reps[beta], x), inverse_of(s, reps[gamma]));
    if (pos[h] < 0) {
      throw error("internal invariant violated: translated element left the "
                  "base block");
    }
    out.iso.image[x] = 1 + (beta * gsize + pos[h]) * lambda + gamma;
  }

  const auto target = brandt_extension(out.group, lambda);
  if (!out.iso.is_bijective() || !is_homomorphism(s, target, out.iso).ok) {
    throw error("internal invariant violated: decomposition map is not an "
                "isomorphism");
  }
  return out;
}

}  // namespace isg
