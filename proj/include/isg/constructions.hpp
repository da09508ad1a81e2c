// Builders for the concrete semigroups used throughout: Brandt
// lambda-extensions, matrix units, Rees matrix semigroups, zero/identity
// adjunctions, small groups, symmetric inverse monoids.

#ifndef ISG_CONSTRUCTIONS_HPP_
#define ISG_CONSTRUCTIONS_HPP_

#include "isg/semigroup.hpp"

namespace isg {

// Brandt lambda-extension B_lambda(S) over I_lambda x S^1 x I_lambda u {0}.
// If S has no identity a fresh one is adjoined first (the triples range
// over S^1); a monoid is used as-is. The zero sits at index 0 and triples
// follow in lexicographic (row, elem, col) order; the label table is
// attached to the result.
FiniteSemigroup brandt_extension(const FiniteSemigroup& s, int lambda);

// The semigroup of I_lambda x I_lambda matrix units: the Brandt extension
// of the trivial semigroup. (i,j)(j,k) = (i,k), all other products are 0.
FiniteSemigroup matrix_units(int lambda);

// Sandwich matrix over a group, with kZero marking zero entries. Regular
// means every row and every column has at least one non-zero entry.
struct SandwichMatrix {
  static constexpr int kZero = -1;
  int rows = 0;  // |Lambda|
  int cols = 0;  // |I|
  std::vector<int> entries;  // row-major, group element index or kZero

  int at(int r, int c) const { return entries[r * cols + c]; }
  bool is_regular() const;
};

// Rees matrix semigroup M0[G; I, Lambda; P] with product
// (i,g,l)(j,h,m) = (i, g P[l][j] h, m), or 0 when P[l][j] = 0.
// Zero at index 0, triples in lexicographic (i, g, l) order.
FiniteSemigroup rees_matrix(const FiniteSemigroup& g, const SandwichMatrix& p);

// Adjoin a fresh absorbing / neutral element (at the end of the index
// range; a fresh zero is re-normalized to index 0). With reuse_existing,
// an input that already has one is returned unchanged.
FiniteSemigroup adjoin_zero(const FiniteSemigroup& s, bool reuse_existing = false);
FiniteSemigroup adjoin_identity(const FiniteSemigroup& s, bool reuse_existing = false);

FiniteSemigroup trivial_semigroup();
FiniteSemigroup cyclic_group(int n);
FiniteSemigroup klein_four_group();

// Validates the group axioms and rejects with the failed axiom named.
FiniteSemigroup group_from_table(const std::vector<int>& table, int order);

// The monoid of partial injections on n points, n <= 3 (orders 2, 7, 34).
FiniteSemigroup inverse_symmetric_monoid(int n);

}  // namespace isg

#endif  // ISG_CONSTRUCTIONS_HPP_
