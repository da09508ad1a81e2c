// Structural analysis of finite completely 0-simple inverse semigroups:
// primitivity, the xx^-1 / x^-1x block partition, translation bijections
// between blocks, and Brandt decomposition with an explicit isomorphism.

#ifndef ISG_STRUCTURE_HPP_
#define ISG_STRUCTURE_HPP_

#include "isg/semigroup.hpp"

namespace isg {

// e is primitive iff e != 0 and the only idempotents f with f = ef = fe
// are 0 and e itself.
bool is_primitive_idempotent(const FiniteSemigroup& s, int e);

// 0-simple inverse semigroup whose nonzero idempotents are all primitive.
bool is_completely_0_simple_inverse(const FiniteSemigroup& s);

// Partition of S \ {0} into lambda^2 blocks: x lies in block (alpha, beta)
// iff x x^-1 = e_alpha and x^-1 x = e_beta, the nonzero idempotents being
// indexed in ascending element order.
struct BlockPartition {
  int lambda = 0;
  int zero = 0;
  std::vector<int> idempotent_of_coord;       // coord in [0, lambda) -> element
  std::vector<std::pair<int, int>> block_of;  // per element; (-1,-1) at zero

  std::vector<int> block_elements(int alpha, int beta) const;
};

BlockPartition block_partition(const FiniteSemigroup& s);

// Translation bijection s -> u s v from block (alpha, beta) onto block
// (gamma, delta), with u, v built from the smallest-index transversal of
// the partition. Returned as (source element, image element) pairs in
// ascending source order.
std::vector<std::pair<int, int>> block_translation(const FiniteSemigroup& s,
                                                   const BlockPartition& blocks,
                                                   std::pair<int, int> from,
                                                   std::pair<int, int> to);

struct BrandtDecomposition {
  int lambda = 0;
  FiniteSemigroup group;      // the maximal subgroup at the base idempotent
  std::vector<int> group_elements;  // group index -> element of S
  ElementMap iso;             // S -> brandt_extension(group, lambda)
  BlockPartition blocks;
};

// Recovers (lambda, G) and an explicit isomorphism onto B_lambda(G) from a
// completely 0-simple inverse semigroup. Base idempotent and transversal
// representatives are the smallest element indices, so the result is
// canonical for a fixed labeling.
BrandtDecomposition decompose_brandt(const FiniteSemigroup& s);

// The H-class of an idempotent with the induced operation, verified to be
// a group. elements, when given, receives the class in ascending order.
FiniteSemigroup extract_maximal_subgroup(const FiniteSemigroup& s, int e,
                                         std::vector<int>* elements = nullptr);

}  // namespace isg

#endif  // ISG_STRUCTURE_HPP_
