#ifndef ISG_ISO_HPP_
#define ISG_ISO_HPP_

#include "isg/semigroup.hpp"

namespace isg {

inline constexpr int kDefaultIsoBound = 64;

// Backtracking isomorphism search with invariant pruning (idempotency,
// cyclic subsemigroup size, Green class sizes, diagonal profile). Returns
// an explicit isomorphism when one exists.
std::optional<ElementMap> semigroups_isomorphic(const FiniteSemigroup& s,
                                                const FiniteSemigroup& t,
                                                int max_order = kDefaultIsoBound);

}  // namespace isg

#endif  // ISG_ISO_HPP_
