// Exact arithmetic in the bicyclic monoid: the monoid generated by p and q
// subject to pq = 1, with unique normal forms q^a p^b.

#ifndef ISG_BICYCLIC_HPP_
#define ISG_BICYCLIC_HPP_

#include <cstdint>
#include <string>

#include "isg/semigroup.hpp"

namespace isg {

struct BicyclicElement {
  int64_t a = 0;  // power of q
  int64_t b = 0;  // power of p

  friend bool operator==(const BicyclicElement&, const BicyclicElement&) = default;
};

inline constexpr BicyclicElement kBicyclicOne{0, 0};
inline constexpr BicyclicElement kBicyclicP{0, 1};
inline constexpr BicyclicElement kBicyclicQ{1, 0};

BicyclicElement bicyclic_mul(BicyclicElement x, BicyclicElement y);
BicyclicElement bicyclic_inverse(BicyclicElement x);
bool bicyclic_is_idempotent(BicyclicElement x);

struct parse_error : error {
  size_t position;
  parse_error(const std::string& what, size_t pos)
      : error(what + " at position " + std::to_string(pos)), position(pos) {}
};

// Grammar: `1 | [q[^a]][ ][p[^b]]`, omitted exponent meaning 1.
BicyclicElement bicyclic_parse(const std::string& text);
std::string bicyclic_format(BicyclicElement x);

}  // namespace isg

#endif  // ISG_BICYCLIC_HPP_
