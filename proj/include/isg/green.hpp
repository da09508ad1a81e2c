#ifndef ISG_GREEN_HPP_
#define ISG_GREEN_HPP_

#include "isg/semigroup.hpp"

namespace isg {

// Green's equivalences via principal-ideal equality. Class ids are dense
// and numbered by first occurrence, so equal partitions compare equal.
struct GreenClasses {
  std::vector<int> r_class;
  std::vector<int> l_class;
  std::vector<int> h_class;
  std::vector<int> d_class;
  std::vector<int> j_class;
  int num_r = 0, num_l = 0, num_h = 0, num_d = 0, num_j = 0;
};

GreenClasses green_relations(const FiniteSemigroup& s);

// Elements of the H-class of x, sorted ascending.
std::vector<int> h_class_of(const FiniteSemigroup& s, const GreenClasses& g, int x);

}  // namespace isg

#endif  // ISG_GREEN_HPP_
