// Finite semigroups as Cayley tables: core predicates and relational machinery.

#ifndef ISG_SEMIGROUP_HPP_
#define ISG_SEMIGROUP_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace isg {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct malformed_input_error : error {
  using error::error;
};

struct unsupported_structure_error : error {
  using error::error;
};

struct missing_zero_error : error {
  using error::error;
};

struct missing_identity_error : error {
  using error::error;
};

struct size_limit_error : error {
  using error::error;
};

struct validation_error : error {
  using error::error;
};

struct domain_error : error {
  using error::error;
};

// Element of a Brandt lambda-extension: either the zero or a triple
// (row, elem, col) with row/col in [0, lambda) and elem an index into S^1.
struct BrandtLabel {
  int row = -1;
  int elem = -1;
  int col = -1;

  static BrandtLabel zero() { return {}; }
  static BrandtLabel triple(int r, int e, int c) { return {r, e, c}; }

  bool is_zero() const { return row < 0; }

  friend bool operator==(const BrandtLabel&, const BrandtLabel&) = default;
};

// A finite semigroup given by its Cayley table over dense element indices
// 0..order-1. Immutable after construction; safe for concurrent reads.
struct FiniteSemigroup {
  int order = 0;
  std::vector<int> table;  // row-major, table[x * order + y] = x * y
  std::optional<int> zero;
  std::optional<int> identity;
  std::vector<std::string> names;    // empty, or one per element
  std::vector<BrandtLabel> labels;   // empty, or one per element

  int mul(int x, int y) const { return table[x * order + y]; }

  bool has_names() const { return !names.empty(); }
  bool has_labels() const { return !labels.empty(); }
};

struct AssociativityReport {
  bool ok = true;
  int x = -1, y = -1, z = -1;  // first violating triple when !ok
};

// Naive triple scan, OpenMP-parallel over the outer index. Reports the
// lexicographically first violating triple, independent of thread count.
AssociativityReport check_associativity(const std::vector<int>& table, int order);

// Serial reference for the parallel scan; kept for testing and benchmarks.
AssociativityReport check_associativity_serial(const std::vector<int>& table,
                                               int order);

// Validates table shape, entry ranges, associativity and the zero/identity
// markers, then assembles the value. Throws malformed_input_error or
// validation_error on any defect.
FiniteSemigroup make_semigroup(int order, std::vector<int> table,
                               std::optional<int> zero = std::nullopt,
                               std::optional<int> identity = std::nullopt);

// Locates an absorbing / neutral element if one exists.
std::optional<int> find_zero(const FiniteSemigroup& s);
std::optional<int> find_identity(const FiniteSemigroup& s);

std::vector<int> idempotents(const FiniteSemigroup& s);

struct InverseCheck {
  bool ok = false;
  // when !ok: either a non-regular element, or a non-commuting idempotent pair
  std::optional<int> irregular;
  std::optional<std::pair<int, int>> idempotent_pair;
};

// True iff every element is regular and idempotents commute.
InverseCheck is_inverse_semigroup(const FiniteSemigroup& s);

// The unique y with x y x = x and y x y = y. Requires an inverse semigroup.
int inverse_of(const FiniteSemigroup& s, int x);

// S has a zero, S*S != {0}, and the only two-sided ideals are {0} and S.
bool is_0_simple(const FiniteSemigroup& s);

// Searches a monoid for p, q with p*q = 1 but q*p != 1. Such a pair would
// generate a bicyclic copy, so every finite monoid must yield nullopt.
std::optional<std::pair<int, int>> find_bicyclic_witness(const FiniteSemigroup& s);

// A total map between element index ranges.
struct ElementMap {
  int source_order = 0;
  int target_order = 0;
  std::vector<int> image;

  int operator()(int x) const { return image[x]; }
  bool is_bijective() const;
};

struct HomCheck {
  bool ok = true;
  int x = -1, y = -1;  // first violating pair when !ok
};

HomCheck is_homomorphism(const FiniteSemigroup& s, const FiniteSemigroup& t,
                         const ElementMap& f);

// A finite semigroup is a group iff its table is a Latin square.
bool is_group(const FiniteSemigroup& s);

// Two-sided principal ideal S^1 x S^1 as a sorted element list.
std::vector<int> principal_two_sided_ideal(const FiniteSemigroup& s, int x);

// True iff the set is a two-sided ideal.
bool is_ideal(const FiniteSemigroup& s, const std::vector<int>& elems);

}  // namespace isg

#endif  // ISG_SEMIGROUP_HPP_
