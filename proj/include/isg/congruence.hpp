// Congruences on finite semigroups: principal-congruence pair closure,
// validity checking, lattice enumeration at small order, congruence-freeness
// with witnesses, Rees congruences, quotients, and the forgetful
// homomorphism from a Brandt extension onto its matrix-unit skeleton.

#ifndef ISG_CONGRUENCE_HPP_
#define ISG_CONGRUENCE_HPP_

#include "isg/semigroup.hpp"

namespace isg {

// A partition of [0, order) compatible with translations. Canonical form:
// block ids are dense and numbered by first occurrence, so blocks are
// implicitly sorted by minimal member and equality is vector comparison.
struct Congruence {
  std::vector<int> block_of;
  int num_blocks = 0;

  int order() const { return static_cast<int>(block_of.size()); }
  bool is_identity() const { return num_blocks == order(); }
  bool is_universal() const { return num_blocks == 1; }
  std::vector<std::vector<int>> blocks() const;

  // Canonicalizes an arbitrary block assignment.
  static Congruence from_assignment(const std::vector<int>& assignment);

  friend bool operator==(const Congruence&, const Congruence&) = default;
};

// Smallest congruence merging x and y (pair closure in a disjoint-set
// structure with a work queue of merged pairs).
Congruence principal_congruence(const FiniteSemigroup& s, int x, int y);

struct CongruenceCheck {
  bool ok = true;
  int x = -1, y = -1, translator = -1;  // s.t. x ~ y but sx !~ sy or xs !~ ys
};

CongruenceCheck is_congruence(const FiniteSemigroup& s, const Congruence& c);

struct CongruenceLattice {
  std::vector<Congruence> congruences;
  std::vector<std::vector<int>> join;  // join[i][j] = index of the join
};

inline constexpr int kDefaultLatticeBound = 48;

// All congruences, as the join closure of the principal ones.
CongruenceLattice all_congruences(const FiniteSemigroup& s,
                                  int max_order = kDefaultLatticeBound);

Congruence join_congruences(const FiniteSemigroup& s, const Congruence& c1,
                            const Congruence& c2);

struct CongruenceFreeResult {
  bool congruence_free = false;
  std::optional<Congruence> witness;  // a proper nontrivial congruence
};

// True iff every principal congruence on a distinct pair is universal.
// Parallel over seed pairs; the witness always comes from the
// lexicographically smallest non-universal seed pair.
CongruenceFreeResult is_congruence_free(const FiniteSemigroup& s);

// Serial reference for the parallel scan; kept for testing and benchmarks.
CongruenceFreeResult is_congruence_free_serial(const FiniteSemigroup& s);

// Collapses a two-sided ideal to a point.
Congruence rees_congruence(const FiniteSemigroup& s, const std::vector<int>& ideal);

// Kernel partition of a total map.
Congruence kernel_of(const ElementMap& f);

struct HomH {
  ElementMap map;       // onto matrix_units(lambda)
  Congruence kernel;    // lambda^2 + 1 blocks
  int lambda = 0;
};

// The forgetful homomorphism h((alpha,g,beta)) = (alpha,beta), h(0) = 0,
// from a Brandt-labeled semigroup onto matrix_units(lambda).
HomH hom_h(const FiniteSemigroup& b);

struct Quotient {
  FiniteSemigroup semigroup;
  ElementMap projection;
};

Quotient quotient(const FiniteSemigroup& s, const Congruence& c);

}  // namespace isg

#endif  // ISG_CONGRUENCE_HPP_
