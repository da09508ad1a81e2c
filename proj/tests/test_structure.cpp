#include "doctest.h"

#include <algorithm>
#include <map>

#include "isg/congruence.hpp"
#include "isg/constructions.hpp"
#include "isg/iso.hpp"
#include "isg/structure.hpp"

#include "fixtures.hpp"

using namespace isg;

TEST_CASE("primitive idempotents") {
  const auto b = brandt_extension(cyclic_group(3), 2);
  for (int e : idempotents(b)) {
    if (e == 0) continue;
    CHECK(is_primitive_idempotent(b, e));
  }
  CHECK(is_completely_0_simple_inverse(b));

  // chain 0 < e < f: e <= f, so f is not primitive
  const auto chain = fixtures::chain_semilattice(3);
  CHECK(is_primitive_idempotent(chain, 1));
  CHECK_FALSE(is_primitive_idempotent(chain, 2));
  CHECK_FALSE(is_completely_0_simple_inverse(chain));

  CHECK(is_completely_0_simple_inverse(brandt_extension(cyclic_group(2), 1)));

  CHECK_THROWS_AS(is_primitive_idempotent(b, 2), domain_error);
  CHECK_THROWS_AS(is_completely_0_simple_inverse(cyclic_group(3)),
                  missing_zero_error);
}

TEST_CASE("block_partition of B_2(Z_2): four blocks of size two plus zero") {
  const auto b = brandt_extension(cyclic_group(2), 2);
  const auto blocks = block_partition(b);
  CHECK(blocks.lambda == 2);
  std::map<std::pair<int, int>, int> sizes;
  for (int x = 0; x < b.order; ++x) {
    if (x == blocks.zero) continue;
    ++sizes[blocks.block_of[x]];
  }
  CHECK(sizes.size() == 4);
  for (const auto& [coord, size] : sizes) CHECK(size == 2);
  // x lies in block (a,b) iff x x^-1 = e_a and x^-1 x = e_b
  for (int x = 0; x < b.order; ++x) {
    if (x == blocks.zero) continue;
    const auto [a, c] = blocks.block_of[x];
    const int xi = inverse_of(b, x);
    CHECK(b.mul(x, xi) == blocks.idempotent_of_coord[a]);
    CHECK(b.mul(xi, x) == blocks.idempotent_of_coord[c]);
  }
}

TEST_CASE("block_partition of B_1(G) is a single block") {
  const auto b = brandt_extension(cyclic_group(5), 1);
  const auto blocks = block_partition(b);
  CHECK(blocks.lambda == 1);
  CHECK(blocks.block_elements(0, 0).size() == 5);
}

TEST_CASE("block_partition rejects unsupported structures") {
  CHECK_THROWS_AS(block_partition(fixtures::chain_semilattice(3)),
                  unsupported_structure_error);
}

TEST_CASE("block_translation") {
  const auto b = brandt_extension(cyclic_group(2), 2);
  const auto blocks = block_partition(b);

  // same coordinates: the identity map on the block
  for (auto [x, y] : block_translation(b, blocks, {0, 1}, {0, 1})) CHECK(x == y);

  // (1,1) -> (2,2): a bijection of size 2
  const auto t = block_translation(b, blocks, {0, 0}, {1, 1});
  CHECK(t.size() == 2);
  std::vector<int> images;
  for (auto [x, y] : t) {
    CHECK(blocks.block_of[y] == std::make_pair(1, 1));
    images.push_back(y);
  }
  std::sort(images.begin(), images.end());
  CHECK(std::unique(images.begin(), images.end()) == images.end());

  // forward then back is the identity
  const auto fwd = block_translation(b, blocks, {0, 1}, {1, 0});
  const auto back = block_translation(b, blocks, {1, 0}, {0, 1});
  for (auto [x, y] : fwd) {
    const auto at = std::find_if(back.begin(), back.end(),
                                 [y = y](auto p) { return p.first == y; });
    REQUIRE(at != back.end());
    CHECK(at->second == x);
  }

  CHECK_THROWS_AS(block_translation(b, blocks, {0, 5}, {0, 0}), domain_error);
}

TEST_CASE("block translations compose functorially") {
  const auto b = fixtures::shuffle(brandt_extension(cyclic_group(3), 3), 7);
  const auto blocks = block_partition(b);
  const std::vector<std::pair<int, int>> coords = {{0, 0}, {1, 2}, {2, 1}};
  for (auto from : coords) {
    for (auto mid : coords) {
      for (auto to : coords) {
        const auto ab = block_translation(b, blocks, from, mid);
        const auto bc = block_translation(b, blocks, mid, to);
        const auto ac = block_translation(b, blocks, from, to);
        for (size_t i = 0; i < ab.size(); ++i) {
          const int via = std::find_if(bc.begin(), bc.end(), [&](auto p) {
                            return p.first == ab[i].second;
                          })->second;
          CHECK(via == ac[i].second);
        }
      }
    }
  }
}

TEST_CASE("decompose_brandt round-trips shuffled Brandt extensions") {
  const auto b = fixtures::shuffle(brandt_extension(cyclic_group(2), 3), 99);
  const auto dec = decompose_brandt(b);
  CHECK(dec.lambda == 3);
  CHECK(dec.group.order == 2);
  CHECK(dec.iso.is_bijective());
  CHECK(is_homomorphism(b, brandt_extension(dec.group, 3), dec.iso).ok);
}

TEST_CASE("decompose_brandt on matrix units recovers the trivial group") {
  const auto dec = decompose_brandt(matrix_units(2));
  CHECK(dec.lambda == 2);
  CHECK(dec.group.order == 1);
}

TEST_CASE("decompose_brandt rejects non completely 0-simple input") {
  CHECK_THROWS_AS(decompose_brandt(fixtures::chain_semilattice(3)),
                  unsupported_structure_error);
}

TEST_CASE("extract_maximal_subgroup") {
  const auto b = brandt_extension(cyclic_group(3), 2);
  const int e11 = 1;  // (1,e,1)
  REQUIRE(b.mul(e11, e11) == e11);
  const auto h = extract_maximal_subgroup(b, e11);
  CHECK(h.order == 3);
  CHECK(semigroups_isomorphic(h, cyclic_group(3)).has_value());

  // at the zero: the trivial group
  CHECK(extract_maximal_subgroup(b, 0).order == 1);

  CHECK_THROWS_AS(extract_maximal_subgroup(b, 2), domain_error);
}

TEST_CASE("inverse semigroup with a unique idempotent is a group") {
  for (const auto& [name, g] : fixtures::all_groups_up_to_8()) {
    CAPTURE(name);
    REQUIRE(is_inverse_semigroup(g).ok);
    CHECK(idempotents(g).size() == 1);
    CHECK(is_group(g));
  }
}

TEST_CASE("0-simple inverse corpus members are completely 0-simple") {
  // finite shadow of Andersen's theorem on the constructed instances
  for (const auto& s :
       {matrix_units(2), matrix_units(3), adjoin_zero(cyclic_group(4)),
        fixtures::shuffle(brandt_extension(klein_four_group(), 2), 3)}) {
    REQUIRE(s.zero.has_value());
    if (is_inverse_semigroup(s).ok && is_0_simple(s)) {
      CHECK(is_completely_0_simple_inverse(s));
    }
  }
}

TEST_CASE("congruence-free with zero implies matrix units") {
  for (const auto& s : {matrix_units(2), matrix_units(3), adjoin_zero(cyclic_group(2)),
                        brandt_extension(cyclic_group(2), 2)}) {
    REQUIRE(s.zero.has_value());
    if (!is_congruence_free(s).congruence_free) continue;
    const int lambda = static_cast<int>(idempotents(s).size()) - 1;
    CHECK(semigroups_isomorphic(s, matrix_units(lambda)).has_value());
  }
}
