#include "doctest.h"
#include "usl2/nilcone.hpp"

using namespace usl2;

namespace {

// k[a,b,c]/(a^2 + bc) is free over k[b,c] on 1, a.  With m = (p-1)/2 the
// relation a^p = +-a (bc)^m leaves
//   k[b,c]/(b^p, c^p, (bc)^{m+1})  +  a . k[b,c]/(b^p, c^p, (bc)^m).
NilconeRing normal_form_count(std::uint32_t p) {
  const std::uint32_t m = (p - 1) / 2;
  NilconeRing r;
  r.p = p;
  const std::size_t top = 3 * (p - 1) / 2;
  r.dims.assign(top + 1, 0);
  r.weights.assign(top + 1, std::vector<std::size_t>(p, 0));
  for (std::uint32_t eps = 0; eps < 2; ++eps)
    for (std::uint32_t i = 0; i < p; ++i)
      for (std::uint32_t j = 0; j < p; ++j) {
        if (std::min(i, j) > m - eps) continue;
        const std::size_t d = eps + i + j;
        REQUIRE(d <= top);
        ++r.dims[d];
        ++r.weights[d][(2 * (i + p - j)) % p];
      }
  return r;
}

}  // namespace

TEST_CASE("oracle, normal forms and closed form agree") {
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    const auto ring = nilcone_oracle(p);
    const auto nf = normal_form_count(p);
    CHECK(ring.dims == nf.dims);
    CHECK(ring.weights == nf.weights);
    CHECK(ring.dims == nilcone_dims_closed(p));
    CHECK(ring.total() == p * p + (p * p - 1) / 2);
    CHECK(nilcone_total(p) == ring.total());
    for (std::size_t d = 0; d < ring.dims.size(); ++d)
      CHECK(ring.weights[d] == nilcone_weights_closed(p, d));
  }
}

TEST_CASE("frozen small cases") {
  CHECK(nilcone_dims_closed(3) == std::vector<std::size_t>{1, 3, 5, 4});
  CHECK(nilcone_dims_closed(5) == std::vector<std::size_t>{1, 3, 5, 7, 9, 8, 4});
  CHECK(simple_weights(5, 2) == std::vector<std::size_t>{1, 0, 1, 1, 0});
  CHECK(simple_weights(3, 0) == std::vector<std::size_t>{1, 0, 0});
}

TEST_CASE("block quotients against the nilcone") {
  auto alg = Algebra::create(5, Character::zero());
  const auto ring = nilcone_oracle(5);
  for (const auto& b : all_blocks(*alg)) {
    const auto cmp = compare_block_quotient(*alg, b, ring);
    CHECK(cmp.ok());
    CHECK(cmp.truncation == 5 + *b.label.omega);
  }
  auto reg = Algebra::create(3, Character::regular(2));
  for (const auto& b : all_blocks(*reg)) {
    const auto cmp = compare_block_quotient(*reg, b, nilcone_oracle(3));
    CHECK(cmp.ok());
    CHECK(cmp.truncation == 3);
  }
  auto e = Algebra::create(3, Character::nilpotent_e());
  CHECK_THROWS(compare_block_quotient(*e, all_blocks(*e)[0], nilcone_oracle(3)));
}
