#include <random>

#include "doctest.h"
#include "module_oracle.hpp"

using namespace usl2;

namespace {

Vec random_element(const Algebra& alg, std::mt19937& rng, std::size_t terms) {
  Vec v = alg.zero_vec();
  std::uniform_int_distribution<std::size_t> idx(0, alg.dim() - 1);
  std::uniform_int_distribution<std::uint64_t> val(1, alg.field()->size() - 1);
  for (std::size_t t = 0; t < terms; ++t) v[idx(rng)] = static_cast<Elem>(val(rng));
  return v;
}

std::vector<AlgebraPtr> small_algebras() {
  return {Algebra::create(3, Character::zero()), Algebra::create(3, Character::nilpotent_e()),
          Algebra::create(3, Character::regular(1)), Algebra::create(5, Character::zero()),
          Algebra::create(5, Character::nilpotent_e()), Algebra::create(5, Character::regular(2))};
}

}  // namespace

TEST_CASE("hand-built Verma modules satisfy the defining relations") {
  for (const auto& alg : small_algebras()) {
    const auto& K = alg->field();
    const auto p = alg->p();
    for (const auto& r : oracle::all_vermas(*alg)) {
      CHECK(r.E * r.F - r.F * r.E == r.H);
      CHECK(r.H * r.E - r.E * r.H == r.E.scaled(2));
      Matrix hp = Matrix::identity(K, p), fp = Matrix::identity(K, p);
      for (std::uint32_t k = 0; k < p; ++k) hp = hp * r.H, fp = fp * r.F;
      const Elem a = alg->chi().is_regular() ? K->from_int(alg->chi().a()) : 0;
      CHECK(hp - r.H == Matrix::identity(K, p).scaled(a));
      const bool cyc = alg->chi().kind() == Character::Kind::NilpotentE;
      CHECK(fp == (cyc ? Matrix::identity(K, p) : Matrix(K, p, p)));
    }
  }
}

TEST_CASE("multiplication is compatible with every baby Verma module") {
  std::mt19937 rng(17);
  for (const auto& alg : small_algebras()) {
    const auto reps = oracle::all_vermas(*alg);
    for (int trial = 0; trial < 4; ++trial) {
      const Vec u = random_element(*alg, rng, 6), v = random_element(*alg, rng, 6);
      const Vec uv = alg->mul(u, v);
      for (const auto& r : reps)
        CHECK(oracle::represent(*alg, r, uv) ==
              oracle::represent(*alg, r, u) * oracle::represent(*alg, r, v));
    }
  }
}

TEST_CASE("multiplication is associative with unit one") {
  std::mt19937 rng(23);
  for (const auto& alg : small_algebras()) {
    const AlgElem one = alg->one();
    for (int trial = 0; trial < 5; ++trial) {
      const AlgElem x = alg->element(random_element(*alg, rng, 5));
      const AlgElem y = alg->element(random_element(*alg, rng, 5));
      const AlgElem z = alg->element(random_element(*alg, rng, 5));
      CHECK((x * y) * z == x * (y * z));
      CHECK(one * x == x);
      CHECK(x * one == x);
    }
  }
}

TEST_CASE("generator relations and p-th powers") {
  for (const auto& alg : small_algebras()) {
    const auto e = alg->generator(Gen::E), f = alg->generator(Gen::F), h = alg->generator(Gen::H);
    const auto& K = alg->field();
    CHECK(commutator(e, f) == h);
    CHECK(commutator(h, e) == 2 * e);
    CHECK(commutator(h, f) == K->neg(2) * f);
    AlgElem ep = alg->one(), fp = alg->one(), hp = alg->one();
    for (std::uint32_t k = 0; k < alg->p(); ++k) ep = ep * e, fp = fp * f, hp = hp * h;
    CHECK(ep.is_zero());
    const bool cyc = alg->chi().kind() == Character::Kind::NilpotentE;
    CHECK(fp == (cyc ? alg->one() : alg->element(alg->zero_vec())));
    const Elem a = alg->chi().is_regular() ? K->from_int(alg->chi().a()) : 0;
    CHECK(hp - h == a * alg->one());
  }
}

TEST_CASE("Casimir is central and acts on Z(lambda) by (lambda + 1)^2") {
  for (const auto& alg : small_algebras()) {
    const auto c = alg->casimir();
    for (Gen g : {Gen::E, Gen::F, Gen::H}) CHECK(commutator(c, alg->generator(g)).is_zero());
    const auto& K = alg->field();
    const bool cyc = alg->chi().kind() == Character::Kind::NilpotentE;
    for (Elem l : oracle::verma_weights(*alg)) {
      const auto r = oracle::verma(K, alg->p(), l, cyc);
      const Elem s = K->mul(K->add(l, 1), K->add(l, 1));
      CHECK(oracle::represent(*alg, r, c.coeffs()) == Matrix::identity(K, alg->p()).scaled(s));
    }
  }
}

TEST_CASE("PBW indexing") {
  auto alg = Algebra::create(5, Character::zero());
  CHECK(alg->dim() == 125);
  CHECK(alg->index(1, 2, 3) == 38);
  CHECK(alg->exponents(38) == std::array<std::uint32_t, 3>{1, 2, 3});
  CHECK(alg->degree(38) == 6);
  CHECK(alg->weight(alg->index(2, 0, 0)) == 4);
  CHECK(alg->weight(alg->index(0, 1, 0)) == 3);
  CHECK(alg->top_degree() == 12);
  CHECK(alg->pbw_subspace(1).dim() == 4);
  CHECK(alg->monomial(1, 1, 0).to_string() == "1*e^1*f^1");
  CHECK_THROWS(Character::regular(0));
  CHECK(Character::regular(2).tag() == "regular(2)");
}
