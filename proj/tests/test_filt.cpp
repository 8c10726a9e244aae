#include "doctest.h"
#include "usl2/filt.hpp"

using namespace usl2;

namespace {

using Dims = std::vector<std::size_t>;

// pi V_i spanned directly by products pi * monomial.
Dims pf_oracle(const Algebra& alg, const Block& b) {
  Dims out;
  Subspace s = Subspace::zero(alg.field(), alg.dim());
  for (std::size_t d = 0; d <= alg.top_degree(); ++d) {
    for (std::size_t idx = 0; idx < alg.dim(); ++idx)
      if (alg.degree(idx) == d) s.insert(alg.mul(b.idempotent.coeffs(), alg.unit(idx)));
    out.push_back(s.dim());
  }
  return out;
}

// dim (V_i cap A) = dim V_i + dim A - dim (V_i + A)
Dims int_oracle(const Algebra& alg, const Block& b) {
  Dims out;
  for (std::size_t d = 0; d <= alg.top_degree(); ++d) {
    const auto v = alg.pbw_subspace(d);
    out.push_back(v.dim() + b.dim() - sum(v, b.subspace).dim());
  }
  return out;
}

const Block& block_with_omega(const std::vector<Block>& bs, std::uint32_t w) {
  for (const auto& b : bs)
    if (b.label.omega == w) return b;
  throw std::logic_error("no block");
}

}  // namespace

TEST_CASE("kind names") {
  CHECK(to_string(FiltrationKind::SH) == "sh");
  CHECK(parse_filtration_kind("int") == FiltrationKind::INT);
  CHECK_THROWS_AS(parse_filtration_kind("PF"), std::invalid_argument);
}

TEST_CASE("p = 5 tables match the frozen rows and the direct oracles") {
  auto alg = Algebra::create(5, Character::zero());
  const auto blocks = all_blocks(*alg);
  const std::vector<Dims> pf{{1, 4, 9, 16, 25, 25, 25, 25, 25, 25, 25, 25, 25},
                             {1, 4, 10, 20, 34, 49, 50, 50, 50, 50, 50, 50, 50},
                             {1, 4, 10, 20, 34, 45, 50, 50, 50, 50, 50, 50, 50}};
  const std::vector<Dims> in{{0, 0, 0, 0, 0, 0, 0, 0, 9, 16, 21, 24, 25},
                             {0, 0, 0, 0, 0, 0, 1, 16, 30, 40, 46, 49, 50},
                             {0, 0, 0, 0, 0, 0, 5, 16, 30, 40, 46, 49, 50}};
  for (std::uint32_t w = 0; w < 3; ++w) {
    const auto& b = block_with_omega(blocks, w);
    const auto tp = filtration_table(*alg, b, FiltrationKind::PF);
    const auto ti = filtration_table(*alg, b, FiltrationKind::INT);
    CHECK(tp.cumulative == pf[w]);
    CHECK(ti.cumulative == in[w]);
    CHECK(tp.cumulative == pf_oracle(*alg, b));
    CHECK(ti.cumulative == int_oracle(*alg, b));
    CHECK(differences(tp.cumulative).front() == 1);
  }
  const auto sh1 = filtration_table(*alg, block_with_omega(blocks, 1), FiltrationKind::SH);
  CHECK(trim_zeros(sh1.graded) == Dims{1, 4, 8, 12, 16, 9});
  CHECK(sh1.stabilization_degree == 5);
}

TEST_CASE("PF and INT agree with the direct oracles for other characters") {
  for (auto chi : {Character::nilpotent_e(), Character::regular(2)}) {
    auto alg = Algebra::create(5, chi);
    for (const auto& b : all_blocks(*alg)) {
      CHECK(filtration_table(*alg, b, FiltrationKind::PF).cumulative == pf_oracle(*alg, b));
      CHECK(filtration_table(*alg, b, FiltrationKind::INT).cumulative == int_oracle(*alg, b));
    }
  }
}

TEST_CASE("Gram form matches the top coefficient of products") {
  for (auto chi : {Character::zero(), Character::nilpotent_e(), Character::regular(1)}) {
    auto alg = Algebra::create(3, chi);
    const Matrix g = gram_form(*alg);
    for (std::size_t u = 0; u < alg->dim(); ++u)
      for (std::size_t v = 0; v < alg->dim(); ++v)
        CHECK(g(u, v) == alg->mul(alg->unit(u), alg->unit(v))[alg->top_index()]);
    CHECK(rank(g) == alg->dim());
    CHECK(check_pbw_perps(*alg, g).ok);
  }
}

TEST_CASE("duality for p = 5") {
  for (auto chi : {Character::zero(), Character::nilpotent_e()}) {
    auto alg = Algebra::create(5, chi);
    const Matrix g = gram_form(*alg);
    CHECK(rank(g) == 125);
    for (const auto& b : all_blocks(*alg)) {
      const auto rep = duality_check(*alg, b, g);
      CHECK(rep.ok());
      for (std::size_t i = 0; i < rep.pf_dims.size(); ++i)
        CHECK(rep.pf_dims[i] + rep.perp_dims[i] == b.dim());
    }
  }
}

TEST_CASE("ideal generated by pi (c - alpha)") {
  auto alg = Algebra::create(5, Character::zero());
  const auto blocks = all_blocks(*alg);
  const Dims expect{0, 17, 13};   // omega^2 + (p - omega)^2 for omega > 0
  for (std::uint32_t w = 0; w < 3; ++w) {
    const auto& b = block_with_omega(blocks, w);
    const auto ideal = ideal_c_minus_alpha(*alg, b);
    CHECK(ideal.dim() == expect[w]);
    CHECK(nilpotency_witness(*alg, b));
  }
  const auto& b2 = block_with_omega(blocks, 2);
  const auto ideal = ideal_c_minus_alpha(*alg, b2);
  const auto sh = ideal_grading(*alg, filtration_terms(*alg, b2, FiltrationKind::SH), ideal);
  CHECK(trim_zeros(sh.ideal_graded) == Dims{0, 1, 3, 5, 3, 1});
  const auto pf = ideal_grading(*alg, filtration_terms(*alg, b2, FiltrationKind::PF), ideal);
  CHECK(trim_zeros(pf.ideal_graded) == Dims{0, 0, 1, 3, 5, 3, 1});
  std::size_t q = 0;
  for (auto x : sh.quotient_graded) q += x;
  CHECK(q + ideal.dim() == b2.dim());

  auto e = Algebra::create(5, Character::nilpotent_e());
  for (const auto& b : all_blocks(*e))
    if (b.label.omega != 0u) CHECK(ideal_c_minus_alpha(*e, b).dim() == 25);
}

TEST_CASE("weight counts of coordinate subspaces") {
  auto alg = Algebra::create(3, Character::zero());
  const auto v1 = alg->pbw_subspace(1);   // 1, e, f, h with weights 0, 2, 1, 0
  CHECK(weight_counts(*alg, v1) == Dims{2, 1, 1});
}
