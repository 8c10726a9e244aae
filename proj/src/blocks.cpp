#include "usl2/blocks.hpp"

#include <algorithm>
#include <stdexcept>

namespace usl2 {

std::string BlockLabel::display(const Field& field) const {
  if (omega) return "omega=" + std::to_string(*omega);
  return "alpha=" + field.to_string(alpha);
}

Poly center_relation(const Algebra& alg) {
  const auto& field = alg.field();
  const std::uint32_t p = alg.p();
  std::vector<Elem> c(p + 1, 0);
  c[p] = 1;
  c[(p + 1) / 2] = field->from_int(-2);
  c[1] = 1;
  if (alg.chi().is_regular()) {
    const Elem a = field->from_int(alg.chi().a());
    c[0] = field->neg(field->mul(a, a));
  }
  return Poly(field, std::move(c));
}

std::vector<BlockLabel> block_labels(const Algebra& alg) {
  std::vector<BlockLabel> labels;
  const auto& field = alg.field();
  if (!alg.chi().is_regular()) {
    for (std::uint32_t w = 0; w <= (alg.p() - 1) / 2; ++w)
      labels.push_back({field->from_int(std::int64_t(w) * w), w});
    return labels;
  }
  auto roots = roots_with_multiplicity(center_relation(alg));
  std::sort(roots.begin(), roots.end(), [&](const Root& a, const Root& b) {
    return field->coefficients(a.value) < field->coefficients(b.value);
  });
  for (const auto& r : roots) labels.push_back({r.value, std::nullopt});
  return labels;
}

BlockLabel label_for_omega(const Algebra& alg, std::uint32_t omega) {
  if (alg.chi().is_regular())
    throw std::invalid_argument("blocks of a regular character are indexed by alpha");
  if (omega > (alg.p() - 1) / 2)
    throw std::invalid_argument("omega must lie in 0..(p-1)/2");
  return {alg.field()->from_int(std::int64_t(omega) * omega), omega};
}

BlockLabel label_for_alpha(const Algebra& alg, Elem alpha) {
  for (const auto& l : block_labels(alg))
    if (l.alpha == alpha) return l;
  throw std::invalid_argument("alpha = " + alg.field()->to_string(alpha) +
                              " does not index a block");
}

Poly idempotent_poly(const Algebra& alg, const BlockLabel& label) {
  const auto& field = alg.field();
  const Poly phi = center_relation(alg);
  const Poly lin = Poly::linear(field, label.alpha);
  if (alg.chi().is_regular()) {
    Poly q = exact_divide(phi, lin);
    const Elem at_alpha = q.evaluate(label.alpha);
    return q.scaled(field->inv(at_alpha));
  }
  if (label.alpha == 0) return exact_divide(phi, Poly::linear(field, 0));
  if (legendre(*field, label.alpha) != 1)
    throw std::invalid_argument("alpha must be zero or a quadratic residue");
  // 2 (c + alpha) Phi / (c - alpha)^2
  Poly twice_shift = Poly(field, {field->mul(2, label.alpha), 2});
  return twice_shift * exact_divide(phi, lin * lin);
}

AlgElem idempotent(const Algebra& alg, const BlockLabel& label) {
  return alg.eval_center_poly(idempotent_poly(alg, label));
}

std::vector<Vec> monomial_multiples(const Algebra& alg, const Vec& central) {
  const std::uint32_t p = alg.p();
  std::vector<Vec> out(alg.dim());
  // h^k z, then f^j h^k z, then e^i f^j h^k z, one generator at a time
  Vec cur = central;
  for (std::uint32_t k = 0; k < p; ++k) {
    out[alg.index(0, 0, k)] = cur;
    cur = alg.left(Gen::H, cur);
  }
  for (std::uint32_t k = 0; k < p; ++k)
    for (std::uint32_t j = 1; j < p; ++j)
      out[alg.index(0, j, k)] = alg.left(Gen::F, out[alg.index(0, j - 1, k)]);
  for (std::uint32_t i = 1; i < p; ++i)
    for (std::uint32_t j = 0; j < p; ++j)
      for (std::uint32_t k = 0; k < p; ++k)
        out[alg.index(i, j, k)] = alg.left(Gen::E, out[alg.index(i - 1, j, k)]);
  return out;
}

Block make_block(const Algebra& alg, const BlockLabel& label) {
  Poly q = idempotent_poly(alg, label);
  AlgElem pi = alg.eval_center_poly(q);
  Subspace sub = Subspace::span(alg.field(), alg.dim(), monomial_multiples(alg, pi.coeffs()));
  return {label, std::move(q), std::move(pi), std::move(sub)};
}

std::vector<Block> all_blocks(const Algebra& alg) {
  std::vector<Block> out;
  for (const auto& l : block_labels(alg)) out.push_back(make_block(alg, l));
  return out;
}

Coinvariants coinvariants(const Algebra& alg, const Block& block) {
  Coinvariants out;
  out.label = block.label;
  out.span = Subspace::zero(alg.field(), alg.dim());
  Vec cur = block.idempotent.coeffs();
  // C_alpha is spanned by pi c^k for k < p + 1 (c satisfies a degree p relation)
  for (std::uint32_t k = 0; k <= alg.p(); ++k) {
    out.span.insert(cur);
    cur = alg.left_casimir(cur);
  }
  out.dim = out.span.dim();
  const Poly lin = Poly::linear(alg.field(), block.label.alpha);
  auto is_zero = [](const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](Elem x) { return x == 0; });
  };
  out.linear_vanishes = is_zero(alg.apply_center_poly(lin, block.idempotent.coeffs()));
  out.square_vanishes = is_zero(alg.apply_center_poly(lin * lin, block.idempotent.coeffs()));
  return out;
}

Elem weight_to_alpha(std::uint32_t p, std::uint32_t lambda) {
  if (lambda >= p) throw std::invalid_argument("weight must lie in 0..p-1");
  return static_cast<Elem>((std::uint64_t(lambda) + 1) * (lambda + 1) % p);
}

}  // namespace usl2
