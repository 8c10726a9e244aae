#include "usl2/filt.hpp"

#include <algorithm>
#include <stdexcept>

namespace usl2 {

std::string to_string(FiltrationKind kind) {
  switch (kind) {
    case FiltrationKind::PF: return "pf";
    case FiltrationKind::INT: return "int";
    case FiltrationKind::SH: return "sh";
  }
  return "?";
}

FiltrationKind parse_filtration_kind(const std::string& s) {
  if (s == "pf") return FiltrationKind::PF;
  if (s == "int") return FiltrationKind::INT;
  if (s == "sh") return FiltrationKind::SH;
  throw std::invalid_argument("unknown filtration kind '" + s + "' (expected pf, int or sh)");
}

std::vector<Subspace> pbw_filtration(const Algebra& alg) {
  std::vector<Subspace> out;
  for (std::size_t d = 0; d <= alg.top_degree(); ++d) out.push_back(alg.pbw_subspace(d));
  return out;
}

namespace {

std::vector<Subspace> pushforward_terms(const Algebra& alg, const Block& block) {
  const auto multiples = monomial_multiples(alg, block.idempotent.coeffs());
  std::vector<Subspace> out;
  Subspace cur = Subspace::zero(alg.field(), alg.dim());
  for (std::size_t d = 0; d <= alg.top_degree(); ++d) {
    for (std::size_t idx = 0; idx < alg.dim(); ++idx)
      if (alg.degree(idx) == d) cur.insert(multiples[idx]);
    out.push_back(cur);
  }
  return out;
}

std::vector<Subspace> intersection_terms(const Algebra& alg, const Block& block) {
  std::vector<Subspace> out;
  for (std::size_t d = 0; d <= alg.top_degree(); ++d)
    out.push_back(intersect(alg.pbw_subspace(d), block.subspace));
  return out;
}

std::vector<Subspace> shifted_terms(const Algebra& alg, const Block& block) {
  const auto pf = pushforward_terms(alg, block);
  std::vector<Subspace> out;
  out.push_back(Subspace::span(alg.field(), alg.dim(), {block.idempotent.coeffs()}));
  for (std::size_t d = 1; d <= alg.top_degree(); ++d) {
    const Subspace& prev = out.back();
    Subspace cur = sum(pf[d], prev);
    for (const auto& v : prev.basis()) cur.insert(alg.left_casimir(v));
    out.push_back(std::move(cur));
  }
  return out;
}

}  // namespace

std::vector<Subspace> filtration_terms(const Algebra& alg, const Block& block,
                                       FiltrationKind kind) {
  switch (kind) {
    case FiltrationKind::PF: return pushforward_terms(alg, block);
    case FiltrationKind::INT: return intersection_terms(alg, block);
    case FiltrationKind::SH: return shifted_terms(alg, block);
  }
  throw std::invalid_argument("bad filtration kind");
}

std::vector<std::size_t> differences(const std::vector<std::size_t>& cumulative) {
  std::vector<std::size_t> out;
  std::size_t prev = 0;
  for (auto c : cumulative) {
    if (c < prev) throw std::logic_error("filtration is not increasing");
    out.push_back(c - prev);
    prev = c;
  }
  return out;
}

FiltrationTable make_table(const BlockLabel& label, FiltrationKind kind,
                           const std::vector<Subspace>& terms) {
  FiltrationTable t{label, kind, {}, {}, 0};
  for (const auto& s : terms) t.cumulative.push_back(s.dim());
  t.graded = differences(t.cumulative);
  const std::size_t top = t.cumulative.empty() ? 0 : t.cumulative.back();
  while (t.stabilization_degree < t.cumulative.size() &&
         t.cumulative[t.stabilization_degree] != top)
    ++t.stabilization_degree;
  return t;
}

FiltrationTable filtration_table(const Algebra& alg, const Block& block, FiltrationKind kind) {
  return make_table(block.label, kind, filtration_terms(alg, block, kind));
}

std::vector<std::size_t> induced_dims(const std::vector<Subspace>& terms, const Subspace& sub) {
  std::vector<std::size_t> out;
  for (const auto& t : terms) out.push_back(intersect(t, sub).dim());
  return out;
}

std::vector<std::size_t> weight_counts(const Algebra& alg, const Subspace& s) {
  std::vector<std::size_t> counts(alg.p(), 0);
  for (auto piv : s.pivots()) ++counts[alg.weight(piv)];
  return counts;
}

Matrix gram_form(const Algebra& alg) {
  const Field& F = *alg.field();
  const std::uint32_t p = alg.p();
  const std::size_t n = alg.dim();
  Matrix g(alg.field(), n, n);
  // Row of e^i f^j h^k is the covector phi o L_e^i o L_f^j o L_h^k.
  std::vector<Vec> by_e(p);
  by_e[0] = alg.unit(alg.top_index());
  for (std::uint32_t i = 1; i < p; ++i) {
    by_e[i].assign(n, 0);
    alg.left_op(Gen::E).apply_transposed(F, by_e[i - 1], by_e[i]);
  }
  Vec ef(n), cur(n), next(n);
  for (std::uint32_t i = 0; i < p; ++i) {
    ef = by_e[i];
    for (std::uint32_t j = 0; j < p; ++j) {
      if (j > 0) {
        Vec tmp(n, 0);
        alg.left_op(Gen::F).apply_transposed(F, ef, tmp);
        ef = std::move(tmp);
      }
      cur = ef;
      for (std::uint32_t k = 0; k < p; ++k) {
        if (k > 0) {
          std::fill(next.begin(), next.end(), 0);
          alg.left_op(Gen::H).apply_transposed(F, cur, next);
          std::swap(cur, next);
        }
        std::copy(cur.begin(), cur.end(), g.row(alg.index(i, j, k)).begin());
      }
    }
  }
  return g;
}

PerpCheck check_pbw_perps(const Algebra& alg, const Matrix& gram) {
  PerpCheck out;
  const std::size_t top = alg.top_degree();
  for (std::size_t i = 0; i <= top; ++i) {
    Subspace perp = orth_complement(alg.pbw_subspace(i), gram);
    Subspace expected = i == top ? Subspace::zero(alg.field(), alg.dim())
                                 : alg.pbw_subspace(top - i - 1);
    if (!(perp == expected)) {
      out.ok = false;
      out.first_failure = i;
      break;
    }
  }
  return out;
}

DualityReport duality_check(const Algebra& alg, const Block& block, const Matrix& gram) {
  DualityReport r;
  r.label = block.label;
  const auto pf = filtration_terms(alg, block, FiltrationKind::PF);
  for (std::size_t i = 0; i < pf.size(); ++i) {
    Subspace lhs = intersect(block.subspace, orth_complement(pf[i], gram));
    Subspace rhs = intersect(block.subspace, orth_complement(alg.pbw_subspace(i), gram));
    r.pf_dims.push_back(pf[i].dim());
    r.perp_dims.push_back(rhs.dim());
    const bool sub_ok = lhs.contains(rhs) && rhs.contains(lhs);
    const bool dim_ok = pf[i].dim() + rhs.dim() == block.dim();
    if ((!sub_ok || !dim_ok) && !r.first_failure) r.first_failure = i;
    r.subspaces_ok = r.subspaces_ok && sub_ok;
    r.dims_ok = r.dims_ok && dim_ok;
  }
  return r;
}

Subspace ideal_c_minus_alpha(const Algebra& alg, const Block& block) {
  const Vec z =
      alg.apply_center_poly(Poly::linear(alg.field(), block.label.alpha), block.idempotent.coeffs());
  return Subspace::span(alg.field(), alg.dim(), monomial_multiples(alg, z));
}

IdealGrading ideal_grading(const Algebra& alg, const std::vector<Subspace>& terms,
                           const Subspace& ideal) {
  IdealGrading g;
  std::vector<std::size_t> block_cum, quot_cum;
  std::vector<std::size_t> prev_w(alg.p(), 0);
  for (const auto& t : terms) {
    block_cum.push_back(t.dim());
    Subspace with_ideal = sum(t, ideal);
    quot_cum.push_back(with_ideal.dim() - ideal.dim());
    auto w = weight_counts(alg, with_ideal);
    std::vector<std::size_t> piece(alg.p());
    for (std::uint32_t k = 0; k < alg.p(); ++k) piece[k] = w[k] - prev_w[k];
    g.quotient_weights.push_back(std::move(piece));
    prev_w = std::move(w);
  }
  // the first quotient piece also absorbs the ideal's weights; remove them
  auto iw = weight_counts(alg, ideal);
  for (std::uint32_t k = 0; k < alg.p(); ++k) g.quotient_weights[0][k] -= iw[k];
  g.block_graded = differences(block_cum);
  g.ideal_graded = differences(induced_dims(terms, ideal));
  g.quotient_graded = differences(quot_cum);
  return g;
}

bool nilpotency_witness(const Algebra& alg, const Block& block) {
  if (!block.label.omega) throw std::invalid_argument("nilpotency witness needs an omega label");
  Vec z =
      alg.apply_center_poly(Poly::linear(alg.field(), block.label.alpha), block.idempotent.coeffs());
  for (std::uint32_t k = 0; k < alg.p() - *block.label.omega; ++k) z = alg.left(Gen::E, z);
  return std::all_of(z.begin(), z.end(), [](Elem x) { return x == 0; });
}

std::vector<std::size_t> trim_zeros(std::vector<std::size_t> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

}  // namespace usl2
