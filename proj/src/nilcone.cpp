#include "usl2/nilcone.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <stdexcept>

namespace usl2 {

namespace {

struct Monomial {
  std::uint32_t a, b, c;
};

std::vector<Monomial> monomials_of_degree(std::size_t d) {
  std::vector<Monomial> out;
  for (std::uint32_t a = 0; a <= d; ++a)
    for (std::uint32_t b = 0; a + b <= d; ++b)
      out.push_back({a, b, static_cast<std::uint32_t>(d - a - b)});
  return out;
}

}  // namespace

std::size_t NilconeRing::total() const {
  std::size_t t = 0;
  for (auto d : dims) t += d;
  return t;
}

std::size_t nilcone_total(std::uint32_t p) { return std::size_t(p) * p + (std::size_t(p) * p - 1) / 2; }

NilconeRing nilcone_oracle(std::uint32_t p) {
  require_supported_prime(p);
  auto field = Field::prime(p);
  const Field& F = *field;
  NilconeRing ring;
  ring.p = p;
  // every generator has degree >= 2 and the x^p kill everything above 3(p-1)
  const std::size_t max_degree = 3 * (p - 1);
  for (std::size_t d = 0; d <= max_degree; ++d) {
    const auto mons = monomials_of_degree(d);
    std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>, std::size_t> pos;
    for (std::size_t i = 0; i < mons.size(); ++i) pos[{mons[i].a, mons[i].b, mons[i].c}] = i;
    auto at = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) { return pos.at({a, b, c}); };

    Subspace rel = Subspace::zero(field, mons.size());
    if (d >= 2)
      for (const auto& m : monomials_of_degree(d - 2)) {
        Vec v(mons.size(), 0);
        v[at(m.a + 2, m.b, m.c)] = F.add(v[at(m.a + 2, m.b, m.c)], 1);
        v[at(m.a, m.b + 1, m.c + 1)] = F.add(v[at(m.a, m.b + 1, m.c + 1)], 1);
        rel.insert(std::move(v));
      }
    if (d >= p)
      for (const auto& m : monomials_of_degree(d - p))
        for (int g = 0; g < 3; ++g) {
          Vec v(mons.size(), 0);
          v[at(m.a + (g == 0 ? p : 0), m.b + (g == 1 ? p : 0), m.c + (g == 2 ? p : 0))] = 1;
          rel.insert(std::move(v));
        }

    const std::size_t dim = mons.size() - rel.dim();
    // Relations are weight-homogeneous, so the monomials off the pivots are a
    // weight basis of the quotient.
    std::vector<bool> is_pivot(mons.size(), false);
    for (auto c : rel.pivots()) is_pivot[c] = true;
    std::vector<std::size_t> w(p, 0);
    for (std::size_t i = 0; i < mons.size(); ++i)
      if (!is_pivot[i]) {
        const std::int64_t wt = 2 * (std::int64_t(mons[i].b) - mons[i].c);
        ++w[static_cast<std::size_t>(((wt % p) + p) % p)];
      }
    ring.dims.push_back(dim);
    ring.weights.push_back(std::move(w));
  }
  while (!ring.dims.empty() && ring.dims.back() == 0) {
    ring.dims.pop_back();
    ring.weights.pop_back();
  }
  return ring;
}

std::vector<std::size_t> nilcone_dims_closed(std::uint32_t p) {
  std::vector<std::size_t> out;
  for (std::size_t d = 0; d < p; ++d) out.push_back(2 * d + 1);
  for (std::size_t d = p; d <= 3 * (p - 1) / 2; ++d) out.push_back(2 * (3 * p - 2 * d - 1));
  return out;
}

std::vector<std::size_t> simple_weights(std::uint32_t p, std::uint32_t lambda) {
  if (lambda >= p) throw std::invalid_argument("simple_weights needs lambda < p");
  std::vector<std::size_t> w(p, 0);
  for (std::int64_t i = 0; i <= lambda; ++i) {
    const std::int64_t wt = std::int64_t(lambda) - 2 * i;
    ++w[static_cast<std::size_t>(((wt % p) + p) % p)];
  }
  return w;
}

std::vector<std::size_t> nilcone_weights_closed(std::uint32_t p, std::size_t d) {
  std::vector<std::size_t> w(p, 0);
  if (d < p) {
    for (std::int64_t i = 0; i <= std::int64_t(2 * d); ++i) {
      const std::int64_t wt = std::int64_t(2 * d) - 2 * i;
      ++w[static_cast<std::size_t>(((wt % p) + p) % p)];
    }
    return w;
  }
  if (d > 3 * (p - 1) / 2) return w;
  // L_{p + lambda} = L_lambda (x) Fr^* L_1; the twisted factor has weights = 0 mod p
  auto base = simple_weights(p, static_cast<std::uint32_t>(3 * p - 2 * d - 2));
  for (std::uint32_t k = 0; k < p; ++k) w[k] = 2 * base[k];
  return w;
}

NilconeComparison compare_block_quotient(const Algebra& alg, const Block& block,
                                         const NilconeRing& ring) {
  if (ring.p != alg.p()) throw std::invalid_argument("nilcone ring has the wrong characteristic");
  NilconeComparison out;
  out.label = block.label;
  std::vector<std::size_t> dims;
  std::vector<std::vector<std::size_t>> weights;
  switch (alg.chi().kind()) {
    case Character::Kind::Zero: {
      out.truncation = alg.p() + *block.label.omega;
      const auto terms = filtration_terms(alg, block, FiltrationKind::SH);
      auto g = ideal_grading(alg, terms, ideal_c_minus_alpha(alg, block));
      dims = g.quotient_graded;
      weights = g.quotient_weights;
      break;
    }
    case Character::Kind::Regular: {
      out.truncation = alg.p();
      const auto terms = filtration_terms(alg, block, FiltrationKind::PF);
      auto g = ideal_grading(alg, terms, Subspace::zero(alg.field(), alg.dim()));
      dims = g.quotient_graded;
      weights = g.quotient_weights;
      break;
    }
    case Character::Kind::NilpotentE:
      throw std::invalid_argument("the nilcone comparison is stated for chi = 0 and regular chi");
  }
  const std::size_t len = std::max(dims.size(), ring.dims.size());
  for (std::size_t d = 0; d < len; ++d) {
    const std::size_t got = d < dims.size() ? dims[d] : 0;
    const bool inside = d < out.truncation && d < ring.dims.size();
    const std::size_t want = inside ? ring.dims[d] : 0;
    const std::vector<std::size_t> zero(alg.p(), 0);
    const auto& got_w = d < weights.size() ? weights[d] : zero;
    const auto& want_w = inside ? ring.weights[d] : zero;
    if (got != want) out.dims_ok = false;
    if (got_w != want_w) out.weights_ok = false;
    if (!out.ok() && !out.first_failure) out.first_failure = d;
  }
  out.block_dims = trim_zeros(dims);
  out.nilcone_dims = ring.dims;
  if (out.nilcone_dims.size() > out.truncation) out.nilcone_dims.resize(out.truncation);
  return out;
}

}  // namespace usl2
