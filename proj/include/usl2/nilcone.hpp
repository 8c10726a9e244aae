#pragma once

#include <optional>
#include <vector>

#include "usl2/filt.hpp"

namespace usl2 {

/// Graded pieces of k[x_a, x_b, x_c] / <x_a^2 + x_b x_c, x_a^p, x_b^p, x_c^p>,
/// with ad(h)-weights 0, +2, -2 on x_a, x_b, x_c.
struct NilconeRing {
  std::uint32_t p = 0;
  std::vector<std::size_t> dims;                   ///< degrees 0..3(p-1)/2
  std::vector<std::vector<std::size_t>> weights;   ///< per degree, indexed by weight mod p
  std::size_t total() const;
};

/// Degree-by-degree linear algebra over F_p: monomials of degree d modulo
/// the span of generator multiples landing in degree d.
NilconeRing nilcone_oracle(std::uint32_t p);

/// 2d+1 below p, then dim L_{4p-2d-2} = 2(3p-2d-1) up to degree 3(p-1)/2.
std::vector<std::size_t> nilcone_dims_closed(std::uint32_t p);
/// Weights of the dual Weyl module of highest weight 2d (d < p), or of
/// L_{4p-2d-2} = L_{3p-2d-2} (x) Fr^* L_1 beyond, reduced mod p.
std::vector<std::size_t> nilcone_weights_closed(std::uint32_t p, std::size_t d);

/// p^2 + (p^2 - 1)/2
std::size_t nilcone_total(std::uint32_t p);

/// Weight multiplicities of the simple module L_lambda (lambda < p), mod p.
std::vector<std::size_t> simple_weights(std::uint32_t p, std::uint32_t lambda);

struct NilconeComparison {
  BlockLabel label;
  std::size_t truncation = 0;                ///< compare degrees below this
  std::vector<std::size_t> block_dims;       ///< graded dims on the block side
  std::vector<std::size_t> nilcone_dims;     ///< truncated nilcone dims
  bool dims_ok = true;
  bool weights_ok = true;
  std::optional<std::size_t> first_failure;
  bool ok() const { return dims_ok && weights_ok; }
};

/// chi = 0: gr_sh of A / <c - alpha> against k[N_p] below p + omega.
/// Regular chi: gr_pf of A against k[N_p] below p.  Throws for chi = e.
NilconeComparison compare_block_quotient(const Algebra& alg, const Block& block,
                                         const NilconeRing& ring);

}  // namespace usl2
