#pragma once

#include <optional>
#include <string>
#include <vector>

#include "usl2/pbw.hpp"

namespace usl2 {

/// Label of a block: the scalar alpha by which the Casimir acts on its
/// simple modules, plus its square root omega when chi is 0 or e.
struct BlockLabel {
  Elem alpha = 0;
  std::optional<std::uint32_t> omega;

  /// "omega=1" for chi in {0, e}, "alpha=[c0,...]" for regular characters.
  std::string display(const Field& field) const;
  friend bool operator==(const BlockLabel&, const BlockLabel&) = default;
};

/// c^p - 2c^{(p+1)/2} + c, minus a^2 for a regular character.
Poly center_relation(const Algebra& alg);

/// chi in {0, e}: alpha = omega^2 for omega = 0, 1, ..., (p-1)/2.
/// Regular: the p roots of the center relation, ordered by coefficient vector.
std::vector<BlockLabel> block_labels(const Algebra& alg);

/// The label with the given omega; throws for chi regular or omega out of range.
BlockLabel label_for_omega(const Algebra& alg, std::uint32_t omega);
/// The label with the given alpha; throws when alpha does not index a block.
BlockLabel label_for_alpha(const Algebra& alg, Elem alpha);

/// The idempotent as a polynomial in c (before reduction in the algebra).
Poly idempotent_poly(const Algebra& alg, const BlockLabel& label);
AlgElem idempotent(const Algebra& alg, const BlockLabel& label);

struct Block {
  BlockLabel label;
  Poly poly;           ///< idempotent as a polynomial in c
  AlgElem idempotent;
  Subspace subspace;   ///< pi_alpha U_chi
  std::size_t dim() const { return subspace.dim(); }
};

Block make_block(const Algebra& alg, const BlockLabel& label);
std::vector<Block> all_blocks(const Algebra& alg);

/// Image of the center in a block.
struct Coinvariants {
  BlockLabel label;
  Subspace span;                 ///< span of pi c^k, k >= 0
  std::size_t dim = 0;
  bool square_vanishes = false;  ///< pi (c - alpha)^2 == 0
  bool linear_vanishes = false;  ///< pi (c - alpha) == 0
};

Coinvariants coinvariants(const Algebra& alg, const Block& block);

/// The Casimir scalar (lambda + 1)^2 on L_lambda, as an element of F_p.
Elem weight_to_alpha(std::uint32_t p, std::uint32_t lambda);

/// The vectors x . pi for every PBW monomial x, in index order.
std::vector<Vec> monomial_multiples(const Algebra& alg, const Vec& central);

}  // namespace usl2
