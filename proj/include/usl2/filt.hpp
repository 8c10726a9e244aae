#pragma once

#include <optional>
#include <string>
#include <vector>

#include "usl2/blocks.hpp"

namespace usl2 {

enum class FiltrationKind { PF, INT, SH };

/// "pf", "int", "sh"
std::string to_string(FiltrationKind kind);
/// Inverse of to_string; throws std::invalid_argument for anything else.
FiltrationKind parse_filtration_kind(const std::string& s);

/// Dimension data of one filtration on one block, for degrees 0..3(p-1).
struct FiltrationTable {
  BlockLabel label;
  FiltrationKind kind;
  std::vector<std::size_t> cumulative;
  std::vector<std::size_t> graded;   ///< first differences, graded[0] = cumulative[0]
  std::size_t stabilization_degree;  ///< first degree at which the block is reached
};

/// V_0, ..., V_{3(p-1)} as coordinate subspaces.
std::vector<Subspace> pbw_filtration(const Algebra& alg);

/// The terms of the chosen filtration on the block, degrees 0..3(p-1).
///   PF:  pi V_i
///   INT: V_i cap A
///   SH:  pi V_i + V_{i-1} + c V_{i-1}, starting from k pi
std::vector<Subspace> filtration_terms(const Algebra& alg, const Block& block,
                                       FiltrationKind kind);

FiltrationTable make_table(const BlockLabel& label, FiltrationKind kind,
                           const std::vector<Subspace>& terms);
FiltrationTable filtration_table(const Algebra& alg, const Block& block, FiltrationKind kind);

/// Dimensions of (terms[i] cap sub), i.e. the filtration induced on a subspace.
std::vector<std::size_t> induced_dims(const std::vector<Subspace>& terms, const Subspace& sub);
std::vector<std::size_t> differences(const std::vector<std::size_t>& cumulative);

/// Multiplicity of each ad(h)-weight 0..p-1 in a weight-graded subspace.
/// Rows of the canonical basis of such a subspace are homogeneous, so the
/// weight of each pivot monomial is the weight of its row.
std::vector<std::size_t> weight_counts(const Algebra& alg, const Subspace& s);

/// Gram matrix of b(u, v) = coefficient of e^{p-1} f^{p-1} h^{p-1} in u v.
Matrix gram_form(const Algebra& alg);

struct PerpCheck {
  bool ok = true;
  std::optional<std::size_t> first_failure;
};
/// V_i^perp == V_{3(p-1)-i-1} for every i (V_{-1} = 0).
PerpCheck check_pbw_perps(const Algebra& alg, const Matrix& gram);

struct DualityReport {
  BlockLabel label;
  bool subspaces_ok = true;
  bool dims_ok = true;
  std::optional<std::size_t> first_failure;
  std::vector<std::size_t> pf_dims;     ///< dim pi(V_i)
  std::vector<std::size_t> perp_dims;   ///< dim A cap V_i^perp
  bool ok() const { return subspaces_ok && dims_ok; }
};

/// For every i: A cap pi(V_i)^perp == A cap V_i^perp, and
/// dim pi(V_i) + dim (A cap V_i^perp) == dim A.
DualityReport duality_check(const Algebra& alg, const Block& block, const Matrix& gram);

/// The ideal generated by pi (c - alpha) inside the block.
Subspace ideal_c_minus_alpha(const Algebra& alg, const Block& block);

/// Graded data of the block, the ideal and the quotient for one filtration.
struct IdealGrading {
  std::vector<std::size_t> block_graded;
  std::vector<std::size_t> ideal_graded;
  std::vector<std::size_t> quotient_graded;
  /// ad(h)-weight multiplicities of the quotient pieces, per degree.
  std::vector<std::vector<std::size_t>> quotient_weights;
};

IdealGrading ideal_grading(const Algebra& alg, const std::vector<Subspace>& terms,
                           const Subspace& ideal);

/// e^{p - omega} pi (c - alpha) == 0.  Requires an omega label.
bool nilpotency_witness(const Algebra& alg, const Block& block);

/// Drops trailing zeros.
std::vector<std::size_t> trim_zeros(std::vector<std::size_t> v);

}  // namespace usl2
