#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "usl2/filt.hpp"

namespace usl2 {

/// A finite-dimensional U_chi(sl2)-module given by the actions of e, f, h.
struct ModuleAction {
  FieldPtr field;
  Character chi = Character::zero();
  std::size_t dim = 0;
  Matrix E, F, H;

  /// Name of the first violated relation, or nullopt when all hold.
  std::optional<std::string> relation_failure() const;
};

/// lambda -> multiplicity.  Keys are field elements (residues for chi in {0, e}).
using CompositionTally = std::map<Elem, std::size_t>;

/// L_lambda for chi = 0: v_0..v_lambda, H v_i = (lambda - 2i) v_i,
/// F v_i = v_{i+1}, E v_i = i (lambda + 1 - i) v_{i-1}.
ModuleAction simple_module(const FieldPtr& field, std::uint32_t lambda);

/// The p-dimensional baby Verma module of highest weight lambda; F v_{p-1}
/// is v_0 for chi = e and 0 otherwise.  lambda must satisfy
/// lambda^p - lambda = 0 (chi in {0, e}) or = a (regular a).
ModuleAction baby_verma(const FieldPtr& field, const Character& chi, Elem lambda);

/// ad(e), ad(f), ad(h) on the block, in the canonical basis of its subspace.
ModuleAction adjoint_module(const Algebra& alg, const Block& block);

/// The action of ad on W / W' (both ad-stable, W' inside W).
ModuleAction adjoint_subquotient(const Algebra& alg, const Subspace& w, const Subspace& w_sub);

/// M restricted to an invariant subspace, or induced on W / W'.
ModuleAction module_subquotient(const ModuleAction& m, const Subspace& w, const Subspace& w_sub);

/// rho(u) w for an algebra element u given by PBW coordinates.
Vec apply_element(const ModuleAction& m, const Vec& coeffs, const Vec& w);

/// Smallest submodule containing the given vectors.
Subspace generated_submodule(const ModuleAction& m, const std::vector<Vec>& vectors);

/// Dimension of Hom(M, N): solutions of X A_M = A_N X for A in {E, F, H}.
std::size_t hom_dim(const ModuleAction& m, const ModuleAction& n);

/// Joint kernel of E, F, H.
std::size_t invariants_dim(const ModuleAction& m);

/// A simple module with its cyclic presentation: it is U / (U e + U (h - lambda)
/// + U f^{lambda+1}) for chi = 0 and U / (U e + U (h - lambda)) otherwise.
struct SimpleModule {
  Elem lambda;
  ModuleAction action;
  /// f^{k} kills the highest weight vector; p when there is no such relation.
  std::uint32_t f_order;
};

/// Dimension of Hom(L, M), computed from the presentation of L as the space of
/// v in M with E v = 0, H v = lambda v and F^{f_order} v = 0.
std::size_t hom_from_simple(const SimpleModule& l, const ModuleAction& m);

/// Simples, Jacobson radical and left-ideal generators of the radical for one algebra.
class RepContext {
 public:
  explicit RepContext(AlgebraPtr alg);

  const Algebra& algebra() const { return *alg_; }
  const std::vector<SimpleModule>& simples() const { return simples_; }
  const Subspace& radical() const { return radical_; }
  /// Elements g_1..g_r with radical = U g_1 + ... + U g_r.
  const std::vector<Vec>& radical_generators() const { return generators_; }

 private:
  AlgebraPtr alg_;
  std::vector<SimpleModule> simples_;
  Subspace radical_;
  std::vector<Vec> generators_;
};

/// chi = 0: L_0..L_{p-1}.  chi = e: Delta_{e,lambda} for lambda = p-1, 0, ..., (p-3)/2.
/// Regular a: Delta_{t+i} for i in F_p, where t is the generator of F_{p^p}.
std::vector<SimpleModule> simple_modules(const Algebra& alg);

/// Kernel of U -> (+)_L End(L) over the simple modules.
Subspace algebra_radical(const Algebra& alg, const std::vector<SimpleModule>& simples);

/// Is the subspace stable under left and right multiplication by e, f, h?
bool is_two_sided_ideal(const Algebra& alg, const Subspace& s);

/// Smallest k with rad^k = 0 (0 for the zero ideal), or nullopt past max_k.
std::optional<std::size_t> nilpotency_index(const Algebra& alg, const Subspace& rad,
                                            std::size_t max_k);

/// Layers M / rad M, rad M / rad^2 M, ...
std::vector<ModuleAction> radical_series(const RepContext& ctx, const ModuleAction& m);

CompositionTally composition_tally(const RepContext& ctx, const ModuleAction& m);
/// Sum of multiplicity * dim over the tally.
std::size_t tally_dimension(const RepContext& ctx, const CompositionTally& t);

struct ProjectivityCertificate {
  std::vector<std::size_t> jordan_type;  ///< of E, descending
  bool certified = false;                ///< every part equals p
};
ProjectivityCertificate projectivity_certificate(const ModuleAction& m);

enum class PieceObject { Block, Ideal, Quotient };

/// The ad-action induced on the degree-d piece of the chosen filtration on
/// the block, on the ideal <c - alpha>, or on the quotient A / <c - alpha>.
ModuleAction graded_piece_module(const Algebra& alg, const Block& block, PieceObject object,
                                 FiltrationKind kind, std::size_t d);

/// Composition factors of the projective cover P_{0,lambda} of L_lambda for chi = 0.
CompositionTally projective_cover_tally(std::uint32_t p, std::uint32_t lambda);
/// The adjoint tally of a chi = 0 block read off the projective decompositions:
/// A_0 is P_0 + P_2 + ... + P_{p-1}; for omega > 0 it is the sum of the
/// quotient and ideal decompositions.
CompositionTally expected_adjoint_tally(std::uint32_t p, std::uint32_t omega);
CompositionTally expected_quotient_tally(std::uint32_t p, std::uint32_t omega);
CompositionTally expected_ideal_tally(std::uint32_t p, std::uint32_t omega);

/// "{L0:2, L3:2}" in key order.
std::string tally_to_string(const Field& field, const CompositionTally& t);

}  // namespace usl2
