#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "usl2/ffield.hpp"
#include "usl2/linalg.hpp"

namespace usl2 {

/// The p-character, up to conjugacy: zero, the nilpotent e, or a*h/2 with a != 0.
class Character {
 public:
  enum class Kind { Zero, NilpotentE, Regular };

  static Character zero() { return Character(Kind::Zero, 0); }
  static Character nilpotent_e() { return Character(Kind::NilpotentE, 0); }
  static Character regular(std::uint32_t a);

  Kind kind() const { return kind_; }
  /// Parameter a of a regular character (0 otherwise).
  std::uint32_t a() const { return a_; }
  bool is_regular() const { return kind_ == Kind::Regular; }
  /// "zero", "e" or "regular(a)".
  std::string tag() const;

  friend bool operator==(const Character&, const Character&) = default;

 private:
  Character(Kind k, std::uint32_t a) : kind_(k), a_(a) {}
  Kind kind_;
  std::uint32_t a_;
};

enum class Gen { E, F, H };

/// Column-sparse linear operator on the PBW coordinate space.
struct SparseOp {
  std::vector<std::uint32_t> offsets;  // size dim + 1
  std::vector<std::uint32_t> targets;
  std::vector<Elem> values;

  /// out = op(in)
  void apply(const Field& F, const Vec& in, Vec& out) const;
  /// out = covector . op, i.e. out[m] = sum_r in[r] op(r, m)
  void apply_transposed(const Field& F, const Vec& in, Vec& out) const;
};

class AlgElem;

/// The reduced enveloping algebra U_chi(sl2) over F_p (chi = 0, e) or over
/// F_{p^p} = F_p[t]/(t^p - t - a) (chi = a h / 2).  Coordinates are taken in
/// the PBW basis e^i f^j h^k, 0 <= i, j, k < p, at index i p^2 + j p + k.
///
/// Left and right multiplication by the generators are precomputed as sparse
/// operators when the algebra is built and never change afterwards.
class Algebra : public std::enable_shared_from_this<Algebra> {
 public:
  static std::shared_ptr<const Algebra> create(std::uint32_t p, Character chi);

  std::uint32_t p() const { return p_; }
  std::size_t dim() const { return dim_; }
  const Character& chi() const { return chi_; }
  const FieldPtr& field() const { return field_; }
  /// Largest PBW degree, 3(p-1).
  std::size_t top_degree() const { return 3 * (p_ - 1); }

  std::size_t index(std::uint32_t i, std::uint32_t j, std::uint32_t k) const {
    return (static_cast<std::size_t>(i) * p_ + j) * p_ + k;
  }
  std::array<std::uint32_t, 3> exponents(std::size_t idx) const {
    return {static_cast<std::uint32_t>(idx / (p_ * p_)),
            static_cast<std::uint32_t>(idx / p_ % p_), static_cast<std::uint32_t>(idx % p_)};
  }
  std::size_t degree(std::size_t idx) const {
    auto [i, j, k] = exponents(idx);
    return i + j + k;
  }
  /// ad(h)-eigenvalue 2(i - j) mod p of the monomial.
  std::uint32_t weight(std::size_t idx) const;
  std::size_t top_index() const { return dim_ - 1; }

  Vec zero_vec() const { return Vec(dim_, 0); }
  Vec unit(std::size_t idx) const;

  Vec left(Gen g, const Vec& v) const;
  Vec right(Gen g, const Vec& v) const;
  Vec ad(Gen g, const Vec& v) const;
  /// Casimir c = (h-1)^2 + 4ef applied on the left.
  Vec left_casimir(const Vec& v) const;
  /// q(c) v
  Vec apply_center_poly(const Poly& q, const Vec& v) const;
  /// Product in normal-ordered reduced form.
  Vec mul(const Vec& u, const Vec& v) const;

  AlgElem element(Vec coeffs) const;
  AlgElem monomial(std::uint32_t i, std::uint32_t j, std::uint32_t k) const;
  AlgElem one() const;
  AlgElem generator(Gen g) const;
  AlgElem casimir() const;
  AlgElem eval_center_poly(const Poly& q) const;

  /// Span of the monomials of total degree <= d.
  Subspace pbw_subspace(std::size_t d) const;
  /// Dense matrix of u -> x u - u x.
  Matrix ad_matrix(Gen g) const;

  const SparseOp& left_op(Gen g) const { return left_[static_cast<int>(g)]; }
  const SparseOp& right_op(Gen g) const { return right_[static_cast<int>(g)]; }

  bool same_as(const Algebra& other) const { return p_ == other.p_ && chi_ == other.chi_; }

 private:
  Algebra(std::uint32_t p, Character chi);
  void build_tables();

  std::uint32_t p_;
  Character chi_;
  std::size_t dim_;
  FieldPtr field_;
  std::array<SparseOp, 3> left_;
  std::array<SparseOp, 3> right_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// An element of U_chi(sl2) with value semantics.
class AlgElem {
 public:
  AlgElem() = default;
  AlgElem(AlgebraPtr alg, Vec coeffs);

  const AlgebraPtr& algebra() const { return alg_; }
  const Vec& coeffs() const { return coeffs_; }
  Elem coeff(std::uint32_t i, std::uint32_t j, std::uint32_t k) const {
    return coeffs_[alg_->index(i, j, k)];
  }
  bool is_zero() const;

  friend AlgElem operator+(const AlgElem& a, const AlgElem& b);
  friend AlgElem operator-(const AlgElem& a, const AlgElem& b);
  friend AlgElem operator*(const AlgElem& a, const AlgElem& b);
  friend AlgElem operator*(Elem s, const AlgElem& a);
  friend bool operator==(const AlgElem& a, const AlgElem& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// "3*e^1*f^1 + ..." over nonzero coefficients; used in diagnostics.
  std::string to_string() const;

 private:
  AlgebraPtr alg_;
  Vec coeffs_;
};

/// u v - v u
AlgElem commutator(const AlgElem& u, const AlgElem& v);

}  // namespace usl2
