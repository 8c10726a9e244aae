#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "usl2/ffield.hpp"

namespace usl2 {

using Vec = std::vector<Elem>;

/// Dense row-major matrix over a Field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(FieldPtr field, std::size_t n);
  static Matrix from_rows(FieldPtr field, std::size_t cols, const std::vector<Vec>& rows);

  const FieldPtr& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  Matrix transpose() const;
  bool is_zero() const;
  Vec apply(std::span<const Elem> v) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  Matrix scaled(Elem c) const;

 private:
  FieldPtr field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Elem> data_;
};

struct RrefResult {
  Matrix reduced;  ///< nonzero rows only
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form; the pivot in each column is the first row
/// (from the top of the remaining rows) with a nonzero entry.
RrefResult rref(Matrix m);
std::size_t rank(const Matrix& m);

class Subspace;
/// Right kernel {v : M v = 0}.
Subspace kernel(const Matrix& m);
/// Some x with M x = b, or nullopt when the system is inconsistent.
std::optional<Vec> solve(const Matrix& m, std::span<const Elem> b);

/// A linear subspace of F^n, stored as its reduced row-echelon basis.
/// Two equal subspaces always have identical stored bases.
class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(FieldPtr field, std::size_t ambient);
  static Subspace full(FieldPtr field, std::size_t ambient);
  static Subspace span(FieldPtr field, std::size_t ambient, const std::vector<Vec>& vectors);
  /// Span of the unit vectors e_i for the given coordinates.
  static Subspace coordinate(FieldPtr field, std::size_t ambient,
                             std::span<const std::size_t> coords);

  const FieldPtr& field() const { return field_; }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Vec>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Matrix basis_matrix() const { return Matrix::from_rows(field_, ambient_, rows_); }

  /// v minus its projection along the pivot coordinates; zero iff v is contained.
  Vec reduce(Vec v) const;
  bool contains(std::span<const Elem> v) const;
  bool contains(const Subspace& other) const;
  /// Adds v to the space; returns false when v was already contained.
  bool insert(Vec v);

  friend Subspace sum(const Subspace& u, const Subspace& w);
  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.rows_ == b.rows_;
  }

 private:
  void check_compatible(const Subspace& other) const;
  FieldPtr field_;
  std::size_t ambient_ = 0;
  std::vector<Vec> rows_;               // sorted by pivot
  std::vector<std::size_t> pivots_;     // strictly increasing
};

Subspace sum(const Subspace& u, const Subspace& w);
/// Intersection as the kernel of x -> (x . basis(U)) mod W, using the
/// smaller of the two spaces as U.
Subspace intersect(const Subspace& u, const Subspace& w);

/// {v : u^T G v = 0 for every u in U}.
Subspace orth_complement(const Subspace& u, const Matrix& gram);

/// Jordan block sizes (descending) of a nilpotent matrix, from ranks of powers.
/// Throws std::domain_error when N is not nilpotent.
std::vector<std::size_t> jordan_type_nilpotent(const Matrix& n);

/// Matrix of the operator induced on W/W' (W' a subspace of W, both stable)
/// with respect to a canonical basis of a complement.  `apply` maps an
/// ambient vector to its image.
template <class Op>
Matrix induced_action(const Subspace& w, const Subspace& w_sub, Op&& apply);

/// Complement basis used by induced_action: rows of W reduced modulo W',
/// in reduced echelon form and zero on the pivots of W'.
std::vector<Vec> quotient_basis(const Subspace& w, const Subspace& w_sub);
/// Coordinates of v (assumed in W) modulo W' in quotient_basis(W, W').
Vec quotient_coordinates(const Subspace& w_sub, const std::vector<Vec>& qbasis,
                         const std::vector<std::size_t>& qpivots, Vec v);

template <class Op>
Matrix induced_action(const Subspace& w, const Subspace& w_sub, Op&& apply) {
  auto q = quotient_basis(w, w_sub);
  std::vector<std::size_t> qpiv;
  for (const auto& r : q) {
    std::size_t c = 0;
    while (r[c] == 0) ++c;
    qpiv.push_back(c);
  }
  Matrix m(w.field(), q.size(), q.size());
  for (std::size_t j = 0; j < q.size(); ++j) {
    Vec coords = quotient_coordinates(w_sub, q, qpiv, apply(q[j]));
    for (std::size_t i = 0; i < q.size(); ++i) m(i, j) = coords[i];
  }
  return m;
}

}  // namespace usl2
