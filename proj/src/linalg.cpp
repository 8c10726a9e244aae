#include "usl2/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace usl2 {

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(FieldPtr field, std::size_t cols, const std::vector<Vec>& rows) {
  Matrix m(std::move(field), rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Elem x) { return x == 0; });
}

Vec Matrix::apply(std::span<const Elem> v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
  const Field& F = *field_;
  Vec out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    Elem acc = 0;
    auto rr = row(r);
    for (std::size_t c = 0; c < cols_; ++c)
      if (rr[c] && v[c]) acc = F.add(acc, F.mul(rr[c], v[c]));
    out[r] = acc;
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  const Field& F = *a.field_;
  Matrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    Elem* dst = out.data_.data() + i * out.cols_;
    for (std::size_t k = 0; k < a.cols_; ++k) {
      Elem x = a(i, k);
      if (x == 0) continue;
      F.sub_scaled(dst, b.data_.data() + k * b.cols_, F.neg(x), b.cols_);
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("shape mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i)
    out.data_[i] = a.field_->add(out.data_[i], b.data_[i]);
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("shape mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i)
    out.data_[i] = a.field_->sub(out.data_[i], b.data_[i]);
  return out;
}

Matrix Matrix::scaled(Elem c) const {
  Matrix out = *this;
  field_->scale(out.data_.data(), c, out.data_.size());
  return out;
}

RrefResult rref(Matrix m) {
  const Field& F = *m.field();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && m(sel, c) == 0) ++sel;
    if (sel == rows) continue;
    if (sel != r) std::swap_ranges(m.row(sel).begin(), m.row(sel).end(), m.row(r).begin());
    F.scale(m.row(r).data() + c, F.inv(m(r, c)), cols - c);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      F.sub_scaled(m.row(i).data() + c, m.row(r).data() + c, m(i, c), cols - c);
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix reduced(m.field(), r, cols);
  for (std::size_t i = 0; i < r; ++i)
    std::copy(m.row(i).begin(), m.row(i).end(), reduced.row(i).begin());
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Subspace kernel(const Matrix& m) {
  auto [red, pivots] = rref(m);
  const FieldPtr& field = m.field();
  const Field& F = *field;
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = F.neg(red(i, free));
    basis.push_back(std::move(v));
  }
  return Subspace::span(field, n, basis);
}

std::optional<Vec> solve(const Matrix& m, std::span<const Elem> b) {
  if (b.size() != m.rows()) throw std::invalid_argument("right-hand side length mismatch");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::copy(m.row(r).begin(), m.row(r).end(), aug.row(r).begin());
    aug(r, m.cols()) = b[r];
  }
  auto [red, pivots] = rref(std::move(aug));
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vec x(m.cols(), 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = red(i, m.cols());
  return x;
}

// ---------------------------------------------------------------------------

Subspace Subspace::zero(FieldPtr field, std::size_t ambient) {
  Subspace s;
  s.field_ = std::move(field);
  s.ambient_ = ambient;
  return s;
}

Subspace Subspace::full(FieldPtr field, std::size_t ambient) {
  std::vector<std::size_t> all(ambient);
  for (std::size_t i = 0; i < ambient; ++i) all[i] = i;
  return coordinate(std::move(field), ambient, all);
}

Subspace Subspace::coordinate(FieldPtr field, std::size_t ambient,
                              std::span<const std::size_t> coords) {
  Subspace s = zero(std::move(field), ambient);
  std::vector<std::size_t> sorted(coords.begin(), coords.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (auto c : sorted) {
    if (c >= ambient) throw std::out_of_range("coordinate outside ambient space");
    Vec v(ambient, 0);
    v[c] = 1;
    s.rows_.push_back(std::move(v));
    s.pivots_.push_back(c);
  }
  return s;
}

Subspace Subspace::span(FieldPtr field, std::size_t ambient, const std::vector<Vec>& vectors) {
  Subspace s = zero(std::move(field), ambient);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

Vec Subspace::reduce(Vec v) const {
  if (v.size() != ambient_) throw std::invalid_argument("vector outside ambient space");
  const Field& F = *field_;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t c = pivots_[i];
    if (v[c] == 0) continue;
    F.sub_scaled(v.data() + c, rows_[i].data() + c, v[c], ambient_ - c);
  }
  return v;
}

bool Subspace::contains(std::span<const Elem> v) const {
  Vec r = reduce(Vec(v.begin(), v.end()));
  return std::all_of(r.begin(), r.end(), [](Elem x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  check_compatible(other);
  return std::all_of(other.rows_.begin(), other.rows_.end(),
                     [&](const Vec& v) { return contains(v); });
}

bool Subspace::insert(Vec v) {
  v = reduce(std::move(v));
  std::size_t c = 0;
  while (c < ambient_ && v[c] == 0) ++c;
  if (c == ambient_) return false;
  const Field& F = *field_;
  F.scale(v.data() + c, F.inv(v[c]), ambient_ - c);
  for (auto& row : rows_)
    if (row[c] != 0) F.sub_scaled(row.data() + c, v.data() + c, row[c], ambient_ - c);
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), c) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, c);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

void Subspace::check_compatible(const Subspace& other) const {
  if (ambient_ != other.ambient_)
    throw std::invalid_argument("subspaces live in different ambient spaces (" +
                                std::to_string(ambient_) + " vs " +
                                std::to_string(other.ambient_) + ")");
}

Subspace sum(const Subspace& u, const Subspace& w) {
  u.check_compatible(w);
  Subspace s = u.dim() >= w.dim() ? u : w;
  const Subspace& other = u.dim() >= w.dim() ? w : u;
  for (const auto& v : other.basis()) s.insert(v);
  return s;
}

Subspace intersect(const Subspace& u, const Subspace& w) {
  if (u.ambient() != w.ambient()) throw std::invalid_argument("ambient mismatch in intersect");
  const FieldPtr& field = u.field();
  const Field& F = *field;
  const std::size_t n = u.ambient();
  if (u.dim() == 0 || w.dim() == 0) return Subspace::zero(field, n);
  const Subspace& small = u.dim() <= w.dim() ? u : w;
  const Subspace& large = u.dim() <= w.dim() ? w : u;
  const std::size_t k = small.dim();
  // Row i is [ small_i mod large | e_i ].  After elimination, rows whose left
  // block vanishes carry coefficient vectors x with x . small in large.
  Matrix stacked(field, k, n + k);
  for (std::size_t i = 0; i < k; ++i) {
    Vec r = large.reduce(small.basis()[i]);
    std::copy(r.begin(), r.end(), stacked.row(i).begin());
    stacked(i, n + i) = 1;
  }
  auto [red, pivots] = rref(std::move(stacked));
  std::vector<Vec> common;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] < n) continue;
    Vec x(n, 0);
    for (std::size_t i = 0; i < k; ++i)
      if (red(r, n + i)) F.sub_scaled(x.data(), small.basis()[i].data(), F.neg(red(r, n + i)), n);
    common.push_back(std::move(x));
  }
  return Subspace::span(field, n, common);
}

Subspace orth_complement(const Subspace& u, const Matrix& gram) {
  const std::size_t n = u.ambient();
  if (gram.rows() != n || gram.cols() != n)
    throw std::invalid_argument("Gram matrix does not match the ambient dimension");
  if (u.dim() == 0) return Subspace::full(u.field(), n);
  Matrix ug = u.basis_matrix() * gram;
  return kernel(ug);
}

std::vector<std::size_t> jordan_type_nilpotent(const Matrix& n) {
  if (n.rows() != n.cols()) throw std::invalid_argument("Jordan type needs a square matrix");
  const std::size_t dim = n.rows();
  std::vector<std::size_t> ranks{dim};
  Matrix power = Matrix::identity(n.field(), dim);
  while (ranks.back() != 0) {
    if (ranks.size() > dim) throw std::domain_error("matrix is not nilpotent");
    power = power * n;
    std::size_t r = rank(power);
    if (r == ranks.back()) throw std::domain_error("matrix is not nilpotent");
    ranks.push_back(r);
  }
  // blocks of size >= s: ranks[s-1] - ranks[s]
  std::vector<std::size_t> parts;
  for (std::size_t s = ranks.size() - 1; s >= 1; --s) {
    std::size_t at_least_s = ranks[s - 1] - ranks[s];
    std::size_t at_least_next = s + 1 < ranks.size() ? ranks[s] - ranks[s + 1] : 0;
    for (std::size_t k = 0; k < at_least_s - at_least_next; ++k) parts.push_back(s);
  }
  return parts;
}

std::vector<Vec> quotient_basis(const Subspace& w, const Subspace& w_sub) {
  std::vector<Vec> reduced;
  for (const auto& v : w.basis()) reduced.push_back(w_sub.reduce(v));
  return Subspace::span(w.field(), w.ambient(), reduced).basis();
}

Vec quotient_coordinates(const Subspace& w_sub, const std::vector<Vec>& qbasis,
                         const std::vector<std::size_t>& qpivots, Vec v) {
  v = w_sub.reduce(std::move(v));
  Vec coords(qbasis.size());
  for (std::size_t i = 0; i < qbasis.size(); ++i) coords[i] = v[qpivots[i]];
  return coords;
}

}  // namespace usl2
