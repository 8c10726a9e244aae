#include "usl2/pbw.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace usl2 {

Character Character::regular(std::uint32_t a) {
  if (a == 0) throw std::invalid_argument("a regular character needs a != 0");
  return Character(Kind::Regular, a);
}

std::string Character::tag() const {
  switch (kind_) {
    case Kind::Zero:
      return "zero";
    case Kind::NilpotentE:
      return "e";
    case Kind::Regular:
      return "regular(" + std::to_string(a_) + ")";
  }
  return "?";
}

void SparseOp::apply(const Field& F, const Vec& in, Vec& out) const {
  std::fill(out.begin(), out.end(), 0);
  const std::size_t n = offsets.size() - 1;
  for (std::size_t m = 0; m < n; ++m) {
    const Elem x = in[m];
    if (x == 0) continue;
    for (auto t = offsets[m]; t < offsets[m + 1]; ++t)
      out[targets[t]] = F.add(out[targets[t]], F.mul(values[t], x));
  }
}

void SparseOp::apply_transposed(const Field& F, const Vec& in, Vec& out) const {
  const std::size_t n = offsets.size() - 1;
  for (std::size_t m = 0; m < n; ++m) {
    Elem acc = 0;
    for (auto t = offsets[m]; t < offsets[m + 1]; ++t)
      if (in[targets[t]]) acc = F.add(acc, F.mul(values[t], in[targets[t]]));
    out[m] = acc;
  }
}

// ---------------------------------------------------------------------------

std::shared_ptr<const Algebra> Algebra::create(std::uint32_t p, Character chi) {
  require_supported_prime(p);
  if (chi.is_regular() && chi.a() % p == 0)
    throw std::invalid_argument("regular character needs a in 1..p-1");
  auto alg = std::shared_ptr<Algebra>(new Algebra(p, chi));
  alg->build_tables();
  return alg;
}

Algebra::Algebra(std::uint32_t p, Character chi)
    : p_(p), chi_(chi), dim_(static_cast<std::size_t>(p) * p * p) {
  field_ = chi.is_regular() ? Field::artin_schreier(p, chi.a() % p) : Field::prime(p);
}

std::uint32_t Algebra::weight(std::size_t idx) const {
  auto [i, j, k] = exponents(idx);
  return static_cast<std::uint32_t>((2 * (static_cast<std::int64_t>(i) - j) % p_ + 2 * p_) % p_);
}

namespace {

// Accumulates c * e^i f^j * hpoly(h) into a sparse column, applying the
// reductions e^p = 0, f^p = fp_value, h^p = h + h_shift.
class ColumnBuilder {
 public:
  ColumnBuilder(const Algebra& alg, const Field& F, Elem fp_value, Elem h_shift)
      : alg_(alg), F_(F), p_(alg.p()), fp_value_(fp_value), h_shift_(h_shift) {}

  // hpoly indexed by power of h, degree at most p.
  void add(std::int64_t c, std::uint32_t i, std::uint32_t j, std::vector<std::int64_t> hpoly) {
    if (i >= p_) return;
    Elem scale = F_.from_int(c);
    if (j >= p_) {
      scale = F_.mul(scale, fp_value_);
      j -= p_;
    }
    if (scale == 0) return;
    if (hpoly.size() > p_) {
      // h^p = h + h_shift
      std::int64_t top = hpoly[p_];
      hpoly.resize(p_);
      hpoly[1] += top;
      hpoly[0] += top * static_cast<std::int64_t>(h_shift_);
    }
    for (std::uint32_t k = 0; k < hpoly.size(); ++k) {
      Elem v = F_.mul(scale, F_.from_int(hpoly[k]));
      if (v == 0) continue;
      auto idx = static_cast<std::uint32_t>(alg_.index(i, j, k));
      entries_[idx] = F_.add(entries_[idx], v);
    }
  }
  void add_monomial(std::int64_t c, std::uint32_t i, std::uint32_t j, std::uint32_t k) {
    std::vector<std::int64_t> hp(k + 1, 0);
    hp[k] = 1;
    add(c, i, j, std::move(hp));
  }
  void flush(SparseOp& op) {
    for (auto [t, v] : entries_) {
      if (v == 0) continue;
      op.targets.push_back(t);
      op.values.push_back(v);
    }
    op.offsets.push_back(static_cast<std::uint32_t>(op.targets.size()));
    entries_.clear();
  }

 private:
  const Algebra& alg_;
  const Field& F_;
  std::uint32_t p_;
  Elem fp_value_, h_shift_;
  std::map<std::uint32_t, Elem> entries_;
};

// Coefficients of (h + s)^k, reduced mod p.
std::vector<std::int64_t> shifted_power(std::uint32_t k, std::int64_t s, std::uint32_t p) {
  std::vector<std::int64_t> c(k + 1, 0);
  c[0] = 1;
  for (std::uint32_t n = 0; n < k; ++n) {
    for (std::uint32_t m = n + 1; m >= 1; --m) c[m] = (c[m - 1] + s * c[m]) % p;
    c[0] = (s * c[0]) % p;
  }
  return c;
}

std::vector<std::int64_t> times_linear(const std::vector<std::int64_t>& poly, std::int64_t s,
                                       std::uint32_t p) {
  // poly * (h + s)
  std::vector<std::int64_t> out(poly.size() + 1, 0);
  for (std::size_t m = 0; m < poly.size(); ++m) {
    out[m + 1] = (out[m + 1] + poly[m]) % p;
    out[m] = (out[m] + s * poly[m]) % p;
  }
  return out;
}

}  // namespace

void Algebra::build_tables() {
  const Field& F = *field_;
  const Elem fp_value = chi_.kind() == Character::Kind::NilpotentE ? 1 : 0;
  const Elem h_shift = chi_.is_regular() ? F.from_int(chi_.a()) : 0;
  const std::int64_t p = p_;
  for (auto& op : left_) op.offsets.push_back(0);
  for (auto& op : right_) op.offsets.push_back(0);
  ColumnBuilder col(*this, F, fp_value, h_shift);
  for (std::size_t idx = 0; idx < dim_; ++idx) {
    auto [i, j, k] = exponents(idx);
    const std::int64_t I = i, J = j;

    // e . e^i f^j h^k
    col.add_monomial(1, i + 1, j, k);
    col.flush(left_[0]);

    // f e^i = e^i f - i e^{i-1} (h + i - 1), then (h + i - 1) f^j = f^j (h + i - 1 - 2j)
    col.add_monomial(1, i, j + 1, k);
    if (i > 0) {
      std::vector<std::int64_t> hp(k + 2, 0);
      hp[k + 1] = 1;
      hp[k] = ((I - 1 - 2 * J) % p + p) % p;
      col.add(-I, i - 1, j, std::move(hp));
    }
    col.flush(left_[1]);

    // h e^i f^j = e^i f^j (h + 2(i - j))
    {
      std::vector<std::int64_t> hp(k + 2, 0);
      hp[k + 1] = 1;
      hp[k] = ((2 * (I - J)) % p + p) % p;
      col.add(1, i, j, std::move(hp));
    }
    col.flush(left_[2]);

    // h^k e = e (h + 2)^k and f^j e = e f^j - j f^{j-1} (h - j + 1)
    {
      auto hp = shifted_power(k, 2, p_);
      col.add(1, i + 1, j, hp);
      if (j > 0) col.add(-J, i, j - 1, times_linear(hp, ((1 - J) % p + p) % p, p_));
    }
    col.flush(right_[0]);

    // h^k f = f (h - 2)^k
    col.add(1, i, j + 1, shifted_power(k, p - 2, p_));
    col.flush(right_[1]);

    col.add_monomial(1, i, j, k + 1);
    col.flush(right_[2]);
  }
}

Vec Algebra::unit(std::size_t idx) const {
  Vec v(dim_, 0);
  v.at(idx) = 1;
  return v;
}

Vec Algebra::left(Gen g, const Vec& v) const {
  Vec out(dim_);
  left_op(g).apply(*field_, v, out);
  return out;
}

Vec Algebra::right(Gen g, const Vec& v) const {
  Vec out(dim_);
  right_op(g).apply(*field_, v, out);
  return out;
}

Vec Algebra::ad(Gen g, const Vec& v) const {
  Vec l = left(g, v), r = right(g, v);
  for (std::size_t i = 0; i < dim_; ++i) l[i] = field_->sub(l[i], r[i]);
  return l;
}

Vec Algebra::left_casimir(const Vec& v) const {
  const Field& F = *field_;
  Vec hv = left(Gen::H, v);
  Vec hhv = left(Gen::H, hv);
  Vec efv = left(Gen::E, left(Gen::F, v));
  Vec out(dim_);
  const Elem two = F.from_int(2), four = F.from_int(4);
  for (std::size_t i = 0; i < dim_; ++i)
    out[i] = F.add(F.sub(F.add(hhv[i], v[i]), F.mul(two, hv[i])), F.mul(four, efv[i]));
  return out;
}

Vec Algebra::apply_center_poly(const Poly& q, const Vec& v) const {
  const Field& F = *field_;
  Vec r(dim_, 0);
  for (int k = q.degree(); k >= 0; --k) {
    r = left_casimir(r);
    const Elem c = q.coeff(k);
    if (c != 0)
      for (std::size_t i = 0; i < dim_; ++i) r[i] = F.add(r[i], F.mul(c, v[i]));
  }
  return r;
}

Vec Algebra::mul(const Vec& u, const Vec& v) const {
  if (u.size() != dim_ || v.size() != dim_) throw std::invalid_argument("element size mismatch");
  const Field& F = *field_;
  const std::uint32_t p = p_;
  // h^k v for every k
  std::vector<Vec> hpow{v};
  for (std::uint32_t k = 1; k < p; ++k) hpow.push_back(left(Gen::H, hpow.back()));

  Vec result(dim_, 0);
  for (int i = static_cast<int>(p) - 1; i >= 0; --i) {
    Vec s(dim_, 0);
    bool s_nonzero = false;
    for (int j = static_cast<int>(p) - 1; j >= 0; --j) {
      if (s_nonzero) s = left(Gen::F, s);
      for (std::uint32_t k = 0; k < p; ++k) {
        const Elem c = u[index(i, j, k)];
        if (c == 0) continue;
        F.sub_scaled(s.data(), hpow[k].data(), F.neg(c), dim_);
        s_nonzero = true;
      }
    }
    result = left(Gen::E, result);
    if (s_nonzero)
      for (std::size_t t = 0; t < dim_; ++t) result[t] = F.add(result[t], s[t]);
  }
  return result;
}

AlgElem Algebra::element(Vec coeffs) const { return AlgElem(shared_from_this(), std::move(coeffs)); }

AlgElem Algebra::monomial(std::uint32_t i, std::uint32_t j, std::uint32_t k) const {
  if (i >= p_ || j >= p_ || k >= p_) throw std::out_of_range("monomial exponent >= p");
  return element(unit(index(i, j, k)));
}

AlgElem Algebra::one() const { return monomial(0, 0, 0); }

AlgElem Algebra::generator(Gen g) const {
  switch (g) {
    case Gen::E:
      return monomial(1, 0, 0);
    case Gen::F:
      return monomial(0, 1, 0);
    case Gen::H:
      return monomial(0, 0, 1);
  }
  throw std::logic_error("bad generator");
}

AlgElem Algebra::casimir() const {
  const Field& F = *field_;
  Vec v(dim_, 0);
  v[index(0, 0, 2)] = 1;
  v[index(0, 0, 1)] = F.from_int(-2);
  v[index(0, 0, 0)] = 1;
  v[index(1, 1, 0)] = F.from_int(4);
  return element(std::move(v));
}

AlgElem Algebra::eval_center_poly(const Poly& q) const {
  return element(apply_center_poly(q, unit(0)));
}

Subspace Algebra::pbw_subspace(std::size_t d) const {
  std::vector<std::size_t> coords;
  for (std::size_t idx = 0; idx < dim_; ++idx)
    if (degree(idx) <= d) coords.push_back(idx);
  return Subspace::coordinate(field_, dim_, coords);
}

Matrix Algebra::ad_matrix(Gen g) const {
  Matrix m(field_, dim_, dim_);
  const Field& F = *field_;
  const auto& L = left_op(g);
  const auto& R = right_op(g);
  for (std::size_t c = 0; c < dim_; ++c) {
    for (auto t = L.offsets[c]; t < L.offsets[c + 1]; ++t)
      m(L.targets[t], c) = F.add(m(L.targets[t], c), L.values[t]);
    for (auto t = R.offsets[c]; t < R.offsets[c + 1]; ++t)
      m(R.targets[t], c) = F.sub(m(R.targets[t], c), R.values[t]);
  }
  return m;
}

// ---------------------------------------------------------------------------

AlgElem::AlgElem(AlgebraPtr alg, Vec coeffs) : alg_(std::move(alg)), coeffs_(std::move(coeffs)) {
  if (!alg_ || coeffs_.size() != alg_->dim())
    throw std::invalid_argument("element must have exactly p^3 coefficients");
}

bool AlgElem::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Elem x) { return x == 0; });
}

static const Algebra& common_algebra(const AlgElem& a, const AlgElem& b) {
  if (!a.algebra() || !b.algebra() || !a.algebra()->same_as(*b.algebra()))
    throw std::invalid_argument("elements belong to algebras with different characters");
  return *a.algebra();
}

AlgElem operator+(const AlgElem& a, const AlgElem& b) {
  const Algebra& A = common_algebra(a, b);
  Vec v = a.coeffs_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = A.field()->add(v[i], b.coeffs_[i]);
  return AlgElem(a.alg_, std::move(v));
}

AlgElem operator-(const AlgElem& a, const AlgElem& b) {
  const Algebra& A = common_algebra(a, b);
  Vec v = a.coeffs_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = A.field()->sub(v[i], b.coeffs_[i]);
  return AlgElem(a.alg_, std::move(v));
}

AlgElem operator*(const AlgElem& a, const AlgElem& b) {
  const Algebra& A = common_algebra(a, b);
  return AlgElem(a.alg_, A.mul(a.coeffs_, b.coeffs_));
}

AlgElem operator*(Elem s, const AlgElem& a) {
  Vec v = a.coeffs_;
  a.alg_->field()->scale(v.data(), s, v.size());
  return AlgElem(a.alg_, std::move(v));
}

std::string AlgElem::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t idx = 0; idx < coeffs_.size(); ++idx) {
    if (coeffs_[idx] == 0) continue;
    auto [i, j, k] = alg_->exponents(idx);
    if (!first) os << " + ";
    first = false;
    os << alg_->field()->to_string(coeffs_[idx]);
    if (i) os << "*e^" << i;
    if (j) os << "*f^" << j;
    if (k) os << "*h^" << k;
  }
  return first ? "0" : os.str();
}

AlgElem commutator(const AlgElem& u, const AlgElem& v) { return u * v - v * u; }

}  // namespace usl2
