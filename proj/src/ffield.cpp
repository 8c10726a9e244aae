#include "usl2/ffield.hpp"

#include <algorithm>
#include <sstream>

namespace usl2 {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void require_supported_prime(std::uint32_t p) {
  if (!is_prime(p) || p == 2)
    throw std::invalid_argument("p must be an odd prime, got " + std::to_string(p));
  if (p < kMinPrime || p > kMaxPrime)
    throw std::invalid_argument("p must lie in [" + std::to_string(kMinPrime) + ", " +
                                std::to_string(kMaxPrime) + "], got " + std::to_string(p));
}

std::shared_ptr<const Field> Field::prime(std::uint32_t p) {
  require_supported_prime(p);
  auto f = std::shared_ptr<Field>(new Field());
  f->p_ = p;
  f->degree_ = 1;
  f->size_ = p;
  return f;
}

// Largest extension we build log tables for: 7^7 = 823543 elements.
static constexpr std::uint32_t kMaxExtensionPrime = 7;

std::shared_ptr<const Field> Field::artin_schreier(std::uint32_t p, std::uint32_t a) {
  require_supported_prime(p);
  if (p > kMaxExtensionPrime)
    throw std::invalid_argument("extension fields are limited to p <= " +
                                std::to_string(kMaxExtensionPrime));
  if (a % p == 0)
    throw std::invalid_argument("t^p - t - a is reducible for a = 0");
  auto f = std::shared_ptr<Field>(new Field());
  f->p_ = p;
  f->degree_ = p;
  f->as_constant_ = a % p;
  f->size_ = 1;
  for (std::uint32_t i = 0; i < p; ++i) f->size_ *= p;
  f->build_log_tables();
  return f;
}

Elem Field::generator() const {
  if (degree_ == 1) throw std::logic_error("prime field has no generator t");
  return p_;
}

std::uint32_t Field::to_prime(Elem a) const {
  if (!in_prime_subfield(a))
    throw std::invalid_argument("element " + to_string(a) + " is not in the prime field");
  return a;
}

Elem Field::add_ext(Elem a, Elem b) const {
  Elem r = 0, place = 1;
  while (a != 0 || b != 0) {
    std::uint32_t s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    r += s * place;
    place *= p_;
    a /= p_;
    b /= p_;
  }
  return r;
}

Elem Field::neg_ext(Elem a) const {
  Elem r = 0, place = 1;
  while (a != 0) {
    std::uint32_t d = a % p_;
    r += (d == 0 ? 0 : p_ - d) * place;
    place *= p_;
    a /= p_;
  }
  return r;
}

// Schoolbook product reduced with t^p = t + a.
Elem Field::mul_slow(Elem a, Elem b) const {
  auto ca = coefficients(a), cb = coefficients(b);
  std::vector<std::uint64_t> prod(2 * degree_ - 1, 0);
  for (std::uint32_t i = 0; i < degree_; ++i)
    for (std::uint32_t j = 0; j < degree_; ++j) prod[i + j] += std::uint64_t(ca[i]) * cb[j];
  for (std::size_t k = prod.size() - 1; k >= degree_; --k) {
    std::uint64_t c = prod[k] % p_;
    prod[k] = 0;
    prod[k - degree_ + 1] += c;
    prod[k - degree_] += c * as_constant_;
  }
  std::vector<std::uint32_t> out(degree_);
  for (std::uint32_t i = 0; i < degree_; ++i) out[i] = static_cast<std::uint32_t>(prod[i] % p_);
  return from_coefficients(out);
}

void Field::build_log_tables() {
  const std::uint64_t order = size_ - 1;
  std::vector<std::uint64_t> prime_factors;
  std::uint64_t m = order;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      prime_factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) prime_factors.push_back(m);

  auto slow_pow = [&](Elem x, std::uint64_t e) {
    Elem r = 1;
    while (e) {
      if (e & 1) r = mul_slow(r, x);
      x = mul_slow(x, x);
      e >>= 1;
    }
    return r;
  };

  Elem primitive = 0;
  for (Elem g = 2; g < size_; ++g) {
    bool ok = true;
    for (auto q : prime_factors)
      if (slow_pow(g, order / q) == 1) {
        ok = false;
        break;
      }
    if (ok) {
      primitive = g;
      break;
    }
  }
  if (primitive == 0) throw std::logic_error("no primitive element found");

  exp_.assign(order, 0);
  log_.assign(size_, 0);
  Elem x = 1;
  for (std::uint64_t i = 0; i < order; ++i) {
    exp_[i] = x;
    log_[x] = static_cast<std::uint32_t>(i);
    x = mul_slow(x, primitive);
  }
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw std::domain_error("division by zero in F_" + std::to_string(size_));
  if (degree_ == 1) return pow(a, p_ - 2);
  std::uint32_t l = log_[a];
  return exp_[l == 0 ? 0 : (size_ - 1) - l];
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  Elem r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

void Field::sub_scaled(Elem* dst, const Elem* src, Elem factor, std::size_t n) const {
  if (factor == 0) return;
  if (degree_ == 1) {
    const std::uint64_t nf = p_ - factor;
    for (std::size_t i = 0; i < n; ++i) {
      if (src[i] == 0) continue;
      dst[i] = static_cast<Elem>((dst[i] + nf * src[i]) % p_);
    }
    return;
  }
  const Elem nf = neg(factor);
  for (std::size_t i = 0; i < n; ++i) {
    if (src[i] == 0) continue;
    dst[i] = add(dst[i], mul(nf, src[i]));
  }
}

void Field::scale(Elem* dst, Elem factor, std::size_t n) const {
  for (std::size_t i = 0; i < n; ++i) dst[i] = mul(dst[i], factor);
}

std::vector<std::uint32_t> Field::coefficients(Elem a) const {
  std::vector<std::uint32_t> c(degree_, 0);
  for (std::uint32_t i = 0; i < degree_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

Elem Field::from_coefficients(std::span<const std::uint32_t> c) const {
  if (c.size() > degree_) throw std::invalid_argument("too many coefficients for field");
  Elem r = 0, place = 1;
  for (auto v : c) {
    r += (v % p_) * place;
    place *= p_;
  }
  return r;
}

std::string Field::to_string(Elem a) const {
  if (degree_ == 1) return std::to_string(a);
  auto c = coefficients(a);
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ']';
  return os.str();
}

int legendre(const Field& field, Elem a) {
  if (!field.in_prime_subfield(a))
    throw std::invalid_argument("legendre symbol is only defined on the prime field");
  if (a == 0) return 0;
  const std::uint32_t p = field.characteristic();
  Elem r = 1, base = a;
  for (std::uint32_t e = (p - 1) / 2; e; e >>= 1) {
    if (e & 1) r = static_cast<Elem>(std::uint64_t(r) * base % p);
    base = static_cast<Elem>(std::uint64_t(base) * base % p);
  }
  return r == 1 ? 1 : -1;
}

std::uint32_t omega_of_alpha(const Field& field, Elem alpha) {
  if (legendre(field, alpha) < 0)
    throw std::domain_error(field.to_string(alpha) + " is not a square mod " +
                            std::to_string(field.characteristic()));
  if (alpha == 0) return 0;
  const std::uint32_t p = field.characteristic();
  for (std::uint32_t w = 1; w <= (p - 1) / 2; ++w)
    if (w * w % p == alpha) return w;
  throw std::logic_error("square root not found");
}

// ---------------------------------------------------------------------------

Poly::Poly(FieldPtr field, std::vector<Elem> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  trim();
}

Poly Poly::constant(FieldPtr field, Elem c) { return Poly(std::move(field), {c}); }

Poly Poly::linear(FieldPtr field, Elem root) {
  Elem nr = field->neg(root);
  return Poly(std::move(field), {nr, 1});
}

Poly Poly::monomial(FieldPtr field, std::size_t degree, Elem c) {
  std::vector<Elem> v(degree + 1, 0);
  v[degree] = c;
  return Poly(std::move(field), std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Elem Poly::evaluate(Elem x) const {
  Elem r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    r = field_->add(field_->mul(r, x), *it);
  return r;
}

Poly Poly::scaled(Elem c) const {
  std::vector<Elem> v(coeffs_);
  for (auto& x : v) x = field_->mul(x, c);
  return Poly(field_, std::move(v));
}

static const FieldPtr& common_field(const Poly& a, const Poly& b) {
  if (!a.field() || !b.field() || !a.field()->same_as(*b.field()))
    throw std::invalid_argument("polynomials over different fields");
  return a.field();
}

Poly operator+(const Poly& a, const Poly& b) {
  const auto& F = common_field(a, b);
  std::vector<Elem> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = F->add(a.coeff(i), b.coeff(i));
  return Poly(F, std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
  const auto& F = common_field(a, b);
  std::vector<Elem> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = F->sub(a.coeff(i), b.coeff(i));
  return Poly(F, std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
  const auto& F = common_field(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(F, {});
  std::vector<Elem> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      v[i + j] = F->add(v[i + j], F->mul(a.coeffs_[i], b.coeffs_[j]));
  return Poly(F, std::move(v));
}

std::string Poly::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Elem c = coeffs_[i];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    bool unit = c == 1 && i > 0;
    if (!unit) os << field_->to_string(c);
    if (i > 0) {
      if (!unit) os << '*';
      os << var;
      if (i > 1) os << '^' << i;
    }
  }
  return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g) {
  const auto& F = common_field(f, g);
  if (g.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Elem> rem(f.coeffs());
  const int dg = g.degree();
  const Elem lead_inv = F->inv(g.leading());
  std::vector<Elem> quo(f.degree() >= dg ? f.degree() - dg + 1 : 0, 0);
  for (int k = f.degree() - dg; k >= 0; --k) {
    Elem q = F->mul(rem[k + dg], lead_inv);
    quo[k] = q;
    if (q == 0) continue;
    for (int j = 0; j <= dg; ++j)
      rem[k + j] = F->sub(rem[k + j], F->mul(q, g.coeffs()[j]));
  }
  return {Poly(F, std::move(quo)), Poly(F, std::move(rem))};
}

Poly exact_divide(const Poly& f, const Poly& g) {
  auto [q, r] = divmod(f, g);
  if (!r.is_zero())
    throw NotDivisible("(" + g.to_string() + ") does not divide (" + f.to_string() + ")");
  return q;
}

std::vector<Root> roots_with_multiplicity(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("the zero polynomial has every element as a root");
  const auto& F = f.field();
  std::vector<Root> roots;
  for (std::uint64_t x = 0; x < F->size(); ++x) {
    const Elem e = static_cast<Elem>(x);
    if (f.evaluate(e) != 0) continue;
    Poly rest = f;
    std::size_t mult = 0;
    const Poly lin = Poly::linear(F, e);
    while (rest.degree() > 0) {
      auto [q, r] = divmod(rest, lin);
      if (!r.is_zero()) break;
      rest = std::move(q);
      ++mult;
    }
    roots.push_back({e, mult});
  }
  return roots;
}

}  // namespace usl2
