#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace usl2 {

/// Smallest and largest characteristic accepted anywhere in the library.
inline constexpr std::uint32_t kMinPrime = 3;
inline constexpr std::uint32_t kMaxPrime = 13;

bool is_prime(std::uint64_t n);

/// Throws std::invalid_argument unless p is an odd prime in [kMinPrime, kMaxPrime].
void require_supported_prime(std::uint32_t p);

/// A finite field F_p or F_p[t]/(t^p - t - a).
///
/// Elements are encoded as integers: the coefficient vector (c_0, ..., c_{n-1})
/// in the power basis of t is stored as sum c_i p^i.  Elements of the prime
/// subfield therefore have the same code in both kinds of field.
class Field {
 public:
  using Elem = std::uint32_t;

  static std::shared_ptr<const Field> prime(std::uint32_t p);
  /// Artin-Schreier extension of degree p; requires a != 0 mod p.
  static std::shared_ptr<const Field> artin_schreier(std::uint32_t p, std::uint32_t a);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return degree_; }
  std::uint64_t size() const { return size_; }
  bool is_prime_field() const { return degree_ == 1; }
  /// Constant term a of the defining polynomial t^p - t - a (0 for a prime field).
  std::uint32_t defining_constant() const { return as_constant_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  /// The root t of the defining polynomial.  Throws for a prime field.
  Elem generator() const;

  Elem from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Elem>(r < 0 ? r + p_ : r);
  }
  bool in_prime_subfield(Elem a) const { return a < p_; }
  /// Residue of an element of the prime subfield; throws otherwise.
  std::uint32_t to_prime(Elem a) const;

  Elem add(Elem a, Elem b) const {
    if (degree_ == 1) {
      Elem s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    return add_ext(a, b);
  }
  Elem neg(Elem a) const {
    if (degree_ == 1) return a == 0 ? 0 : p_ - a;
    return neg_ext(a);
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (degree_ == 1) return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
    if (a == 0 || b == 0) return 0;
    std::uint32_t l = log_[a] + log_[b];
    if (l >= size_ - 1) l -= static_cast<std::uint32_t>(size_ - 1);
    return exp_[l];
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;

  /// dst[i] -= factor * src[i] for i < n.
  void sub_scaled(Elem* dst, const Elem* src, Elem factor, std::size_t n) const;
  /// dst[i] *= factor for i < n.
  void scale(Elem* dst, Elem factor, std::size_t n) const;

  std::vector<std::uint32_t> coefficients(Elem a) const;
  Elem from_coefficients(std::span<const std::uint32_t> c) const;
  /// Decimal for prime-field elements, "[c0,...,c_{p-1}]" for extension elements.
  std::string to_string(Elem a) const;

  bool same_as(const Field& other) const {
    return p_ == other.p_ && degree_ == other.degree_ && as_constant_ == other.as_constant_;
  }

 private:
  Field() = default;
  Elem add_ext(Elem a, Elem b) const;
  Elem neg_ext(Elem a) const;
  Elem mul_slow(Elem a, Elem b) const;
  void build_log_tables();

  std::uint32_t p_ = 0;
  std::uint32_t degree_ = 1;
  std::uint32_t as_constant_ = 0;
  std::uint64_t size_ = 0;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
};

using FieldPtr = std::shared_ptr<const Field>;
using Elem = Field::Elem;

/// -1, 0 or +1.  Rejects elements outside the prime subfield.
int legendre(const Field& field, Elem a);

/// The root omega of alpha with 1 <= omega <= (p-1)/2, or 0 for alpha = 0.
/// Throws std::domain_error for a non-residue.
std::uint32_t omega_of_alpha(const Field& field, Elem alpha);

/// Dense univariate polynomial, lowest degree first, no trailing zeros.
class Poly {
 public:
  Poly() = default;
  Poly(FieldPtr field, std::vector<Elem> coeffs);

  static Poly constant(FieldPtr field, Elem c);
  /// x - root
  static Poly linear(FieldPtr field, Elem root);
  static Poly monomial(FieldPtr field, std::size_t degree, Elem c);

  const FieldPtr& field() const { return field_; }
  const std::vector<Elem>& coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Elem coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  Elem leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }

  Elem evaluate(Elem x) const;
  Poly scaled(Elem c) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  std::string to_string(const std::string& var = "c") const;

 private:
  void trim();
  FieldPtr field_;
  std::vector<Elem> coeffs_;
};

struct NotDivisible : std::domain_error {
  using std::domain_error::domain_error;
};

/// Quotient and remainder of polynomial long division.
std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g);
/// f / g, throwing NotDivisible when g does not divide f.
Poly exact_divide(const Poly& f, const Poly& g);

struct Root {
  Elem value;
  std::size_t multiplicity;
};
/// Every root of f in its field, found by scanning all field elements.
/// Ordered by element code.
std::vector<Root> roots_with_multiplicity(const Poly& f);

}  // namespace usl2
