#include <random>

#include "doctest.h"
#include "usl2/ffield.hpp"

using namespace usl2;

namespace {

// Schoolbook product in F_p[t] followed by t^p -> t + a, done from scratch.
std::vector<std::uint32_t> naive_mul(std::uint32_t p, std::uint32_t a,
                                     const std::vector<std::uint32_t>& x,
                                     const std::vector<std::uint32_t>& y) {
  std::vector<std::uint64_t> prod(2 * p, 0);
  for (std::uint32_t i = 0; i < p; ++i)
    for (std::uint32_t j = 0; j < p; ++j) prod[i + j] += std::uint64_t(x[i]) * y[j];
  for (std::uint32_t d = 2 * p - 1; d >= p; --d) {
    const auto c = prod[d] % p;
    prod[d] = 0;
    prod[d - p + 1] += c;
    prod[d - p] += c * a;
  }
  std::vector<std::uint32_t> out(p);
  for (std::uint32_t i = 0; i < p; ++i) out[i] = static_cast<std::uint32_t>(prod[i] % p);
  return out;
}

}  // namespace

TEST_CASE("prime field arithmetic agrees with integer arithmetic") {
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    auto F = Field::prime(p);
    CHECK(F->size() == p);
    for (std::uint32_t x = 0; x < p; ++x) {
      for (std::uint32_t y = 0; y < p; ++y) {
        CHECK(F->add(x, y) == (x + y) % p);
        CHECK(F->mul(x, y) == (x * y) % p);
        CHECK(F->sub(x, y) == (x + p - y) % p);
      }
      if (x != 0) CHECK(F->mul(x, F->inv(x)) == 1);
    }
    CHECK(F->from_int(-1) == p - 1);
  }
}

TEST_CASE("supported primes") {
  CHECK_NOTHROW(require_supported_prime(3));
  CHECK_NOTHROW(require_supported_prime(13));
  CHECK_THROWS(require_supported_prime(2));
  CHECK_THROWS(require_supported_prime(9));
  CHECK_THROWS(require_supported_prime(17));
  CHECK(is_prime(13));
  CHECK_FALSE(is_prime(15));
}

TEST_CASE("Artin-Schreier multiplication matches the schoolbook oracle") {
  std::mt19937 rng(7);
  for (std::uint32_t p : {3u, 5u}) {
    for (std::uint32_t a = 1; a < p; ++a) {
      auto F = Field::artin_schreier(p, a);
      CHECK(F->degree() == p);
      std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(F->size() - 1));
      for (int trial = 0; trial < 300; ++trial) {
        const Elem x = pick(rng), y = pick(rng);
        const auto expect = naive_mul(p, a, F->coefficients(x), F->coefficients(y));
        CHECK(F->coefficients(F->mul(x, y)) == expect);
        if (x != 0) CHECK(F->mul(x, F->inv(x)) == 1);
      }
      const Elem t = F->generator();
      CHECK(F->pow(t, p) == F->add(t, a));
      // Frobenius fixes exactly the prime subfield
      std::size_t fixed = 0;
      for (Elem x = 0; x < F->size(); ++x) fixed += F->pow(x, p) == x;
      CHECK(fixed == p);
    }
  }
}

TEST_CASE("F_{7^7} round trip and generator") {
  auto F = Field::artin_schreier(7, 3);
  const Elem t = F->generator();
  CHECK(F->pow(t, 7) == F->add(t, 3));
  CHECK(F->to_string(t) == "[0,1,0,0,0,0,0]");
  std::vector<std::uint32_t> c{1, 2, 3, 4, 5, 6, 0};
  CHECK(F->coefficients(F->from_coefficients(c)) == c);
  CHECK_THROWS(Field::artin_schreier(11, 1));
  CHECK_THROWS(Field::artin_schreier(5, 0));
}

TEST_CASE("Legendre symbol and omega against brute force") {
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    auto F = Field::prime(p);
    std::vector<int> sq(p, -1);
    sq[0] = 0;
    for (std::uint32_t x = 1; x < p; ++x) sq[x * x % p] = 1;
    for (std::uint32_t x = 0; x < p; ++x) {
      CHECK(legendre(*F, x) == sq[x]);
      if (sq[x] >= 0) {
        const auto w = omega_of_alpha(*F, x);
        CHECK(w <= (p - 1) / 2);
        CHECK(w * w % p == x);
      } else {
        CHECK_THROWS_AS(omega_of_alpha(*F, x), std::domain_error);
      }
    }
  }
}

TEST_CASE("polynomials over F_p") {
  auto F = Field::prime(5);
  Poly f(F, {1, 0, 1});        // x^2 + 1 = (x - 2)(x - 3)
  auto r = roots_with_multiplicity(f);
  REQUIRE(r.size() == 2);
  CHECK(r[0].value == 2);
  CHECK(r[1].value == 3);
  Poly g = Poly::linear(F, 2) * Poly::linear(F, 2) * Poly::linear(F, 4);
  auto rg = roots_with_multiplicity(g);
  REQUIRE(rg.size() == 2);
  CHECK(rg[0].multiplicity == 2);
  CHECK(rg[1].multiplicity == 1);
  auto [q, rem] = divmod(g, Poly::linear(F, 2));
  CHECK(rem.is_zero());
  CHECK(q == Poly::linear(F, 2) * Poly::linear(F, 4));
  CHECK_THROWS_AS(exact_divide(f, Poly::linear(F, 1)), NotDivisible);
  CHECK(f.evaluate(2) == 0);
  CHECK(f.to_string() == "c^2 + 1");
}
