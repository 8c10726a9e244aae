#include <random>
#include <set>

#include "doctest.h"
#include "usl2/linalg.hpp"

using namespace usl2;

namespace {

Matrix random_matrix(const FieldPtr& F, std::size_t r, std::size_t c, std::mt19937& rng,
                     int zero_bias = 1) {
  std::uniform_int_distribution<int> pick(-zero_bias, static_cast<int>(F->characteristic()) - 1);
  Matrix m(F, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<Elem>(std::max(0, pick(rng)));
  return m;
}

// Every vector of F_3^n, for brute-force checks.
std::vector<Vec> all_vectors(std::size_t n) {
  std::vector<Vec> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    Vec v(n);
    std::size_t x = code;
    for (std::size_t i = 0; i < n; ++i, x /= 3) v[i] = static_cast<Elem>(x % 3);
    out.push_back(v);
  }
  return out;
}

std::size_t log3(std::size_t n) {
  std::size_t k = 0;
  while (n > 1) n /= 3, ++k;
  return k;
}

}  // namespace

TEST_CASE("rank equals log_3 of the image size") {
  auto F = Field::prime(3);
  std::mt19937 rng(11);
  const auto vs = all_vectors(4);
  for (int trial = 0; trial < 40; ++trial) {
    const Matrix m = random_matrix(F, 3, 4, rng, 2);
    std::set<Vec> image;
    for (const auto& v : vs) image.insert(m.apply(v));
    CHECK(rank(m) == log3(image.size()));
    const Subspace k = kernel(m);
    CHECK(k.dim() == 4 - rank(m));
    std::size_t kernel_size = 0;
    for (const auto& v : vs) kernel_size += m.apply(v) == Vec(3, 0);
    CHECK(k.dim() == log3(kernel_size));
    for (const auto& b : k.basis()) CHECK(m.apply(b) == Vec(3, 0));
  }
}

TEST_CASE("intersection and sum against enumeration") {
  auto F = Field::prime(3);
  std::mt19937 rng(5);
  const auto vs = all_vectors(5);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<int> d(0, 4);
    const Matrix a = random_matrix(F, d(rng), 5, rng, 2);
    const Matrix b = random_matrix(F, d(rng), 5, rng, 2);
    std::vector<Vec> ra, rb;
    for (std::size_t i = 0; i < a.rows(); ++i) ra.emplace_back(a.row(i).begin(), a.row(i).end());
    for (std::size_t i = 0; i < b.rows(); ++i) rb.emplace_back(b.row(i).begin(), b.row(i).end());
    const auto U = Subspace::span(F, 5, ra), W = Subspace::span(F, 5, rb);
    const auto I = intersect(U, W);
    std::size_t both = 0;
    for (const auto& v : vs) {
      const bool in = U.contains(v) && W.contains(v);
      both += in;
      CHECK(I.contains(v) == in);
    }
    CHECK(I.dim() == log3(both));
    CHECK(sum(U, W).dim() + I.dim() == U.dim() + W.dim());
    CHECK(intersect(W, U) == I);
  }
}

TEST_CASE("canonical bases are unique") {
  auto F = Field::prime(5);
  const auto a = Subspace::span(F, 3, {{1, 2, 3}, {0, 1, 1}});
  const auto b = Subspace::span(F, 3, {{1, 3, 4}, {2, 4, 1}});
  CHECK(a == b);
  CHECK(a.pivots() == std::vector<std::size_t>{0, 1});
  Subspace c = Subspace::zero(F, 3);
  CHECK(c.insert({0, 0, 2}));
  CHECK_FALSE(c.insert({0, 0, 1}));
  CHECK(c.dim() == 1);
}

TEST_CASE("solve and orthogonal complement") {
  auto F = Field::prime(7);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix m = random_matrix(F, 4, 6, rng);
    Vec x(6);
    for (auto& v : x) v = rng() % 7;
    const Vec b = m.apply(x);
    auto sol = solve(m, b);
    REQUIRE(sol.has_value());
    CHECK(m.apply(*sol) == b);
  }
  Matrix z(F, 2, 2);
  z(0, 0) = 1;
  CHECK_FALSE(solve(z, Vec{0, 1}).has_value());

  const Matrix g = Matrix::identity(F, 4);
  const auto u = Subspace::span(F, 4, {{1, 1, 0, 0}});
  const auto perp = orth_complement(u, g);
  CHECK(perp.dim() == 3);
  CHECK(perp.contains(Vec{1, 6, 0, 0}));
}

TEST_CASE("Jordan type from ranks of powers") {
  auto F = Field::prime(5);
  // blocks of sizes 3, 2, 1 placed along the superdiagonal
  Matrix n(F, 6, 6);
  n(0, 1) = 1;
  n(1, 2) = 1;
  n(3, 4) = 1;
  CHECK(jordan_type_nilpotent(n) == std::vector<std::size_t>{3, 2, 1});
  // conjugate by a random invertible matrix
  std::mt19937 rng(2);
  Matrix s;
  do {
    s = random_matrix(F, 6, 6, rng, 0);
  } while (rank(s) < 6);
  Matrix sinv(F, 6, 6);
  for (std::size_t j = 0; j < 6; ++j) {
    Vec ej(6, 0);
    ej[j] = 1;
    auto col = solve(s, ej);
    for (std::size_t i = 0; i < 6; ++i) sinv(i, j) = (*col)[i];
  }
  CHECK(jordan_type_nilpotent(s * n * sinv) == std::vector<std::size_t>{3, 2, 1});
  CHECK_THROWS_AS(jordan_type_nilpotent(Matrix::identity(F, 2)), std::domain_error);
}

TEST_CASE("induced action on a quotient") {
  auto F = Field::prime(3);
  // shift operator e_0 -> e_1 -> e_2 -> 0, quotient by span(e_2)
  Matrix n(F, 3, 3);
  n(1, 0) = 1;
  n(2, 1) = 1;
  const auto w = Subspace::full(F, 3);
  const auto ws = Subspace::span(F, 3, {{0, 0, 1}});
  const Matrix q = induced_action(w, ws, [&](const Vec& v) { return n.apply(v); });
  CHECK(q.rows() == 2);
  CHECK(jordan_type_nilpotent(q) == std::vector<std::size_t>{2});
}
