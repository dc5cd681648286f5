#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>

#include "strongreal/matrix.hpp"

using namespace strongreal;

namespace {

Matrix random_matrix(const FieldCtx& f, unsigned r, unsigned c, std::mt19937_64& rng, unsigned zero_bias = 0) {
  Matrix m(f, r, c);
  for (unsigned i = 0; i < r; ++i) {
    for (unsigned j = 0; j < c; ++j) m(i, j) = rng() % (zero_bias + 1) == 0 ? Elem{rng() % f.size()} : f.zero();
  }
  return m;
}

// Leibniz expansion.
Elem det(const Matrix& m) {
  const FieldCtx& f = m.ctx();
  std::vector<unsigned> perm(m.rows());
  std::iota(perm.begin(), perm.end(), 0U);
  Elem acc = f.zero();
  do {
    unsigned inversions = 0;
    for (unsigned i = 0; i < perm.size(); ++i) {
      for (unsigned j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
    }
    Elem term = f.one();
    for (unsigned i = 0; i < perm.size(); ++i) term = f.mul(term, m(i, perm[i]));
    acc = inversions % 2 == 0 ? f.add(acc, term) : f.sub(acc, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

// Number of x with m x = 0, by trying every vector.
std::uint64_t kernel_size(const Matrix& m) {
  const FieldCtx& f = m.ctx();
  std::uint64_t total = 1, count = 0;
  for (unsigned i = 0; i < m.cols(); ++i) total *= f.size();
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::vector<Elem> x(m.cols());
    std::uint64_t rest = idx;
    for (auto& e : x) {
      e = Elem{rest % f.size()};
      rest /= f.size();
    }
    bool zero = true;
    for (unsigned i = 0; i < m.rows() && zero; ++i) {
      Elem s = f.zero();
      for (unsigned j = 0; j < m.cols(); ++j) s = f.add(s, f.mul(m(i, j), x[j]));
      zero = s.code == 0;
    }
    count += zero;
  }
  return count;
}

}  // namespace

TEST_CASE("rank and kernel agree with exhaustive search", "[matrix]") {
  std::mt19937_64 rng(5);
  const FieldCtx& f = *field(PrimePower(3, 1), 1);
  for (int t = 0; t < 60; ++t) {
    const unsigned r = 1 + rng() % 4, c = 1 + rng() % 4;
    const Matrix m = random_matrix(f, r, c, rng, t % 3);
    const auto basis = linalg::kernel(m);
    std::uint64_t expect = 1;
    for (unsigned i = 0; i < linalg::nullity(m); ++i) expect *= f.size();
    CHECK(kernel_size(m) == expect);
    CHECK(basis.size() == linalg::nullity(m));
    CHECK(linalg::rank(m) + linalg::nullity(m) == c);
    for (const auto& v : basis) {
      Matrix x(f, c, 1);
      for (unsigned i = 0; i < c; ++i) x(i, 0) = v[i];
      CHECK((m * x).is_zero());
    }
  }
}

TEST_CASE("inverse", "[matrix]") {
  std::mt19937_64 rng(9);
  const FieldCtx& f = *field(PrimePower(2, 1), 2);
  unsigned singular = 0;
  for (int t = 0; t < 100; ++t) {
    const unsigned n = 1 + rng() % 4;
    const Matrix m = random_matrix(f, n, n, rng, t % 2);
    const auto inv = linalg::inverse(m);
    CHECK(inv.has_value() == (det(m).code != 0));
    CHECK(linalg::invertible(m) == inv.has_value());
    if (inv) {
      CHECK((m * *inv).is_identity());
      CHECK((*inv * m).is_identity());
    } else {
      ++singular;
      CHECK_THROWS_AS(linalg::inverse_or_throw(m), Error);
    }
  }
  CHECK(singular > 0);
}

TEST_CASE("characteristic polynomial agrees with determinants", "[matrix]") {
  std::mt19937_64 rng(13);
  for (std::uint64_t qv : {2, 3}) {
    const FieldCtx& f = *field(PrimePower::from_q(qv), 2);
    for (int t = 0; t < 40; ++t) {
      const unsigned n = 1 + rng() % 3;
      const Matrix m = random_matrix(f, n, n, rng, t % 3);
      const MonicPoly chi = linalg::charpoly(m);
      REQUIRE(chi.degree() == n);
      for (std::uint64_t x = 0; x < f.size(); ++x) {
        const Matrix shifted = Matrix::identity(f, n).scaled(Elem{x}) - m;
        CHECK(poly::eval(f, chi, Elem{x}) == det(shifted));
      }
      CHECK(linalg::evaluate(chi, m).is_zero());
    }
  }
}

TEST_CASE("companion matrix has the given characteristic polynomial", "[matrix]") {
  const FieldCtx& f = *field(PrimePower(5, 1), 2);
  std::mt19937_64 rng(17);
  for (int t = 0; t < 30; ++t) {
    const unsigned d = 1 + rng() % 5;
    std::vector<Elem> c(d + 1);
    for (auto& e : c) e = Elem{rng() % f.size()};
    c[d] = f.one();
    const MonicPoly p(c);
    CHECK(linalg::charpoly(linalg::companion(f, p)) == p);
  }
}

TEST_CASE("conjugate transpose", "[matrix]") {
  const FieldCtx& f = *field(PrimePower(3, 1), 2);
  std::mt19937_64 rng(19);
  const Matrix a = random_matrix(f, 3, 2, rng), b = random_matrix(f, 2, 4, rng);
  CHECK((a * b).star() == b.star() * a.star());
  CHECK(a.star().star() == a);
  CHECK(a.transpose().rows() == 2);
  CHECK(Matrix::direct_sum({a, b}).rows() == 5);
  CHECK_THROWS_AS(a * a, Error);
}
