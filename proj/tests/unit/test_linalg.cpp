#include <doctest.h>

#include <random>

#include "qstrat/errors.hpp"
#include "qstrat/field.hpp"
#include "qstrat/linalg.hpp"

using namespace qstrat;

TEST_CASE("prime field validates its characteristic") {
  CHECK_THROWS_AS(PrimeField(0), Error);
  CHECK_THROWS_AS(PrimeField(1), Error);
  CHECK_THROWS_AS(PrimeField(4), Error);
  CHECK_THROWS_AS(PrimeField(65537), Error);
  CHECK_NOTHROW(PrimeField(65521));
}

TEST_CASE("field arithmetic") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 13u}) {
    PrimeField f(p);
    for (Coeff a = 1; a < p; ++a) {
      CHECK(f.mul(a, f.inv(a)) == 1);
      CHECK(f.add(a, f.neg(a)) == 0);
      CHECK(f.pow(a, p - 1) == 1);
    }
    CHECK(f.from_int(-1) == p - 1);
  }
}

TEST_CASE("binomials mod p agree with exact values") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (long long n = 0; n < 20; ++n) {
      long long c = 1;
      for (long long k = 0; k <= n; ++k) {
        CHECK(binomial_mod(n, k, p) == static_cast<Coeff>(c % p));
        c = c * (n - k) / (k + 1);
      }
    }
  }
}

TEST_CASE("null space and rank on random matrices") {
  std::mt19937 rng(7);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    PrimeField f(p);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 7;
      FpMatrix m(f, rows, cols);
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng() % p;
      const NullSpace ns = null_space(m);
      CHECK(rank(m) + ns.basis.size() == cols);
      for (std::size_t k = 0; k < ns.basis.size(); ++k) {
        const auto& v = ns.basis[k];
        for (Coeff c : m * v) CHECK(c == 0);
        for (std::size_t l = 0; l < ns.free_columns.size(); ++l)
          CHECK(v[ns.free_columns[l]] == (l == k ? 1u : 0u));
      }
      if (!ns.basis.empty()) {
        FpVector combo(cols, 0);
        for (const auto& v : ns.basis)
          for (std::size_t j = 0; j < cols; ++j) combo[j] = f.add(combo[j], f.mul(2 % p, v[j]));
        auto coords = span_coordinates(f, ns.basis, combo);
        REQUIRE(coords.has_value());
        for (Coeff c : *coords) CHECK(c == 2 % p);
      }
    }
  }
}

TEST_CASE("matrix products and transpose") {
  PrimeField f(3);
  FpMatrix a = FpMatrix::from_rows(f, 2, {{1, 2}, {0, 1}});
  FpMatrix b = FpMatrix::from_rows(f, 2, {{1, 1}, {2, 0}});
  FpMatrix ab = a * b;
  CHECK(ab(0, 0) == 2);
  CHECK(ab(0, 1) == 1);
  CHECK(ab(1, 0) == 2);
  CHECK(ab(1, 1) == 0);
  CHECK((a * FpMatrix::identity(f, 2)) == a);
  CHECK(a.transpose().transpose() == a);
  CHECK(FpMatrix::identity(f, 3).is_identity());
  CHECK_FALSE(a.is_identity());
}

TEST_CASE("span coordinates reject vectors outside the span") {
  PrimeField f(2);
  CHECK_FALSE(span_coordinates(f, {{1, 0, 0}, {0, 1, 0}}, FpVector{0, 0, 1}).has_value());
  CHECK(span_coordinates(f, {}, FpVector{0, 0}).has_value());
}
