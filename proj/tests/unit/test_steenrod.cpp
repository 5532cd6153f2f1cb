#include <random>

#include "common.hpp"
#include "qstrat/errors.hpp"
#include "qstrat/steenrod.hpp"

using namespace qstrat;

namespace {

AlgElement random_element(const GradedAlgebra& alg, int d, std::mt19937& rng) {
  const auto b = alg.basis(d);
  FpVector v(b.size());
  for (auto& c : v) c = rng() % alg.prime();
  return alg.from_vector(d, v);
}

GradedAlgebra reduced_rank(std::uint32_t p, std::size_t r) { return GradedAlgebra::elementary_abelian(p, r, true); }

}  // namespace

TEST_CASE("generator rule at l = 2") {
  const auto alg = reduced_rank(2, 1);
  const auto x = alg.poly_generator(0);
  const auto r = total_steenrod(alg, x);
  CHECK(r.powers.at(0) == x);
  CHECK(r.powers.at(1) == alg.pow(x, 2));
  CHECK(steenrod_power(alg, x, 2).is_zero());
  CHECK(steenrod_power(alg, x, -1).is_zero());
}

TEST_CASE("Cartan expansion of xy at l = 2") {
  const auto alg = reduced_rank(2, 2);
  const auto x = alg.poly_generator(0), y = alg.poly_generator(1);
  const auto xy = alg.mul(x, y);
  CHECK(steenrod_power(alg, xy, 1) == alg.add(alg.mul(alg.pow(x, 2), y), alg.mul(x, alg.pow(y, 2))));
  CHECK(steenrod_power(alg, xy, 2) == alg.mul(alg.pow(x, 2), alg.pow(y, 2)));
  CHECK(steenrod_power(alg, xy, 3).is_zero());
}

TEST_CASE("P^0 is the identity and the top power is the l-th power") {
  std::mt19937 rng(3);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const auto alg = reduced_rank(p, 3);
    const int eps = p == 2 ? 1 : 2;
    for (int d = 0; d <= 8; d += eps)
      for (const auto& m : alg.basis(d)) CHECK(steenrod_power(alg, alg.monomial(m), 0) == alg.monomial(m));
    for (int trial = 0; trial < 10; ++trial) {
      const auto a = random_element(alg, eps, rng);
      CHECK(steenrod_power(alg, a, 1) == alg.pow(a, p));
    }
  }
}

TEST_CASE("powers agree with the closed binomial form") {
  for (std::uint32_t p : {2u, 3u}) {
    const auto alg = reduced_rank(p, 3);
    const int eps = p == 2 ? 1 : 2;
    for (int d = 0; d <= 6 * eps; d += eps)
      for (const auto& m : alg.basis(d)) {
        const std::vector<int> exps(m.exps.begin(), m.exps.end());
        for (int i = 0; i <= d / eps + 1; ++i) {
          AlgElement expected;
          for (const auto& [e, c] : oracle::steenrod_closed_form(exps, static_cast<int>(p), i)) {
            Monomial mm{0, std::vector<std::uint16_t>(e.begin(), e.end())};
            expected = alg.add(expected, alg.monomial(mm, static_cast<Coeff>(c)));
          }
          CHECK(steenrod_power(alg, alg.monomial(m), i) == expected);
        }
      }
  }
}

TEST_CASE("total operation is multiplicative on random pairs") {
  std::mt19937 rng(17);
  int cases = 0;
  for (std::uint32_t p : {2u, 3u}) {
    const auto alg = reduced_rank(p, 2);
    const int eps = p == 2 ? 1 : 2;
    for (int trial = 0; trial < 80; ++trial) {
      const int d1 = eps * static_cast<int>(rng() % (6 / eps + 1));
      const int d2 = eps * static_cast<int>(rng() % (6 / eps + 1));
      const auto a = random_element(alg, d1, rng);
      const auto b = random_element(alg, d2, rng);
      const auto pa = total_steenrod(alg, a).powers;
      const auto pb = total_steenrod(alg, b).powers;
      const auto pab = total_steenrod(alg, alg.mul(a, b)).powers;
      const int top = (d1 + d2) / eps;
      for (int i = 0; i <= top; ++i) {
        AlgElement sum;
        for (int j = 0; j <= i; ++j) {
          auto ia = pa.find(j);
          auto ib = pb.find(i - j);
          if (ia != pa.end() && ib != pb.end()) sum = alg.add(sum, alg.mul(ia->second, ib->second));
        }
        auto it = pab.find(i);
        CHECK((it == pab.end() ? alg.zero() : it->second) == sum);
      }
      ++cases;
    }
  }
  CHECK(cases >= 100);
}

TEST_CASE("exterior classes are rejected for odd l") {
  const auto alg = GradedAlgebra::elementary_abelian(3, 1);
  CHECK_THROWS_AS(total_steenrod(alg, alg.ext_generator(0)), Error);
  try {
    total_steenrod(alg, alg.ext_generator(0));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OddPartUnsupported);
  }
  const auto wrong = GradedAlgebra::polynomial(2, {2});
  CHECK_THROWS_AS(total_steenrod(wrong, wrong.poly_generator(0)), Error);
}

TEST_CASE("operations commute with restriction along category morphisms") {
  for (auto [name, p] : {std::pair{"a4", 2u}, std::pair{"s4", 2u}, std::pair{"d8", 2u},
                         std::pair{"z3sq_z2", 3u}, std::pair{"z3wr_z2", 3u}, std::pair{"s3", 3u}}) {
    CAPTURE(name);
    const auto cat = build_category(testing::point_space(name), p);
    for (const auto& arrow : cat.diagram(true).arrows) {
      const auto& theta = arrow.restriction;
      const auto& src = theta.source();
      const int eps = p == 2 ? 1 : 2;
      for (int d = eps; d <= 3 * eps; d += eps)
        for (const auto& m : src.basis(d))
          for (int i = 0; i <= d / eps; ++i)
            CHECK(theta.apply(steenrod_power(src, src.monomial(m), i)) ==
                  steenrod_power(theta.target(), theta.apply(m), i));
    }
  }
}

TEST_CASE("Steenrod operations on limit elements") {
  const auto cat = build_category(testing::point_space("a4"), 2);
  const auto ring = limit_ring(cat, 8, true);
  // scalars
  const auto one = ring.basis(0)[0];
  const auto s = steenrod_on_limit(ring, one);
  CHECK(s.powers.size() == 1);
  CHECK(s.powers.at(0) == one);
  CHECK(steenrod_power_on_limit(ring, one, 1).components[0].is_zero());
  // the degree-2 class: P^1 lands in the degree-3 limit
  const auto q = ring.basis(2)[0];
  const auto sq = steenrod_on_limit(ring, q);
  CHECK(sq.powers.at(1).degree == 3);
  CHECK(ring.contains(sq.powers.at(1)));
  CHECK(sq.powers.at(2) == ring.multiply(q, q));
  // overflow
  CHECK_THROWS_AS(steenrod_power_on_limit(ring, ring.basis(6)[0], 3), Error);

  // single object: agrees with the algebra operation
  Diagram d;
  d.algebras.push_back(reduced_rank(3, 2));
  const auto single = limit_ring(d, 12);
  for (const auto& t : single.basis(4)) {
    const auto r = steenrod_on_limit(single, t);
    for (const auto& [i, v] : r.powers) CHECK(v.components[0] == steenrod_power(d.algebras[0], t.components[0], i));
  }
  CHECK(check_stratum_stability(single, 0).entries.empty());
  CHECK(check_stratum_stability(single, 0).pass);
}

TEST_CASE("kernels of restrictions are Steenrod stable") {
  for (auto [name, p] : {std::pair{"a4", 2u}, std::pair{"s4", 2u}, std::pair{"d8", 2u},
                         std::pair{"z3sq_z2", 3u}, std::pair{"s3", 3u}}) {
    CAPTURE(name);
    const auto cat = build_category(testing::point_space(name), p);
    const auto ring = limit_ring(cat, 8, true);
    for (std::size_t i = 0; i < cat.size(); ++i) {
      const auto rep = check_stratum_stability(ring, i);
      CHECK(rep.pass);
      for (const auto& e : rep.entries) CHECK(e.pass);
    }
  }
  const auto x = testing::load_space("d8", "square_d8", true);
  const auto cat = build_category(x, 2);
  const auto ring = limit_ring(cat, 8, true);
  for (std::size_t i = 0; i < cat.size(); ++i) CHECK(check_stratum_stability(ring, i).pass);
  // A_4 rank-1 stratum has a nonzero kernel and is checked
  const auto a4 = limit_ring(build_category(testing::point_space("a4"), 2), 8, true);
  CHECK_FALSE(check_stratum_stability(a4, 1).entries.empty());
}
