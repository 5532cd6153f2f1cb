#include <set>

#include "common.hpp"
#include "qstrat/errors.hpp"
#include "qstrat/quillen.hpp"

using namespace qstrat;

namespace {

std::vector<long long> expand(const RationalFit& fit, std::size_t n) {
  // numerator / prod (1 - t^(step*i)) as a power series
  std::vector<long long> s(n, 0);
  for (std::size_t k = 0; k < fit.numerator.size() && k < n; ++k) s[k] = fit.numerator[k];
  for (int i : fit.denominator_indices) {
    const std::size_t step = static_cast<std::size_t>(fit.factor_step * i);
    for (std::size_t k = step; k < n; ++k) s[k] += s[k - step];
  }
  return s;
}

struct Case {
  const char* group;
  const char* space;
  std::uint32_t ell;
  bool subdivide;
};

const std::vector<Case> kCases = {
    {"z2", "point", 2, false},        {"z3", "point", 3, false},   {"s3", "point", 2, false},
    {"s3", "point", 3, false},        {"d8", "point", 2, false},   {"a4", "point", 2, false},
    {"s4", "point", 2, false},        {"z2xz2", "point", 2, false}, {"z3sq_z2", "point", 3, false},
    {"z3wr_z2", "point", 3, false},   {"d8", "square_d8", 2, false}, {"d8", "square_d8", 2, true},
    {"s3", "triangle_s3", 2, false},  {"s3", "triangle_s3", 3, false}, {"z2", "sphere0_z2", 2, false},
};

GSpace space_of(const Case& c) {
  return std::string(c.space) == "point" ? testing::point_space(c.group)
                                         : testing::load_space(c.group, c.space, c.subdivide);
}

}  // namespace

TEST_CASE("build_category examples") {
  for (auto [name, p] : {std::pair{"z2", 2u}, std::pair{"z3", 3u}}) {
    const auto cat = build_category(testing::point_space(name), p);
    REQUIRE(cat.size() == 2);
    CHECK(cat.objects[0].subgroup.rank() == 0);
    CHECK(cat.objects[1].subgroup.rank() == 1);
    CHECK(cat.hom(0, 1).size() == 1);
    CHECK(cat.hom(1, 0).empty());
  }
  const auto s3 = build_category(testing::point_space("s3"), 2);
  REQUIRE(s3.size() == 2);
  CHECK(s3.hom(1, 1).size() == 1);
  CHECK(s3.hom(1, 1)[0].matrix.is_identity());

  const auto a4 = build_category(testing::point_space("a4"), 2);
  REQUIRE(a4.size() == 3);
  CHECK(a4.objects[2].subgroup.rank() == 2);
  CHECK(a4.hom(2, 2).size() == 3);
  CHECK(a4.hom(1, 2).size() == 3);
  CHECK(a4.max_rank() == 2);
}

TEST_CASE("category invariants: identities and composition") {
  for (const auto& c : kCases) {
    CAPTURE(c.group);
    CAPTURE(c.space);
    const auto cat = build_category(space_of(c), c.ell);
    for (std::size_t i = 0; i < cat.size(); ++i) {
      const auto& self = cat.hom(i, i);
      CHECK(std::count_if(self.begin(), self.end(), [](const GroupHom& h) { return h.matrix.is_identity(); }) == 1);
    }
    for (std::size_t i = 0; i < cat.size(); ++i)
      for (std::size_t j = 0; j < cat.size(); ++j)
        for (std::size_t k = 0; k < cat.size(); ++k) {
          const auto& ik = cat.hom(i, k);
          const std::set<GroupHom> s(ik.begin(), ik.end());
          for (const auto& f : cat.hom(i, j))
            for (const auto& g : cat.hom(j, k)) CHECK(s.count(compose(g, f)));
        }
  }
}

TEST_CASE("limit of a single object is the algebra itself") {
  Diagram d;
  d.algebras.push_back(GradedAlgebra::elementary_abelian(3, 2));
  const auto ring = limit_ring(d, 6);
  for (int k = 0; k <= 6; ++k) CHECK(ring.dim(k) == d.algebras[0].dim(k));

  const auto trivial = FiniteGroup::generate(1, {});
  const GSpace pt(trivial, GComplex::point(0));
  const auto r0 = limit_ring(build_category(pt, 2), 4);
  CHECK(r0.dims() == std::vector<std::size_t>{1, 0, 0, 0, 0});
}

TEST_CASE("limit ring examples") {
  const auto s3 = limit_ring(build_category(testing::point_space("s3"), 2), 8);
  CHECK(s3.dims() == std::vector<std::size_t>(9, 1));
  const auto a4 = limit_ring(build_category(testing::point_space("a4"), 2), 8);
  CHECK(a4.dims() == std::vector<std::size_t>{1, 0, 1, 2, 1, 2, 3, 2, 3});
}

TEST_CASE("limit ring invariants on shipped examples") {
  for (const auto& c : kCases) {
    for (bool reduced : {false, true}) {
      if (reduced && c.ell == 2) continue;
      CAPTURE(c.group);
      CAPTURE(c.space);
      CAPTURE(reduced);
      const auto cat = build_category(space_of(c), c.ell);
      const auto ring = limit_ring(cat, 6, reduced, 2);
      CHECK(ring.verify_compatibility());
      CHECK(ring.dim(0) == 1);
      for (int d1 = 0; d1 <= 3; ++d1)
        for (int d2 = d1; d1 + d2 <= 6; ++d2)
          for (const auto& a : ring.basis(d1))
            for (const auto& b : ring.basis(d2)) CHECK(ring.contains(ring.multiply(a, b)));
      // coordinates round-trip
      for (int d = 0; d <= 6; ++d)
        for (std::size_t k = 0; k < ring.dim(d); ++k) {
          auto coords = ring.coordinates(ring.basis(d)[k]);
          REQUIRE(coords.has_value());
          for (std::size_t j = 0; j < coords->size(); ++j) CHECK((*coords)[j] == (j == k ? 1u : 0u));
        }
    }
  }
}

TEST_CASE("thread count does not change the result") {
  const auto cat = build_category(testing::point_space("s4"), 2);
  const auto a = limit_ring(cat, 8, false, 1);
  const auto b = limit_ring(cat, 8, false, 4);
  for (int d = 0; d <= 8; ++d) CHECK(a.basis(d) == b.basis(d));
}

TEST_CASE("restriction to pairs") {
  const auto cat = build_category(testing::point_space("a4"), 2);
  const auto ring = limit_ring(cat, 6);
  const auto one = ring.basis(0).at(0);
  for (std::size_t i = 0; i < cat.size(); ++i) CHECK(ring.restriction_to_pair(one, i) == ring.diagram().algebras[i].one());
  CHECK_THROWS_AS(ring.restriction_to_pair(one, 7), Error);
  CHECK_THROWS_AS(ring.restriction_kernel(7, 1), Error);

  // the degree-2 generator restricts to the invariant quadratic on V_4
  REQUIRE(ring.dim(2) == 1);
  const auto q = ring.restriction_to_pair(ring.basis(2)[0], 2);
  const auto& alg = ring.diagram().algebras[2];
  CHECK(alg.to_string(q) == "x2^2 + x1*x2 + x1^2");
  for (const auto& w : cat.hom(2, 2)) CHECK(restriction_map(2, w).apply(q) == q);
}

TEST_CASE("multiplication past the bound overflows") {
  const auto ring = limit_ring(build_category(testing::point_space("z2"), 2), 3);
  const auto x2 = ring.basis(2).at(0);
  CHECK_THROWS_AS(ring.multiply(x2, x2), Error);
  CHECK_THROWS_AS(ring.basis(4), Error);
}

TEST_CASE("normal subgroup case: limit equals Weyl invariants") {
  for (auto [name, p] : {std::pair{"a4", 2u}, std::pair{"z3sq_z2", 3u}, std::pair{"z3wr_z2", 3u},
                         std::pair{"z2xz2", 2u}}) {
    for (bool reduced : {false, true}) {
      CAPTURE(name);
      const auto cat = build_category(testing::point_space(name), p);
      const auto ring = limit_ring(cat, 8, reduced);
      const std::size_t top = cat.size() - 1;
      std::vector<FpMatrix> w;
      for (const auto& h : cat.hom(top, top)) w.push_back(h.matrix);
      const auto& alg = ring.diagram().algebras[top];
      for (int d = 0; d <= 8; ++d) CHECK(ring.dim(d) == invariants(alg, w, d).size());
    }
  }
}

TEST_CASE("removing morphisms never shrinks the limit") {
  const auto cat = build_category(testing::point_space("s4"), 2);
  const Diagram full = cat.diagram();
  Diagram fewer = full;
  fewer.arrows.erase(fewer.arrows.begin() + static_cast<std::ptrdiff_t>(full.arrows.size() / 2), fewer.arrows.end());
  const auto a = limit_ring(full, 6).dims();
  const auto b = limit_ring(fewer, 6).dims();
  for (std::size_t d = 0; d < a.size(); ++d) CHECK(a[d] <= b[d]);
}

TEST_CASE("rational fitting") {
  const std::vector<long long> ones(13, 1);
  auto f1 = fit_rational(ones, 24, 1);
  REQUIRE(f1.has_value());
  CHECK(f1->numerator == std::vector<long long>{1});
  CHECK(f1->denominator_indices == std::vector<int>{1});
  CHECK(f1->pole_order == 1);
  auto f2 = fit_rational(ones, 24, 2);
  REQUIRE(f2.has_value());
  CHECK(f2->numerator == std::vector<long long>{1, 1});
  CHECK(f2->denominator_indices == std::vector<int>{1});
  CHECK(f2->pole_order == 1);

  // 1/((1-t^2)(1-t^4))
  std::vector<long long> bgl2(21, 0);
  for (int d = 0; d <= 20; d += 2) bgl2[d] = d / 4 + 1;
  auto f3 = fit_rational(bgl2, 24, 2);
  REQUIRE(f3.has_value());
  CHECK(f3->numerator == std::vector<long long>{1});
  CHECK(f3->denominator_indices == std::vector<int>{1, 2});
  CHECK(f3->pole_order == 2);
  CHECK(expand(*f3, 21) == bgl2);

  // no short recurrence
  std::vector<long long> noise{1, 3, 0, 7, 2, 9, 4, 4, 8, 1, 0, 6, 5};
  CHECK_FALSE(fit_rational(noise, 6, 2).has_value());
  CHECK_FALSE(fit_rational(std::vector<long long>{1, 1, 1}, 24, 2).has_value());
}

TEST_CASE("Poincare series of shipped examples") {
  const auto a4 = poincare(limit_ring(build_category(testing::point_space("a4"), 2), 16));
  REQUIRE(a4.fitted.has_value());
  CHECK(a4.pole_order_at_one() == 2);
  CHECK(a4.fitted->denominator_indices == std::vector<int>{1, 3});
  CHECK(expand(*a4.fitted, a4.coefficients.size()) == a4.coefficients);

  // S_3 at l = 3: (1 + t^3) / (1 - t^4)
  const auto s3 = poincare(limit_ring(build_category(testing::point_space("s3"), 3), 16));
  REQUIRE(s3.fitted.has_value());
  CHECK(s3.fitted->numerator == std::vector<long long>{1, 0, 0, 1});
  CHECK(s3.fitted->denominator_indices == std::vector<int>{2});
  CHECK(s3.pole_order_at_one() == 1);

  for (const auto& c : kCases) {
    CAPTURE(c.group);
    CAPTURE(c.space);
    const auto cat = build_category(space_of(c), c.ell);
    const auto ps = poincare(limit_ring(cat, 12));
    REQUIRE(ps.fitted.has_value());
    CHECK(expand(*ps.fitted, ps.coefficients.size()) == ps.coefficients);
    CHECK(ps.pole_order_at_one() == static_cast<int>(cat.max_rank()));
  }
}

TEST_CASE("engine agrees with the unskeletal equalizer oracle") {
  for (const auto& c : kCases) {
    CAPTURE(c.group);
    CAPTURE(c.space);
    const auto cat = build_category(space_of(c), c.ell);
    const auto os = testing::oracle_space(c.group, c.space, c.subdivide);
    CHECK(limit_ring(cat, 5).dims() == oracle::equalizer_dims(os, static_cast<int>(c.ell), 5, false));
  }
}
