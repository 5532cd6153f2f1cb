#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qstrat/gcalg.hpp"
#include "qstrat/gcomplex.hpp"
#include "qstrat/permgroup.hpp"

namespace qstrat {

/// restriction : algebras[target] -> algebras[source], one per morphism
/// source -> target of the indexing category.
struct DiagramArrow {
  std::size_t source;
  std::size_t target;
  AlgebraMorphism restriction;
};

/// A finite diagram of graded algebras whose inverse limit is wanted.
struct Diagram {
  std::vector<GradedAlgebra> algebras;
  std::vector<DiagramArrow> arrows;
};

/// Skeleton of the category of pairs (A, C): one object per isomorphism class,
/// morphisms stored as the induced homomorphisms A -> A'.
struct QuillenCategory {
  std::uint32_t prime = 2;
  std::vector<PairObject> objects;
  std::vector<std::vector<std::vector<GroupHom>>> homs;  // homs[i][j] : i -> j

  std::size_t size() const noexcept { return objects.size(); }
  const std::vector<GroupHom>& hom(std::size_t i, std::size_t j) const { return homs.at(i).at(j); }
  std::size_t max_rank() const;
  /// Presheaf (H*_A, theta_g) on the skeleton; `reduced` keeps only the
  /// polynomial part F_l[y] when l > 2.
  Diagram diagram(bool reduced = false) const;
};

QuillenCategory build_category(const GSpace& space, std::uint32_t prime);

/// A compatible family (h_i) of homogeneous elements, one per object.
struct LimitTuple {
  int degree = 0;
  std::vector<AlgElement> components;
  bool operator==(const LimitTuple&) const = default;
};

/// Degreewise basis of the equalizer of prod H_i => prod H_source, up to a
/// degree bound.
class LimitRing {
 public:
  const Diagram& diagram() const noexcept { return diagram_; }
  int degree_bound() const noexcept { return bound_; }
  std::uint32_t prime() const noexcept { return prime_; }
  /// 1 if l = 2, else 2.
  int epsilon() const noexcept { return prime_ == 2 ? 1 : 2; }
  std::size_t object_count() const noexcept { return diagram_.algebras.size(); }

  std::vector<std::size_t> dims() const;
  std::size_t dim(int d) const { return level(d).tuples.size(); }
  const std::vector<LimitTuple>& basis(int d) const { return level(d).tuples; }

  /// Coordinates in basis(t.degree), or nullopt when t is not compatible.
  std::optional<FpVector> coordinates(const LimitTuple& t) const;
  bool contains(const LimitTuple& t) const { return coordinates(t).has_value(); }
  LimitTuple combine(int d, std::span<const Coeff> coords) const;
  LimitTuple zero(int d) const;
  /// Componentwise product; throws DegreeOverflow past the bound.
  LimitTuple multiply(const LimitTuple& a, const LimitTuple& b) const;

  /// The component at an object; throws ObjectNotFound.
  AlgElement restriction_to_pair(const LimitTuple& t, std::size_t object) const;
  /// Basis of the kernel of restriction_to_pair(., object) in degree d.
  std::vector<LimitTuple> restriction_kernel(std::size_t object, int d) const;

  /// Re-checks theta(h_target) = h_source for every basis tuple and arrow by
  /// element arithmetic, independent of the solver.
  bool verify_compatibility() const;

 private:
  struct Level {
    std::vector<std::vector<Monomial>> object_bases;
    std::vector<std::size_t> offsets;
    std::size_t width = 0;
    std::vector<FpVector> vectors;
    std::vector<std::size_t> free_columns;
    std::vector<LimitTuple> tuples;
  };

  const Level& level(int d) const;
  FpVector flatten(const LimitTuple& t) const;
  LimitTuple unflatten(int d, std::span<const Coeff> v) const;
  static Level solve_level(const Diagram& diagram, int d);

  Diagram diagram_;
  int bound_ = 0;
  std::uint32_t prime_ = 2;
  std::vector<Level> levels_;

  friend LimitRing limit_ring(Diagram diagram, int degree_bound, unsigned threads);
};

/// Solves every degree 0..degree_bound; degrees are independent and run on
/// up to `threads` workers.
LimitRing limit_ring(Diagram diagram, int degree_bound, unsigned threads = 1);
LimitRing limit_ring(const QuillenCategory& cat, int degree_bound, bool reduced = false,
                     unsigned threads = 1);

/// numerator / prod_i (1 - t^(factor_step * i)) for i in denominator_indices.
struct RationalFit {
  std::vector<long long> numerator;
  std::vector<int> denominator_indices;
  int factor_step = 2;
  int pole_order = 0;  // factor count minus multiplicity of t = 1 in numerator
};

/// Tries denominators in order of total degree (then factor count, then
/// lexicographically) up to min(`max_denominator_degree`, D - w) in t-degree,
/// where w = max(4, D/3); accepts the first one whose product with the series
/// vanishes on the last w degrees.
std::optional<RationalFit> fit_rational(std::span<const long long> coeffs,
                                        int max_denominator_degree, int factor_step = 2);

struct PoincareSeries {
  std::vector<long long> coefficients;
  std::optional<RationalFit> fitted;

  std::optional<int> pole_order_at_one() const {
    return fitted ? std::optional<int>(fitted->pole_order) : std::nullopt;
  }
};

PoincareSeries poincare(const LimitRing& ring, int max_denominator_degree = 24);

}  // namespace qstrat
