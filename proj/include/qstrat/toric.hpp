#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qstrat/gcalg.hpp"
#include "qstrat/permgroup.hpp"
#include "qstrat/quillen.hpp"

namespace qstrat {

using Cone = std::vector<std::size_t>;  // sorted ray indices

/// Simplicial fan given by its maximal cones; `cones` is the face closure,
/// sorted by (size, ray list), so the zero cone comes first.
class Fan {
 public:
  /// Validates ray lengths, primitivity, indices and linear independence of
  /// each cone (NonSimplicial otherwise).
  Fan(std::size_t rank, std::vector<std::vector<long long>> rays,
      std::vector<Cone> max_cones);

  std::size_t rank() const noexcept { return rank_; }
  const std::vector<std::vector<long long>>& rays() const noexcept { return rays_; }
  const std::vector<Cone>& max_cones() const noexcept { return max_cones_; }
  const std::vector<Cone>& cones() const noexcept { return cones_; }

  bool is_cone(const Cone& c) const;
  std::size_t index_of(const Cone& c) const;
  /// gcd of the maximal minors of the ray matrix: the index of the ray
  /// lattice in the saturated sublattice it spans.
  long long multiplicity(const Cone& c) const;
  bool smooth() const;

 private:
  std::size_t rank_;
  std::vector<std::vector<long long>> rays_;
  std::vector<Cone> max_cones_;
  std::vector<Cone> cones_;
};

/// Throws Validation when l divides some cone multiplicity.
void require_prime_to_multiplicities(const Fan& fan, std::uint32_t prime);

/// A_sigma = N_sigma (x) F_l inside F_l^n, with the rays of sigma mod l as basis.
struct ConeSubgroup {
  Cone cone;
  std::vector<FpVector> basis;
  std::size_t rank() const noexcept { return basis.size(); }
};

/// Objects are cones; hom(i, j) holds the inclusion A_i -> A_j when cone i is
/// a face of cone j, and is empty otherwise.
struct ConeCategory {
  std::uint32_t prime = 2;
  std::vector<ConeSubgroup> objects;
  std::vector<std::vector<std::vector<GroupHom>>> homs;

  std::size_t size() const noexcept { return objects.size(); }
  std::size_t max_rank() const;
  /// Reduced H*(BA_sigma) on every cone, restriction along every inclusion.
  Diagram diagram() const;
};

ConeCategory cone_category(const Fan& fan, std::uint32_t prime);

/// PP*(Sigma) (x) F_l, computed from the maximal cones and their pairwise
/// intersections. Full-dimensional cones carry polynomials in the lattice
/// coordinates of M (x) F_l; lower-dimensional ones use coordinates dual to
/// their rays. Generators sit in piecewise degree 1, which is cohomological
/// degree eps in `ring`.
struct PiecewisePoly {
  std::vector<Cone> pieces;  // maximal cones, then the distinct intersections
  std::size_t max_count = 0;
  int degree_bound = 0;      // piecewise degree
  LimitRing ring;

  /// Piecewise degrees 0..degree_bound.
  std::vector<std::size_t> dims() const;
  /// Independent re-check: every basis tuple restricts consistently to each
  /// common face of each pair of maximal cones.
  bool faces_agree(const Fan& fan) const;
};

PiecewisePoly piecewise_poly(const Fan& fan, std::uint32_t prime, int degree_bound,
                             unsigned threads = 1);

/// F_l[u_rho] / (monomials whose support is not a cone), deg u_rho = eps.
GradedAlgebra stanley_reisner(const Fan& fan, std::uint32_t prime);

struct ToricComparison {
  bool smooth = false;
  int degree_bound = 0;                // piecewise degree
  std::vector<std::size_t> pp;         // piecewise degrees 0..D
  std::vector<std::size_t> limit;      // limit over the cone category, degree eps*d
  std::vector<std::size_t> sr;         // empty unless smooth
  bool pp_matches_limit = false;
  bool sr_matches_pp = false;          // false when not smooth
  bool faces_agree = false;
  bool pass() const { return pp_matches_limit && faces_agree && (!smooth || sr_matches_pp); }
};

ToricComparison compare(const Fan& fan, std::uint32_t prime, int degree_bound,
                        unsigned threads = 1);

}  // namespace qstrat
