#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qstrat/field.hpp"
#include "qstrat/linalg.hpp"
#include "qstrat/permgroup.hpp"

namespace qstrat {

/// Exterior part as a bitmask of generator indices, polynomial part as an
/// exponent vector. Ordered by exterior mask, then exponents.
struct Monomial {
  std::uint32_t ext = 0;
  std::vector<std::uint16_t> exps;
  auto operator<=>(const Monomial&) const = default;
};

/// Sparse F_l-linear combination of monomials; zero coefficients never stored.
struct AlgElement {
  std::map<Monomial, Coeff> terms;

  bool is_zero() const noexcept { return terms.empty(); }
  bool operator==(const AlgElement&) const = default;
};

enum class AlgebraShape {
  Polynomial,          // F_l[g_1..g_n] with arbitrary generator degrees
  ElementaryAbelian,   // H*(BA, F_l), or its reduced even part
};

/// Graded-commutative algebra over F_l: exterior generators of odd degree
/// tensored with a polynomial algebra, optionally modulo squarefree monomial
/// relations among the polynomial generators.
class GradedAlgebra {
 public:
  static GradedAlgebra polynomial(std::uint32_t prime, std::vector<int> degrees,
                                  std::vector<std::string> names = {});
  /// H*(BA, F_l) for A of rank r: F_2[x_1..x_r] when l = 2, otherwise
  /// exterior(x_1..x_r) (x) F_l[y_1..y_r] with y_i = beta x_i. The reduced
  /// variant keeps only F_l[y_1..y_r] when l > 2 (unchanged for l = 2).
  static GradedAlgebra elementary_abelian(std::uint32_t prime, std::size_t rank,
                                          bool reduced = false);

  /// Quotient by the monomials whose polynomial support contains one of the
  /// given generator bitmasks.
  GradedAlgebra with_monomial_relations(std::vector<std::uint32_t> forbidden) const;

  std::uint32_t prime() const noexcept { return field_.prime(); }
  const PrimeField& field() const noexcept { return field_; }
  AlgebraShape shape() const noexcept { return shape_; }
  std::size_t rank() const noexcept { return rank_; }
  bool reduced() const noexcept { return reduced_; }
  std::size_t ext_count() const noexcept { return ext_degrees_.size(); }
  std::size_t poly_count() const noexcept { return poly_degrees_.size(); }
  int ext_degree(std::size_t i) const { return ext_degrees_[i]; }
  int poly_degree(std::size_t i) const { return poly_degrees_[i]; }
  const std::vector<std::uint32_t>& relations() const noexcept { return forbidden_; }

  int degree(const Monomial& m) const;
  /// Degree of a homogeneous element; nullopt for zero; throws DegreeMismatch
  /// when inhomogeneous.
  std::optional<int> degree(const AlgElement& a) const;

  /// Monomial basis of the degree-d part, sorted.
  std::vector<Monomial> basis(int d) const;
  std::size_t dim(int d) const { return basis(d).size(); }
  bool is_zero_monomial(const Monomial& m) const;

  AlgElement zero() const { return {}; }
  AlgElement one() const;
  AlgElement ext_generator(std::size_t i) const;
  AlgElement poly_generator(std::size_t i) const;
  AlgElement monomial(Monomial m, Coeff c = 1) const;

  AlgElement add(const AlgElement& a, const AlgElement& b) const;
  AlgElement sub(const AlgElement& a, const AlgElement& b) const;
  AlgElement scale(Coeff c, const AlgElement& a) const;
  AlgElement mul(const AlgElement& a, const AlgElement& b) const;
  AlgElement pow(const AlgElement& a, std::size_t n) const;

  /// Bockstein: beta x_i = y_i, beta y_i = 0 for l > 2; Sq^1 (x_i -> x_i^2)
  /// for l = 2. Extended as a derivation with Koszul signs. Defined on the
  /// ElementaryAbelian shape only.
  AlgElement bockstein(const AlgElement& a) const;

  /// Coefficients on basis(d); throws DegreeMismatch for terms of other degrees.
  FpVector to_vector(const AlgElement& a, int d) const;
  /// Same, against a precomputed sorted basis.
  FpVector to_vector(const AlgElement& a, const std::vector<Monomial>& basis) const;
  AlgElement from_vector(int d, std::span<const Coeff> v) const;

  std::string generator_name(bool exterior, std::size_t i) const;
  std::string monomial_string(const Monomial& m) const;
  std::string to_string(const AlgElement& a) const;

  bool operator==(const GradedAlgebra&) const = default;

 private:
  GradedAlgebra(std::uint32_t prime) : field_(prime) {}

  PrimeField field_;
  AlgebraShape shape_ = AlgebraShape::Polynomial;
  std::size_t rank_ = 0;
  bool reduced_ = false;
  std::vector<int> ext_degrees_;
  std::vector<int> poly_degrees_;
  std::vector<std::string> ext_names_;
  std::vector<std::string> poly_names_;
  std::vector<std::uint32_t> forbidden_;
};

/// Sign-aware product of two monomials: nullopt when zero, else (sign, m).
std::optional<std::pair<bool, Monomial>> multiply_monomials(const GradedAlgebra& alg,
                                                            const Monomial& a,
                                                            const Monomial& b);

/// Graded algebra homomorphism determined by generator images.
class AlgebraMorphism {
 public:
  AlgebraMorphism(GradedAlgebra source, GradedAlgebra target,
                  std::vector<AlgElement> ext_images, std::vector<AlgElement> poly_images);

  static AlgebraMorphism identity(const GradedAlgebra& alg);
  /// Generator k of `source` (both families) goes to sum_j m(k, j) * generator j
  /// of `target`. For H*(BA) shapes this is the map induced by the group hom
  /// with matrix m.
  static AlgebraMorphism linear_substitution(const GradedAlgebra& source,
                                             const GradedAlgebra& target,
                                             const FpMatrix& m);

  const GradedAlgebra& source() const noexcept { return source_; }
  const GradedAlgebra& target() const noexcept { return target_; }
  const std::vector<AlgElement>& ext_images() const noexcept { return ext_images_; }
  const std::vector<AlgElement>& poly_images() const noexcept { return poly_images_; }

  AlgElement apply(const AlgElement& a) const;
  AlgElement apply(const Monomial& m) const;

  /// this o inner.
  AlgebraMorphism after(const AlgebraMorphism& inner) const;

 private:
  GradedAlgebra source_;
  GradedAlgebra target_;
  std::vector<AlgElement> ext_images_;
  std::vector<AlgElement> poly_images_;
};

/// H*(BA, F_l) with generators ordered by A's basis.
GradedAlgebra cohomology_of_BA(const ElabSubgroup& a, bool reduced = false);

/// theta_u = (Bu)^*: H*(BA') -> H*(BA) for u : A -> A'.
AlgebraMorphism restriction_map(std::uint32_t prime, const GroupHom& u, bool reduced = false);

/// Basis of the degree-d elements fixed by every automorphism in `action`
/// (each matrix acting as in linear_substitution).
std::vector<AlgElement> invariants(const GradedAlgebra& alg, const std::vector<FpMatrix>& action,
                                   int degree);

}  // namespace qstrat
