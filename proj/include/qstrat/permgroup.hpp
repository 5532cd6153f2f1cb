#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qstrat/field.hpp"
#include "qstrat/linalg.hpp"

namespace qstrat {

using Point = std::uint16_t;

/// Permutation of {0..n-1} stored as its image array. Products compose left
/// to right: (p * q)[i] = q[p[i]], so points carry a right action.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<Point> images);

  static Perm identity(std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](std::size_t i) const { return images_[i]; }
  const std::vector<Point>& images() const noexcept { return images_; }

  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;
  Perm pow(long long n) const;
  bool is_identity() const noexcept;
  std::size_t order() const;

  auto operator<=>(const Perm&) const = default;

 private:
  std::vector<Point> images_;
};

/// g^-1 a g.
Perm conjugate(const Perm& a, const Perm& g);

/// Group order cap: QSTRAT_CAP if set, else 20160.
std::size_t default_group_cap();

/// A finite permutation group with every element materialized.
class FiniteGroup {
 public:
  /// Closure of the generators; throws CapExceeded past `cap` and
  /// Validation (degree mismatch) on inconsistent generators.
  static FiniteGroup generate(std::size_t degree, std::vector<Perm> generators,
                              std::size_t cap = default_group_cap());

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Perm>& generators() const noexcept { return generators_; }
  /// Sorted ascending; identity first.
  const std::vector<Perm>& elements() const noexcept { return elements_; }
  std::size_t order() const noexcept { return elements_.size(); }

  bool contains(const Perm& p) const;
  std::optional<std::size_t> index_of(const Perm& p) const;
  bool is_abelian() const;

 private:
  std::size_t degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
};

inline FiniteGroup enumerate_elements(std::size_t degree, std::vector<Perm> generators,
                                      std::size_t cap = default_group_cap()) {
  return FiniteGroup::generate(degree, std::move(generators), cap);
}

/// Elementary abelian l-subgroup given by an F_l-basis of commuting elements
/// of order l. Elements are indexed by their coordinate vectors.
class ElabSubgroup {
 public:
  ElabSubgroup(std::uint32_t prime, std::size_t degree, std::vector<Perm> basis);

  std::uint32_t prime() const noexcept { return prime_; }
  std::size_t degree() const noexcept { return degree_; }
  std::size_t rank() const noexcept { return basis_.size(); }
  const std::vector<Perm>& basis() const noexcept { return basis_; }
  /// Sorted element list.
  const std::vector<Perm>& elements() const noexcept { return elements_; }

  bool contains(const Perm& p) const;
  std::optional<FpVector> coordinates(const Perm& p) const;

 private:
  std::uint32_t prime_;
  std::size_t degree_;
  std::vector<Perm> basis_;
  std::vector<Perm> elements_;      // sorted
  std::vector<FpVector> coords_;    // coords_[k] belongs to elements_[k]
};

/// Homomorphism A -> A' of elementary abelian groups: column j holds the
/// coordinates of the image of A's j-th basis element in A'.
struct GroupHom {
  FpMatrix matrix;

  std::size_t source_rank() const { return matrix.cols(); }
  std::size_t target_rank() const { return matrix.rows(); }
  auto operator<=>(const GroupHom&) const = default;
  bool operator==(const GroupHom&) const = default;
};

/// outer o inner.
GroupHom compose(const GroupHom& outer, const GroupHom& inner);

/// c_g : A -> A', a |-> g^-1 a g. Throws if g^-1 A g is not inside A'.
GroupHom conjugation_hom(const ElabSubgroup& source, const ElabSubgroup& target,
                         const Perm& g);

/// Conjugacy-class representatives of elementary abelian l-subgroups,
/// trivial subgroup included, sorted by (rank, element list).
std::vector<ElabSubgroup> enumerate_elab(const FiniteGroup& group, std::uint32_t prime);

/// { g : g^-1 A g subset of A' }.
std::vector<Perm> transporter(const FiniteGroup& group, const ElabSubgroup& source,
                              const ElabSubgroup& target);
std::vector<Perm> centralizer(const FiniteGroup& group, const ElabSubgroup& a);
std::vector<Perm> normalizer(const FiniteGroup& group, const ElabSubgroup& a);

/// Image of N_G(A) in Aut(A) = GL_r(F_l), as distinct matrices (identity first).
struct MatrixGroup {
  std::vector<FpMatrix> elements;
  std::size_t order() const noexcept { return elements.size(); }
};
MatrixGroup weyl_group(const FiniteGroup& group, const ElabSubgroup& a);

}  // namespace qstrat
