#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qstrat/permgroup.hpp"

namespace qstrat {

using Vertex = std::uint32_t;
using Simplex = std::vector<Vertex>;  // sorted vertex indices

/// Finite simplicial complex with a group action given on the generators of
/// the acting group (one vertex permutation per generator, in order).
class GComplex {
 public:
  GComplex(std::size_t vertex_count, std::vector<Simplex> facets,
           std::vector<Perm> generator_action);

  /// One vertex, trivial action by each of `generator_count` generators.
  static GComplex point(std::size_t generator_count);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  const std::vector<Simplex>& facets() const noexcept { return facets_; }
  const std::vector<Perm>& generator_action() const noexcept { return action_; }

  bool is_face(const Simplex& s) const;
  /// Every nonempty face, sorted.
  std::vector<Simplex> faces() const;

  /// Barycentric subdivision: vertices are the faces of this complex (in
  /// faces() order), simplices are chains of faces.
  GComplex barycentric_subdivision() const;

 private:
  std::size_t vertex_count_;
  std::vector<Simplex> facets_;
  std::vector<Perm> action_;
};

/// Full subcomplex on a vertex subset, in the ambient vertex numbering.
struct Subcomplex {
  std::vector<Vertex> vertices;  // sorted
  std::vector<Simplex> facets;   // maximal faces of the restriction
};

struct Component {
  std::vector<Vertex> vertices;  // sorted; connected in the 1-skeleton
  Vertex id() const { return vertices.front(); }
  bool operator==(const Component&) const = default;
};

/// A finite group acting on a complex. Construction checks that the generator
/// action extends to a homomorphism G -> Sym(vertices) and preserves faces.
class GSpace {
 public:
  GSpace(FiniteGroup group, GComplex complex);

  const FiniteGroup& group() const noexcept { return group_; }
  const GComplex& complex() const noexcept { return complex_; }
  /// Vertex permutation of a group element.
  const Perm& vertex_action(const Perm& g) const;

 private:
  FiniteGroup group_;
  GComplex complex_;
  std::vector<Perm> vertex_action_;  // indexed like group_.elements()
};

Subcomplex whole(const GComplex& x);
Subcomplex fixed_subcomplex(const GSpace& space, const ElabSubgroup& a);
/// Connected components ordered by minimal vertex.
std::vector<Component> components(const Subcomplex& x);
/// C.g
Component translate(const GSpace& space, const Component& c, const Perm& g);

struct PairObject {
  ElabSubgroup subgroup;
  Component component;
};

/// Morphism set { c_g : g^-1 A g in A', C.g contains C' } as distinct homs.
std::vector<GroupHom> pair_transporter(const GSpace& space, const PairObject& from,
                                       const PairObject& to);

}  // namespace qstrat
