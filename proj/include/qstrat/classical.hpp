#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qstrat/gcalg.hpp"

namespace qstrat {

/// F_l[c_1..c_N] with deg c_i = 2i.
GradedAlgebra bgl_cohomology(std::size_t n, std::uint32_t prime);
/// F_l[t_1..t_N] with deg t_j = 2.
GradedAlgebra torus_cohomology(std::size_t n, std::uint32_t prime, const std::string& name = "t");

/// i-th elementary symmetric polynomial in the polynomial generators.
AlgElement elementary_symmetric(const GradedAlgebra& alg, std::size_t i);

/// c_i |-> sigma_i(t_1..t_N).
struct SymPolyMap {
  std::size_t n;
  AlgebraMorphism map;
};
SymPolyMap sym_poly_map(std::size_t n, std::uint32_t prime);

/// F_l[t_1..t_N] / (sigma_1..sigma_N). Normal forms are taken against
/// h_k(t_k..t_N), k = 1..N (lex order t_1 > .. > t_N); the standard
/// monomials are t^a with a_k < k.
class FlagAlgebra {
 public:
  FlagAlgebra(std::size_t n, std::uint32_t prime);

  std::size_t n() const noexcept { return n_; }
  const GradedAlgebra& ambient() const noexcept { return ambient_; }
  AlgElement normal_form(const AlgElement& f) const;
  /// Standard monomials of cohomological degree d.
  std::vector<Monomial> basis(int d) const;
  /// Nonzero degreewise dimensions, keyed by cohomological degree.
  std::map<int, std::size_t> dims() const;
  std::size_t total_dim() const;
  int top_degree() const noexcept { return static_cast<int>(n_ * (n_ - 1)); }

 private:
  std::size_t n_;
  GradedAlgebra ambient_;
  std::vector<AlgElement> reducers_;  // h_k(t_k..t_N)
};

struct ReductiveReport {
  std::size_t n = 0;
  std::uint32_t prime = 2;
  int degree_bound = 0;
  std::vector<std::size_t> image_dims;      // even degrees 0, 2, .., D
  std::vector<std::size_t> invariant_dims;  // same degrees
  bool injective = true;
  bool image_invariant = true;
  int frobenius_exponent = 0;  // max k needed so that f^(l^k) lies in the image
};

/// Compares F_l[c_1..c_N] -> F_l[u_1..u_N]^{S_N}, c_i |-> sigma_i(u), up to
/// degree D. Throws BoundTooSmall when some invariant has no l-power image
/// certificate within D.
ReductiveReport gl_reductive_check(std::size_t n, std::uint32_t prime, int degree_bound);

struct FrobeniusReport {
  std::uint32_t prime = 2;
  GradedAlgebra target;            // F_l[t]
  std::vector<AlgElement> images;  // phi(sigma_d), d = 1..l
  bool matches = false;            // sigma_d -> 0 for d < l, sigma_l -> t^l
};

/// phi : F_l[t_1..t_l] -> F_l[t], t_i |-> t, evaluated on sigma_1..sigma_l.
FrobeniusReport gl_ell_diagonal_example(std::uint32_t prime);

}  // namespace qstrat
