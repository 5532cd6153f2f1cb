#pragma once

// Brute-force reference computations for the tests. Nothing here uses the
// qstrat library: permutations, modular arithmetic, graded-commutative
// products and Gaussian elimination are all reimplemented naively.

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using P = std::vector<int>;  // image array; (a*b)[i] = b[a[i]]

P mul(const P& a, const P& b);
P inv(const P& a);
P ident(std::size_t n);

/// Closure by repeated right multiplication with the generators.
std::set<P> closure(std::size_t degree, const std::vector<P>& gens);

/// Every elementary abelian l-subgroup (trivial included), as element sets.
std::set<std::set<P>> elab_subgroups(const std::set<P>& group, int ell);
/// Number of conjugacy classes of elementary abelian l-subgroups, by rank.
std::map<int, std::size_t> elab_class_counts(const std::set<P>& group, int ell);

/// Input for the equalizer and invariant oracles.
struct Space {
  std::size_t degree = 0;
  std::vector<P> gens;
  std::size_t vertices = 1;
  std::vector<std::vector<int>> facets{{0}};
  std::vector<P> action;  // vertex permutation per generator
  bool subdivide = false;
};

/// Dimensions of lim H*(BE) over the full (unskeletal) category: every
/// elementary abelian E, every component C of X^E, and one compatibility
/// constraint per g with g^-1 E g in E' and C.g containing C'.
std::vector<std::size_t> equalizer_dims(const Space& space, int ell, int max_degree,
                                        bool reduced);

/// Dimensions of H*(BA)^N_G(A) for the unique maximal elementary abelian A,
/// which must be normal. Throws std::logic_error otherwise.
std::vector<std::size_t> normal_invariant_dims(std::size_t degree, const std::vector<P>& gens,
                                               int ell, int max_degree, bool reduced);

/// Coefficients of prod_i 1/(1 - t^degrees[i]) up to t^max_degree.
std::vector<long long> product_series(const std::vector<int>& degrees, int max_degree);

/// Number of monomials of degree d in `rays` variables whose support lies in
/// one of the maximal cones.
std::size_t face_monomial_count(std::size_t rays, const std::vector<std::vector<int>>& max_cones,
                                int d);

/// dim of F_l[t_1..t_N]/(sigma_1..sigma_N) in t-degree k, by ranking the
/// ideal's degree-k part.
std::size_t flag_dim_linear(int n, int ell, int k);

/// P^i on a monomial of F_l[g_1..g_n] (generators of degree eps) by the
/// closed form prod_k C(n_k, i_k) g_k^(n_k + (l-1) i_k), summed over splittings.
std::map<std::vector<int>, long long> steenrod_closed_form(const std::vector<int>& exps, int ell,
                                                           int i);

/// Rank over F_p with naive elimination.
std::size_t rank_mod(std::vector<std::vector<long long>> rows, int p);

}  // namespace oracle
