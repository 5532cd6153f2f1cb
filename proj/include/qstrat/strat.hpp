#pragma once

#include <cstddef>
#include <vector>

#include "qstrat/quillen.hpp"

namespace qstrat {

struct Stratum {
  std::size_t object = 0;
  PairObject pair;
  std::size_t dim = 0;                                  // rank of A
  std::vector<FpMatrix> weyl;                           // W_G(A, C) inside GL_r(F_l)
  std::vector<std::vector<LimitTuple>> kernel_bases;    // per degree 0..D

  std::vector<std::size_t> kernel_dims() const;
};

/// Combinatorial shadow of the stratification of Spec of the reduced limit:
/// one stratum per object, with `below[i][j]` iff object i maps to object j.
struct StratifiedSpectrum {
  std::vector<Stratum> strata;
  std::vector<std::vector<bool>> below;
  std::size_t max_rank = 0;
  int degree_bound = 0;

  /// Immediate successors of stratum i in the subconjugacy order.
  std::vector<std::size_t> parents(std::size_t i) const;
};

/// `reduced` must be the limit of cat.diagram(true).
StratifiedSpectrum stratify(const QuillenCategory& cat, const LimitRing& reduced);

/// True iff only the identity Weyl element acts as the identity on A.
bool weyl_faithful(const Stratum& s);

/// True iff the kernel at s2 lies in the span of the kernel at s1 in every
/// degree up to the bound (so V_s1 lies in V_s2 up to that degree).
bool kernel_containment(const StratifiedSpectrum& spec, std::size_t s1, std::size_t s2);

}  // namespace qstrat
