#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "qstrat/gcalg.hpp"
#include "qstrat/quillen.hpp"

namespace qstrat {

/// P^i a for every i with P^i a possibly nonzero (0 <= i <= q for l = 2,
/// 0 <= i <= q/2 for l > 2).
struct SteenrodResult {
  AlgElement input;
  int degree = 0;
  std::map<int, AlgElement> powers;
};

/// Degree shift of P^i: i for l = 2, 2i(l-1) otherwise.
int steenrod_degree_shift(std::uint32_t prime, int i);

/// Total operation P_t(g) = g + g^l t on degree-epsilon generators, extended
/// multiplicatively and linearly. Throws OddPartUnsupported for l > 2 inputs
/// with exterior factors and DegreeMismatch for inhomogeneous inputs or
/// algebras whose generators are not in degree epsilon.
SteenrodResult total_steenrod(const GradedAlgebra& alg, const AlgElement& a);
AlgElement steenrod_power(const GradedAlgebra& alg, const AlgElement& a, int i);

struct LimitSteenrod {
  LimitTuple input;
  std::map<int, LimitTuple> powers;
  std::map<int, FpVector> coordinates;  // in the limit basis of the target degree
};

/// P^i of a limit element, componentwise. Throws DegreeOverflow when the
/// target degree exceeds the bound.
LimitTuple steenrod_power_on_limit(const LimitRing& ring, const LimitTuple& t, int i);
/// Every P^i of t; throws DegreeOverflow if the top one leaves the bound.
LimitSteenrod steenrod_on_limit(const LimitRing& ring, const LimitTuple& t);

struct StabilityReport {
  struct Entry {
    int degree = 0;
    std::size_t index = 0;  // position in the kernel basis of that degree
    int power = 0;
    bool pass = true;
  };
  std::size_t object = 0;
  int degree_bound = 0;
  std::vector<Entry> entries;
  bool pass = true;
};

/// For every kernel basis element of restriction to `object`, checks that
/// each P^i landing within the bound lies in the limit and still restricts to
/// zero at the object.
StabilityReport check_stratum_stability(const LimitRing& ring, std::size_t object);

}  // namespace qstrat
