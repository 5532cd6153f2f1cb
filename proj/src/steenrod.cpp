#include "qstrat/steenrod.hpp"

#include <functional>
#include <string>

#include "qstrat/errors.hpp"

namespace qstrat {

int steenrod_degree_shift(std::uint32_t prime, int i) {
  return prime == 2 ? i : 2 * i * static_cast<int>(prime - 1);
}

namespace {

void check_algebra(const GradedAlgebra& alg) {
  const int eps = alg.prime() == 2 ? 1 : 2;
  for (std::size_t i = 0; i < alg.poly_count(); ++i)
    if (alg.poly_degree(i) != eps)
      throw Error(ErrorKind::DegreeMismatch, "Steenrod operations need generators in degree " +
                                                 std::to_string(eps));
}

}  // namespace

SteenrodResult total_steenrod(const GradedAlgebra& alg, const AlgElement& a) {
  check_algebra(alg);
  const std::uint32_t l = alg.prime();
  const PrimeField& f = alg.field();
  for (const auto& [m, c] : a.terms)
    if (m.ext)
      throw Error(ErrorKind::OddPartUnsupported,
                  "Steenrod operations on exterior classes are not supported");

  SteenrodResult result;
  result.input = a;
  result.degree = alg.degree(a).value_or(0);
  const int top = l == 2 ? result.degree : result.degree / 2;
  for (int i = 0; i <= top; ++i) result.powers[i] = alg.zero();

  // (g + g^l t)^e = sum_j C(e, j) g^(e + (l-1) j) t^j, multiplied over generators.
  for (const auto& [m, c] : a.terms) {
    const std::size_t n = m.exps.size();
    Monomial out{0, m.exps};
    std::function<void(std::size_t, int, Coeff)> expand = [&](std::size_t k, int tdeg, Coeff coef) {
      if (coef == 0) return;
      if (k == n) {
        auto& slot = result.powers[tdeg];
        slot = alg.add(slot, alg.monomial(out, coef));
        return;
      }
      const unsigned e = m.exps[k];
      for (unsigned j = 0; j <= e; ++j) {
        out.exps[k] = static_cast<std::uint16_t>(e + (l - 1) * j);
        expand(k + 1, tdeg + static_cast<int>(j), f.mul(coef, binomial_mod(e, j, l)));
      }
      out.exps[k] = static_cast<std::uint16_t>(e);
    };
    expand(0, 0, c);
  }
  return result;
}

AlgElement steenrod_power(const GradedAlgebra& alg, const AlgElement& a, int i) {
  if (i < 0) return alg.zero();
  auto r = total_steenrod(alg, a);
  auto it = r.powers.find(i);
  return it == r.powers.end() ? alg.zero() : it->second;
}

LimitTuple steenrod_power_on_limit(const LimitRing& ring, const LimitTuple& t, int i) {
  const int target = t.degree + steenrod_degree_shift(ring.prime(), i);
  if (target > ring.degree_bound())
    throw Error(ErrorKind::DegreeOverflow, "P^" + std::to_string(i) + " lands in degree " +
                                               std::to_string(target) + " past the bound");
  LimitTuple out{target, {}};
  for (std::size_t k = 0; k < ring.object_count(); ++k)
    out.components.push_back(
        steenrod_power(ring.diagram().algebras[k], t.components.at(k), i));
  return out;
}

LimitSteenrod steenrod_on_limit(const LimitRing& ring, const LimitTuple& t) {
  LimitSteenrod result;
  result.input = t;
  const int top = ring.prime() == 2 ? t.degree : t.degree / 2;
  for (int i = 0; i <= top; ++i) {
    LimitTuple p = steenrod_power_on_limit(ring, t, i);
    auto coords = ring.coordinates(p);
    if (!coords) throw std::logic_error("Steenrod image left the limit");
    result.coordinates[i] = std::move(*coords);
    result.powers.emplace(i, std::move(p));
  }
  return result;
}

StabilityReport check_stratum_stability(const LimitRing& ring, std::size_t object) {
  StabilityReport report;
  report.object = object;
  report.degree_bound = ring.degree_bound();
  for (int d = 0; d <= ring.degree_bound(); ++d) {
    const auto kernel = ring.restriction_kernel(object, d);
    for (std::size_t k = 0; k < kernel.size(); ++k) {
      const int top = ring.prime() == 2 ? d : d / 2;
      for (int i = 0; i <= top; ++i) {
        if (d + steenrod_degree_shift(ring.prime(), i) > ring.degree_bound()) break;
        LimitTuple p = steenrod_power_on_limit(ring, kernel[k], i);
        bool pass = ring.contains(p) && ring.restriction_to_pair(p, object).is_zero();
        report.entries.push_back({d, k, i, pass});
        report.pass = report.pass && pass;
      }
    }
  }
  return report;
}

}  // namespace qstrat
