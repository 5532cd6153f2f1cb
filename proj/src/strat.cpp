#include "qstrat/strat.hpp"

#include <set>

#include "qstrat/errors.hpp"

namespace qstrat {

std::vector<std::size_t> Stratum::kernel_dims() const {
  std::vector<std::size_t> out;
  for (const auto& k : kernel_bases) out.push_back(k.size());
  return out;
}

std::vector<std::size_t> StratifiedSpectrum::parents(std::size_t i) const {
  std::vector<std::size_t> out;
  const std::size_t n = strata.size();
  for (std::size_t j = 0; j < n; ++j) {
    if (j == i || !below[i][j]) continue;
    bool covered = true;
    for (std::size_t k = 0; k < n && covered; ++k)
      covered = !(k != i && k != j && below[i][k] && below[k][j]);
    if (covered) out.push_back(j);
  }
  return out;
}

StratifiedSpectrum stratify(const QuillenCategory& cat, const LimitRing& reduced) {
  if (reduced.object_count() != cat.size())
    throw Error(ErrorKind::Validation, "limit ring does not match the category");
  StratifiedSpectrum spec;
  spec.degree_bound = reduced.degree_bound();
  spec.max_rank = cat.max_rank();
  const std::size_t n = cat.size();
  spec.below.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    Stratum s{i, cat.objects[i], 0, {}, {}};
    s.dim = cat.objects[i].subgroup.rank();
    for (const auto& u : cat.hom(i, i)) s.weyl.push_back(u.matrix);
    for (int d = 0; d <= reduced.degree_bound(); ++d)
      s.kernel_bases.push_back(reduced.restriction_kernel(i, d));
    spec.strata.push_back(std::move(s));
    for (std::size_t j = 0; j < n; ++j) spec.below[i][j] = !cat.hom(i, j).empty();
  }
  return spec;
}

bool weyl_faithful(const Stratum& s) {
  std::set<FpMatrix> distinct(s.weyl.begin(), s.weyl.end());
  if (distinct.size() != s.weyl.size()) return false;
  std::size_t identities = 0;
  for (const auto& w : s.weyl) identities += w.is_identity() ? 1 : 0;
  return identities == 1;
}

bool kernel_containment(const StratifiedSpectrum& spec, std::size_t s1, std::size_t s2) {
  const auto& a = spec.strata.at(s1);
  const auto& b = spec.strata.at(s2);
  // ker(s2) is inside ker(s1) iff every element of ker(s2) restricts to zero at s1.
  for (const auto& level : b.kernel_bases)
    for (const auto& t : level)
      if (!t.components.at(a.object).is_zero()) return false;
  return true;
}

}  // namespace qstrat
