#include "qstrat/classical.hpp"

#include <algorithm>
#include <functional>

#include "qstrat/errors.hpp"
#include "qstrat/linalg.hpp"

namespace qstrat {

GradedAlgebra bgl_cohomology(std::size_t n, std::uint32_t prime) {
  if (n < 1) throw Error(ErrorKind::Validation, "N must be at least 1");
  std::vector<int> degrees;
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) {
    degrees.push_back(static_cast<int>(2 * i));
    names.push_back("c" + std::to_string(i));
  }
  return GradedAlgebra::polynomial(prime, std::move(degrees), std::move(names));
}

GradedAlgebra torus_cohomology(std::size_t n, std::uint32_t prime, const std::string& name) {
  if (n < 1) throw Error(ErrorKind::Validation, "N must be at least 1");
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back(n == 1 ? name : name + std::to_string(i));
  return GradedAlgebra::polynomial(prime, std::vector<int>(n, 2), std::move(names));
}

AlgElement elementary_symmetric(const GradedAlgebra& alg, std::size_t i) {
  const std::size_t n = alg.poly_count();
  if (i == 0) return alg.one();
  AlgElement out;
  if (i > n) return out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(i), true);
  do {
    Monomial m{0, std::vector<std::uint16_t>(n, 0)};
    for (std::size_t k = 0; k < n; ++k) m.exps[k] = pick[k] ? 1 : 0;
    out = alg.add(out, alg.monomial(std::move(m)));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

SymPolyMap sym_poly_map(std::size_t n, std::uint32_t prime) {
  auto source = bgl_cohomology(n, prime);
  auto target = torus_cohomology(n, prime);
  std::vector<AlgElement> images;
  for (std::size_t i = 1; i <= n; ++i) images.push_back(elementary_symmetric(target, i));
  return {n, AlgebraMorphism(source, target, {}, std::move(images))};
}

FlagAlgebra::FlagAlgebra(std::size_t n, std::uint32_t prime)
    : n_(n), ambient_(torus_cohomology(n, prime)) {
  // h_k(t_k..t_N): every monomial of t-degree k in the variables k..N.
  for (std::size_t k = 1; k <= n; ++k) {
    AlgElement h;
    Monomial m{0, std::vector<std::uint16_t>(n, 0)};
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t var, std::size_t left) {
      if (var == n) {
        if (left == 0) h = ambient_.add(h, ambient_.monomial(m));
        return;
      }
      for (std::size_t e = 0; e <= left; ++e) {
        m.exps[var] = static_cast<std::uint16_t>(e);
        rec(var + 1, left - e);
      }
      m.exps[var] = 0;
    };
    rec(k - 1, k);
    reducers_.push_back(std::move(h));
  }
}

AlgElement FlagAlgebra::normal_form(const AlgElement& f) const {
  const PrimeField& field = ambient_.field();
  AlgElement work = f, result;
  while (!work.is_zero()) {
    auto top = std::prev(work.terms.end());  // lex-largest
    const Monomial m = top->first;
    const Coeff c = top->second;
    std::size_t k = 0;
    while (k < n_ && m.exps[k] < k + 1) ++k;
    if (k == n_) {
      result.terms.emplace(m, c);
      work.terms.erase(top);
      continue;
    }
    Monomial rest = m;
    rest.exps[k] = static_cast<std::uint16_t>(rest.exps[k] - (k + 1));
    work = ambient_.sub(work, ambient_.mul(ambient_.monomial(rest, c), reducers_[k]));
  }
  (void)field;
  return result;
}

std::vector<Monomial> FlagAlgebra::basis(int d) const {
  std::vector<Monomial> out;
  for (auto& m : ambient_.basis(d)) {
    bool standard = true;
    for (std::size_t k = 0; k < n_ && standard; ++k) standard = m.exps[k] <= k;
    if (standard) out.push_back(std::move(m));
  }
  return out;
}

std::map<int, std::size_t> FlagAlgebra::dims() const {
  std::map<int, std::size_t> out;
  for (int d = 0; d <= top_degree(); d += 2)
    if (auto k = basis(d).size()) out[d] = k;
  return out;
}

std::size_t FlagAlgebra::total_dim() const {
  std::size_t total = 0;
  for (const auto& [d, k] : dims()) total += k;
  return total;
}

ReductiveReport gl_reductive_check(std::size_t n, std::uint32_t prime, int degree_bound) {
  if (degree_bound < 0 || degree_bound % 2)
    throw Error(ErrorKind::Validation, "degree bound must be even and nonnegative");
  ReductiveReport report;
  report.n = n;
  report.prime = prime;
  report.degree_bound = degree_bound;

  const SymPolyMap sym = sym_poly_map(n, prime);
  const GradedAlgebra& source = sym.map.source();
  const GradedAlgebra& target = sym.map.target();
  const PrimeField& f = target.field();

  // S_N generated by adjacent transpositions acting on u_1..u_N.
  std::vector<FpMatrix> perms;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    FpMatrix m = FpMatrix::identity(f, n);
    m(k, k) = m(k + 1, k + 1) = 0;
    m(k, k + 1) = m(k + 1, k) = 1;
    perms.push_back(std::move(m));
  }
  std::vector<AlgebraMorphism> actions;
  for (const auto& m : perms) actions.push_back(AlgebraMorphism::linear_substitution(target, target, m));

  std::vector<std::vector<FpVector>> images(static_cast<std::size_t>(degree_bound) + 1);
  for (int d = 0; d <= degree_bound; d += 2) {
    const auto tb = target.basis(d);
    auto& img = images[static_cast<std::size_t>(d)];
    for (const auto& m : source.basis(d)) {
      AlgElement e = sym.map.apply(m);
      for (const auto& a : actions)
        if (!(a.apply(e) == e)) report.image_invariant = false;
      img.push_back(target.to_vector(e, tb));
    }
    const std::size_t r = img.empty() ? 0 : rank(FpMatrix::from_rows(f, tb.size(), img));
    if (r != img.size()) report.injective = false;
    report.image_dims.push_back(r);
  }

  for (int d = 0; d <= degree_bound; d += 2) {
    const auto inv = invariants(target, perms, d);
    report.invariant_dims.push_back(inv.size());
    for (const auto& g : inv) {
      int k = 0;
      AlgElement power = g;
      int deg = d;
      for (;;) {
        if (deg > degree_bound)
          throw Error(ErrorKind::BoundTooSmall,
                      "cannot certify an l-power of a degree-" + std::to_string(d) +
                          " invariant below degree " + std::to_string(degree_bound));
        if (span_coordinates(f, images[static_cast<std::size_t>(deg)],
                             target.to_vector(power, deg)))
          break;
        if (deg == 0) break;
        power = target.pow(power, prime);
        deg *= static_cast<int>(prime);
        ++k;
      }
      report.frobenius_exponent = std::max(report.frobenius_exponent, k);
    }
  }
  return report;
}

FrobeniusReport gl_ell_diagonal_example(std::uint32_t prime) {
  FrobeniusReport report{prime, torus_cohomology(1, prime), {}, true};
  const GradedAlgebra source = torus_cohomology(prime, prime);
  FpMatrix diag(source.field(), prime, 1);
  for (std::uint32_t i = 0; i < prime; ++i) diag(i, 0) = 1;
  const auto phi = AlgebraMorphism::linear_substitution(source, report.target, diag);
  for (std::uint32_t d = 1; d <= prime; ++d) {
    AlgElement img = phi.apply(elementary_symmetric(source, d));
    const AlgElement expected = d < prime ? report.target.zero()
                                          : report.target.pow(report.target.poly_generator(0), prime);
    report.matches = report.matches && img == expected;
    report.images.push_back(std::move(img));
  }
  return report;
}

}  // namespace qstrat
