#include "qstrat/quillen.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>

#include "qstrat/errors.hpp"
#include "qstrat/linalg.hpp"

namespace qstrat {

std::size_t QuillenCategory::max_rank() const {
  std::size_t r = 0;
  for (const auto& o : objects) r = std::max(r, o.subgroup.rank());
  return r;
}

Diagram QuillenCategory::diagram(bool reduced) const {
  Diagram d;
  for (const auto& o : objects) d.algebras.push_back(cohomology_of_BA(o.subgroup, reduced));
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      for (const auto& u : homs[i][j]) {
        if (i == j && u.matrix.is_identity()) continue;
        d.arrows.push_back({i, j, restriction_map(prime, u, reduced)});
      }
  return d;
}

QuillenCategory build_category(const GSpace& space, std::uint32_t prime) {
  const FiniteGroup& group = space.group();
  QuillenCategory cat;
  cat.prime = prime;

  for (const auto& a : enumerate_elab(group, prime)) {
    const auto comps = components(fixed_subcomplex(space, a));
    const auto norm = normalizer(group, a);
    std::set<Vertex> covered;
    for (const auto& c : comps) {
      if (covered.count(c.id())) continue;
      for (const auto& g : norm) covered.insert(translate(space, c, g).id());
      cat.objects.push_back({a, c});
    }
  }

  const std::size_t n = cat.objects.size();
  cat.homs.assign(n, std::vector<std::vector<GroupHom>>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const auto& from = cat.objects[i];
    // |Cent_G(A, C)|: each induced hom must be realized by exactly one coset.
    std::size_t cent = 0;
    for (const auto& g : centralizer(group, from.subgroup))
      if (translate(space, from.component, g) == from.component) ++cent;

    for (std::size_t j = 0; j < n; ++j) {
      const auto& to = cat.objects[j];
      if (to.subgroup.rank() < from.subgroup.rank()) continue;
      std::map<GroupHom, std::size_t> realized;
      for (const auto& g : group.elements()) {
        bool conj = std::all_of(from.subgroup.basis().begin(), from.subgroup.basis().end(),
                                [&](const Perm& a) { return to.subgroup.contains(conjugate(a, g)); });
        if (!conj) continue;
        const auto image = translate(space, from.component, g).vertices;
        if (!std::includes(image.begin(), image.end(), to.component.vertices.begin(),
                           to.component.vertices.end()))
          continue;
        ++realized[conjugation_hom(from.subgroup, to.subgroup, g)];
      }
      for (auto& [u, count] : realized) {
        if (count != cent)
          throw std::logic_error("transporter coset is not a single centralizer coset");
        cat.homs[i][j].push_back(u);
      }
    }
    const auto& self = cat.homs[i][i];
    if (std::none_of(self.begin(), self.end(), [](const GroupHom& u) { return u.matrix.is_identity(); }))
      throw std::logic_error("identity morphism missing");
  }
  return cat;
}

// ---------------------------------------------------------------------------

LimitRing::Level LimitRing::solve_level(const Diagram& diagram, int d) {
  Level lv;
  const std::size_t n = diagram.algebras.size();
  lv.object_bases.resize(n);
  lv.offsets.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    lv.object_bases[i] = diagram.algebras[i].basis(d);
    lv.offsets[i] = lv.width;
    lv.width += lv.object_bases[i].size();
  }
  const PrimeField f = n ? diagram.algebras.front().field() : PrimeField(2);

  // One block of rows per arrow: theta(h_target) - h_source = 0 in H_source.
  std::vector<FpVector> rows;
  for (const auto& arrow : diagram.arrows) {
    const auto& src_basis = lv.object_bases[arrow.source];
    const auto& tgt_basis = lv.object_bases[arrow.target];
    const std::size_t first = rows.size();
    rows.resize(first + src_basis.size(), FpVector(lv.width, 0));
    for (std::size_t k = 0; k < tgt_basis.size(); ++k) {
      FpVector img = diagram.algebras[arrow.source].to_vector(arrow.restriction.apply(tgt_basis[k]),
                                                              src_basis);
      for (std::size_t r = 0; r < img.size(); ++r)
        rows[first + r][lv.offsets[arrow.target] + k] = img[r];
    }
    for (std::size_t r = 0; r < src_basis.size(); ++r) {
      Coeff& c = rows[first + r][lv.offsets[arrow.source] + r];
      c = f.sub(c, 1);
    }
  }
  NullSpace ns = null_space(FpMatrix::from_rows(f, lv.width, rows));
  lv.vectors = std::move(ns.basis);
  lv.free_columns = std::move(ns.free_columns);
  return lv;
}

LimitRing limit_ring(Diagram diagram, int degree_bound, unsigned threads) {
  if (degree_bound < 0) throw Error(ErrorKind::Validation, "degree bound must be nonnegative");
  if (diagram.algebras.empty()) throw Error(ErrorKind::Validation, "empty diagram");
  LimitRing ring;
  ring.prime_ = diagram.algebras.front().prime();
  ring.bound_ = degree_bound;
  ring.diagram_ = std::move(diagram);
  ring.levels_.resize(static_cast<std::size_t>(degree_bound) + 1);

  std::atomic<int> next{0};
  auto work = [&] {
    for (int d = next++; d <= degree_bound; d = next++)
      ring.levels_[static_cast<std::size_t>(d)] = LimitRing::solve_level(ring.diagram_, d);
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(degree_bound) + 1));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  for (int d = 0; d <= degree_bound; ++d) {
    auto& lv = ring.levels_[static_cast<std::size_t>(d)];
    for (const auto& v : lv.vectors) lv.tuples.push_back(ring.unflatten(d, v));
  }
  return ring;
}

LimitRing limit_ring(const QuillenCategory& cat, int degree_bound, bool reduced, unsigned threads) {
  return limit_ring(cat.diagram(reduced), degree_bound, threads);
}

const LimitRing::Level& LimitRing::level(int d) const {
  if (d < 0 || d > bound_)
    throw Error(ErrorKind::DegreeOverflow, "degree " + std::to_string(d) + " outside bound " +
                                               std::to_string(bound_));
  return levels_[static_cast<std::size_t>(d)];
}

std::vector<std::size_t> LimitRing::dims() const {
  std::vector<std::size_t> out;
  for (const auto& lv : levels_) out.push_back(lv.tuples.size());
  return out;
}

FpVector LimitRing::flatten(const LimitTuple& t) const {
  const Level& lv = level(t.degree);
  if (t.components.size() != object_count())
    throw Error(ErrorKind::DegreeMismatch, "tuple has the wrong number of components");
  FpVector w(lv.width, 0);
  for (std::size_t i = 0; i < object_count(); ++i) {
    FpVector part = diagram_.algebras[i].to_vector(t.components[i], lv.object_bases[i]);
    std::copy(part.begin(), part.end(), w.begin() + static_cast<long>(lv.offsets[i]));
  }
  return w;
}

LimitTuple LimitRing::unflatten(int d, std::span<const Coeff> v) const {
  const Level& lv = level(d);
  LimitTuple t{d, {}};
  for (std::size_t i = 0; i < object_count(); ++i) {
    AlgElement a;
    for (std::size_t k = 0; k < lv.object_bases[i].size(); ++k)
      if (Coeff c = v[lv.offsets[i] + k]) a.terms.emplace(lv.object_bases[i][k], c);
    t.components.push_back(std::move(a));
  }
  return t;
}

std::optional<FpVector> LimitRing::coordinates(const LimitTuple& t) const {
  const Level& lv = level(t.degree);
  const FpVector w = flatten(t);
  FpVector coords;
  FpVector check(lv.width, 0);
  const PrimeField& f = diagram_.algebras.front().field();
  for (std::size_t k = 0; k < lv.vectors.size(); ++k) {
    Coeff c = w[lv.free_columns[k]];
    coords.push_back(c);
    if (!c) continue;
    for (std::size_t x = 0; x < lv.width; ++x) check[x] = f.add(check[x], f.mul(c, lv.vectors[k][x]));
  }
  if (check != w) return std::nullopt;
  return coords;
}

LimitTuple LimitRing::combine(int d, std::span<const Coeff> coords) const {
  const Level& lv = level(d);
  if (coords.size() != lv.vectors.size())
    throw Error(ErrorKind::DegreeMismatch, "coordinate vector has the wrong length");
  const PrimeField& f = diagram_.algebras.front().field();
  FpVector w(lv.width, 0);
  for (std::size_t k = 0; k < coords.size(); ++k)
    for (std::size_t x = 0; x < lv.width; ++x) w[x] = f.add(w[x], f.mul(coords[k], lv.vectors[k][x]));
  return unflatten(d, w);
}

LimitTuple LimitRing::zero(int d) const {
  level(d);
  return LimitTuple{d, std::vector<AlgElement>(object_count())};
}

LimitTuple LimitRing::multiply(const LimitTuple& a, const LimitTuple& b) const {
  const int d = a.degree + b.degree;
  level(d);
  LimitTuple out{d, {}};
  for (std::size_t i = 0; i < object_count(); ++i)
    out.components.push_back(diagram_.algebras[i].mul(a.components.at(i), b.components.at(i)));
  return out;
}

AlgElement LimitRing::restriction_to_pair(const LimitTuple& t, std::size_t object) const {
  if (object >= object_count())
    throw Error(ErrorKind::ObjectNotFound, "no object with index " + std::to_string(object));
  return t.components.at(object);
}

std::vector<LimitTuple> LimitRing::restriction_kernel(std::size_t object, int d) const {
  if (object >= object_count())
    throw Error(ErrorKind::ObjectNotFound, "no object with index " + std::to_string(object));
  const Level& lv = level(d);
  const PrimeField& f = diagram_.algebras.front().field();
  const std::size_t rows = lv.object_bases[object].size();
  FpMatrix proj(f, rows, lv.vectors.size());
  for (std::size_t k = 0; k < lv.vectors.size(); ++k)
    for (std::size_t r = 0; r < rows; ++r) proj(r, k) = lv.vectors[k][lv.offsets[object] + r];
  std::vector<LimitTuple> out;
  for (const auto& coords : null_space(proj).basis) out.push_back(combine(d, coords));
  return out;
}

bool LimitRing::verify_compatibility() const {
  for (int d = 0; d <= bound_; ++d)
    for (const auto& t : basis(d))
      for (const auto& arrow : diagram_.arrows)
        if (!(arrow.restriction.apply(t.components[arrow.target]) == t.components[arrow.source]))
          return false;
  return true;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::vector<int>> denominator_candidates(int max_degree, int step) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int min_index, int budget) {
    out.push_back(cur);
    for (int i = min_index; step * i <= budget; ++i) {
      cur.push_back(i);
      rec(i, budget - step * i);
      cur.pop_back();
    }
  };
  rec(1, max_degree);
  auto total = [](const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); };
  std::stable_sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    if (total(a) != total(b)) return total(a) < total(b);
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace

std::optional<RationalFit> fit_rational(std::span<const long long> coeffs,
                                        int max_denominator_degree, int factor_step) {
  if (coeffs.empty() || factor_step < 1) return std::nullopt;
  const int top = static_cast<int>(coeffs.size()) - 1;
  const int window = std::max(4, top / 3);
  if (window > top) return std::nullopt;

  // A denominator of degree above top - window could absorb the whole check
  // window and fit anything, so it is never tried.
  const int budget = std::min(max_denominator_degree, top - window);
  for (const auto& denom : denominator_candidates(budget, factor_step)) {
    std::vector<long long> q{1};
    for (int i : denom) {
      const std::size_t shift = static_cast<std::size_t>(factor_step * i);
      std::vector<long long> next(q.size() + shift, 0);
      for (std::size_t k = 0; k < q.size(); ++k) {
        next[k] += q[k];
        next[k + shift] -= q[k];
      }
      q = std::move(next);
    }
    std::vector<long long> p(coeffs.size(), 0);
    for (std::size_t n = 0; n < coeffs.size(); ++n)
      for (std::size_t k = 0; k < q.size() && k <= n; ++k) p[n] += q[k] * coeffs[n - k];
    bool stable = true;
    for (int n = top - window + 1; n <= top && stable; ++n) stable = p[static_cast<std::size_t>(n)] == 0;
    if (!stable) continue;

    while (!p.empty() && p.back() == 0) p.pop_back();
    RationalFit fit{p, denom, factor_step, static_cast<int>(denom.size())};
    // multiplicity of the root t = 1
    std::vector<long long> r = p;
    while (!r.empty() && std::accumulate(r.begin(), r.end(), 0LL) == 0) {
      std::vector<long long> quotient(r.size() - 1, 0);
      long long carry = 0;
      for (std::size_t k = r.size() - 1; k > 0; --k) {
        carry += r[k];
        quotient[k - 1] = carry;
      }
      r = std::move(quotient);
      --fit.pole_order;
    }
    return fit;
  }
  return std::nullopt;
}

PoincareSeries poincare(const LimitRing& ring, int max_denominator_degree) {
  PoincareSeries s;
  for (auto d : ring.dims()) s.coefficients.push_back(static_cast<long long>(d));
  s.fitted = fit_rational(s.coefficients, max_denominator_degree, 2);
  return s;
}

}  // namespace qstrat
