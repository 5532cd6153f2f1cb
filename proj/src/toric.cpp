#include "qstrat/toric.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "qstrat/errors.hpp"

namespace qstrat {

namespace {

using Int = __int128;

Int iabs(Int v) { return v < 0 ? -v : v; }

Int igcd(Int a, Int b) {
  a = iabs(a);
  b = iabs(b);
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Rank over Q by fraction-free elimination, rows normalized by their content.
std::size_t rational_rank(std::vector<std::vector<Int>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      Int a = m[r][c], b = m[i][c], content = 0;
      for (std::size_t k = 0; k < cols; ++k) {
        m[i][k] = m[i][k] * a - m[r][k] * b;
        content = igcd(content, m[i][k]);
      }
      if (content > 1)
        for (auto& v : m[i]) v /= content;
    }
    ++r;
  }
  return r;
}

// Bareiss determinant.
Int determinant(std::vector<std::vector<Int>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Int prev = 1, sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Coeff reduce_mod(long long v, std::uint32_t p) {
  long long r = v % static_cast<long long>(p);
  return static_cast<Coeff>(r < 0 ? r + p : r);
}

Cone intersect(const Cone& a, const Cone& b) {
  Cone out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool is_subset(const Cone& small, const Cone& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

bool cone_less(const Cone& a, const Cone& b) {
  return a.size() != b.size() ? a.size() < b.size() : a < b;
}

}  // namespace

Fan::Fan(std::size_t rank, std::vector<std::vector<long long>> rays, std::vector<Cone> max_cones)
    : rank_(rank), rays_(std::move(rays)) {
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    const auto& r = rays_[i];
    if (r.size() != rank_)
      throw Error(ErrorKind::Validation, "ray " + std::to_string(i) + " has the wrong length");
    Int g = 0;
    for (long long v : r) g = igcd(g, v);
    if (g != 1) throw Error(ErrorKind::Validation, "ray " + std::to_string(i) + " is not primitive");
  }
  std::set<Cone> distinct;
  for (auto c : max_cones) {
    std::sort(c.begin(), c.end());
    if (std::adjacent_find(c.begin(), c.end()) != c.end())
      throw Error(ErrorKind::Validation, "cone repeats a ray");
    for (auto i : c)
      if (i >= rays_.size()) throw Error(ErrorKind::Validation, "cone refers to a missing ray");
    std::vector<std::vector<Int>> m;
    for (auto i : c) m.emplace_back(rays_[i].begin(), rays_[i].end());
    if (rational_rank(m) != c.size())
      throw Error(ErrorKind::NonSimplicial, "cone rays are linearly dependent");
    distinct.insert(std::move(c));
  }
  for (const auto& c : distinct) {
    bool maximal = std::none_of(distinct.begin(), distinct.end(), [&](const Cone& d) {
      return d != c && is_subset(c, d);
    });
    if (maximal) max_cones_.push_back(c);
  }
  std::sort(max_cones_.begin(), max_cones_.end(), cone_less);

  std::set<Cone> faces{Cone{}};
  for (const auto& c : max_cones_) {
    for (std::uint32_t mask = 0; mask < (1u << c.size()); ++mask) {
      Cone f;
      for (std::size_t k = 0; k < c.size(); ++k)
        if (mask >> k & 1u) f.push_back(c[k]);
      faces.insert(std::move(f));
    }
  }
  cones_.assign(faces.begin(), faces.end());
  std::sort(cones_.begin(), cones_.end(), cone_less);
  for (std::size_t i = 0; i < rays_.size(); ++i)
    if (!is_cone({i})) throw Error(ErrorKind::Validation, "ray " + std::to_string(i) + " lies in no cone");
}

bool Fan::is_cone(const Cone& c) const {
  return std::binary_search(cones_.begin(), cones_.end(), c, cone_less);
}

std::size_t Fan::index_of(const Cone& c) const {
  auto it = std::lower_bound(cones_.begin(), cones_.end(), c, cone_less);
  if (it == cones_.end() || *it != c) throw Error(ErrorKind::ObjectNotFound, "not a cone of the fan");
  return static_cast<std::size_t>(it - cones_.begin());
}

long long Fan::multiplicity(const Cone& c) const {
  const std::size_t k = c.size();
  if (k == 0) return 1;
  Int g = 0;
  std::vector<bool> pick(rank_, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
  do {
    std::vector<std::vector<Int>> minor;
    for (auto i : c) {
      std::vector<Int> row;
      for (std::size_t col = 0; col < rank_; ++col)
        if (pick[col]) row.push_back(rays_[i][col]);
      minor.push_back(std::move(row));
    }
    g = igcd(g, determinant(std::move(minor)));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return static_cast<long long>(g);
}

bool Fan::smooth() const {
  return std::all_of(max_cones_.begin(), max_cones_.end(),
                     [&](const Cone& c) { return multiplicity(c) == 1; });
}

void require_prime_to_multiplicities(const Fan& fan, std::uint32_t prime) {
  for (const auto& c : fan.max_cones())
    if (fan.multiplicity(c) % prime == 0)
      throw Error(ErrorKind::Validation,
                  "l divides the multiplicity of a cone; A_sigma would drop rank");
}

std::size_t ConeCategory::max_rank() const {
  std::size_t r = 0;
  for (const auto& o : objects) r = std::max(r, o.rank());
  return r;
}

Diagram ConeCategory::diagram() const {
  Diagram d;
  for (const auto& o : objects) d.algebras.push_back(GradedAlgebra::elementary_abelian(prime, o.rank(), true));
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      if (i != j)
        for (const auto& h : homs[i][j]) d.arrows.push_back({i, j, restriction_map(prime, h, true)});
  return d;
}

ConeCategory cone_category(const Fan& fan, std::uint32_t prime) {
  require_prime_to_multiplicities(fan, prime);
  const PrimeField f(prime);
  ConeCategory cat;
  cat.prime = prime;
  for (const auto& c : fan.cones()) {
    ConeSubgroup s{c, {}};
    for (auto i : c) {
      FpVector v;
      for (long long x : fan.rays()[i]) v.push_back(reduce_mod(x, prime));
      s.basis.push_back(std::move(v));
    }
    if (!s.basis.empty() && rank(FpMatrix::from_rows(f, fan.rank(), s.basis)) != s.basis.size())
      throw std::logic_error("cone rays are dependent mod l despite prime multiplicity");
    cat.objects.push_back(std::move(s));
  }
  const std::size_t n = cat.objects.size();
  cat.homs.assign(n, std::vector<std::vector<GroupHom>>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& small = cat.objects[i];
      const auto& big = cat.objects[j];
      if (!is_subset(small.cone, big.cone)) continue;
      FpMatrix m(f, big.rank(), small.rank());
      for (std::size_t col = 0; col < small.rank(); ++col) {
        auto coords = span_coordinates(f, big.basis, small.basis[col]);
        if (!coords) throw std::logic_error("face ray outside the span of the cone");
        for (std::size_t row = 0; row < big.rank(); ++row) m(row, col) = (*coords)[row];
      }
      cat.homs[i][j].push_back(GroupHom{std::move(m)});
    }
  }
  return cat;
}

namespace {

GradedAlgebra piece_algebra(const Fan& fan, const Cone& c, std::uint32_t prime) {
  std::vector<std::string> names;
  if (c.size() == fan.rank()) {
    for (std::size_t i = 1; i <= fan.rank(); ++i) names.push_back("x" + std::to_string(i));
  } else {
    for (auto r : c) names.push_back("s" + std::to_string(r));
  }
  std::vector<int> degrees(names.size(), prime == 2 ? 1 : 2);
  return GradedAlgebra::polynomial(prime, std::move(degrees), std::move(names));
}

// Pullback of polynomials on the piece `big` to the face `small`.
AlgebraMorphism pullback(const Fan& fan, const Cone& big, const Cone& small, std::uint32_t prime) {
  auto source = piece_algebra(fan, big, prime);
  auto target = piece_algebra(fan, small, prime);
  FpMatrix m(source.field(), source.poly_count(), small.size());
  for (std::size_t j = 0; j < small.size(); ++j) {
    const auto& ray = fan.rays()[small[j]];
    if (big.size() == fan.rank()) {
      for (std::size_t i = 0; i < fan.rank(); ++i) m(i, j) = reduce_mod(ray[i], prime);
    } else {
      auto k = std::lower_bound(big.begin(), big.end(), small[j]) - big.begin();
      m(static_cast<std::size_t>(k), j) = 1;
    }
  }
  return AlgebraMorphism::linear_substitution(source, target, m);
}

}  // namespace

PiecewisePoly piecewise_poly(const Fan& fan, std::uint32_t prime, int degree_bound,
                             unsigned threads) {
  require_prime_to_multiplicities(fan, prime);
  std::vector<Cone> pieces = fan.max_cones();
  if (pieces.empty()) pieces.push_back({});
  const std::size_t max_count = pieces.size();
  std::set<Cone> meets;
  for (std::size_t a = 0; a < max_count; ++a)
    for (std::size_t b = a + 1; b < max_count; ++b) meets.insert(intersect(pieces[a], pieces[b]));
  pieces.insert(pieces.end(), meets.begin(), meets.end());

  Diagram d;
  for (const auto& c : pieces) d.algebras.push_back(piece_algebra(fan, c, prime));
  for (std::size_t t = max_count; t < pieces.size(); ++t)
    for (std::size_t s = 0; s < max_count; ++s)
      if (is_subset(pieces[t], pieces[s])) d.arrows.push_back({t, s, pullback(fan, pieces[s], pieces[t], prime)});

  const int eps = prime == 2 ? 1 : 2;
  return PiecewisePoly{std::move(pieces), max_count, degree_bound,
                       limit_ring(std::move(d), eps * degree_bound, threads)};
}

std::vector<std::size_t> PiecewisePoly::dims() const {
  const int eps = ring.epsilon();
  std::vector<std::size_t> out;
  for (int d = 0; d <= degree_bound; ++d) out.push_back(ring.dim(eps * d));
  return out;
}

bool PiecewisePoly::faces_agree(const Fan& fan) const {
  const std::uint32_t p = ring.prime();
  for (int d = 0; d <= ring.degree_bound(); ++d) {
    for (const auto& t : ring.basis(d)) {
      for (std::size_t a = 0; a < max_count; ++a) {
        for (std::size_t b = a + 1; b < max_count; ++b) {
          const Cone meet = intersect(pieces[a], pieces[b]);
          for (std::uint32_t mask = 0; mask < (1u << meet.size()); ++mask) {
            Cone face;
            for (std::size_t k = 0; k < meet.size(); ++k)
              if (mask >> k & 1u) face.push_back(meet[k]);
            auto fa = pullback(fan, pieces[a], face, p).apply(t.components[a]);
            auto fb = pullback(fan, pieces[b], face, p).apply(t.components[b]);
            if (!(fa == fb)) return false;
          }
        }
      }
    }
  }
  return true;
}

GradedAlgebra stanley_reisner(const Fan& fan, std::uint32_t prime) {
  const std::size_t m = fan.rays().size();
  if (m > 24) throw Error(ErrorKind::Validation, "too many rays for the Stanley-Reisner ring");
  std::vector<std::uint32_t> cone_masks;
  for (const auto& c : fan.max_cones()) {
    std::uint32_t mask = 0;
    for (auto r : c) mask |= 1u << r;
    cone_masks.push_back(mask);
  }
  auto is_face = [&](std::uint32_t s) {
    return std::any_of(cone_masks.begin(), cone_masks.end(),
                       [&](std::uint32_t c) { return (s & ~c) == 0; }) || s == 0;
  };
  std::vector<std::uint32_t> minimal;
  for (std::uint32_t s = 1; s < (1u << m); ++s) {
    if (is_face(s)) continue;
    bool min = true;
    for (std::size_t k = 0; k < m && min; ++k)
      if (s >> k & 1u) min = is_face(s & ~(1u << k));
    if (min) minimal.push_back(s);
  }
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= m; ++i) names.push_back("u" + std::to_string(i));
  return GradedAlgebra::polynomial(prime, std::vector<int>(m, prime == 2 ? 1 : 2), std::move(names))
      .with_monomial_relations(std::move(minimal));
}

ToricComparison compare(const Fan& fan, std::uint32_t prime, int degree_bound, unsigned threads) {
  if (degree_bound < 0) throw Error(ErrorKind::Validation, "degree bound must be nonnegative");
  ToricComparison out;
  out.smooth = fan.smooth();
  out.degree_bound = degree_bound;

  const PiecewisePoly pp = piecewise_poly(fan, prime, degree_bound, threads);
  out.pp = pp.dims();
  out.faces_agree = pp.faces_agree(fan);

  const int eps = prime == 2 ? 1 : 2;
  const LimitRing lim = limit_ring(cone_category(fan, prime).diagram(), eps * degree_bound, threads);
  for (int d = 0; d <= degree_bound; ++d) out.limit.push_back(lim.dim(eps * d));
  out.pp_matches_limit = out.pp == out.limit;

  if (out.smooth) {
    const GradedAlgebra sr = stanley_reisner(fan, prime);
    for (int d = 0; d <= degree_bound; ++d) out.sr.push_back(sr.dim(eps * d));
    out.sr_matches_pp = out.sr == out.pp;
  }
  return out;
}

}  // namespace qstrat
