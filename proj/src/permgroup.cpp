#include "qstrat/permgroup.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <set>
#include <string>

#include "qstrat/errors.hpp"

namespace qstrat {

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p])
      throw Error(ErrorKind::Validation, "image array is not a permutation");
    seen[p] = true;
  }
}

Perm Perm::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  Perm p;
  p.images_ = std::move(images);
  return p;
}

Perm Perm::operator*(const Perm& rhs) const {
  if (degree() != rhs.degree())
    throw Error(ErrorKind::Validation, "permutation degree mismatch");
  Perm out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[i] = rhs.images_[images_[i]];
  return out;
}

Perm Perm::inverse() const {
  Perm out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[images_[i]] = static_cast<Point>(i);
  return out;
}

Perm Perm::pow(long long n) const {
  Perm base = n < 0 ? inverse() : *this;
  unsigned long long e = n < 0 ? static_cast<unsigned long long>(-n) : n;
  Perm result = identity(degree());
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

bool Perm::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::size_t Perm::order() const {
  // lcm of cycle lengths
  std::vector<bool> seen(images_.size(), false);
  std::size_t result = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

Perm conjugate(const Perm& a, const Perm& g) { return g.inverse() * a * g; }

std::size_t default_group_cap() {
  if (const char* env = std::getenv("QSTRAT_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 20160;
}

FiniteGroup FiniteGroup::generate(std::size_t degree, std::vector<Perm> generators,
                                  std::size_t cap) {
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw Error(ErrorKind::Validation,
                  "generator degree " + std::to_string(g.degree()) + " does not match " +
                      std::to_string(degree));
  FiniteGroup group;
  group.degree_ = degree;
  group.generators_ = std::move(generators);

  std::set<Perm> seen{Perm::identity(degree)};
  std::deque<Perm> queue{Perm::identity(degree)};
  while (!queue.empty()) {
    Perm e = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : group.generators_) {
      Perm next = e * s;
      if (seen.insert(next).second) {
        if (seen.size() > cap)
          throw Error(ErrorKind::CapExceeded,
                      "group order exceeds cap " + std::to_string(cap));
        queue.push_back(std::move(next));
      }
    }
  }
  group.elements_.assign(seen.begin(), seen.end());
  return group;
}

bool FiniteGroup::contains(const Perm& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

std::optional<std::size_t> FiniteGroup::index_of(const Perm& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = i + 1; j < generators_.size(); ++j)
      if (generators_[i] * generators_[j] != generators_[j] * generators_[i]) return false;
  return true;
}

ElabSubgroup::ElabSubgroup(std::uint32_t prime, std::size_t degree, std::vector<Perm> basis)
    : prime_(prime), degree_(degree), basis_(std::move(basis)) {
  PrimeField field(prime);
  for (const auto& b : basis_) {
    if (b.degree() != degree) throw Error(ErrorKind::Validation, "basis degree mismatch");
    if (b.is_identity() || !b.pow(prime).is_identity())
      throw Error(ErrorKind::Validation, "basis element does not have order l");
  }
  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (std::size_t j = i + 1; j < basis_.size(); ++j)
      if (basis_[i] * basis_[j] != basis_[j] * basis_[i])
        throw Error(ErrorKind::Validation, "basis elements do not commute");

  const std::size_t r = basis_.size();
  std::vector<std::pair<Perm, FpVector>> table;
  FpVector c(r, 0);
  std::vector<Perm> powers;
  for (;;) {
    Perm e = Perm::identity(degree);
    for (std::size_t i = 0; i < r; ++i)
      if (c[i]) e = e * basis_[i].pow(c[i]);
    table.emplace_back(std::move(e), c);
    std::size_t i = 0;
    while (i < r && ++c[i] == prime) c[i++] = 0;
    if (i == r) break;
  }
  std::sort(table.begin(), table.end());
  for (std::size_t k = 1; k < table.size(); ++k)
    if (table[k].first == table[k - 1].first)
      throw Error(ErrorKind::Validation, "basis is not F_l-independent");
  for (auto& [p, v] : table) {
    elements_.push_back(std::move(p));
    coords_.push_back(std::move(v));
  }
}

bool ElabSubgroup::contains(const Perm& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

std::optional<FpVector> ElabSubgroup::coordinates(const Perm& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return std::nullopt;
  return coords_[static_cast<std::size_t>(it - elements_.begin())];
}

GroupHom compose(const GroupHom& outer, const GroupHom& inner) {
  return {outer.matrix * inner.matrix};
}

GroupHom conjugation_hom(const ElabSubgroup& source, const ElabSubgroup& target,
                         const Perm& g) {
  PrimeField field(source.prime());
  FpMatrix m(field, target.rank(), source.rank());
  for (std::size_t j = 0; j < source.rank(); ++j) {
    auto coords = target.coordinates(conjugate(source.basis()[j], g));
    if (!coords) throw std::logic_error("conjugate does not lie in target subgroup");
    for (std::size_t i = 0; i < target.rank(); ++i) m(i, j) = (*coords)[i];
  }
  return {std::move(m)};
}

namespace {

using ElementList = std::vector<Perm>;

ElementList conjugate_list(const ElementList& elems, const Perm& g) {
  Perm ginv = g.inverse();
  ElementList out;
  out.reserve(elems.size());
  for (const auto& e : elems) out.push_back(ginv * e * g);
  std::sort(out.begin(), out.end());
  return out;
}

ElementList canonical_conjugate(const FiniteGroup& group, const ElementList& elems) {
  ElementList best = elems;
  for (const auto& g : group.elements()) {
    ElementList c = conjugate_list(elems, g);
    if (c < best) best = std::move(c);
  }
  return best;
}

// <E, x> for x commuting with E and of order l.
ElementList extend(const ElementList& elems, const Perm& x, std::uint32_t prime) {
  ElementList out;
  out.reserve(elems.size() * prime);
  Perm power = Perm::identity(x.degree());
  for (std::uint32_t k = 0; k < prime; ++k) {
    for (const auto& e : elems) out.push_back(e * power);
    power = power * x;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Greedy basis: scan the sorted non-identity elements, keep those outside
// the span of the basis so far.
std::vector<Perm> greedy_basis(const ElementList& elems, std::uint32_t prime) {
  std::vector<Perm> basis;
  ElementList span{elems.front()};
  for (const auto& e : elems) {
    if (std::binary_search(span.begin(), span.end(), e)) continue;
    basis.push_back(e);
    span = extend(span, e, prime);
  }
  return basis;
}

}  // namespace

std::vector<ElabSubgroup> enumerate_elab(const FiniteGroup& group, std::uint32_t prime) {
  PrimeField field(prime);  // validates primality
  const std::size_t n = group.degree();

  std::vector<Perm> order_l;
  for (const auto& g : group.elements())
    if (!g.is_identity() && g.pow(prime).is_identity()) order_l.push_back(g);

  std::vector<ElementList> all;
  std::set<ElementList> current{ElementList{Perm::identity(n)}};
  while (!current.empty()) {
    all.insert(all.end(), current.begin(), current.end());
    std::set<ElementList> candidates;
    for (const auto& elems : current) {
      for (const auto& x : order_l) {
        if (std::binary_search(elems.begin(), elems.end(), x)) continue;
        bool commutes = std::all_of(elems.begin(), elems.end(),
                                    [&](const Perm& e) { return e * x == x * e; });
        if (!commutes) continue;
        candidates.insert(extend(elems, x, prime));
      }
    }
    std::set<ElementList> next;
    for (const auto& c : candidates) next.insert(canonical_conjugate(group, c));
    current = std::move(next);
  }

  std::vector<ElabSubgroup> reps;
  reps.reserve(all.size());
  for (const auto& elems : all) reps.emplace_back(prime, n, greedy_basis(elems, prime));
  return reps;
}

std::vector<Perm> transporter(const FiniteGroup& group, const ElabSubgroup& source,
                              const ElabSubgroup& target) {
  std::vector<Perm> out;
  for (const auto& g : group.elements()) {
    bool ok = std::all_of(source.basis().begin(), source.basis().end(),
                          [&](const Perm& a) { return target.contains(conjugate(a, g)); });
    if (ok) out.push_back(g);
  }
  return out;
}

std::vector<Perm> centralizer(const FiniteGroup& group, const ElabSubgroup& a) {
  std::vector<Perm> out;
  for (const auto& g : group.elements()) {
    bool ok = std::all_of(a.basis().begin(), a.basis().end(),
                          [&](const Perm& b) { return b * g == g * b; });
    if (ok) out.push_back(g);
  }
  return out;
}

std::vector<Perm> normalizer(const FiniteGroup& group, const ElabSubgroup& a) {
  return transporter(group, a, a);
}

MatrixGroup weyl_group(const FiniteGroup& group, const ElabSubgroup& a) {
  std::set<FpMatrix> mats;
  for (const auto& g : normalizer(group, a)) mats.insert(conjugation_hom(a, a, g).matrix);
  MatrixGroup w;
  PrimeField field(a.prime());
  FpMatrix id = FpMatrix::identity(field, a.rank());
  w.elements.push_back(id);
  for (const auto& m : mats)
    if (m != id) w.elements.push_back(m);
  return w;
}

}  // namespace qstrat
