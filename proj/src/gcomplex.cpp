#include "qstrat/gcomplex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "qstrat/errors.hpp"

namespace qstrat {

namespace {

Simplex image(const Simplex& s, const Perm& p) {
  Simplex out;
  out.reserve(s.size());
  for (Vertex v : s) out.push_back(p[v]);
  std::sort(out.begin(), out.end());
  return out;
}

bool subset(const Simplex& a, const Simplex& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<Simplex> maximal(std::vector<Simplex> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<Simplex> out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < sets.size() && !dominated; ++j)
      dominated = j != i && sets[j].size() > sets[i].size() && subset(sets[i], sets[j]);
    if (!dominated) out.push_back(sets[i]);
  }
  return out;
}

}  // namespace

GComplex::GComplex(std::size_t vertex_count, std::vector<Simplex> facets,
                   std::vector<Perm> generator_action)
    : vertex_count_(vertex_count), action_(std::move(generator_action)) {
  if (vertex_count == 0) throw Error(ErrorKind::Validation, "complex has no vertices");
  std::vector<bool> covered(vertex_count, false);
  for (auto& f : facets) {
    if (f.empty()) throw Error(ErrorKind::Validation, "empty facet");
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end())
      throw Error(ErrorKind::Validation, "facet repeats a vertex");
    for (Vertex v : f) {
      if (v >= vertex_count) throw Error(ErrorKind::Validation, "facet vertex out of range");
      covered[v] = true;
    }
  }
  for (Vertex v = 0; v < vertex_count; ++v)
    if (!covered[v]) facets.push_back({v});
  facets_ = maximal(std::move(facets));
  for (const auto& p : action_) {
    if (p.degree() != vertex_count)
      throw Error(ErrorKind::Validation, "action permutation has wrong degree");
    for (const auto& f : facets_)
      if (!is_face(image(f, p)))
        throw Error(ErrorKind::Validation, "action does not preserve the complex");
  }
}

GComplex GComplex::point(std::size_t generator_count) {
  return GComplex(1, {{0}}, std::vector<Perm>(generator_count, Perm::identity(1)));
}

bool GComplex::is_face(const Simplex& s) const {
  return std::any_of(facets_.begin(), facets_.end(),
                     [&](const Simplex& f) { return subset(s, f); });
}

std::vector<Simplex> GComplex::faces() const {
  std::set<Simplex> all;
  for (const auto& f : facets_) {
    const std::size_t k = f.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
      Simplex s;
      for (std::size_t i = 0; i < k; ++i)
        if (mask >> i & 1) s.push_back(f[i]);
      all.insert(std::move(s));
    }
  }
  return {all.begin(), all.end()};
}

GComplex GComplex::barycentric_subdivision() const {
  const std::vector<Simplex> fs = faces();
  std::map<Simplex, Vertex> index;
  for (Vertex i = 0; i < fs.size(); ++i) index.emplace(fs[i], i);

  std::vector<Simplex> chains;
  for (const auto& f : facets_) {
    Simplex order = f;
    do {
      Simplex chain, prefix;
      for (Vertex v : order) {
        prefix.push_back(v);
        Simplex sorted = prefix;
        std::sort(sorted.begin(), sorted.end());
        chain.push_back(index.at(sorted));
      }
      std::sort(chain.begin(), chain.end());
      chains.push_back(std::move(chain));
    } while (std::next_permutation(order.begin(), order.end()));
  }

  std::vector<Perm> action;
  for (const auto& p : action_) {
    std::vector<Point> imgs(fs.size());
    for (std::size_t i = 0; i < fs.size(); ++i) imgs[i] = static_cast<Point>(index.at(image(fs[i], p)));
    action.emplace_back(std::move(imgs));
  }
  return GComplex(fs.size(), std::move(chains), std::move(action));
}

GSpace::GSpace(FiniteGroup group, GComplex complex)
    : group_(std::move(group)), complex_(std::move(complex)) {
  const auto& gens = group_.generators();
  const auto& act = complex_.generator_action();
  if (gens.size() != act.size())
    throw Error(ErrorKind::Validation, "complex action must list one permutation per generator");

  // Close the diagonal generators (g, rho(g)) on the disjoint union of the
  // group's points and the vertices; the action is a homomorphism iff the
  // closure projects bijectively onto G.
  const std::size_t n = group_.degree(), m = complex_.vertex_count();
  auto join = [&](const Perm& g, const Perm& r) {
    std::vector<Point> imgs(n + m);
    for (std::size_t i = 0; i < n; ++i) imgs[i] = g[i];
    for (std::size_t i = 0; i < m; ++i) imgs[n + i] = static_cast<Point>(n + r[i]);
    return Perm(std::move(imgs));
  };
  std::vector<Perm> joined;
  for (std::size_t k = 0; k < gens.size(); ++k) joined.push_back(join(gens[k], act[k]));
  FiniteGroup diagonal;
  try {
    diagonal = FiniteGroup::generate(n + m, std::move(joined), group_.order());
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::CapExceeded) throw;
    throw Error(ErrorKind::Validation, "complex action is not a group homomorphism");
  }

  vertex_action_.resize(group_.order());
  for (const auto& d : diagonal.elements()) {
    std::vector<Point> g(d.images().begin(), d.images().begin() + static_cast<long>(n));
    std::vector<Point> r(m);
    for (std::size_t i = 0; i < m; ++i) r[i] = static_cast<Point>(d[n + i] - n);
    vertex_action_[*group_.index_of(Perm(std::move(g)))] = Perm(std::move(r));
  }
}

const Perm& GSpace::vertex_action(const Perm& g) const {
  auto idx = group_.index_of(g);
  if (!idx) throw Error(ErrorKind::Validation, "element is not in the acting group");
  return vertex_action_[*idx];
}

Subcomplex whole(const GComplex& x) {
  Subcomplex s;
  s.vertices.resize(x.vertex_count());
  std::iota(s.vertices.begin(), s.vertices.end(), Vertex{0});
  s.facets = x.facets();
  return s;
}

Subcomplex fixed_subcomplex(const GSpace& space, const ElabSubgroup& a) {
  const GComplex& x = space.complex();
  std::vector<Perm> acts;
  for (const auto& b : a.basis()) acts.push_back(space.vertex_action(b));
  Subcomplex s;
  for (Vertex v = 0; v < x.vertex_count(); ++v)
    if (std::all_of(acts.begin(), acts.end(), [&](const Perm& p) { return p[v] == v; }))
      s.vertices.push_back(v);
  std::vector<Simplex> pieces;
  for (const auto& f : x.facets()) {
    Simplex cut;
    std::set_intersection(f.begin(), f.end(), s.vertices.begin(), s.vertices.end(),
                          std::back_inserter(cut));
    if (!cut.empty()) pieces.push_back(std::move(cut));
  }
  s.facets = maximal(std::move(pieces));
  return s;
}

std::vector<Component> components(const Subcomplex& x) {
  std::map<Vertex, Vertex> parent;
  for (Vertex v : x.vertices) parent[v] = v;
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& f : x.facets)
    for (std::size_t i = 1; i < f.size(); ++i) {
      Vertex a = find(f[0]), b = find(f[i]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::map<Vertex, Component> groups;
  for (Vertex v : x.vertices) groups[find(v)].vertices.push_back(v);
  std::vector<Component> out;
  for (auto& [root, c] : groups) out.push_back(std::move(c));
  std::sort(out.begin(), out.end(),
            [](const Component& a, const Component& b) { return a.id() < b.id(); });
  return out;
}

Component translate(const GSpace& space, const Component& c, const Perm& g) {
  return Component{image(c.vertices, space.vertex_action(g))};
}

std::vector<GroupHom> pair_transporter(const GSpace& space, const PairObject& from,
                                       const PairObject& to) {
  std::set<GroupHom> homs;
  for (const auto& g : space.group().elements()) {
    bool conj = std::all_of(from.subgroup.basis().begin(), from.subgroup.basis().end(),
                            [&](const Perm& a) { return to.subgroup.contains(conjugate(a, g)); });
    if (!conj) continue;
    if (!subset(to.component.vertices, translate(space, from.component, g).vertices)) continue;
    homs.insert(conjugation_hom(from.subgroup, to.subgroup, g));
  }
  return {homs.begin(), homs.end()};
}

}  // namespace qstrat
