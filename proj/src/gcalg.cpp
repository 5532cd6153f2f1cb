#include "qstrat/gcalg.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>

#include "qstrat/errors.hpp"

namespace qstrat {

GradedAlgebra GradedAlgebra::polynomial(std::uint32_t prime, std::vector<int> degrees,
                                        std::vector<std::string> names) {
  GradedAlgebra alg(prime);
  for (int d : degrees)
    if (d <= 0) throw Error(ErrorKind::Validation, "generator degrees must be positive");
  if (prime != 2)
    for (int d : degrees)
      if (d % 2) throw Error(ErrorKind::Validation, "odd polynomial generator in odd characteristic");
  if (!names.empty() && names.size() != degrees.size())
    throw Error(ErrorKind::Validation, "generator name count mismatch");
  if (names.empty())
    for (std::size_t i = 0; i < degrees.size(); ++i) names.push_back("g" + std::to_string(i + 1));
  alg.poly_degrees_ = std::move(degrees);
  alg.poly_names_ = std::move(names);
  alg.rank_ = alg.poly_degrees_.size();
  return alg;
}

GradedAlgebra GradedAlgebra::elementary_abelian(std::uint32_t prime, std::size_t rank,
                                                bool reduced) {
  if (rank > 16) throw Error(ErrorKind::Validation, "rank too large");
  GradedAlgebra alg(prime);
  alg.shape_ = AlgebraShape::ElementaryAbelian;
  alg.rank_ = rank;
  alg.reduced_ = reduced;
  for (std::size_t i = 0; i < rank; ++i) {
    const std::string idx = std::to_string(i + 1);
    if (prime == 2) {
      alg.poly_degrees_.push_back(1);
      alg.poly_names_.push_back("x" + idx);
    } else {
      if (!reduced) {
        alg.ext_degrees_.push_back(1);
        alg.ext_names_.push_back("x" + idx);
      }
      alg.poly_degrees_.push_back(2);
      alg.poly_names_.push_back("y" + idx);
    }
  }
  return alg;
}

GradedAlgebra GradedAlgebra::with_monomial_relations(std::vector<std::uint32_t> forbidden) const {
  if (poly_count() > 32) throw Error(ErrorKind::Validation, "too many generators for relations");
  GradedAlgebra out = *this;
  out.forbidden_ = std::move(forbidden);
  std::sort(out.forbidden_.begin(), out.forbidden_.end());
  return out;
}

int GradedAlgebra::degree(const Monomial& m) const {
  int d = 0;
  for (std::size_t i = 0; i < ext_degrees_.size(); ++i)
    if (m.ext >> i & 1u) d += ext_degrees_[i];
  for (std::size_t i = 0; i < m.exps.size(); ++i) d += m.exps[i] * poly_degrees_[i];
  return d;
}

std::optional<int> GradedAlgebra::degree(const AlgElement& a) const {
  std::optional<int> d;
  for (const auto& [m, c] : a.terms) {
    int dm = degree(m);
    if (d && *d != dm) throw Error(ErrorKind::DegreeMismatch, "element is not homogeneous");
    d = dm;
  }
  return d;
}

bool GradedAlgebra::is_zero_monomial(const Monomial& m) const {
  if (forbidden_.empty()) return false;
  std::uint32_t support = 0;
  for (std::size_t i = 0; i < m.exps.size(); ++i)
    if (m.exps[i]) support |= 1u << i;
  return std::any_of(forbidden_.begin(), forbidden_.end(),
                     [&](std::uint32_t f) { return (support & f) == f; });
}

std::vector<Monomial> GradedAlgebra::basis(int d) const {
  std::vector<Monomial> out;
  if (d < 0) return out;
  const std::size_t e = ext_count(), n = poly_count();
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << e); ++mask) {
    int rem = d;
    for (std::size_t i = 0; i < e; ++i)
      if (mask >> i & 1u) rem -= ext_degrees_[i];
    if (rem < 0) continue;
    Monomial m{mask, std::vector<std::uint16_t>(n, 0)};
    std::function<void(std::size_t, int)> fill = [&](std::size_t i, int left) {
      if (i == n) {
        if (left == 0 && !is_zero_monomial(m)) out.push_back(m);
        return;
      }
      for (int k = 0; k * poly_degrees_[i] <= left; ++k) {
        m.exps[i] = static_cast<std::uint16_t>(k);
        fill(i + 1, left - k * poly_degrees_[i]);
      }
      m.exps[i] = 0;
    };
    fill(0, rem);
  }
  std::sort(out.begin(), out.end());
  return out;
}

AlgElement GradedAlgebra::one() const {
  return monomial(Monomial{0, std::vector<std::uint16_t>(poly_count(), 0)});
}

AlgElement GradedAlgebra::ext_generator(std::size_t i) const {
  if (i >= ext_count()) throw std::out_of_range("exterior generator index");
  return monomial(Monomial{1u << i, std::vector<std::uint16_t>(poly_count(), 0)});
}

AlgElement GradedAlgebra::poly_generator(std::size_t i) const {
  if (i >= poly_count()) throw std::out_of_range("polynomial generator index");
  Monomial m{0, std::vector<std::uint16_t>(poly_count(), 0)};
  m.exps[i] = 1;
  return monomial(std::move(m));
}

AlgElement GradedAlgebra::monomial(Monomial m, Coeff c) const {
  AlgElement a;
  c %= prime();
  if (c && !is_zero_monomial(m)) a.terms.emplace(std::move(m), c);
  return a;
}

AlgElement GradedAlgebra::add(const AlgElement& a, const AlgElement& b) const {
  AlgElement out = a;
  for (const auto& [m, c] : b.terms) {
    auto [it, inserted] = out.terms.emplace(m, c);
    if (!inserted) {
      it->second = field_.add(it->second, c);
      if (it->second == 0) out.terms.erase(it);
    }
  }
  return out;
}

AlgElement GradedAlgebra::sub(const AlgElement& a, const AlgElement& b) const {
  return add(a, scale(field_.neg(1), b));
}

AlgElement GradedAlgebra::scale(Coeff c, const AlgElement& a) const {
  c %= prime();
  AlgElement out;
  if (c == 0) return out;
  for (const auto& [m, v] : a.terms) out.terms.emplace(m, field_.mul(c, v));
  return out;
}

std::optional<std::pair<bool, Monomial>> multiply_monomials(const GradedAlgebra& alg,
                                                            const Monomial& a,
                                                            const Monomial& b) {
  if (a.ext & b.ext) return std::nullopt;
  // Moving each exterior generator j of b left past the generators i > j of a.
  unsigned swaps = 0;
  for (std::uint32_t rest = b.ext; rest; rest &= rest - 1) {
    unsigned j = static_cast<unsigned>(std::countr_zero(rest));
    std::uint32_t above = j + 1 >= 32 ? 0u : (~std::uint32_t{0} << (j + 1));
    swaps += static_cast<unsigned>(std::popcount(a.ext & above));
  }
  Monomial m{a.ext | b.ext, a.exps};
  for (std::size_t i = 0; i < m.exps.size(); ++i) m.exps[i] = static_cast<std::uint16_t>(m.exps[i] + b.exps[i]);
  if (alg.is_zero_monomial(m)) return std::nullopt;
  return std::make_pair((swaps & 1u) != 0, std::move(m));
}

AlgElement GradedAlgebra::mul(const AlgElement& a, const AlgElement& b) const {
  AlgElement out;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) {
      auto prod = multiply_monomials(*this, ma, mb);
      if (!prod) continue;
      Coeff c = field_.mul(ca, cb);
      if (prod->first) c = field_.neg(c);
      auto [it, inserted] = out.terms.emplace(std::move(prod->second), c);
      if (!inserted) {
        it->second = field_.add(it->second, c);
        if (it->second == 0) out.terms.erase(it);
      }
    }
  return out;
}

AlgElement GradedAlgebra::pow(const AlgElement& a, std::size_t n) const {
  AlgElement result = one();
  AlgElement base = a;
  while (n) {
    if (n & 1) result = mul(result, base);
    n >>= 1;
    if (n) base = mul(base, base);
  }
  return result;
}

AlgElement GradedAlgebra::bockstein(const AlgElement& a) const {
  if (shape_ != AlgebraShape::ElementaryAbelian)
    throw Error(ErrorKind::Validation, "Bockstein is defined on H*(BA) shapes only");
  AlgElement out;
  for (const auto& [m, c] : a.terms) {
    if (prime() == 2) {
      for (std::size_t i = 0; i < m.exps.size(); ++i) {
        if (m.exps[i] % 2 == 0) continue;
        Monomial t = m;
        ++t.exps[i];
        out = add(out, monomial(std::move(t), c));
      }
      continue;
    }
    if (reduced_) continue;
    unsigned position = 0;
    for (std::size_t i = 0; i < ext_count(); ++i) {
      if (!(m.ext >> i & 1u)) continue;
      Monomial t = m;
      t.ext &= ~(1u << i);
      ++t.exps[i];
      out = add(out, monomial(std::move(t), position % 2 ? field_.neg(c) : c));
      ++position;
    }
  }
  return out;
}

FpVector GradedAlgebra::to_vector(const AlgElement& a, int d) const {
  return to_vector(a, basis(d));
}

FpVector GradedAlgebra::to_vector(const AlgElement& a, const std::vector<Monomial>& b) const {
  FpVector v(b.size(), 0);
  for (const auto& [m, c] : a.terms) {
    auto it = std::lower_bound(b.begin(), b.end(), m);
    if (it == b.end() || *it != m)
      throw Error(ErrorKind::DegreeMismatch, "term outside the given degree");
    v[static_cast<std::size_t>(it - b.begin())] = c;
  }
  return v;
}

AlgElement GradedAlgebra::from_vector(int d, std::span<const Coeff> v) const {
  const auto b = basis(d);
  if (v.size() != b.size()) throw Error(ErrorKind::DegreeMismatch, "vector length mismatch");
  AlgElement a;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (v[i] % prime()) a.terms.emplace(b[i], v[i] % prime());
  return a;
}

std::string GradedAlgebra::generator_name(bool exterior, std::size_t i) const {
  return exterior ? ext_names_.at(i) : poly_names_.at(i);
}

std::string GradedAlgebra::monomial_string(const Monomial& m) const {
  std::string s;
  auto append = [&](const std::string& part) {
    if (!s.empty()) s += '*';
    s += part;
  };
  for (std::size_t i = 0; i < ext_count(); ++i)
    if (m.ext >> i & 1u) append(ext_names_[i]);
  for (std::size_t i = 0; i < m.exps.size(); ++i) {
    if (!m.exps[i]) continue;
    append(m.exps[i] == 1 ? poly_names_[i] : poly_names_[i] + "^" + std::to_string(m.exps[i]));
  }
  return s.empty() ? "1" : s;
}

std::string GradedAlgebra::to_string(const AlgElement& a) const {
  if (a.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : a.terms) {
    if (!s.empty()) s += " + ";
    std::string ms = monomial_string(m);
    if (c == 1) s += ms;
    else if (ms == "1") s += std::to_string(c);
    else s += std::to_string(c) + "*" + ms;
  }
  return s;
}

AlgebraMorphism::AlgebraMorphism(GradedAlgebra source, GradedAlgebra target,
                                 std::vector<AlgElement> ext_images,
                                 std::vector<AlgElement> poly_images)
    : source_(std::move(source)),
      target_(std::move(target)),
      ext_images_(std::move(ext_images)),
      poly_images_(std::move(poly_images)) {
  if (source_.prime() != target_.prime())
    throw Error(ErrorKind::Validation, "morphism between different characteristics");
  if (ext_images_.size() != source_.ext_count() || poly_images_.size() != source_.poly_count())
    throw Error(ErrorKind::Validation, "morphism needs one image per generator");
  for (std::size_t i = 0; i < ext_images_.size(); ++i) {
    auto d = target_.degree(ext_images_[i]);
    if (d && *d != source_.ext_degree(i))
      throw Error(ErrorKind::DegreeMismatch, "morphism does not preserve degrees");
  }
  for (std::size_t i = 0; i < poly_images_.size(); ++i) {
    auto d = target_.degree(poly_images_[i]);
    if (d && *d != source_.poly_degree(i))
      throw Error(ErrorKind::DegreeMismatch, "morphism does not preserve degrees");
  }
}

AlgebraMorphism AlgebraMorphism::identity(const GradedAlgebra& alg) {
  std::vector<AlgElement> e, p;
  for (std::size_t i = 0; i < alg.ext_count(); ++i) e.push_back(alg.ext_generator(i));
  for (std::size_t i = 0; i < alg.poly_count(); ++i) p.push_back(alg.poly_generator(i));
  return AlgebraMorphism(alg, alg, std::move(e), std::move(p));
}

AlgebraMorphism AlgebraMorphism::linear_substitution(const GradedAlgebra& source,
                                                     const GradedAlgebra& target,
                                                     const FpMatrix& m) {
  auto family = [&](std::size_t count, std::size_t target_count, bool exterior) {
    std::vector<AlgElement> images;
    if (count == 0) return images;
    if (m.rows() != count || m.cols() != target_count)
      throw Error(ErrorKind::Validation, "substitution matrix has the wrong shape");
    for (std::size_t k = 0; k < count; ++k) {
      AlgElement img;
      for (std::size_t j = 0; j < target_count; ++j) {
        AlgElement g = exterior ? target.ext_generator(j) : target.poly_generator(j);
        img = target.add(img, target.scale(m(k, j), g));
      }
      images.push_back(std::move(img));
    }
    return images;
  };
  return AlgebraMorphism(source, target, family(source.ext_count(), target.ext_count(), true),
                         family(source.poly_count(), target.poly_count(), false));
}

AlgElement AlgebraMorphism::apply(const Monomial& m) const {
  AlgElement result = target_.one();
  for (std::size_t i = 0; i < source_.ext_count(); ++i)
    if (m.ext >> i & 1u) result = target_.mul(result, ext_images_[i]);
  for (std::size_t i = 0; i < m.exps.size(); ++i)
    for (std::uint16_t k = 0; k < m.exps[i]; ++k) {
      result = target_.mul(result, poly_images_[i]);
      if (result.is_zero()) return result;
    }
  return result;
}

AlgElement AlgebraMorphism::apply(const AlgElement& a) const {
  AlgElement out;
  for (const auto& [m, c] : a.terms) out = target_.add(out, target_.scale(c, apply(m)));
  return out;
}

AlgebraMorphism AlgebraMorphism::after(const AlgebraMorphism& inner) const {
  if (!(inner.target_ == source_)) throw Error(ErrorKind::Validation, "morphisms do not compose");
  std::vector<AlgElement> e, p;
  for (const auto& img : inner.ext_images_) e.push_back(apply(img));
  for (const auto& img : inner.poly_images_) p.push_back(apply(img));
  return AlgebraMorphism(inner.source_, target_, std::move(e), std::move(p));
}

GradedAlgebra cohomology_of_BA(const ElabSubgroup& a, bool reduced) {
  return GradedAlgebra::elementary_abelian(a.prime(), a.rank(), reduced);
}

AlgebraMorphism restriction_map(std::uint32_t prime, const GroupHom& u, bool reduced) {
  auto source = GradedAlgebra::elementary_abelian(prime, u.target_rank(), reduced);
  auto target = GradedAlgebra::elementary_abelian(prime, u.source_rank(), reduced);
  return AlgebraMorphism::linear_substitution(source, target, u.matrix);
}

std::vector<AlgElement> invariants(const GradedAlgebra& alg, const std::vector<FpMatrix>& action,
                                   int degree) {
  const auto b = alg.basis(degree);
  const PrimeField& f = alg.field();
  std::vector<FpVector> rows;
  for (const auto& g : action) {
    auto theta = AlgebraMorphism::linear_substitution(alg, alg, g);
    FpMatrix block(f, b.size(), b.size());
    for (std::size_t j = 0; j < b.size(); ++j) {
      FpVector img = alg.to_vector(theta.apply(b[j]), b);
      img[j] = f.sub(img[j], 1);
      for (std::size_t i = 0; i < b.size(); ++i) block(i, j) = img[i];
    }
    for (std::size_t i = 0; i < b.size(); ++i) rows.emplace_back(block.row(i).begin(), block.row(i).end());
  }
  FpMatrix system = FpMatrix::from_rows(f, b.size(), rows);
  std::vector<AlgElement> out;
  for (const auto& v : null_space(system).basis) out.push_back(alg.from_vector(degree, v));
  return out;
}

}  // namespace qstrat
