#include "qstrat/linalg.hpp"

#include <cassert>
#include <stdexcept>

namespace qstrat {

FpMatrix FpMatrix::identity(PrimeField field, std::size_t n) {
  FpMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

FpMatrix FpMatrix::from_rows(PrimeField field, std::size_t cols,
                             const std::vector<FpVector>& rows) {
  FpMatrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c] % field.prime();
  }
  return m;
}

FpMatrix FpMatrix::operator*(const FpMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix shape mismatch");
  FpMatrix out(field_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      Coeff a = (*this)(i, k);
      if (!a) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        out(i, j) = field_.add(out(i, j), field_.mul(a, rhs(k, j)));
    }
  return out;
}

FpVector FpMatrix::operator*(std::span<const Coeff> v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
  FpVector out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      out[i] = field_.add(out[i], field_.mul((*this)(i, k), v[k]));
  return out;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

bool FpMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1u : 0u)) return false;
  return true;
}

RowEchelon row_reduce(FpMatrix m) {
  const PrimeField f = m.field();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
    Coeff inv = f.inv(m(r, c));
    for (std::size_t j = c; j < cols; ++j) m(r, j) = f.mul(m(r, j), inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      Coeff factor = m(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (m(r, j)) m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  FpMatrix reduced(f, r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) reduced(i, j) = m(i, j);
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const FpMatrix& m) { return row_reduce(m).pivots.size(); }

NullSpace null_space(const FpMatrix& m) {
  const PrimeField f = m.field();
  RowEchelon ech = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ech.pivots) is_pivot[c] = true;
  NullSpace ns;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    FpVector v(m.cols(), 0);
    v[c] = 1;
    for (std::size_t i = 0; i < ech.pivots.size(); ++i)
      v[ech.pivots[i]] = f.neg(ech.reduced(i, c));
    ns.basis.push_back(std::move(v));
    ns.free_columns.push_back(c);
  }
  return ns;
}

std::optional<FpVector> span_coordinates(const PrimeField& field,
                                         const std::vector<FpVector>& basis,
                                         std::span<const Coeff> v) {
  // Solve sum_k c_k basis[k] = v via the augmented system [B^T | v].
  const std::size_t n = v.size(), k = basis.size();
  FpMatrix aug(field, n, k + 1);
  for (std::size_t j = 0; j < k; ++j) {
    if (basis[j].size() != n) throw std::invalid_argument("span basis length mismatch");
    for (std::size_t i = 0; i < n; ++i) aug(i, j) = basis[j][i];
  }
  for (std::size_t i = 0; i < n; ++i) aug(i, k) = v[i] % field.prime();
  RowEchelon ech = row_reduce(std::move(aug));
  if (!ech.pivots.empty() && ech.pivots.back() == k) return std::nullopt;
  FpVector coords(k, 0);
  for (std::size_t i = 0; i < ech.pivots.size(); ++i) coords[ech.pivots[i]] = ech.reduced(i, k);
  return coords;
}

}  // namespace qstrat
