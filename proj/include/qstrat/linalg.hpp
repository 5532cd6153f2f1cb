#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "qstrat/field.hpp"

namespace qstrat {

using FpVector = std::vector<Coeff>;

/// Dense row-major matrix over F_p.
class FpMatrix {
 public:
  FpMatrix() : field_(2) {}
  FpMatrix(PrimeField field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static FpMatrix identity(PrimeField field, std::size_t n);
  static FpMatrix from_rows(PrimeField field, std::size_t cols,
                            const std::vector<FpVector>& rows);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Coeff operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Coeff& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const Coeff> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  FpMatrix operator*(const FpMatrix& rhs) const;
  FpVector operator*(std::span<const Coeff> v) const;
  FpMatrix transpose() const;
  bool is_identity() const;

  bool operator==(const FpMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  std::strong_ordering operator<=>(const FpMatrix& o) const {
    if (auto c = rows_ <=> o.rows_; c != 0) return c;
    if (auto c = cols_ <=> o.cols_; c != 0) return c;
    return data_ <=> o.data_;
  }

 private:
  PrimeField field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Coeff> data_;
};

struct RowEchelon {
  FpMatrix reduced;                 // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

RowEchelon row_reduce(FpMatrix m);
std::size_t rank(const FpMatrix& m);

/// Basis of {v : m v = 0}. Each basis vector has a 1 at its free column and 0
/// at every other free column, so coordinates of a kernel element are read
/// off at the free columns.
struct NullSpace {
  std::vector<FpVector> basis;
  std::vector<std::size_t> free_columns;
};
NullSpace null_space(const FpMatrix& m);

/// Coordinates of v in the span of `basis` (rows), or nullopt.
std::optional<FpVector> span_coordinates(const PrimeField& field,
                                         const std::vector<FpVector>& basis,
                                         std::span<const Coeff> v);

}  // namespace qstrat
