#pragma once

// Dense linear algebra over a FieldCtx, on raw element codes.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "modinv/ffield.hpp"

namespace modinv {

class FqMatrix {
 public:
  using Code = FieldCtx::Code;

  FqMatrix(FieldPtr k, std::size_t rows, std::size_t cols)
      : k_(std::move(k)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  const FieldPtr& field() const { return k_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Code& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  Code at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  void append_row(std::span<const Code> row);

 private:
  FieldPtr k_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Code> a_;
};

/// In-place reduced row echelon form; pivots are taken left to right.
/// Returns the pivot column of each nonzero row.
std::vector<std::size_t> rref(FqMatrix& m);

std::size_t rank(FqMatrix m);

/// Basis of {x : m x = 0}; one vector per free column, with a 1 in that
/// column and zeros in the other free columns.
std::vector<std::vector<FqMatrix::Code>> nullspace(const FqMatrix& m);

/// A solution of m x = rhs with every free variable set to zero, or nullopt.
std::optional<std::vector<FqMatrix::Code>> solve(const FqMatrix& m,
                                                 std::span<const FqMatrix::Code> rhs);

FqMatrix::Code determinant(FqMatrix m);

std::optional<FqMatrix> inverse(const FqMatrix& m);

}  // namespace modinv
