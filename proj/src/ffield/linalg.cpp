#include "modinv/linalg.hpp"

#include <stdexcept>

namespace modinv {

void FqMatrix::append_row(std::span<const Code> row) {
  if (row.size() != cols_) throw std::invalid_argument("FqMatrix::append_row: width mismatch");
  a_.insert(a_.end(), row.begin(), row.end());
  ++rows_;
}

std::vector<std::size_t> rref(FqMatrix& m) {
  const FieldCtx& k = *m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t sel = r;
    while (sel < m.rows() && m.at(sel, c) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(r, j));
    const auto inv = k.inv(m.at(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) = k.mul(m.at(r, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      const auto f = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (m.at(r, j) != 0) m.at(i, j) = k.sub(m.at(i, j), k.mul(f, m.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(FqMatrix m) { return rref(m).size(); }

std::vector<std::vector<FqMatrix::Code>> nullspace(const FqMatrix& m) {
  FqMatrix e = m;
  const auto pivots = rref(e);
  const FieldCtx& k = *m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<FqMatrix::Code>> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<FqMatrix::Code> v(m.cols(), 0);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = k.neg(e.at(r, f));
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<std::vector<FqMatrix::Code>> solve(const FqMatrix& m,
                                                 std::span<const FqMatrix::Code> rhs) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("solve: rhs length mismatch");
  FqMatrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = rhs[i];
  }
  const auto pivots = rref(aug);
  std::vector<FqMatrix::Code> x(m.cols(), 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == m.cols()) return std::nullopt;
    x[pivots[r]] = aug.at(r, m.cols());
  }
  return x;
}

FqMatrix::Code determinant(FqMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  const FieldCtx& k = *m.field();
  const std::size_t n = m.rows();
  FqMatrix::Code det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && m.at(sel, c) == 0) ++sel;
    if (sel == n) return 0;
    if (sel != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(sel, j), m.at(c, j));
      det = k.neg(det);
    }
    det = k.mul(det, m.at(c, c));
    const auto inv = k.inv(m.at(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m.at(i, c) == 0) continue;
      const auto f = k.mul(m.at(i, c), inv);
      for (std::size_t j = c; j < n; ++j) m.at(i, j) = k.sub(m.at(i, j), k.mul(f, m.at(c, j)));
    }
  }
  return det;
}

std::optional<FqMatrix> inverse(const FqMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return FqMatrix(m.field(), 0, 0);
  FqMatrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  FqMatrix out(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
  return out;
}

}  // namespace modinv
