#include "ghw/linalg.hpp"

#include <stdexcept>

namespace ghw {

int GfMatrix::rref_in_place(std::vector<int>* pivot_cols) {
  const Field& K = *field_;
  if (pivot_cols) pivot_cols->clear();
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int pivot = -1;
    for (int i = r; i < rows_; ++i)
      if (at(i, c)) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = c; j < cols_; ++j) {
        uint32_t t = at(r, j);
        set(r, j, at(pivot, j));
        set(pivot, j, t);
      }
    uint32_t inv = K.invc(at(r, c));
    for (int j = c; j < cols_; ++j) set(r, j, K.mulc(at(r, j), inv));
    for (int i = 0; i < rows_; ++i) {
      if (i == r) continue;
      uint32_t f = at(i, c);
      if (!f) continue;
      for (int j = c; j < cols_; ++j)
        set(i, j, K.subc(at(i, j), K.mulc(f, at(r, j))));
    }
    if (pivot_cols) pivot_cols->push_back(c);
    ++r;
  }
  return r;
}

int GfMatrix::rank() const {
  GfMatrix copy = *this;
  return copy.rref_in_place();
}

std::vector<std::vector<uint32_t>> GfMatrix::right_kernel() const {
  GfMatrix m = *this;
  std::vector<int> pivots;
  int rank = m.rref_in_place(&pivots);
  const Field& K = *field_;
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<uint32_t>> basis;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<uint32_t> v(cols_, 0);
    v[free] = 1;
    for (int i = 0; i < rank; ++i)
      v[pivots[i]] = K.negc(m.at(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

GfMatrix GfMatrix::transposed() const {
  GfMatrix t(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
  return t;
}

GfMatrix operator*(const GfMatrix& a, const GfMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  if (a.field_->id() != b.field_->id()) throw std::invalid_argument("mixed-field operands");
  const Field& K = *a.field_;
  GfMatrix r(a.field_, a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      uint32_t f = a.at(i, k);
      if (!f) continue;
      for (int j = 0; j < b.cols_; ++j)
        r.set(i, j, K.addc(r.at(i, j), K.mulc(f, b.at(k, j))));
    }
  return r;
}

}  // namespace ghw
