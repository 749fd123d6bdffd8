#pragma once

#include <cstdint>
#include <vector>

#include "ghw/gf.hpp"

namespace ghw {

// Dense matrix over GF(q); entries stored as element codes, row-major.
class GfMatrix {
 public:
  GfMatrix() = default;
  GfMatrix(FieldPtr field, int rows, int cols)
      : field_(std::move(field)), rows_(rows), cols_(cols),
        a_(static_cast<size_t>(rows) * cols, 0) {}

  const FieldPtr& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  uint32_t at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
  void set(int r, int c, uint32_t v) { a_[static_cast<size_t>(r) * cols_ + c] = v; }
  const uint32_t* row(int r) const { return a_.data() + static_cast<size_t>(r) * cols_; }
  uint32_t* row(int r) { return a_.data() + static_cast<size_t>(r) * cols_; }

  // Gauss-Jordan to reduced row echelon form; returns the rank and fills
  // pivot columns if requested.
  int rref_in_place(std::vector<int>* pivot_cols = nullptr);
  int rank() const;

  // basis of { x : A x = 0 }, one vector per row of the result
  std::vector<std::vector<uint32_t>> right_kernel() const;

  GfMatrix transposed() const;
  friend GfMatrix operator*(const GfMatrix& a, const GfMatrix& b);

 private:
  FieldPtr field_;
  int rows_ = 0, cols_ = 0;
  std::vector<uint32_t> a_;
};

}  // namespace ghw
