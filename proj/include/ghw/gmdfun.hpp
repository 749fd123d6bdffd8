#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ghw/codes.hpp"

namespace ghw {

// Generalized minimum distance function of the vanishing ideal: |X| when no
// r independent classes with a common zero exist, otherwise the r-th
// generalized Hamming weight of the degree-d code. A monomial-colon
// pre-filter settles the empty case without enumeration; otherwise the
// budgeted subspace search runs and may return nothing.
std::optional<long> delta_fn(const PointAlgebra& A, int d, int r,
                             unsigned long long budget);

// Same value computed through the colon-ideal route: minimize the number of
// points missed by the common zero set of r independent classes, evaluating
// basis monomials directly instead of reusing the code matrix.
std::optional<long> vasconcelos_fn(const PointAlgebra& A, int d, int r,
                                   unsigned long long budget);

// Footprint function of a monomial ideal L with dim(S/L) <= 1: degS minus
// the largest degree of S/(L, M) over r-subsets M of the degree-d standard
// monomials with (L : (M)) != L; degS when no subset qualifies.
long footprint_fn(const MonomialIdeal& L, long degS, int d, int r);
long footprint_fn(const PointAlgebra& A, int d, int r);

enum class CellKind { Exact, Infinite, Interval };

struct MatrixCell {
  CellKind kind = CellKind::Exact;
  long value = 0;    // Exact
  long lo = 0, hi = 0;  // Interval
};

enum class MatrixKind { Delta, Footprint, Vasconcelos };

// reg x deg table of one of the three functions; rows d = 1..reg, columns
// r = 1..deg. Cells with r > H(d) are Infinite (semantically |X|).
struct FnMatrix {
  MatrixKind kind = MatrixKind::Delta;
  int rows = 0, cols = 0;
  std::vector<std::vector<MatrixCell>> cells;  // cells[d-1][r-1]

  const MatrixCell& at(int d, int r) const { return cells[d - 1][r - 1]; }
};

FnMatrix footprint_matrix(const PointAlgebra& A);

// Delta matrix. Cells whose subspace count exceeds the budget fall back to
// the interval [max(footprint, r, previous cell + 1), dimension-deficit
// upper bound]; a collapsed interval is stored as Exact.
FnMatrix weight_matrix(const PointAlgebra& A, unsigned long long budget);

FnMatrix vasconcelos_matrix(const PointAlgebra& A, unsigned long long budget);

enum class Format { Text, Csv, Json };

Format parse_format(const std::string& name);
std::string matrix_kind_name(MatrixKind kind);

// Text: aligned table, infinity sign, [lo..hi] intervals. CSV: "inf" and
// "lo..hi". JSON: {"value": n}, {"value": null, "infinite": true}, or
// {"value": null, "lo": a, "hi": b} per cell.
std::string render_matrix(const FnMatrix& M, Format fmt);

}  // namespace ghw
