#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "ghw/groebner.hpp"
#include "ghw/linalg.hpp"

namespace ghw {

// A point set with a monomial order and the derived algebraic data: reduced
// Groebner basis of the vanishing ideal, its initial ideal, the Hilbert
// function through the regularity, and the degree (= |X|).
struct PointAlgebra {
  PointSet X;
  MonomialOrder order;
  GroebnerBasis gb;
  MonomialIdeal in;
  std::vector<long> hf;  // hf[d] for d = 0..regularity; |X| afterwards
  int regularity = 0;
  long degree = 0;
};

PointAlgebra make_point_algebra(PointSet X);  // family default order
PointAlgebra make_point_algebra(PointSet X, const MonomialOrder& ord);

long hilbert_at(const PointAlgebra& A, int d);

// degree-d standard monomials, descending under A.order (code basis order)
std::vector<Monomial> degree_basis(const PointAlgebra& A, int d);

// Evaluation code spanned by the degree-d standard monomials on X.
struct EvalCode {
  FieldPtr field;
  int d = 0;
  std::vector<Monomial> basis;  // descending under the algebra order
  GfMatrix G;                   // G.at(i, j) = basis[i] evaluated at point j

  int dimension() const { return G.rows(); }
  int length() const { return G.cols(); }
};

// Builds C_X(d), checking that rank G equals the dimension and that no
// column is zero (every point is seen by some degree-d form).
EvalCode build_code(const PointAlgebra& A, int d);

// number of r-dimensional subspaces of F_q^H; saturates at 10^18
unsigned long long subspace_count(int H, int r, long q);

// weight of the subcode spanned by rows * G (rows hold coefficient codes)
long support_weight(const EvalCode& code,
                    const std::vector<std::vector<uint32_t>>& rows);

// r-th generalized Hamming weight by exhaustive enumeration of the
// r-dimensional subcodes (canonical RREF coefficient matrices; pivot sets
// ascending, free coefficients in element-code order). Returns nothing when
// the subspace count exceeds the budget.
std::optional<long> ghw(const EvalCode& code, int r, unsigned long long budget);

// Visit every r-dimensional subspace of F_q^H as its canonical RREF
// coefficient matrix, in the same deterministic order ghw uses.
void enumerate_subspace_rref(
    const FieldPtr& field, int H, int r,
    const std::function<void(const std::vector<std::vector<uint32_t>>&)>& visit);

}  // namespace ghw
