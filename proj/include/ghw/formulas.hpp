#pragma once

#include <string>
#include <vector>

#include "ghw/poly.hpp"

namespace ghw {

// pi(a,b) = prod(a) + prod(b) - prod(min(a_i, b_i))
long pi_product(const std::vector<long>& a, const std::vector<long>& b);

// (sum(a) - e_{k+1} - ... - e_m - (k-2)) * e_{k+1}...e_m - e_{k+2}...e_m,
// the product lower bound for pi(a,b); k is 1-based, 1 <= k <= m-1, and
// trailing empty products are 1
long pi_bound_rhs(long d, const std::vector<long>& e, int k);

struct VerifyReport {
  long long checked = 0;
  std::vector<std::string> violations;
  std::vector<std::string> tight_instances;  // equality cases, first few

  bool ok() const { return violations.empty(); }
};

// Exhaustively checks pi(a,b) >= pi_bound_rhs over all admissible (a,b,k)
// for the given bounds e: 1 <= a_i, b_i <= e_i, equal sums, a != b.
VerifyReport verify_pi_bound(const std::vector<long>& e);

// Exhaustively checks, for 0 <= b_i <= e_i - 1 and k = 1..m:
// prod(e_i - b_i) >= (sum_{i<=k}(e_i - b_i) - (k-1) - sum_{i>k} b_i) * e_{k+1}...e_m
VerifyReport verify_complement_product_bound(const std::vector<long>& e);

// degree of S/(t_1^{d_1},...,t_{s-1}^{d_{s-1}}, t^a) in s variables:
// d_1...d_{s-1} - prod(d_i - a_i). Needs a_j >= 1 for some j <= s-1 and
// a_i <= d_i - 1 for i <= s-1; a has length s (a_s free) or s-1.
long degree_pure_powers_plus_monomial(const std::vector<int>& sizes,
                                      const std::vector<int>& a);

struct Decomposition {
  int k = 0;
  int ell = 0;
};

// unique (k, ell) with d = sum_{i<k}(sizes[i]-1) + ell, 1 <= ell <=
// sizes[k]-1 (0-based k); requires 1 <= d <= sum(sizes[i]-1)
Decomposition degree_decomposition(int d, const std::vector<int>& sizes);

// closed form for the second generalized Hamming weight of the degree-d
// code on [A_1 x ... x A_{s-1} x {1}], sizes sorted and >= 2, s >= 3
long cartesian_second_weight(const std::vector<int>& sizes, int d);

struct MinPair {
  long value = 0;
  std::vector<int> a, b;  // argmin exponent vectors, length s
};

// the same value as a minimization of P(a,b) = prod(d_i-a_i) + prod(d_i-b_i)
// - prod(min) over pairs of exponent vectors; d <= sum(sizes[i]-1)
MinPair cartesian_second_weight_min(const std::vector<int>& sizes, int d);

// second generalized Hamming weight of the degree-d projective torus code
// in P^{s-1} over GF(q); q >= 3, s >= 3
long torus_second_weight(long q, int s, int d);

// the conjectured minimum distance of a nested cartesian code (known false;
// kept for counterexample display), sizes d_1 <= ... <= d_s
long nested_conjectured_min_distance(const std::vector<int>& sizes, int d);

// proven lower bound d_1 - ell + 1 for the minimum distance of a nested
// cartesian code at d = sum_{i=2}^{s-1}(d_i-1) + ell, 1 <= ell <= d_1 - 1;
// throws when d is outside that range
long nested_min_distance_lower_bound(const std::vector<int>& sizes, int d);

// Two independent degree-d polynomials on the affine grid A_1 x...x A_{n}
// with a verified count of common zeros; grid_size - common_zeros bounds
// the second generalized Hamming weight of the projective closure's code
// from above.
struct WitnessPair {
  Polynomial F, G;         // n affine variables
  long common_zeros = 0;   // verified by evaluation over the grid
  long support_upper = 0;  // grid size - common_zeros
};

WitnessPair second_weight_witness_pair(const FieldPtr& field,
                                       const std::vector<std::vector<Fe>>& factors,
                                       int d);

}  // namespace ghw
