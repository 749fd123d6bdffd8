#pragma once

#include <span>
#include <vector>

#include "ghw/geometry.hpp"
#include "ghw/poly.hpp"

namespace ghw {

// Monomial ideal held by its unique minimal generating set, kept sorted so
// equality is plain comparison. The unit ideal is generated by the empty
// monomial; the zero ideal has no generators.
struct MonomialIdeal {
  int nvars = 0;
  std::vector<Monomial> gens;

  bool is_unit() const { return gens.size() == 1 && gens[0].is_one(); }
};

MonomialIdeal make_monomial_ideal(int nvars, std::vector<Monomial> gens);
bool contains(const MonomialIdeal& L, const Monomial& m);
bool equal(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal add_generators(const MonomialIdeal& L, std::span<const Monomial> extra);

// (L : m) and (L : (m_1,...,m_r)) = intersection of the (L : m_i)
MonomialIdeal colon(const MonomialIdeal& L, const Monomial& m);
MonomialIdeal colon(const MonomialIdeal& L, std::span<const Monomial> ms);

// monomials of total degree d outside L, in ascending plain-lex order
std::vector<Monomial> standard_monomials(const MonomialIdeal& L, int d);
long hilbert_function(const MonomialIdeal& L, int d);

// Krull dimension of S/L: size of the largest variable subset meeting no
// generator's support. -1 for the unit ideal (zero ring).
int krull_dimension(const MonomialIdeal& L);

struct DegReg {
  long degree = 0;
  int regularity = 0;
};

// degree and regularity of S/L for dim(S/L) <= 1, read off the Hilbert
// function: dim 0 sums it, dim 1 takes the stabilized value. Stabilization is
// detected at d >= max generator degree and double-checked one degree out.
DegReg degree_and_regularity(const MonomialIdeal& L);

struct GroebnerBasis {
  MonomialOrder order;
  std::vector<Polynomial> gens;  // reduced: monic, minimal, tails reduced
};

// Buchberger with the normal selection strategy (pairs by ascending lcm
// degree), the coprime-leading-term skip, and full inter-reduction, so the
// output is the reduced basis and deterministic.
GroebnerBasis buchberger(std::span<const Polynomial> gens, const MonomialOrder& ord);

MonomialIdeal initial_ideal(const GroebnerBasis& gb);
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

// Vanishing ideal of a finite point set from degree-by-degree kernels of the
// evaluation matrices, collected up to one degree past the first degree whose
// evaluation rank reaches |X|, then fed to Buchberger. The result is
// validated against the evaluation ranks before being returned.
GroebnerBasis vanishing_ideal_points(const PointSet& X, const MonomialOrder& ord);

// Groebner basis of I(X): published family generators when available (with
// construction checks), the points-kernel construction otherwise or as the
// fallback when a check fails.
GroebnerBasis vanishing_basis(const PointSet& X, const MonomialOrder& ord);

// dim of the degree-d part of ev(S_d) on X, i.e. the Hilbert function of X
long evaluation_rank(const PointSet& X, int d);

}  // namespace ghw
