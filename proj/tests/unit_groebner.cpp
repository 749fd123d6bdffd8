#include "doctest.h"
#include "ghw/groebner.hpp"

using namespace ghw;

namespace {
Monomial mono(std::vector<int32_t> e) { return Monomial(std::move(e)); }
}

TEST_SUITE("groebner") {

TEST_CASE("monomial ideal membership and minimal generators") {
  MonomialIdeal L = make_monomial_ideal(2, {mono({2, 0}), mono({1, 1}), mono({2, 1})});
  CHECK(L.gens.size() == 2);  // t1^2*t2 is redundant
  CHECK(contains(L, mono({3, 0})));
  CHECK(contains(L, mono({1, 2})));
  CHECK(!contains(L, mono({0, 3})));
  CHECK(!contains(L, mono({1, 0})));
  CHECK(make_monomial_ideal(2, {mono({0, 0})}).is_unit());
}

TEST_CASE("colon ideal") {
  MonomialIdeal L = make_monomial_ideal(2, {mono({2, 0}), mono({1, 1})});
  MonomialIdeal C = colon(L, mono({1, 0}));
  CHECK(equal(C, make_monomial_ideal(2, {mono({1, 0}), mono({0, 1})})));
  // colon by a span intersects the single colons
  std::vector<Monomial> ms = {mono({1, 0}), mono({0, 1})};
  MonomialIdeal C2 = colon(L, ms);
  CHECK(contains(C2, mono({1, 0})));
  CHECK(!contains(C2, mono({0, 1})));
}

TEST_CASE("standard monomials and the Hilbert function") {
  MonomialIdeal L = make_monomial_ideal(2, {mono({2, 0}), mono({0, 2})});
  auto s2 = standard_monomials(L, 2);
  REQUIRE(s2.size() == 1);
  CHECK(s2[0] == mono({1, 1}));
  CHECK(hilbert_function(L, 0) == 1);
  CHECK(hilbert_function(L, 1) == 2);
  CHECK(hilbert_function(L, 4) == 0);
}

TEST_CASE("krull dimension") {
  CHECK(krull_dimension(make_monomial_ideal(3, {})) == 3);
  CHECK(krull_dimension(make_monomial_ideal(3, {mono({0, 0, 0})})) == -1);
  CHECK(krull_dimension(make_monomial_ideal(3, {mono({1, 1, 0}), mono({1, 0, 1})})) == 2);
  CHECK(krull_dimension(make_monomial_ideal(2, {mono({2, 0}), mono({0, 2})})) == 0);
}

TEST_CASE("degree and regularity of an artinian quotient") {
  MonomialIdeal L = make_monomial_ideal(2, {mono({2, 0}), mono({0, 3})});
  DegReg dr = degree_and_regularity(L);
  CHECK(dr.degree == 6);
  CHECK(dr.regularity == 4);  // Hilbert function 1,2,2,1,0 stabilizes at 4
}

TEST_CASE("buchberger produces a reduced basis") {
  auto F = make_field(3, 1);
  MonomialOrder ord = MonomialOrder::lex_asc(2);  // t1 > t2
  std::vector<Polynomial> gens = {parse_polynomial(F, 2, "t1^2 - t2"),
                                  parse_polynomial(F, 2, "t1*t2 - t1")};
  GroebnerBasis gb = buchberger(gens, ord);
  for (const auto& g : gb.gens) CHECK(g.leading_coefficient(ord) == F->one());
  for (const auto& g : gens) CHECK(normal_form(g, gb).is_zero());
  // t2^2 - t2 = t2*(t1^2 - t2) - (t1 - ... ) lands in the ideal
  CHECK(normal_form(parse_polynomial(F, 2, "t2^2 - t2"), gb).is_zero());
  MonomialIdeal in = initial_ideal(gb);
  CHECK(contains(in, mono({2, 0})));
}

TEST_CASE("normal form is linear and idempotent") {
  auto F = make_field(2, 2);
  MonomialOrder ord = MonomialOrder::grevlex_asc(2);
  GroebnerBasis gb = buchberger(
      std::vector<Polynomial>{parse_polynomial(F, 2, "t1^2 + t2")}, ord);
  Polynomial f = parse_polynomial(F, 2, "t1^3 + a*t1*t2 + t2^2");
  Polynomial nf = normal_form(f, gb);
  CHECK(normal_form(nf, gb) == nf);
  CHECK(normal_form(f + f, gb).is_zero());
}

TEST_CASE("vanishing ideal of explicit points") {
  auto F = make_field(3, 1);
  PointSet X = custom_points(F, 3,
                             {{F->one(), F->zero(), F->zero()},
                              {F->zero(), F->one(), F->zero()},
                              {F->zero(), F->zero(), F->one()},
                              {F->one(), F->one(), F->one()}});
  MonomialOrder ord = MonomialOrder::grevlex_asc(3);
  GroebnerBasis gb = vanishing_ideal_points(X, ord);
  for (const auto& g : gb.gens)
    for (const auto& pt : X.points) CHECK(g.evaluate(pt.coords) == F->zero());
  MonomialIdeal in = initial_ideal(gb);
  for (int d = 1; d <= 4; ++d) CHECK(evaluation_rank(X, d) == hilbert_function(in, d));
  CHECK(degree_and_regularity(in).degree == 4);
}

TEST_CASE("family basis agrees with the points construction") {
  auto F = make_field(2, 2);
  std::vector<std::vector<Fe>> factors = {{F->zero(), F->one()}, F->elements()};
  PointSet X = nested_cartesian_set(F, factors);
  MonomialOrder ord = MonomialOrder::lex_desc(2);
  CHECK(equal(initial_ideal(vanishing_basis(X, ord)),
              initial_ideal(vanishing_ideal_points(X, ord))));
}

}  // TEST_SUITE
