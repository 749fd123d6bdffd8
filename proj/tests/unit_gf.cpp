#include "doctest.h"
#include "ghw/gf.hpp"

using namespace ghw;

TEST_SUITE("gf") {

TEST_CASE("prime field arithmetic") {
  auto F = make_field(5, 1);
  CHECK(F->q() == 5);
  Fe a = F->element(3), b = F->element(4);
  CHECK(F->add(a, b).v == 2);
  CHECK(F->mul(a, b).v == 2);
  CHECK(F->neg(a).v == 2);
  CHECK(F->mul(a, F->inv(a)) == F->one());
  CHECK(F->from_int(-1).v == 4);
  CHECK(F->from_int(12).v == 2);
}

TEST_CASE("extension field satisfies x^q = x") {
  for (auto [p, k] : {std::pair<uint32_t, uint32_t>{2, 3}, {3, 2}, {2, 2}}) {
    auto F = make_field(p, k);
    for (Fe a : F->elements()) CHECK(F->pow(a, F->q()) == a);
    for (Fe a : F->elements())
      if (a != F->zero()) CHECK(F->pow(a, F->q() - 1) == F->one());
  }
}

TEST_CASE("element list is the whole field") {
  auto F = make_field(2, 3);
  auto es = F->elements();
  CHECK(es.size() == 8);
  for (uint32_t i = 0; i < 8; ++i) CHECK(es[i].v == i);
}

TEST_CASE("string round trips") {
  auto F4 = make_field(2, 2);
  for (Fe a : F4->elements()) {
    CHECK(F4->parse(F4->to_string(a)) == a);
    CHECK(F4->parse(F4->to_digits(a)) == a);
  }
  CHECK(F4->to_string(F4->element(2)) == "a");
  CHECK(F4->to_string(F4->element(3)) == "a+1");
  CHECK(F4->to_digits(F4->element(3)) == "11");
  auto F9 = make_field(3, 2);
  for (Fe a : F9->elements()) CHECK(F9->parse(F9->to_string(a)) == a);
}

TEST_CASE("field cache reuses objects") {
  CHECK(make_field(2, 2).get() == make_field(2, 2).get());
  CHECK(make_field(2, 2)->id() != make_field(3, 1)->id());
}

TEST_CASE("parse_field accepts both spellings") {
  CHECK(parse_field("2^2")->q() == 4);
  CHECK(parse_field("9")->q() == 9);
  CHECK(parse_field("7")->p() == 7);
  CHECK_THROWS(parse_field("6"));
  CHECK_THROWS(parse_field("4^1"));
  CHECK_THROWS(parse_field("x"));
}

TEST_CASE("mixed-field operands are rejected") {
  auto F2 = make_field(2, 1);
  auto F3 = make_field(3, 1);
  CHECK_THROWS(F2->add(F2->one(), F3->one()));
  CHECK_THROWS(F2->element(5));
}

TEST_CASE("raw-code arithmetic matches the element api") {
  auto F = make_field(3, 2);
  for (Fe a : F->elements())
    for (Fe b : F->elements()) {
      CHECK(F->addc(a.v, b.v) == F->add(a, b).v);
      CHECK(F->mulc(a.v, b.v) == F->mul(a, b).v);
      if (b != F->zero()) CHECK(F->mulc(b.v, F->invc(b.v)) == 1);
    }
}

}  // TEST_SUITE
