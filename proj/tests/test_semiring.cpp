#include "doctest.h"

#include <string>

#include "walg/semiring.hpp"

using namespace walg;

namespace {

const Kind kinds[] = {Kind::boolean, Kind::tropical, Kind::arctic, Kind::counting};

Value V(Kind k, std::int64_t v) { return make_value(k, v); }

}  // namespace

TEST_CASE("units and infinities") {
  CHECK(zero(Kind::tropical).v == Value::kInf);
  CHECK(one(Kind::tropical).v == 0);
  CHECK(zero(Kind::arctic).v == Value::kNegInf);
  CHECK(one(Kind::arctic).v == 0);
  CHECK(zero(Kind::counting).v == 0);
  CHECK(top(Kind::tropical).v == 0);
  CHECK(top(Kind::arctic).v == Value::kInf);
  CHECK(top(Kind::counting).v == Value::kInf);
  CHECK(idempotent(Kind::arctic));
  CHECK_FALSE(idempotent(Kind::counting));
}

TEST_CASE("star and omega on single values") {
  CHECK(star(V(Kind::tropical, 3)) == one(Kind::tropical));
  CHECK(omega(V(Kind::tropical, 3)) == zero(Kind::tropical));
  CHECK(omega(V(Kind::tropical, 0)) == one(Kind::tropical));
  CHECK(star(V(Kind::arctic, 0)) == one(Kind::arctic));
  CHECK(star(V(Kind::arctic, 2)).v == Value::kInf);
  CHECK(omega(V(Kind::arctic, 1)).v == Value::kInf);
  CHECK(omega(zero(Kind::arctic)) == zero(Kind::arctic));
  CHECK(star(V(Kind::counting, 0)) == one(Kind::counting));
  CHECK(star(V(Kind::counting, 1)).v == Value::kInf);
  CHECK(omega(V(Kind::counting, 1)) == one(Kind::counting));
  CHECK(omega(V(Kind::counting, 2)).v == Value::kInf);
  CHECK(star(zero(Kind::boolean)) == one(Kind::boolean));
}

TEST_CASE("arctic zero annihilates infinity") {
  const Value inf{Kind::arctic, Value::kInf};
  CHECK(mul(inf, zero(Kind::arctic)) == zero(Kind::arctic));
  CHECK(mul(inf, V(Kind::arctic, 0)) == inf);
  CHECK(mul(Value{Kind::counting, Value::kInf}, zero(Kind::counting)) == zero(Kind::counting));
}

TEST_CASE("semiring axioms hold on the value grid") {
  for (Kind k : kinds) {
    CAPTURE(std::string(kind_name(k)));
    const auto g = value_grid(k);
    for (const Value& a : g) {
      CHECK(add(a, zero(k)) == a);
      CHECK(mul(a, one(k)) == a);
      CHECK(mul(one(k), a) == a);
      CHECK(mul(a, zero(k)) == zero(k));
      CHECK(natural_leq(zero(k), a));
      for (const Value& b : g) {
        CHECK(add(a, b) == add(b, a));
        CHECK(natural_leq(a, add(a, b)));
        for (const Value& c : g) {
          CHECK(add(add(a, b), c) == add(a, add(b, c)));
          CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
          CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
          CHECK(mul(add(a, b), c) == add(mul(a, c), mul(b, c)));
        }
      }
    }
  }
}

TEST_CASE("quemiring product is associative and otimes unfolds") {
  for (Kind k : kinds) {
    CAPTURE(std::string(kind_name(k)));
    const auto g = value_grid(k);
    std::vector<Quem> qs;
    for (const Value& s : g)
      for (const Value& v : g) qs.push_back({s, v});
    for (const Quem& a : qs) {
      // a^otimes = 1 + a a^otimes
      const Quem o = quem_otimes(a);
      CHECK(quem_add({one(k), zero(k)}, quem_mul(a, o)) == o);
      for (const Quem& b : qs) CHECK(quem_add(a, b) == quem_add(b, a));
    }
    for (std::size_t i = 0; i < qs.size(); i += 3)
      for (std::size_t j = 0; j < qs.size(); j += 2)
        for (std::size_t l = 0; l < qs.size(); l += 5)
          CHECK(quem_mul(quem_mul(qs[i], qs[j]), qs[l]) == quem_mul(qs[i], quem_mul(qs[j], qs[l])));
  }
}

TEST_CASE("text round trip and carrier checks") {
  for (Kind k : kinds)
    for (const Value& a : value_grid(k)) CHECK(parse_value(k, to_string(a)) == a);
  CHECK(parse_kind("arctic") == Kind::arctic);
  CHECK_THROWS_AS(parse_kind("reals"), semiring_error);
  CHECK_THROWS_AS(parse_value(Kind::boolean, "2"), semiring_error);
  CHECK_THROWS_AS(parse_value(Kind::boolean, "inf"), semiring_error);
  CHECK_THROWS_AS(parse_value(Kind::tropical, "-inf"), semiring_error);
  CHECK_THROWS_AS(parse_value(Kind::counting, "x1"), semiring_error);
  CHECK(to_string(zero(Kind::arctic)) == "-inf");
}

TEST_CASE("mixing instances is rejected") {
  CHECK_THROWS_AS(add(one(Kind::boolean), one(Kind::tropical)), semiring_error);
}

TEST_CASE("overflow is reported, not wrapped") {
  const Value big = V(Kind::counting, INT64_MAX / 2 + 1);
  CHECK_THROWS_AS(mul(big, V(Kind::counting, 2)), semiring_error);
}
