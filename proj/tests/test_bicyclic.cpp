#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "sandwich/bicyclic.hpp"

using namespace sandwich;

namespace {

BicyclicElement el(std::int64_t b, std::int64_t a) { return BicyclicElement(b, a); }

}  // namespace

TEST_CASE("canonical form product") {
  CHECK(bmul(el(2, 3), el(1, 2)) == el(2, 4));
  CHECK(bmul(el(1, 1), el(3, 0)) == el(3, 0));
  auto one = BicyclicElement::one();
  CHECK(bmul(el(5, 7), one) == el(5, 7));
  CHECK(bmul(one, el(5, 7)) == el(5, 7));
  CHECK(bmul(el(0, 1), el(1, 0)) == one);  // the defining relation ab = 1
}

TEST_CASE("product is associative on a full exponent grid") {
  std::vector<BicyclicElement> grid;
  for (std::int64_t b = 0; b <= 8; ++b)
    for (std::int64_t a = 0; a <= 8; ++a) grid.push_back(el(b, a));
  for (const auto& x : grid)
    for (const auto& y : grid) {
      auto xy = bmul(x, y);
      for (const auto& z : grid) CHECK(bmul(xy, z) == bmul(x, bmul(y, z)));
    }
}

TEST_CASE("inverse") {
  CHECK(binv(el(2, 3)) == el(3, 2));
  CHECK(binv(BicyclicElement::one()) == BicyclicElement::one());
  for (std::int64_t b = 0; b <= 5; ++b)
    for (std::int64_t a = 0; a <= 5; ++a) {
      auto x = el(b, a);
      CHECK(binv(binv(x)) == x);
      CHECK(bmul(bmul(x, binv(x)), x) == x);
    }
}

TEST_CASE("chain idempotents") {
  CHECK(epsilon(el(2, 1), 0) == el(1, 2));
  CHECK(epsilon(BicyclicElement::one(), 3) == el(3, 3));
  for (std::int64_t m = 0; m <= 6; ++m)
    for (std::int64_t k = 0; k <= 6; ++k)
      for (std::int64_t i = 0; i <= 6; ++i) {
        auto alpha = el(m, k);
        auto e = epsilon(alpha, i);
        CHECK(sandwich_product(e, alpha, e) == e);
      }
}

TEST_CASE("deformed idempotency characterization") {
  auto alpha = el(2, 1);
  CHECK(is_deformed_idempotent(epsilon(alpha, 2), alpha));
  CHECK_FALSE(is_deformed_idempotent(el(1, 1), alpha));

  for (std::int64_t m = 0; m <= 4; ++m)
    for (std::int64_t k = 0; k <= 4; ++k) {
      auto a = el(m, k);
      for (std::int64_t t = 0; t <= 12; ++t)
        for (std::int64_t s = 0; s <= 12; ++s) {
          bool expected = t >= k && t - k == s - m;
          CHECK(is_deformed_idempotent(el(t, s), a) == expected);
        }
    }
}

TEST_CASE("chain order") {
  CHECK(idempotent_leq(3, 3));
  CHECK(idempotent_leq(5, 2));
  CHECK_FALSE(idempotent_leq(1, 4));

  for (std::int64_t m = 0; m <= 3; ++m)
    for (std::int64_t k = 0; k <= 3; ++k) {
      auto alpha = el(m, k);
      for (std::int64_t i = 0; i <= 8; ++i)
        for (std::int64_t j = 0; j <= 8; ++j)
          CHECK(natural_order_leq(epsilon(alpha, i), epsilon(alpha, j), alpha) ==
                idempotent_leq(i, j));
    }
}

TEST_CASE("P and Q membership") {
  auto alpha = el(2, 3);  // m=2, k=3
  CHECK_FALSE(in_P(el(5, 0), alpha, 0));
  CHECK(in_P(BicyclicElement::one(), alpha, 0));
  CHECK(in_Q(BicyclicElement::one(), alpha, 0));

  for (std::int64_t m = 0; m <= 4; ++m)
    for (std::int64_t k = 0; k <= 4; ++k) {
      auto a = el(m, k);
      for (std::int64_t i = 0; i <= 2; ++i)
        for (std::int64_t t = 0; t <= 10; ++t)
          for (std::int64_t s = 0; s <= 10; ++s) {
            auto xi = el(t, s);
            CHECK(in_P(xi, a, i) == in_P_closed_form(xi, a, i));
            CHECK(in_Q(xi, a, i) == in_Q_closed_form(xi, a, i));
          }
    }
}

TEST_CASE("window cardinalities") {
  CHECK(pq_cardinality(el(2, 3), 1) == 12);
  CHECK(pq_cardinality(BicyclicElement::one(), 0) == 0);
  CHECK(pq_cardinality(el(1, 1), 2) == 9);

  for (std::int64_t m = 0; m <= 5; ++m)
    for (std::int64_t k = 0; k <= 5; ++k)
      for (std::int64_t i = 0; i <= 2; ++i) {
        auto alpha = el(m, k);
        auto members = pq_members(alpha, i, i, k + i + 3, m + i + 3);
        CHECK(members.size() == pq_cardinality(alpha, i));
        for (const auto& xi : members) {
          CHECK(in_P(xi, alpha, i));
          CHECK(in_Q(xi, alpha, i));
          CHECK(xi.b_exp() < k + i);
          CHECK(xi.a_exp() < m + i);
        }
      }
}

TEST_CASE("sandwich recovery from window cardinalities") {
  // alpha = b^2 a^3: windows 12, 8, 9
  CHECK(recover_sandwich(12, 8, 9) == el(2, 3));
  CHECK(recover_sandwich(1, 0, 0) == BicyclicElement::one());

  std::map<std::array<std::uint64_t, 3>, BicyclicElement> triples;
  for (std::int64_t m = 0; m <= 5; ++m)
    for (std::int64_t k = 0; k <= 5; ++k) {
      auto alpha = el(m, k);
      std::uint64_t c11 = pq_members(alpha, 1, 1, k + 4, m + 4).size();
      std::uint64_t c10 = pq_members(alpha, 1, 0, k + 4, m + 4).size();
      std::uint64_t c01 = pq_members(alpha, 0, 1, k + 4, m + 4).size();
      CHECK(recover_sandwich(c11, c10, c01) == alpha);
      auto [it, inserted] = triples.emplace(std::array<std::uint64_t, 3>{c11, c10, c01}, alpha);
      CHECK(inserted);  // pairwise distinct triples across the grid
    }

  CHECK_THROWS_WITH_AS(recover_sandwich(0, 5, 5), doctest::Contains("inconsistent"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(recover_sandwich(12, 8, 8), doctest::Contains("inconsistent"),
                       std::invalid_argument);
}

TEST_CASE("anti-isomorphism") {
  CHECK(anti_iso_phi(el(2, 3)) == el(3, 2));
  CHECK(anti_iso_phi(BicyclicElement::one()) == BicyclicElement::one());

  for (std::int64_t m = 0; m <= 3; ++m)
    for (std::int64_t k = 0; k <= 3; ++k) {
      auto alpha = el(m, k);
      auto beta = binv(alpha);
      for (std::int64_t x = 0; x <= 6; ++x)
        for (std::int64_t y = 0; y <= 6; ++y) {
          auto xi = el(x, y);
          CHECK(anti_iso_phi(anti_iso_phi(xi)) == xi);
          for (std::int64_t u = 0; u <= 6; ++u)
            for (std::int64_t v = 0; v <= 6; ++v) {
              auto eta = el(u, v);
              CHECK(anti_iso_phi(sandwich_product(xi, alpha, eta)) ==
                    sandwich_product(anti_iso_phi(eta), beta, anti_iso_phi(xi)));
            }
        }
    }
}

TEST_CASE("exponent overflow is detected") {
  auto tall = el(INT64_MAX - 1, 0);  // b^(2^63-2)
  CHECK_THROWS_AS(bmul(tall, tall), std::overflow_error);
  CHECK_THROWS_AS(bmul(el(0, INT64_MAX - 1), el(0, INT64_MAX - 1)), std::overflow_error);
  CHECK_THROWS_AS(epsilon(tall, INT64_MAX - 1), std::overflow_error);
  CHECK_THROWS_AS(pq_cardinality(el(INT64_MAX - 1, INT64_MAX - 1), 2), std::overflow_error);
  CHECK_THROWS_AS(BicyclicElement(-1, 0), std::invalid_argument);
}

TEST_CASE("literals") {
  CHECK(to_literal(el(2, 3)) == "b^2 a^3");
  CHECK(to_literal(BicyclicElement::one()) == "1");
  CHECK(to_literal(el(2, 0)) == "b^2");
  CHECK(to_literal(el(0, 3)) == "a^3");

  CHECK(parse_bicyclic("b^2 a^3") == el(2, 3));
  CHECK(parse_bicyclic("1") == BicyclicElement::one());
  CHECK(parse_bicyclic("b^0 a^0") == BicyclicElement::one());
  CHECK(parse_bicyclic("b a") == el(1, 1));
  CHECK(parse_bicyclic("a^4") == el(0, 4));
  CHECK(parse_bicyclic(" b^1  a^2 ") == el(1, 2));

  for (std::int64_t m = 0; m <= 4; ++m)
    for (std::int64_t k = 0; k <= 4; ++k) CHECK(parse_bicyclic(to_literal(el(m, k))) == el(m, k));

  CHECK_THROWS_AS(parse_bicyclic("a b"), std::invalid_argument);  // not canonical order
  CHECK_THROWS_AS(parse_bicyclic("b^-1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_bicyclic("c^2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_bicyclic(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_bicyclic("1 b"), std::invalid_argument);
}
