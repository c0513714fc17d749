#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "sandwich/deformed.hpp"
#include "sandwich/isn.hpp"

using namespace sandwich;

namespace {

std::set<std::string> as_literals(const std::vector<PartialInjection>& elems) {
  std::set<std::string> out;
  for (const auto& e : elems) out.insert(to_literal(e));
  return out;
}

}  // namespace

TEST_CASE("idempotent count formula") {
  CHECK(idempotent_count_formula(PartialInjection::empty(3)) == 1);
  CHECK(idempotent_count_formula(PartialInjection::identity(4)) == 16);
  CHECK(idempotent_count_formula(PartialInjection({3, 1, 0, 0})) == 4);
}

TEST_CASE("idempotent construction") {
  CHECK(as_literals(enumerate_idempotents_isn(PartialInjection::empty(2))) ==
        std::set<std::string>{"[-,-]"});
  CHECK(as_literals(enumerate_idempotents_isn(PartialInjection::identity(2))) ==
        std::set<std::string>{"[-,-]", "[1,-]", "[-,2]", "[1,2]"});
  // alpha: 1->2; the nonempty idempotent is alpha^-1 = (2->1)
  CHECK(as_literals(enumerate_idempotents_isn(PartialInjection({2, 0}))) ==
        std::set<std::string>{"[-,-]", "[-,1]"});
}

TEST_CASE("constructed idempotents match the table scan") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& alpha : enumerate_partial_injections(n)) {
      auto table = build_deformed_table(alpha, 4, false);
      std::set<std::string> brute;
      for (int i : idempotents_of_table(table)) brute.insert(table.labels()[i]);
      auto constructed = enumerate_idempotents_isn(alpha);
      for (const auto& e : constructed) CHECK(sandwich_product(e, alpha, e) == e);
      CHECK(as_literals(constructed) == brute);
      CHECK(constructed.size() == idempotent_count_formula(alpha));
    }
  }
}

TEST_CASE("rank criterion") {
  PartialInjection alpha({2, 0, 1});
  CHECK(isn_isomorphic(alpha, alpha));
  CHECK_FALSE(isn_isomorphic(PartialInjection({1, 0, 0}), PartialInjection({1, 2, 0})));
  for (const auto& p : enumerate_permutations(3))
    for (const auto& q : enumerate_permutations(3))
      CHECK(isn_isomorphic(p.as_partial_injection(), q.as_partial_injection()));
  CHECK_THROWS_AS(isn_isomorphic(alpha, PartialInjection::empty(2)), std::invalid_argument);
}

TEST_CASE("witness construction") {
  auto id = PartialInjection::identity(3);
  auto w = isn_witness(id, id);
  CHECK(w.tau == Permutation::identity(3));
  CHECK(w.pi == Permutation::identity(3));

  // alpha: 1->2, beta: 2->2 forces the swap on tau, identity on pi
  auto w2 = isn_witness(PartialInjection({2, 0}), PartialInjection({0, 2}));
  CHECK(w2.tau == Permutation({2, 1}));
  CHECK(w2.pi == Permutation({1, 2}));

  CHECK_THROWS_WITH_AS(isn_witness(PartialInjection({1, 0}), PartialInjection({1, 2})),
                       doctest::Contains("rank mismatch"), std::invalid_argument);
}

TEST_CASE("witness identity holds for every same-rank pair of IS_3") {
  auto elements = enumerate_partial_injections(3);
  for (const auto& alpha : elements)
    for (const auto& beta : elements) {
      if (alpha.rank() != beta.rank()) continue;
      auto w = isn_witness(alpha, beta);
      CHECK(compose(compose(w.tau.as_partial_injection(), alpha), w.pi.as_partial_injection()) ==
            beta);
    }
}

TEST_CASE("induced map is an isomorphism") {
  auto elements = enumerate_partial_injections(3);

  auto check_pair = [&](const PartialInjection& alpha, const PartialInjection& beta) {
    auto w = isn_witness(alpha, beta);
    std::vector<PartialInjection> images;
    for (const auto& xi : elements) images.push_back(isn_iso_map(w, xi));
    auto sorted = images;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == elements);  // bijective
    for (size_t i = 0; i < elements.size(); ++i)
      for (size_t j = 0; j < elements.size(); ++j)
        CHECK(isn_iso_map(w, sandwich_product(elements[i], alpha, elements[j])) ==
              sandwich_product(images[i], beta, images[j]));
  };

  check_pair(PartialInjection({2, 0, 1}), PartialInjection({0, 3, 1}));
  check_pair(PartialInjection({1, 0, 0}), PartialInjection({0, 0, 2}));
  check_pair(PartialInjection::empty(3), PartialInjection::empty(3));

  // identity witness induces the identity map
  auto w = isn_witness(PartialInjection::identity(3), PartialInjection::identity(3));
  for (const auto& xi : elements) CHECK(isn_iso_map(w, xi) == xi);
}

TEST_CASE("class counts") {
  CHECK(isn_class_count(1) == 2);
  CHECK(isn_class_count(3) == 4);
  CHECK(isn_class_count(10) == 11);

  auto elements = enumerate_partial_injections(3);
  std::map<int, int> by_rank;
  for (const auto& alpha : elements) ++by_rank[alpha.rank()];
  CHECK(by_rank.size() == isn_class_count(3));
}

TEST_CASE("different ranks give different idempotent counts") {
  auto elements = enumerate_partial_injections(3);
  for (const auto& alpha : elements)
    for (const auto& beta : elements)
      if (alpha.rank() != beta.rank())
        CHECK(idempotent_count_formula(alpha) != idempotent_count_formula(beta));
}
