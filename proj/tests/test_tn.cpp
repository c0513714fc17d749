#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "sandwich/deformed.hpp"
#include "sandwich/tn.hpp"
#include "sandwich/util.hpp"

using namespace sandwich;

namespace {

ClassSizeMultiset multiset_of(std::map<std::uint64_t, std::uint64_t> counts, int n) {
  return ClassSizeMultiset(n, std::move(counts));
}

}  // namespace

TEST_CASE("the xa = ya criterion") {
  FiniteTransformation a({1, 1, 2});
  FiniteTransformation x({2, 3, 1}), y({3, 2, 1});
  CHECK(sim_a_related(x, x, a));

  auto constant = FiniteTransformation::constant(3, 2);
  for (const auto& u : enumerate_transformations(3))
    for (const auto& v : enumerate_transformations(3)) CHECK(sim_a_related(u, v, constant));

  auto perm = FiniteTransformation({2, 3, 1});
  for (const auto& u : enumerate_transformations(3))
    for (const auto& v : enumerate_transformations(3))
      CHECK(sim_a_related(u, v, perm) == (u == v));
}

TEST_CASE("the criterion matches the defining for-all-u relation") {
  for (int n = 2; n <= 3; ++n) {
    auto elements = enumerate_transformations(n);
    for (const auto& a : elements)
      for (const auto& x : elements)
        for (const auto& y : elements) {
          bool defining = true;
          for (const auto& u : elements) {
            if (!(sandwich_product(x, a, u) == sandwich_product(y, a, u))) {
              defining = false;
              break;
            }
          }
          CHECK(sim_a_related(x, y, a) == defining);
        }
  }
}

TEST_CASE("class sizes") {
  auto id_part = sim_a_classes(FiniteTransformation::identity(3));
  CHECK(id_part.keys.size() == 27);
  for (const auto& members : id_part.classes) CHECK(members.size() == 1);

  auto const_part = sim_a_classes(FiniteTransformation::constant(3, 1));
  CHECK(const_part.keys.size() == 1);
  CHECK(const_part.classes[0].size() == 27);

  auto part = sim_a_classes(FiniteTransformation({1, 1, 2}));
  CHECK(part.multiset ==
        multiset_of({{1, 1}, {2, 3}, {4, 3}, {8, 1}}, 3));
  CHECK(part.multiset.to_text() == "1:1\n2:3\n4:3\n8:1\n");
  CHECK(ClassSizeMultiset::from_text(3, part.multiset.to_text()) == part.multiset);
}

TEST_CASE("class sizes follow the kernel block product, count r^n, mass n^n") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& a : enumerate_transformations(n)) {
      auto partition = sim_a_classes(a);
      auto kernel = kernel_partition(a);
      std::uint64_t mass = 0;
      for (size_t c = 0; c < partition.keys.size(); ++c) {
        CHECK(partition.classes[c].size() == predicted_class_size(kernel, partition.keys[c]));
        mass += partition.classes[c].size();
        // every class member composes to the key
        for (const auto& x : partition.classes[c]) CHECK(compose(x, a) == partition.keys[c]);
      }
      CHECK(partition.keys.size() == checked_pow(a.image_size(), n));
      CHECK(mass == checked_pow(n, n));
    }
  }
}

TEST_CASE("type recovery from frozen multisets") {
  CHECK(recover_type_from_class_sizes(multiset_of({{1, 27}}, 3)) == TypeVector({3, 0, 0}));
  CHECK(recover_type_from_class_sizes(multiset_of({{27, 1}}, 3)) == TypeVector({0, 0, 1}));
  CHECK(recover_type_from_class_sizes(multiset_of({{1, 1}, {2, 3}, {4, 3}, {8, 1}}, 3)) ==
        TypeVector({1, 1, 0}));
}

TEST_CASE("type recovery round-trips over all of T_n") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& a : enumerate_transformations(n))
      CHECK(recover_type_from_class_sizes(sim_a_classes(a).multiset) == type_of(a));
}

TEST_CASE("unrealizable multisets are rejected") {
  // wrong mass
  CHECK_THROWS_WITH_AS(multiset_of({{1, 26}}, 3), doctest::Contains("inconsistent"),
                       std::invalid_argument);
  // mass right, count at minimum size not a cube
  CHECK_THROWS_WITH_AS(recover_type_from_class_sizes(multiset_of({{1, 19}, {2, 4}}, 3)),
                       doctest::Contains("inconsistent"), std::invalid_argument);
  // minimum size not a cube
  CHECK_THROWS_WITH_AS(recover_type_from_class_sizes(multiset_of({{2, 2}, {23, 1}}, 3)),
                       doctest::Contains("inconsistent"), std::invalid_argument);
  // locally consistent prefix but no realizing type
  CHECK_THROWS_WITH_AS(recover_type_from_class_sizes(multiset_of({{1, 1}, {2, 13}}, 3)),
                       doctest::Contains("inconsistent"), std::invalid_argument);
}

TEST_CASE("type criterion") {
  CHECK(tn_isomorphic(FiniteTransformation({1, 1, 2}), FiniteTransformation({3, 2, 2})));
  CHECK(tn_isomorphic(FiniteTransformation::constant(3, 1), FiniteTransformation::constant(3, 3)));
  CHECK_FALSE(tn_isomorphic(FiniteTransformation({2, 3, 1}), FiniteTransformation::constant(3, 1)));
  CHECK_THROWS_AS(tn_isomorphic(FiniteTransformation({1}), FiniteTransformation({1, 1})),
                  std::invalid_argument);
}

TEST_CASE("witness construction") {
  auto a = FiniteTransformation({1, 1, 2});
  auto w_self = tn_witness(a, a);
  CHECK(w_self.tau == Permutation::identity(3));
  CHECK(w_self.pi == Permutation::identity(3));

  auto b = FiniteTransformation({3, 2, 2});
  auto w = tn_witness(a, b);
  CHECK(w.tau == Permutation({3, 1, 2}));
  CHECK(w.pi == Permutation({2, 3, 1}));
  CHECK(compose(compose(w.tau.as_transformation(), a), w.pi.as_transformation()) == b);

  CHECK_THROWS_WITH_AS(tn_witness(a, FiniteTransformation({1, 2, 3})),
                       doctest::Contains("type mismatch (1,1,0) vs (3,0,0)"), std::invalid_argument);
}

TEST_CASE("witness identity holds for every same-type pair of T_3") {
  auto elements = enumerate_transformations(3);
  for (const auto& a : elements)
    for (const auto& b : elements) {
      if (!(type_of(a) == type_of(b))) continue;
      auto w = tn_witness(a, b);
      CHECK(compose(compose(w.tau.as_transformation(), a), w.pi.as_transformation()) == b);
    }
}

TEST_CASE("induced map is an isomorphism for sample pairs") {
  auto elements = enumerate_transformations(3);
  auto check_pair = [&](const FiniteTransformation& a, const FiniteTransformation& b) {
    auto w = tn_witness(a, b);
    std::vector<FiniteTransformation> images;
    for (const auto& x : elements) images.push_back(tn_iso_map(w, x));
    auto sorted = images;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == elements);
    for (size_t i = 0; i < elements.size(); ++i)
      for (size_t j = 0; j < elements.size(); ++j)
        CHECK(tn_iso_map(w, sandwich_product(elements[i], a, elements[j])) ==
              sandwich_product(images[i], b, images[j]));
  };
  check_pair(FiniteTransformation({1, 1, 2}), FiniteTransformation({3, 2, 2}));
  check_pair(FiniteTransformation({2, 3, 1}), FiniteTransformation({1, 3, 2}));
  check_pair(FiniteTransformation::constant(3, 1), FiniteTransformation::constant(3, 2));
}

TEST_CASE("cross-type pairs have different class-size multisets") {
  auto elements = enumerate_transformations(3);
  std::vector<ClassSizeMultiset> multisets;
  for (const auto& a : elements) multisets.push_back(sim_a_classes(a).multiset);
  for (size_t i = 0; i < elements.size(); ++i)
    for (size_t j = 0; j < elements.size(); ++j)
      if (!(type_of(elements[i]) == type_of(elements[j])))
        CHECK_FALSE(multisets[i] == multisets[j]);
}

TEST_CASE("type counting formula") {
  CHECK(count_of_type(TypeVector({3, 0, 0})) == 6);
  CHECK(count_of_type(TypeVector({0, 0, 1})) == 3);
  CHECK(count_of_type(TypeVector({1, 1, 0})) == 18);
  CHECK(count_of_type(TypeVector({5, 0, 0, 0, 0})) == 120);

  for (int n = 1; n <= 4; ++n) {
    std::map<TypeVector, std::uint64_t> brute;
    for (const auto& a : enumerate_transformations(n)) ++brute[type_of(a)];
    for (const auto& [t, count] : brute) CHECK(count_of_type(t) == count);
  }
}

TEST_CASE("types per partition and p(n)") {
  auto types = enumerate_types(3);
  REQUIRE(types.size() == 3);
  CHECK(types[0] == TypeVector({3, 0, 0}));
  CHECK(types[1] == TypeVector({1, 1, 0}));
  CHECK(types[2] == TypeVector({0, 0, 1}));

  CHECK(partition_count(0) == 1);
  CHECK(partition_count(1) == 1);
  CHECK(partition_count(3) == 3);
  CHECK(partition_count(4) == 5);
  CHECK(partition_count(10) == 42);

  for (int n = 1; n <= 6; ++n) {
    auto all = enumerate_types(n);
    CHECK(all.size() == partition_count(n));
    std::uint64_t sum = 0;
    for (const auto& t : all) sum += count_of_type(t);
    CHECK(sum == checked_pow(n, n));
  }

  // every type class is realized: T_n splits into exactly p(n) classes
  for (int n = 1; n <= 4; ++n) {
    std::set<TypeVector> realized;
    for (const auto& a : enumerate_transformations(n)) realized.insert(type_of(a));
    CHECK(realized.size() == partition_count(n));
  }
}
