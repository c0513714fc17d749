#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sandwich/finite_maps.hpp"

namespace sandwich {

/// Multiset of equivalence-class sizes of the relation x ~_a y (xa = ya)
/// over T_n: distinct sizes paired with their multiplicities. The classes
/// partition T_n, so the total mass sum size*count equals n^n; the
/// constructor enforces this.
class ClassSizeMultiset {
 public:
  ClassSizeMultiset(int degree, std::map<std::uint64_t, std::uint64_t> counts_by_size);

  int degree() const { return degree_; }
  /// Ascending by size.
  const std::vector<std::pair<std::uint64_t, std::uint64_t>>& entries() const { return entries_; }
  std::uint64_t count_at(std::uint64_t size) const;
  std::uint64_t total_mass() const;   // sum size*count = n^n
  std::uint64_t class_count() const;  // sum count

  /// One "size:count" line per entry, ascending by size.
  std::string to_text() const;
  static ClassSizeMultiset from_text(int degree, const std::string& text);

  bool operator==(const ClassSizeMultiset&) const = default;

 private:
  int degree_;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> entries_;
};

/// x ~_a y, decided by the finite criterion xa = ya. This is equivalent to
/// the defining relation "x *_a u = y *_a u for every u"; separating two
/// products needs a map with two distinct values, so the equivalence tests
/// exercise degrees n >= 2 (at n = 1 both sides are trivially true). The
/// criterion itself applies at every degree.
bool sim_a_related(const FiniteTransformation& x, const FiniteTransformation& y,
                   const FiniteTransformation& a);

/// The full ~_a partition of T_n. Classes are the fibers of x -> x.a, keyed
/// by the common product; keys and class members are in canonical order.
struct SimAPartition {
  std::vector<FiniteTransformation> keys;
  std::vector<std::vector<FiniteTransformation>> classes;  // parallel to keys
  ClassSizeMultiset multiset;
};

SimAPartition sim_a_classes(const FiniteTransformation& a, int cap = kDefaultEnumerationCap);

/// Size of the class keyed by y = x0.a: the product over i of the kernel
/// block size of a at y(i).
std::uint64_t predicted_class_size(const KernelPartition& kernel, const FiniteTransformation& y);

/// Recovers the type of a from the ~_a class-size multiset alone.
///
/// Let m be the minimum kernel block size. The smallest class size is m^n
/// with multiplicity a_m^n, which pins m and a_m; each later component a_l
/// (m < l <= n) is pinned by the count C of classes of size l*m^(n-1):
/// the tuples reaching that size with all factors below l contribute A
/// (computed by dynamic programming over divisors), the rest are the
/// n*a_l*a_m^(n-1) tuples with a single factor l, so a_l = (C-A)/(n*a_m^(n-1)).
///
/// The result is validated by regenerating the full multiset from the
/// recovered type; throws std::invalid_argument ("inconsistent class-size
/// multiset") when the input is not realizable by any a.
TypeVector recover_type_from_class_sizes(const ClassSizeMultiset& m);

/// (T_n,*_a) and (T_n,*_b) are isomorphic iff a and b have the same type.
bool tn_isomorphic(const FiniteTransformation& a, const FiniteTransformation& b);

/// Witness for an isomorphism (T_n,*_a) -> (T_n,*_b): permutations with
/// b = tau.a.pi; the induced isomorphism is x -> pi^-1 . x . tau^-1.
struct TnWitness {
  Permutation tau;
  Permutation pi;
};

/// Deterministic same-type witness: kernel blocks of a and b are grouped by
/// size, ordered by minimal element within each size, and paired in order;
/// tau maps each block of the kernel of b onto its paired block (elements
/// matched ascending) and pi sends paired tags accordingly, extended
/// ascending-to-ascending. Throws on type mismatch.
TnWitness tn_witness(const FiniteTransformation& a, const FiniteTransformation& b);

/// Applies the induced isomorphism: pi^-1 . x . tau^-1.
FiniteTransformation tn_iso_map(const TnWitness& w, const FiniteTransformation& x);

/// Number of elements of T_n with the given type:
/// n! C(n,a_1) C(n-a_1,a_2) ... / prod (i!)^(a_i), exact.
std::uint64_t count_of_type(const TypeVector& t);

/// One type vector per integer partition of n (a_k = multiplicity of the
/// part k), ordered by ascending partition (largest part first within each
/// partition, partitions compared lexicographically).
std::vector<TypeVector> enumerate_types(int n);

/// p(n), the number of integer partitions of n.
std::uint64_t partition_count(int n);

/// Expected multiset of ~_a class sizes for any a of the given type: the
/// distribution of products of n independently chosen kernel block sizes.
std::map<std::uint64_t, std::uint64_t> class_size_distribution(const TypeVector& t);

}  // namespace sandwich
