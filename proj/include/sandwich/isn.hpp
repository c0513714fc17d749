#pragma once

#include <cstdint>
#include <vector>

#include "sandwich/finite_maps.hpp"

namespace sandwich {

/// Witness for an isomorphism (IS_n,*_alpha) -> (IS_n,*_beta): permutations
/// with beta = tau.alpha.pi (left-to-right). The induced isomorphism is
/// xi -> pi^-1 . xi . tau^-1.
struct IsnWitness {
  Permutation tau;
  Permutation pi;
};

/// Number of idempotents of (IS_n, *_alpha): 2^rank(alpha).
std::uint64_t idempotent_count_formula(const PartialInjection& alpha);

/// The idempotents of (IS_n, *_alpha) themselves: one element e_A per subset
/// A of ran(alpha), with dom(e_A) = A and e_A(x) = alpha^-1(x). Ordered by
/// ascending bitmask over the sorted range.
std::vector<PartialInjection> enumerate_idempotents_isn(const PartialInjection& alpha);

/// (IS_n,*_alpha) and (IS_n,*_beta) are isomorphic iff the ranks agree.
bool isn_isomorphic(const PartialInjection& alpha, const PartialInjection& beta);

/// Deterministic witness construction for a same-rank pair: tau matches
/// dom(beta) to dom(alpha) in ascending order (complements likewise), and pi
/// is fixed on ran(alpha) by pi(alpha(tau(x))) = beta(x), extended
/// ascending-to-ascending. Throws on rank mismatch.
IsnWitness isn_witness(const PartialInjection& alpha, const PartialInjection& beta);

/// Applies the induced isomorphism: pi^-1 . xi . tau^-1.
PartialInjection isn_iso_map(const IsnWitness& w, const PartialInjection& xi);

/// Number of pairwise non-isomorphic deformed semigroups over IS_n: one per
/// rank value 0..n.
std::uint64_t isn_class_count(int n);

}  // namespace sandwich
