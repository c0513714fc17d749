#pragma once

#include <cstdint>
#include <tuple>
#include <vector>

#include "sandwich/deformed.hpp"

namespace sandwich {

/// Cheap isomorphism invariants of a finite magma table. Isomorphic tables
/// have equal fingerprints; the converse fails in general, so the
/// fingerprint is only the rejection filter in front of the search.
struct Fingerprint {
  int element_count = 0;
  int idempotent_count = 0;
  /// Sorted multiset of (left-translation image size, right-translation
  /// image size, is-idempotent) over the elements.
  std::vector<std::tuple<int, int, bool>> translation_profile;
  /// Sorted multiset of the fiber sizes of x -> row of x (the sizes of the
  /// classes of the relation "same left translation").
  std::vector<int> row_fiber_sizes;

  bool operator==(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const CayleyTable& t);

enum class IsoStatus { found, none, budget_exceeded };

struct IsoResult {
  IsoStatus status = IsoStatus::none;
  /// Source index -> target index; empty unless status == found.
  std::vector<int> mapping;
  std::uint64_t nodes = 0;  // backtrack nodes spent
};

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

/// Backtracking isomorphism search between finite magma tables.
///
/// Rejects on size or fingerprint mismatch, refines element classes with an
/// iterated invariant coloring, then assigns elements rarest class first
/// while propagating the closure h(xy) = h(x)h(y) and failing early on
/// conflicts. Any mapping is verified over all pairs before it is returned.
/// Exceeding the node budget yields an explicit budget_exceeded status,
/// never a silent "none".
IsoResult find_isomorphism(const CayleyTable& s, const CayleyTable& t,
                           std::uint64_t node_budget = kDefaultNodeBudget);

/// Full h(xy) = h(x)h(y) verification of a candidate bijection.
bool verify_isomorphism(const CayleyTable& s, const CayleyTable& t, const std::vector<int>& mapping);

/// The opposite table (product(i,j) -> product(j,i)); anti-isomorphism onto
/// t reduces to isomorphism onto transpose(t).
CayleyTable transpose(const CayleyTable& t);

}  // namespace sandwich
