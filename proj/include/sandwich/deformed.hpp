#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sandwich/finite_maps.hpp"

namespace sandwich {

/// Full-table work (n_e x n_e products) defaults to a tighter degree cap
/// than element-level sweeps.
inline constexpr int kDefaultTableCap = 4;

/// Indexed finite magma: an ordered element list plus the product matrix.
/// Entry (i,j) is the index of element_i * element_j. Element order is the
/// canonical enumeration order of the underlying family, which makes tables
/// reproducible byte for byte.
class CayleyTable {
 public:
  CayleyTable(std::vector<std::string> labels, std::vector<std::int32_t> products);

  int size() const { return static_cast<int>(labels_.size()); }
  std::int32_t product(int i, int j) const { return products_[static_cast<size_t>(i) * labels_.size() + j]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::int32_t>& products() const { return products_; }

  bool operator==(const CayleyTable&) const = default;

 private:
  std::vector<std::string> labels_;
  std::vector<std::int32_t> products_;  // row-major size x size
};

/// x *_a y = x.a.y, the multiplication deformed by the sandwich element a.
FiniteTransformation sandwich_product(const FiniteTransformation& x, const FiniteTransformation& a,
                                      const FiniteTransformation& y);
PartialInjection sandwich_product(const PartialInjection& x, const PartialInjection& a,
                                  const PartialInjection& y);

#ifdef NDEBUG
inline constexpr bool kVerifyTablesByDefault = false;
#else
inline constexpr bool kVerifyTablesByDefault = true;
#endif

/// Cayley table of (T_n, *_a) / (IS_n, *_a) over the canonical enumeration,
/// n = degree of a. With verify_associative set, table construction checks
/// the O(n_e^3) associativity law and throws std::logic_error on failure
/// (which would indicate an implementation bug, not bad input).
CayleyTable build_deformed_table(const FiniteTransformation& a, int cap = kDefaultTableCap,
                                 bool verify_associative = kVerifyTablesByDefault);
CayleyTable build_deformed_table(const PartialInjection& a, int cap = kDefaultTableCap,
                                 bool verify_associative = kVerifyTablesByDefault);

struct AssociativityFailure {
  int x, y, z;  // (xy)z != x(yz)
};

/// First triple violating associativity, if any. O(n_e^3) index lookups.
std::optional<AssociativityFailure> find_associativity_failure(const CayleyTable& t);
bool check_associativity(const CayleyTable& t);

/// Indices i with product(i,i) == i.
std::vector<int> idempotents_of_table(const CayleyTable& t);

// Table file format: line 1 is n_e, line 2 the whitespace-separated element
// labels, then n_e lines of n_e whitespace-separated 0-based indices.
void write_cayley_table(std::ostream& os, const CayleyTable& t);
CayleyTable read_cayley_table(std::istream& is);

}  // namespace sandwich
