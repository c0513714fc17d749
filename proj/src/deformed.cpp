#include "sandwich/deformed.hpp"

#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sandwich {

CayleyTable::CayleyTable(std::vector<std::string> labels, std::vector<std::int32_t> products)
    : labels_(std::move(labels)), products_(std::move(products)) {
  size_t n = labels_.size();
  if (n == 0) throw std::invalid_argument("Cayley table needs at least one element");
  if (products_.size() != n * n) {
    throw std::invalid_argument("product matrix size " + std::to_string(products_.size()) +
                                " does not match " + std::to_string(n) + " elements");
  }
  for (auto v : products_) {
    if (v < 0 || static_cast<size_t>(v) >= n)
      throw std::invalid_argument("product index " + std::to_string(v) + " out of range");
  }
  std::set<std::string> distinct(labels_.begin(), labels_.end());
  if (distinct.size() != n) throw std::invalid_argument("element labels must be pairwise distinct");
}

FiniteTransformation sandwich_product(const FiniteTransformation& x, const FiniteTransformation& a,
                                      const FiniteTransformation& y) {
  return compose(compose(x, a), y);
}

PartialInjection sandwich_product(const PartialInjection& x, const PartialInjection& a,
                                  const PartialInjection& y) {
  return compose(compose(x, a), y);
}

namespace {

// position of a transformation in the enumeration order: its image sequence
// read as a base-n number
std::int32_t lex_index(const FiniteTransformation& x) {
  std::int64_t idx = 0;
  for (int v : x.images()) idx = idx * x.degree() + (v - 1);
  return static_cast<std::int32_t>(idx);
}

// dense code -> enumeration position table for IS_n; codes are base-(n+1)
// digit strings with "undefined" as the largest digit
struct PartialInjectionIndexer {
  explicit PartialInjectionIndexer(const std::vector<PartialInjection>& all) {
    int n = all.front().degree();
    size_t span = 1;
    for (int i = 0; i < n; ++i) span *= static_cast<size_t>(n + 1);
    code_to_index.assign(span, -1);
    for (size_t i = 0; i < all.size(); ++i) code_to_index[code(all[i])] = static_cast<std::int32_t>(i);
  }

  static size_t code(const PartialInjection& x) {
    size_t c = 0;
    int n = x.degree();
    for (int v : x.images()) c = c * (n + 1) + (v == PartialInjection::kUndefined ? n : v - 1);
    return c;
  }

  std::int32_t index_of(const PartialInjection& x) const { return code_to_index[code(x)]; }

  std::vector<std::int32_t> code_to_index;
};

template <typename Elem, typename IndexOf>
CayleyTable build_table(const std::vector<Elem>& elems, const Elem& a, IndexOf index_of,
                        bool verify_associative) {
  int n_e = static_cast<int>(elems.size());
  std::vector<std::string> labels;
  labels.reserve(n_e);
  for (const auto& e : elems) labels.push_back(to_literal(e));

  std::vector<std::int32_t> products(static_cast<size_t>(n_e) * n_e);
  for (int i = 0; i < n_e; ++i) {
    Elem xa = compose(elems[i], a);
    for (int j = 0; j < n_e; ++j)
      products[static_cast<size_t>(i) * n_e + j] = index_of(compose(xa, elems[j]));
  }
  CayleyTable table(std::move(labels), std::move(products));
  if (verify_associative) {
    if (auto bad = find_associativity_failure(table)) {
      throw std::logic_error("deformed table is not associative at indices (" +
                             std::to_string(bad->x) + "," + std::to_string(bad->y) + "," +
                             std::to_string(bad->z) + ") -- implementation bug");
    }
  }
  return table;
}

}  // namespace

CayleyTable build_deformed_table(const FiniteTransformation& a, int cap, bool verify_associative) {
  auto elems = enumerate_transformations(a.degree(), cap);
  return build_table(elems, a, lex_index, verify_associative);
}

CayleyTable build_deformed_table(const PartialInjection& a, int cap, bool verify_associative) {
  auto elems = enumerate_partial_injections(a.degree(), cap);
  PartialInjectionIndexer indexer(elems);
  return build_table(elems, a, [&](const PartialInjection& x) { return indexer.index_of(x); },
                     verify_associative);
}

std::optional<AssociativityFailure> find_associativity_failure(const CayleyTable& t) {
  int n = t.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      std::int32_t xy = t.product(x, y);
      for (int z = 0; z < n; ++z)
        if (t.product(xy, z) != t.product(x, t.product(y, z)))
          return AssociativityFailure{x, y, z};
    }
  return std::nullopt;
}

bool check_associativity(const CayleyTable& t) { return !find_associativity_failure(t); }

std::vector<int> idempotents_of_table(const CayleyTable& t) {
  std::vector<int> out;
  for (int i = 0; i < t.size(); ++i)
    if (t.product(i, i) == i) out.push_back(i);
  return out;
}

void write_cayley_table(std::ostream& os, const CayleyTable& t) {
  os << t.size() << '\n';
  for (int i = 0; i < t.size(); ++i) os << (i ? " " : "") << t.labels()[i];
  os << '\n';
  for (int i = 0; i < t.size(); ++i) {
    for (int j = 0; j < t.size(); ++j) os << (j ? " " : "") << t.product(i, j);
    os << '\n';
  }
}

CayleyTable read_cayley_table(std::istream& is) {
  int n = 0;
  if (!(is >> n) || n < 1) throw std::invalid_argument("bad Cayley table: invalid element count");
  std::vector<std::string> labels(n);
  for (auto& l : labels)
    if (!(is >> l)) throw std::invalid_argument("bad Cayley table: missing element labels");
  std::vector<std::int32_t> products(static_cast<size_t>(n) * n);
  for (auto& p : products)
    if (!(is >> p)) throw std::invalid_argument("bad Cayley table: missing product indices");
  return CayleyTable(std::move(labels), std::move(products));
}

}  // namespace sandwich
