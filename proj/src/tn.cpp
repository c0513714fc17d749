#include "sandwich/tn.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "sandwich/util.hpp"

namespace sandwich {

namespace {

[[noreturn]] void inconsistent(const std::string& why) {
  throw std::invalid_argument("inconsistent class-size multiset: " + why);
}

}  // namespace

ClassSizeMultiset::ClassSizeMultiset(int degree, std::map<std::uint64_t, std::uint64_t> counts_by_size)
    : degree_(degree) {
  if (degree < 1) throw std::invalid_argument("degree must be at least 1");
  std::uint64_t nn = checked_pow(degree, degree);
  unsigned __int128 mass = 0;
  for (auto [size, count] : counts_by_size) {
    if (size == 0 || count == 0) throw std::invalid_argument("class sizes and counts must be positive");
    mass += static_cast<unsigned __int128>(size) * count;
    if (mass > nn) inconsistent("total mass exceeds " + std::to_string(degree) + "^" + std::to_string(degree));
    entries_.emplace_back(size, count);
  }
  if (mass != nn) {
    inconsistent("total mass " + std::to_string(static_cast<std::uint64_t>(mass)) + " != " +
                 std::to_string(degree) + "^" + std::to_string(degree));
  }
}

std::uint64_t ClassSizeMultiset::count_at(std::uint64_t size) const {
  for (auto [s, c] : entries_)
    if (s == size) return c;
  return 0;
}

std::uint64_t ClassSizeMultiset::total_mass() const {
  std::uint64_t mass = 0;
  for (auto [s, c] : entries_) mass += s * c;
  return mass;
}

std::uint64_t ClassSizeMultiset::class_count() const {
  std::uint64_t count = 0;
  for (auto [s, c] : entries_) count += c;
  return count;
}

std::string ClassSizeMultiset::to_text() const {
  std::string out;
  for (auto [s, c] : entries_) out += std::to_string(s) + ":" + std::to_string(c) + "\n";
  return out;
}

ClassSizeMultiset ClassSizeMultiset::from_text(int degree, const std::string& text) {
  std::map<std::uint64_t, std::uint64_t> counts;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("expected size:count, got '" + line + "'");
    counts[std::stoull(line.substr(0, colon))] += std::stoull(line.substr(colon + 1));
  }
  return ClassSizeMultiset(degree, std::move(counts));
}

bool sim_a_related(const FiniteTransformation& x, const FiniteTransformation& y,
                   const FiniteTransformation& a) {
  return compose(x, a) == compose(y, a);
}

SimAPartition sim_a_classes(const FiniteTransformation& a, int cap) {
  std::map<FiniteTransformation, std::vector<FiniteTransformation>> fibers;
  for (const auto& x : enumerate_transformations(a.degree(), cap)) fibers[compose(x, a)].push_back(x);

  std::vector<FiniteTransformation> keys;
  std::vector<std::vector<FiniteTransformation>> classes;
  std::map<std::uint64_t, std::uint64_t> counts;
  for (auto& [key, members] : fibers) {
    ++counts[members.size()];
    keys.push_back(key);
    classes.push_back(std::move(members));
  }
  return SimAPartition{std::move(keys), std::move(classes),
                       ClassSizeMultiset(a.degree(), std::move(counts))};
}

std::uint64_t predicted_class_size(const KernelPartition& kernel, const FiniteTransformation& y) {
  std::uint64_t size = 1;
  for (int p = 1; p <= y.degree(); ++p) size *= static_cast<std::uint64_t>(kernel.block_size(y(p)));
  return size;
}

namespace {

// weighted count of ordered n-tuples (m_1..m_n) with lo <= m_j < hi and
// prod m_j = target, each position weighted by alpha[m_j]
std::uint64_t tuples_below(const std::vector<int>& alpha, int lo, int hi, std::uint64_t target,
                           int n) {
  std::map<std::uint64_t, std::uint64_t> ways{{1, 1}};
  for (int pos = 0; pos < n; ++pos) {
    std::map<std::uint64_t, std::uint64_t> next;
    for (auto [product, count] : ways) {
      for (int k = lo; k < hi; ++k) {
        if (alpha[k] == 0) continue;
        std::uint64_t grown = product * static_cast<std::uint64_t>(k);
        if (grown > target || target % grown != 0) continue;
        next[grown] += count * static_cast<std::uint64_t>(alpha[k]);
      }
    }
    ways = std::move(next);
    if (ways.empty()) return 0;
  }
  auto it = ways.find(target);
  return it == ways.end() ? 0 : it->second;
}

}  // namespace

std::map<std::uint64_t, std::uint64_t> class_size_distribution(const TypeVector& t) {
  int n = t.degree();
  std::map<std::uint64_t, std::uint64_t> ways{{1, 1}};
  for (int pos = 0; pos < n; ++pos) {
    std::map<std::uint64_t, std::uint64_t> next;
    for (auto [product, count] : ways)
      for (int k = 1; k <= n; ++k)
        if (t[k] > 0) next[product * static_cast<std::uint64_t>(k)] += count * static_cast<std::uint64_t>(t[k]);
    ways = std::move(next);
  }
  return ways;
}

TypeVector recover_type_from_class_sizes(const ClassSizeMultiset& m) {
  int n = m.degree();
  if (m.entries().empty()) inconsistent("no classes");

  std::uint64_t min_size = m.entries().front().first;
  std::uint64_t min_block;
  try {
    min_block = exact_nth_root(min_size, static_cast<unsigned>(n));
  } catch (const std::invalid_argument&) {
    inconsistent("minimum class size " + std::to_string(min_size) + " is not an n-th power");
  }
  if (min_block < 1 || min_block > static_cast<std::uint64_t>(n))
    inconsistent("minimum block size " + std::to_string(min_block) + " outside 1..n");
  int mb = static_cast<int>(min_block);

  std::uint64_t alpha_m;
  try {
    alpha_m = exact_nth_root(m.count_at(min_size), static_cast<unsigned>(n));
  } catch (const std::invalid_argument&) {
    inconsistent("count at the minimum class size is not an n-th power");
  }
  if (alpha_m == 0 || alpha_m > static_cast<std::uint64_t>(n))
    inconsistent("leading type entry outside 1..n");

  std::vector<int> alpha(n + 1, 0);  // 1-based
  alpha[mb] = static_cast<int>(alpha_m);

  std::uint64_t denom = static_cast<std::uint64_t>(n) *
                        checked_pow(alpha_m, static_cast<unsigned>(n - 1));
  std::uint64_t m_power = checked_pow(min_block, static_cast<unsigned>(n - 1));
  for (int l = mb + 1; l <= n; ++l) {
    std::uint64_t target = static_cast<std::uint64_t>(l) * m_power;
    std::uint64_t c = m.count_at(target);
    std::uint64_t a = tuples_below(alpha, mb, l, target, n);
    if (c < a) inconsistent("class count at size " + std::to_string(target) + " is too small");
    std::uint64_t rest = c - a;
    if (rest % denom != 0)
      inconsistent("class count at size " + std::to_string(target) + " is not divisible by n*a_m^(n-1)");
    std::uint64_t value = rest / denom;
    if (value > static_cast<std::uint64_t>(n)) inconsistent("type entry exceeds the degree");
    alpha[l] = static_cast<int>(value);
  }

  TypeVector result = [&] {
    try {
      return TypeVector(std::vector<int>(alpha.begin() + 1, alpha.end()));
    } catch (const std::invalid_argument& e) {
      inconsistent(e.what());
    }
  }();

  // realizability: the recovered type must regenerate the input exactly
  auto expected = class_size_distribution(result);
  std::map<std::uint64_t, std::uint64_t> given;
  for (auto [s, c] : m.entries()) given[s] = c;
  if (expected != given) inconsistent("multiset is not realized by the recovered type");
  return result;
}

bool tn_isomorphic(const FiniteTransformation& a, const FiniteTransformation& b) {
  if (a.degree() != b.degree()) {
    throw std::invalid_argument("degree mismatch: " + std::to_string(a.degree()) + " vs " +
                                std::to_string(b.degree()));
  }
  return type_of(a) == type_of(b);
}

namespace {

std::vector<KernelPartition::Block> blocks_by_size_then_min(const FiniteTransformation& f) {
  auto blocks = KernelPartition(f).blocks();
  std::sort(blocks.begin(), blocks.end(),
            [](const KernelPartition::Block& lhs, const KernelPartition::Block& rhs) {
              if (lhs.points.size() != rhs.points.size()) return lhs.points.size() < rhs.points.size();
              return lhs.points.front() < rhs.points.front();
            });
  return blocks;
}

}  // namespace

TnWitness tn_witness(const FiniteTransformation& a, const FiniteTransformation& b) {
  if (a.degree() != b.degree()) {
    throw std::invalid_argument("degree mismatch: " + std::to_string(a.degree()) + " vs " +
                                std::to_string(b.degree()));
  }
  TypeVector ta = type_of(a);
  TypeVector tb = type_of(b);
  if (!(ta == tb)) {
    throw std::invalid_argument("type mismatch " + ta.to_string() + " vs " + tb.to_string());
  }
  int n = a.degree();
  auto blocks_a = blocks_by_size_then_min(a);
  auto blocks_b = blocks_by_size_then_min(b);

  std::vector<int> tau_img(n + 1, 0);
  std::vector<int> pi_img(n + 1, 0);
  std::vector<char> pi_used(n + 1, 0);
  for (size_t i = 0; i < blocks_b.size(); ++i) {
    const auto& block_b = blocks_b[i];
    const auto& block_a = blocks_a[i];  // same size: the types agree
    for (size_t j = 0; j < block_b.points.size(); ++j) tau_img[block_b.points[j]] = block_a.points[j];
    pi_img[block_a.tag] = block_b.tag;
    pi_used[block_b.tag] = 1;
  }
  int next = 1;
  for (int p = 1; p <= n; ++p) {
    if (pi_img[p] != 0) continue;
    while (pi_used[next]) ++next;
    pi_img[p] = next;
    pi_used[next] = 1;
  }
  return TnWitness{Permutation(std::vector<int>(tau_img.begin() + 1, tau_img.end())),
                   Permutation(std::vector<int>(pi_img.begin() + 1, pi_img.end()))};
}

FiniteTransformation tn_iso_map(const TnWitness& w, const FiniteTransformation& x) {
  return compose(compose(w.pi.inverse().as_transformation(), x),
                 w.tau.inverse().as_transformation());
}

std::uint64_t count_of_type(const TypeVector& t) {
  int n = t.degree();
  using uint128 = unsigned __int128;

  auto binomial = [](int top, int bottom) {
    uint128 value = 1;
    for (int i = 1; i <= bottom; ++i) value = value * static_cast<unsigned>(top - bottom + i) / static_cast<unsigned>(i);
    return value;
  };

  uint128 numerator = 1;
  for (int i = 2; i <= n; ++i) numerator *= static_cast<unsigned>(i);  // n!
  int remaining = n;
  for (int k = 1; k <= n; ++k) {
    numerator *= binomial(remaining, t[k]);
    remaining -= t[k];
  }
  uint128 denominator = 1;
  for (int k = 1; k <= n; ++k) {
    uint128 factorial = 1;
    for (int i = 2; i <= k; ++i) factorial *= static_cast<unsigned>(i);
    for (int j = 0; j < t[k]; ++j) denominator *= factorial;
  }
  uint128 result = numerator / denominator;
  if (numerator % denominator != 0 || result > UINT64_MAX) {
    throw std::overflow_error("count_of_type: value does not fit exact 64-bit arithmetic");
  }
  return static_cast<std::uint64_t>(result);
}

namespace {

// non-increasing part lists, in ascending lexicographic order
void partitions_rec(int remaining, int max_part, std::vector<int>& parts,
                    std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(parts);
    return;
  }
  for (int first = 1; first <= std::min(remaining, max_part); ++first) {
    parts.push_back(first);
    partitions_rec(remaining - first, first, parts, out);
    parts.pop_back();
  }
}

}  // namespace

std::vector<TypeVector> enumerate_types(int n) {
  if (n < 1) throw std::invalid_argument("degree must be at least 1");
  std::vector<std::vector<int>> partitions;
  std::vector<int> parts;
  // recursion emits parts largest-first; iterating the first part ascending
  // makes the partition list ascending lexicographic
  for (int first = 1; first <= n; ++first) {
    parts.push_back(first);
    partitions_rec(n - first, first, parts, partitions);
    parts.pop_back();
  }
  std::vector<TypeVector> out;
  out.reserve(partitions.size());
  for (const auto& p : partitions) {
    std::vector<int> counts(n, 0);
    for (int part : p) ++counts[part - 1];
    out.emplace_back(std::move(counts));
  }
  return out;
}

std::uint64_t partition_count(int n) {
  if (n < 0) throw std::invalid_argument("p(n) needs n >= 0");
  if (n > 128) throw std::invalid_argument("p(n) supported for n <= 128");
  // p(n, k) = partitions of n into parts <= k
  std::vector<std::vector<std::uint64_t>> p(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  for (int k = 0; k <= n; ++k) p[0][k] = 1;
  for (int total = 1; total <= n; ++total)
    for (int k = 1; k <= n; ++k)
      p[total][k] = p[total][k - 1] + (total >= k ? p[total - k][k] : 0);
  return n == 0 ? 1 : p[n][n];
}

}  // namespace sandwich
