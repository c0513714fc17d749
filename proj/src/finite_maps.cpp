#include "sandwich/finite_maps.hpp"

#include <algorithm>
#include <charconv>
#include <climits>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace sandwich {

namespace {

void check_degree(int n) {
  if (n < 1) throw std::invalid_argument("degree must be at least 1, got " + std::to_string(n));
}

void check_cap(std::string_view family, int n, int cap) {
  check_degree(n);
  if (n > cap) {
    throw std::invalid_argument("enumeration of " + std::string(family) + "_" + std::to_string(n) +
                                " exceeds the enumeration cap " + std::to_string(cap) +
                                "; pass a larger cap to proceed");
  }
}

void check_same_degree(int lhs, int rhs) {
  if (lhs != rhs) {
    throw std::invalid_argument("degree mismatch: " + std::to_string(lhs) + " vs " +
                                std::to_string(rhs));
  }
}

// undefined sorts after every point
int order_key(int image) { return image == PartialInjection::kUndefined ? INT_MAX : image; }

}  // namespace

Family parse_family(std::string_view name) {
  if (name == "T") return Family::T;
  if (name == "IS") return Family::IS;
  if (name == "S") return Family::S;
  throw std::invalid_argument("unknown family '" + std::string(name) + "' (expected T, IS or S)");
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::T: return "T";
    case Family::IS: return "IS";
    case Family::S: return "S";
  }
  return "?";
}

FiniteTransformation::FiniteTransformation(std::vector<int> images) : images_(std::move(images)) {
  check_degree(degree());
  for (int v : images_) {
    if (v < 1 || v > degree()) {
      throw std::invalid_argument("transformation image " + std::to_string(v) +
                                  " outside {1.." + std::to_string(degree()) + "}");
    }
  }
}

FiniteTransformation FiniteTransformation::identity(int degree) {
  check_degree(degree);
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 1);
  return FiniteTransformation(std::move(img));
}

FiniteTransformation FiniteTransformation::constant(int degree, int value) {
  check_degree(degree);
  return FiniteTransformation(std::vector<int>(degree, value));
}

int FiniteTransformation::image_size() const {
  std::vector<char> seen(degree() + 1, 0);
  int count = 0;
  for (int v : images_) count += !std::exchange(seen[v], 1);
  return count;
}

bool operator<(const FiniteTransformation& lhs, const FiniteTransformation& rhs) {
  if (lhs.degree() != rhs.degree()) return lhs.degree() < rhs.degree();
  return lhs.images_ < rhs.images_;
}

PartialInjection::PartialInjection(std::vector<int> images) : images_(std::move(images)) {
  check_degree(degree());
  std::vector<char> seen(degree() + 1, 0);
  for (int v : images_) {
    if (v == kUndefined) continue;
    if (v < 1 || v > degree()) {
      throw std::invalid_argument("partial injection image " + std::to_string(v) +
                                  " outside {1.." + std::to_string(degree()) + "}");
    }
    if (std::exchange(seen[v], 1)) {
      throw std::invalid_argument("partial injection repeats image " + std::to_string(v));
    }
  }
}

PartialInjection PartialInjection::identity(int degree) {
  check_degree(degree);
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 1);
  return PartialInjection(std::move(img));
}

PartialInjection PartialInjection::empty(int degree) {
  check_degree(degree);
  return PartialInjection(std::vector<int>(degree, kUndefined));
}

std::vector<int> PartialInjection::domain() const {
  std::vector<int> dom;
  for (int p = 1; p <= degree(); ++p)
    if (defined_at(p)) dom.push_back(p);
  return dom;
}

std::vector<int> PartialInjection::range() const {
  std::vector<int> ran;
  for (int v : images_)
    if (v != kUndefined) ran.push_back(v);
  std::sort(ran.begin(), ran.end());
  return ran;
}

int PartialInjection::rank() const {
  return static_cast<int>(std::count_if(images_.begin(), images_.end(),
                                        [](int v) { return v != kUndefined; }));
}

bool operator<(const PartialInjection& lhs, const PartialInjection& rhs) {
  if (lhs.degree() != rhs.degree()) return lhs.degree() < rhs.degree();
  for (int i = 0; i < lhs.degree(); ++i) {
    int a = order_key(lhs.images_[i]);
    int b = order_key(rhs.images_[i]);
    if (a != b) return a < b;
  }
  return false;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  check_degree(degree());
  std::vector<char> seen(degree() + 1, 0);
  for (int v : images_) {
    if (v < 1 || v > degree() || std::exchange(seen[v], 1)) {
      throw std::invalid_argument("not a permutation of {1.." + std::to_string(degree()) + "}");
    }
  }
}

Permutation Permutation::identity(int degree) {
  check_degree(degree);
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 1);
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(degree());
  for (int p = 1; p <= degree(); ++p) img[images_[p - 1] - 1] = p;
  return Permutation(std::move(img));
}

FiniteTransformation Permutation::as_transformation() const {
  return FiniteTransformation(images_);
}

PartialInjection Permutation::as_partial_injection() const {
  return PartialInjection(images_);
}

FiniteTransformation compose(const FiniteTransformation& x, const FiniteTransformation& y) {
  check_same_degree(x.degree(), y.degree());
  const auto& xi = x.images();
  const auto& yi = y.images();
  std::vector<int> img(xi.size());
  for (size_t i = 0; i < xi.size(); ++i) img[i] = yi[xi[i] - 1];
  return FiniteTransformation(std::move(img));
}

PartialInjection compose(const PartialInjection& x, const PartialInjection& y) {
  check_same_degree(x.degree(), y.degree());
  const auto& xi = x.images();
  const auto& yi = y.images();
  std::vector<int> img(xi.size(), PartialInjection::kUndefined);
  for (size_t i = 0; i < xi.size(); ++i)
    if (xi[i] != PartialInjection::kUndefined) img[i] = yi[xi[i] - 1];
  return PartialInjection(std::move(img));
}

Permutation compose(const Permutation& x, const Permutation& y) {
  check_same_degree(x.degree(), y.degree());
  const auto& xi = x.images();
  const auto& yi = y.images();
  std::vector<int> img(xi.size());
  for (size_t i = 0; i < xi.size(); ++i) img[i] = yi[xi[i] - 1];
  return Permutation(std::move(img));
}

int rank(const PartialInjection& alpha) { return alpha.rank(); }

PartialInjection inverse(const PartialInjection& alpha) {
  std::vector<int> img(alpha.degree(), PartialInjection::kUndefined);
  for (int p = 1; p <= alpha.degree(); ++p)
    if (alpha.defined_at(p)) img[alpha(p) - 1] = p;
  return PartialInjection(std::move(img));
}

KernelPartition::KernelPartition(const FiniteTransformation& a) : degree_(a.degree()) {
  std::vector<std::vector<int>> by_tag(degree_ + 1);
  for (int p = 1; p <= degree_; ++p) by_tag[a(p)].push_back(p);
  for (int t = 1; t <= degree_; ++t)
    if (!by_tag[t].empty()) blocks_.push_back(Block{t, std::move(by_tag[t])});
}

bool KernelPartition::has_tag(int tag) const {
  for (const auto& b : blocks_)
    if (b.tag == tag) return true;
  return false;
}

int KernelPartition::block_size(int tag) const {
  for (const auto& b : blocks_)
    if (b.tag == tag) return static_cast<int>(b.points.size());
  throw std::invalid_argument("point " + std::to_string(tag) + " is not in the image");
}

int KernelPartition::min_block_size() const {
  size_t m = blocks_.front().points.size();
  for (const auto& b : blocks_) m = std::min(m, b.points.size());
  return static_cast<int>(m);
}

KernelPartition kernel_partition(const FiniteTransformation& a) { return KernelPartition(a); }

TypeVector::TypeVector(std::vector<int> counts) : counts_(std::move(counts)) {
  check_degree(degree());
  long long weighted = 0;
  for (int k = 1; k <= degree(); ++k) {
    if (counts_[k - 1] < 0) throw std::invalid_argument("type vector entries must be nonnegative");
    weighted += static_cast<long long>(k) * counts_[k - 1];
  }
  if (weighted != degree()) {
    throw std::invalid_argument("invalid type vector: sum k*a_k = " + std::to_string(weighted) +
                                ", expected " + std::to_string(degree()));
  }
}

int TypeVector::image_size() const {
  return std::accumulate(counts_.begin(), counts_.end(), 0);
}

std::string TypeVector::to_string() const {
  std::string out = "(";
  for (int i = 0; i < degree(); ++i) {
    if (i) out += ',';
    out += std::to_string(counts_[i]);
  }
  return out + ")";
}

TypeVector type_of(const FiniteTransformation& a) {
  std::vector<int> counts(a.degree(), 0);
  KernelPartition kernel(a);
  for (const auto& block : kernel.blocks()) ++counts[block.points.size() - 1];
  return TypeVector(std::move(counts));
}

std::vector<FiniteTransformation> enumerate_transformations(int n, int cap) {
  check_cap("T", n, cap);
  std::vector<FiniteTransformation> out;
  std::vector<int> img(n, 1);
  for (;;) {
    out.emplace_back(img);
    int pos = n - 1;
    while (pos >= 0 && img[pos] == n) img[pos--] = 1;
    if (pos < 0) break;
    ++img[pos];
  }
  return out;
}

std::vector<PartialInjection> enumerate_partial_injections(int n, int cap) {
  check_cap("IS", n, cap);
  std::vector<PartialInjection> out;
  std::vector<int> img(n, PartialInjection::kUndefined);
  std::vector<char> used(n + 1, 0);
  // at each position the choices 1..n come before "undefined", which yields
  // the documented lexicographic order
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == n) {
      out.emplace_back(img);
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (used[v]) continue;
      used[v] = 1;
      img[pos] = v;
      self(self, pos + 1);
      used[v] = 0;
    }
    img[pos] = PartialInjection::kUndefined;
    self(self, pos + 1);
  };
  rec(rec, 0);
  return out;
}

std::vector<Permutation> enumerate_permutations(int n, int cap) {
  check_cap("S", n, cap);
  std::vector<Permutation> out;
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

namespace {

std::string images_to_literal(const std::vector<int>& images) {
  std::string out = "[";
  for (size_t i = 0; i < images.size(); ++i) {
    if (i) out += ',';
    out += images[i] == PartialInjection::kUndefined ? "-" : std::to_string(images[i]);
  }
  return out + "]";
}

// parses "[2,-,3]" into entries with kUndefined for '-'
std::vector<int> parse_images(std::string_view text, bool allow_undefined) {
  size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && text[i] == ' ') ++i; };
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("bad element literal '" + std::string(text) + "': " + why);
  };
  skip_ws();
  if (i >= text.size() || text[i] != '[') fail("expected '['");
  ++i;
  std::vector<int> images;
  for (;;) {
    skip_ws();
    if (i >= text.size()) fail("unterminated literal");
    if (text[i] == '-') {
      if (!allow_undefined) fail("'-' is only valid for partial injections");
      images.push_back(PartialInjection::kUndefined);
      ++i;
    } else {
      int value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
      if (ec != std::errc()) fail("expected a point number or '-'");
      i = static_cast<size_t>(ptr - text.data());
      images.push_back(value);
    }
    skip_ws();
    if (i >= text.size()) fail("unterminated literal");
    if (text[i] == ',') {
      ++i;
      continue;
    }
    if (text[i] == ']') {
      ++i;
      break;
    }
    fail("expected ',' or ']'");
  }
  skip_ws();
  if (i != text.size()) fail("trailing characters");
  return images;
}

}  // namespace

std::string to_literal(const FiniteTransformation& x) { return images_to_literal(x.images()); }
std::string to_literal(const PartialInjection& x) { return images_to_literal(x.images()); }
std::string to_literal(const Permutation& x) { return images_to_literal(x.images()); }

FiniteTransformation parse_transformation(std::string_view text) {
  return FiniteTransformation(parse_images(text, false));
}

PartialInjection parse_partial_injection(std::string_view text) {
  return PartialInjection(parse_images(text, true));
}

Permutation parse_permutation(std::string_view text) {
  return Permutation(parse_images(text, false));
}

}  // namespace sandwich
