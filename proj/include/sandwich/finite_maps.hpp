#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace sandwich {

/// Families of finite map semigroups handled by the enumerators.
/// T = total self-maps of {1..n}, IS = injective partial self-maps,
/// S = permutations.
enum class Family { T, IS, S };

Family parse_family(std::string_view name);
std::string_view family_name(Family f);

/// Degrees above this are rejected by the enumerators unless the caller
/// passes a larger cap explicitly.
inline constexpr int kDefaultEnumerationCap = 5;

/// Total self-map of {1..n}. Points are 1-based in the whole public
/// interface; values are immutable after construction.
class FiniteTransformation {
 public:
  /// images[i-1] is the image of point i; every entry must lie in {1..n}.
  explicit FiniteTransformation(std::vector<int> images);

  static FiniteTransformation identity(int degree);
  static FiniteTransformation constant(int degree, int value);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[point - 1]; }
  const std::vector<int>& images() const { return images_; }

  /// Number of distinct image points.
  int image_size() const;

  bool operator==(const FiniteTransformation&) const = default;
  /// Lexicographic on image sequences; the enumeration order.
  friend bool operator<(const FiniteTransformation& lhs, const FiniteTransformation& rhs);

 private:
  std::vector<int> images_;
};

/// Injective partial self-map of {1..n}. Undefined points are the
/// complement of the domain; defined image values are pairwise distinct.
class PartialInjection {
 public:
  static constexpr int kUndefined = 0;

  /// images[i-1] is the image of point i, or kUndefined.
  explicit PartialInjection(std::vector<int> images);

  static PartialInjection identity(int degree);
  static PartialInjection empty(int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  bool defined_at(int point) const { return images_[point - 1] != kUndefined; }
  /// Image of a defined point; kUndefined otherwise.
  int operator()(int point) const { return images_[point - 1]; }
  const std::vector<int>& images() const { return images_; }

  std::vector<int> domain() const;  // ascending
  std::vector<int> range() const;   // ascending
  /// |ran| = |dom|.
  int rank() const;

  bool operator==(const PartialInjection&) const = default;
  /// Lexicographic on image sequences with "undefined" sorting last;
  /// the enumeration order.
  friend bool operator<(const PartialInjection& lhs, const PartialInjection& rhs);

 private:
  std::vector<int> images_;
};

/// Total bijective self-map of {1..n}.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[point - 1]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  FiniteTransformation as_transformation() const;
  PartialInjection as_partial_injection() const;

  bool operator==(const Permutation&) const = default;
  friend bool operator<(const Permutation& lhs, const Permutation& rhs) {
    return lhs.images_ < rhs.images_;
  }

 private:
  std::vector<int> images_;
};

/// Left-to-right composition: (x.y)(p) = y(x(p)).
FiniteTransformation compose(const FiniteTransformation& x, const FiniteTransformation& y);
/// Left-to-right composition; (x.y)(p) is defined iff p is in dom(x) and
/// x(p) is in dom(y).
PartialInjection compose(const PartialInjection& x, const PartialInjection& y);
Permutation compose(const Permutation& x, const Permutation& y);

int rank(const PartialInjection& alpha);

/// dom(result) = ran(alpha) and result(alpha(x)) = x.
PartialInjection inverse(const PartialInjection& alpha);

/// Partition of {1..n} by equal image under a fixed total map: x and y
/// share a block iff a(x) = a(y). Each block is tagged with the common
/// image point.
class KernelPartition {
 public:
  struct Block {
    int tag;                  // common image of the block
    std::vector<int> points;  // ascending
  };

  explicit KernelPartition(const FiniteTransformation& a);

  int degree() const { return degree_; }
  /// Blocks ordered by ascending tag.
  const std::vector<Block>& blocks() const { return blocks_; }
  bool has_tag(int tag) const;
  /// Size of the block whose tag is the given image point; throws if the
  /// point is not in the image.
  int block_size(int tag) const;
  int min_block_size() const;
  int block_count() const { return static_cast<int>(blocks_.size()); }

 private:
  int degree_;
  std::vector<Block> blocks_;
};

KernelPartition kernel_partition(const FiniteTransformation& a);

/// Preimage profile (a_1,...,a_n) of a total map: entry k counts the image
/// points with exactly k preimages. Satisfies sum k*a_k = n and
/// sum a_k = |image|.
class TypeVector {
 public:
  /// counts[k-1] = number of image points with exactly k preimages.
  explicit TypeVector(std::vector<int> counts);

  int degree() const { return static_cast<int>(counts_.size()); }
  /// a_k for 1-based k.
  int operator[](int k) const { return counts_[k - 1]; }
  const std::vector<int>& counts() const { return counts_; }
  int image_size() const;

  std::string to_string() const;  // "(1,1,0)"

  bool operator==(const TypeVector&) const = default;
  friend bool operator<(const TypeVector& lhs, const TypeVector& rhs) {
    return lhs.counts_ < rhs.counts_;
  }

 private:
  std::vector<int> counts_;
};

TypeVector type_of(const FiniteTransformation& a);

/// All elements of the family at the given degree, in lexicographic order
/// of image sequences (undefined last for IS). Throws when n exceeds the
/// cap, naming the cap in the message.
std::vector<FiniteTransformation> enumerate_transformations(int n, int cap = kDefaultEnumerationCap);
std::vector<PartialInjection> enumerate_partial_injections(int n, int cap = kDefaultEnumerationCap);
std::vector<Permutation> enumerate_permutations(int n, int cap = kDefaultEnumerationCap);

// Element literal grammar shared by the CLI and report files:
//   FiniteTransformation  [2,1,3]   (image of 1, then 2, ...)
//   PartialInjection      [2,-,3]   (- marks an undefined point)
//   Permutation           same as FiniteTransformation, validated bijective
std::string to_literal(const FiniteTransformation& x);
std::string to_literal(const PartialInjection& x);
std::string to_literal(const Permutation& x);
FiniteTransformation parse_transformation(std::string_view text);
PartialInjection parse_partial_injection(std::string_view text);
Permutation parse_permutation(std::string_view text);

}  // namespace sandwich
