#pragma once

// Value types for full transformations and partial permutations on
// {1,...,n}, plus the primitive operations: composition, restriction,
// inversion counting, parity, kernels, orders, cycle evaluation.
//
// Convention: points are 1-based everywhere in the public API and in all
// text syntax; composition acts left-to-right, x * (a*b) == (x*a)*b.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace evenres {

using Point = std::uint8_t;  // 1..n in the API, 0..n-1 in storage

class DegreeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NonInjectiveRestriction : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotAPermutation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Parity { Even, Odd };

/// A total map [n] -> [n], stored as the image tuple.
class Transformation {
 public:
  Transformation() = default;

  /// From a 1-based image tuple; img[i] is the image of point i+1.
  explicit Transformation(std::vector<Point> img_one_based);

  static Transformation identity(int n);

  int degree() const { return static_cast<int>(img_.size()); }

  /// Image of 1-based point p.
  int apply(int p) const { return img_[p - 1] + 1; }

  /// Number of distinct image values.
  int rank() const;

  bool is_permutation() const { return rank() == degree(); }

  /// this applied first, then rhs.
  Transformation operator*(const Transformation& rhs) const;

  bool operator==(const Transformation&) const = default;
  auto operator<=>(const Transformation&) const = default;

  /// 1-based image tuple.
  std::vector<int> images() const;

  const std::vector<Point>& raw() const { return img_; }

  std::string str() const;  // "[2,3,4,1]"

 private:
  std::vector<Point> img_;
};

/// An injective partial map on [n]; carrier of the inversion/parity theory.
/// Pairs are kept sorted by point; equality is structural.
class PartialPerm {
 public:
  PartialPerm() : n_(0) {}
  PartialPerm(int n, std::vector<std::pair<int, int>> pairs);

  int degree() const { return n_; }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

  std::vector<int> domain() const;
  std::vector<int> image() const;

  /// Image of p, or nullopt if p is outside the domain.
  std::optional<int> apply(int p) const;

  bool operator==(const PartialPerm&) const = default;

  std::string str() const;  // "{1:3, 2:1, 4:2}"

 private:
  int n_;
  std::vector<std::pair<int, int>> pairs_;  // sorted by point
};

/// The fiber partition of a transformation. Blocks partition [n]; the
/// number of blocks equals the rank of any transformation with this kernel.
class KernelPartition {
 public:
  KernelPartition(int n, std::vector<std::vector<int>> blocks);

  int degree() const { return n_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }

  /// Blocks of size >= 2, in canonical order.
  std::vector<std::vector<int>> nontrivial_blocks() const;

  bool operator==(const KernelPartition&) const = default;

  std::string str() const;

 private:
  int n_;
  std::vector<std::vector<int>> blocks_;  // each sorted; sorted by min element
};

/// A product of disjoint cycles, denoting a permutation that fixes
/// unlisted points.
struct CycleExpr {
  std::vector<std::vector<int>> cycles;
};

// --- operations ---

Transformation compose(const Transformation& a, const Transformation& b);

/// Restriction of a to X; throws NonInjectiveRestriction when two points
/// of X share an image.
PartialPerm restrict_to(const Transformation& a, const std::vector<int>& X);

/// Exact inversion count: pairs a < b of the domain with a*p > b*p.
/// Merge-counted above a small domain threshold, naive below it.
long long inversions(const PartialPerm& p);
long long inversions_naive(const PartialPerm& p);

Parity parity(const PartialPerm& p);

/// Parity of a full permutation (restriction to all of [n]).
Parity parity(const Transformation& a);

KernelPartition kernel(const Transformation& a);

/// Least k >= 1 with p^k = identity; throws NotAPermutation.
long long order(const Transformation& p);

/// The permutation of degree n denoted by c; throws on overlapping cycles
/// or points out of range.
Transformation eval_cycles(const CycleExpr& c, int n);

/// Disjoint-cycle decomposition (fixed points omitted, cycles opened at
/// their least point, sorted by least point).
CycleExpr cycle_decomposition(const Transformation& p);

/// Convenience: build a Transformation of degree n from 1-based images.
Transformation tf(std::initializer_list<int> img);
Transformation tf_vec(const std::vector<int>& img);

/// Convenience: permutation of degree n from cycles, e.g. cyc(4, {{1,3},{2,4}}).
Transformation cyc(int n, std::vector<std::vector<int>> cycles);

Transformation inverse(const Transformation& p);

}  // namespace evenres
