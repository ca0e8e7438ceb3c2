#pragma once

// Enumeration and verification machinery: closure with word recovery,
// family-equality checks, minimal-generating-set search, regularity,
// R-class counts, the two constructive factorization lemmas, kernel-orbit
// counting, and the generating-pair probe for the two-block groups.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "evenres/families.hpp"
#include "evenres/transf.hpp"

namespace evenres {

class NotAMember : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class PreconditionViolated : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BadKernel : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Packed image tuple, 4 bits per point, big-endian by point so that
/// numeric order equals lexicographic order on image tuples. n <= 16.
std::uint64_t pack(const Transformation& a);
Transformation unpack(std::uint64_t key, int n);

struct ClosureOptions {
  long long budget = 20'000'000;  // element cap
  int threads = 1;                // membership checks only; closure order
                                  // is scheduling-independent
};

/// A fully enumerated submonoid of T_n, canonically sorted, with one
/// factorization over the generators remembered per element.
class EnumeratedMonoid {
 public:
  int degree() const { return n_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<std::uint64_t>& packed() const { return elements_; }
  const std::vector<Transformation>& gens() const { return gens_; }

  Transformation element(std::size_t i) const;
  std::optional<std::size_t> position(const Transformation& a) const;
  bool contains(const Transformation& a) const;

  /// Generator indices whose product is the element at position i.
  std::vector<int> word_at(std::size_t i) const;

  friend EnumeratedMonoid closure(int n, std::vector<Transformation> gens,
                                  const ClosureOptions& opts);
  friend EnumeratedMonoid monoid_from_sorted(int n,
                                             std::vector<std::uint64_t> sorted,
                                             std::vector<Transformation> gens);

 private:
  int n_ = 0;
  std::vector<std::uint64_t> elements_;  // sorted ascending
  std::vector<Transformation> gens_;
  // factorizations, indexed in canonical (sorted) positions
  std::vector<std::int32_t> parent_;  // -1 for the identity
  std::vector<std::int16_t> via_gen_;
};

EnumeratedMonoid closure(int n, std::vector<Transformation> gens,
                         const ClosureOptions& opts = {});

/// Wraps an already-sorted element list (snapshot load path); words are
/// unavailable.
EnumeratedMonoid monoid_from_sorted(int n, std::vector<std::uint64_t> sorted,
                                    std::vector<Transformation> gens = {});

struct FamilyCheck {
  bool ok;
  std::string reason;  // empty on success
  std::optional<Transformation> counterexample;
};

/// True iff every element satisfies contains(f, .) and the size matches
/// the closed count.
FamilyCheck equals_family(const EnumeratedMonoid& M, const FamilySpec& f);

/// One word over M's generators evaluating to a; empty for the identity.
std::vector<int> factor_word(const EnumeratedMonoid& M,
                             const Transformation& a);

struct RankOptions {
  long long budget = 10'000'000;  // counted in closure elements produced
  // lower bound on rank-(n-1) non-unit generators (2 for the odd-n Delta
  // parity argument), 0 = derive nothing
  int min_rank_n1_generators = 0;
};

/// Least k <= max_size with a generating k-subset, or nullopt when the
/// budget ran out before the answer was certain.
std::optional<int> exhaustive_rank(const EnumeratedMonoid& target,
                                   int max_size, const RankOptions& opts = {});

struct RegularityResult {
  bool regular;
  std::optional<Transformation> witness;  // b with a b a = a, b in M
};

RegularityResult is_regular(const EnumeratedMonoid& M,
                            const Transformation& a);

struct RClassReport {
  KernelPartition kernel;
  long long class_size;
  long long members_in_family;
};

/// Enumerates the R-class of the given kernel (one 2-block {x,y} with
/// x + y odd) and counts the members of Sigma_n in it.
RClassReport r_class_half_check(int n, const KernelPartition& kernel);

/// a = a1 * a2 with rank(a1) = rank(a)+1, rank(a2) = n-2, both outside X.
std::pair<Transformation, Transformation> lemma_delta1_factor(
    const Transformation& a);

struct Normalization {
  Transformation sigma, tau;
  int c;  // 1 or 2; the common image of 1 and 2 under sigma a tau
};

/// sigma, tau in Gamma_n with 1(sigma a tau) = 2(sigma a tau) = c.
Normalization lemma_delta2_normalize(const Transformation& a);

struct OrbitReport {
  int orbit_count;
  std::vector<KernelPartition> representatives;
};

/// Orbits of admissible rank-(n-2) kernels (all blocks parity-
/// monochromatic: two 2-blocks or one 3-block) under the preimage action
/// of the unit group. Kernels only; nothing is enumerated.
OrbitReport kernel_orbit_count(int n);

struct ProbeResult {
  enum class Kind { RankIsTwo, NoPairFound, BudgetExceeded } kind;
  std::vector<Transformation> witness;  // the generating pair, if any
  bool exhaustive = false;
};

/// Searches for a 2-element generating set of the two-block group on
/// degrees (m, k). RankIsTwo means a pair exists (rank <= 2).
ProbeResult conjecture_probe(int m, int k, long long budget = 2'000'000,
                             std::uint64_t seed = 0x5eed5eedULL);

// --- snapshots ---

void save_snapshot(const std::filesystem::path& file,
                   const EnumeratedMonoid& M);
std::optional<EnumeratedMonoid> load_snapshot(const std::filesystem::path& file);

/// Content digest of a generator list; names snapshot files.
std::string generator_digest(int n, const std::vector<Transformation>& gens);

/// Makes oracle_contains work for DeltaT at mid-range widths by closing
/// over SigmaT(t) elements of rank >= n-1 on demand (small n only).
void register_engine_oracle(long long budget = 20'000'000);

}  // namespace evenres
