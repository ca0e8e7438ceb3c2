#pragma once

// Membership predicates for the families under study: a definition-based
// brute-force oracle and the proved fast characterizations, plus the
// type A / type B classification of rank-(n-2) maps and the X predicate
// (all fibers parity-monochromatic).

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "evenres/transf.hpp"

namespace evenres {

enum class FamilyTag {
  FullT,
  Sym,
  Alt,
  PAP,
  PAPplus,
  PAPminus,
  GammaT,   // width parameter t
  SigmaT,   // width parameter t
  DeltaT,   // width parameter t
  Gamma,    // = GammaT(n-1)
  GammaPlus,
  GammaMinus,
  Delta,    // = DeltaT(n-1)
  Sigma,    // = SigmaT(n-1)
  ScriptX,
  GammaOplus,  // block degrees m, n on ground set [m+n]
  OrderPreserving,
  Monotone,
  OrientationPreserving,
  Oriented,
  Bn,
  BnPrime,
};

struct FamilySpec {
  FamilyTag tag;
  int n = 0;  // degree (ground set size m+n for GammaOplus)
  int t = 0;  // width for GammaT/SigmaT/DeltaT
  int m = 0;  // first block size for GammaOplus (second is n-m)

  static FamilySpec make(FamilyTag tag, int n) { return {tag, n, 0, 0}; }
  static FamilySpec width(FamilyTag tag, int n, int t) { return {tag, n, t, 0}; }
  static FamilySpec oplus(int m, int n) {
    return {FamilyTag::GammaOplus, m + n, 0, m};
  }

  std::string str() const;
};

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what, long long partial = 0)
      : std::runtime_error(what), partial_count(partial) {}
  long long partial_count;
};

class NoOracle : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Work bound for the definition-based oracles (restriction scans).
struct OracleOptions {
  long long budget = 200'000'000;  // counted in scanned restrictions
  bool paranoid = false;           // full subset scan even where two
                                   // transversals are known to suffice
};

/// Membership decided purely from the definitions. Throws BudgetExceeded
/// when the subset scan exceeds the work bound, NoOracle where no
/// definitional decision procedure exists without enumeration and none
/// has been installed (DeltaT at mid-range widths).
bool oracle_contains(const FamilySpec& f, const Transformation& a,
                     const OracleOptions& opts = {});

/// Same answer as oracle_contains, via the proved characterizations.
bool contains(const FamilySpec& f, const Transformation& a);

/// Engine hook: closure-backed membership used by the DeltaT oracle at
/// widths with no definitional test (2 <= t <= n-2).
using EnumeratedMembershipFn =
    std::function<bool(const FamilySpec&, const Transformation&)>;
void install_enumerated_membership(EnumeratedMembershipFn fn);

// --- helpers the fast paths are built from (exposed for tests/CLI) ---

bool is_pap(const Transformation& a);

enum class PapSplit { Plus, Minus, NotPAP };
PapSplit pap_split(const Transformation& a);

/// Rank <= n-2 and every fiber parity-monochromatic.
bool in_script_x(const Transformation& a);

bool is_order_preserving(const Transformation& a);
bool is_order_reversing(const Transformation& a);
bool is_orientation_preserving(const Transformation& a);
bool is_orientation_reversing(const Transformation& a);

/// One fiber of size 3 (type A) or two fibers of size 2 (type B).
struct Rank2Shape {
  enum class Variant { TypeA, TypeB } variant;
  std::vector<std::vector<int>> fibers;  // one triple, or two pairs
};

class WrongRank : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Rank2Shape classify_rank_n_minus_2(const Transformation& a);

/// Human-readable membership explanation for the CLI: the rule that fired
/// or the witness that refutes membership.
std::string explain_membership(const FamilySpec& f, const Transformation& a);

/// Parses CLI family names: gamma, sigma, delta, pap, pap+, pap-,
/// gamma_t@3, sigma_t@3, delta_t@3, scriptX, gamma_oplus@2,3, o, m, op, or,
/// sym, alt, t, gamma+, gamma-, b, b'.
std::optional<FamilySpec> parse_family(const std::string& name, int n);

}  // namespace evenres
