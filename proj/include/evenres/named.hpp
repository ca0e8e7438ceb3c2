#pragma once

// Catalog of the named transformations: the permutations theta/eta/zeta/
// mu/sigma/rho/pi, the rank-(n-1) elements epsilon/beta/lambda/xi/nu,
// the rank-(n-2) kernel representatives gamma/delta, the block elements
// for the two-block groups, plus the published generating sets and the
// word identities relating them. Validity ranges are enforced at build
// time.

#include <optional>
#include <string>
#include <vector>

#include "evenres/transf.hpp"

namespace evenres {

enum class ElemId {
  Iota,
  SigmaCycle,  // the n-cycle (1,2,...,n)
  Rho,         // reversal x -> n+1-x
  Theta,       // (1,3)(2,4), n >= 4
  Eta,         // (3,5,...,n)(2,4,...,n-1), odd n >= 5
  Zeta,        // (1,3,...,n)(4,6,...,n-1), odd n >= 5
  MuN,         // even n
  MuPrimeN,    // even n
  Epsilon,     // [1,1,3,...,n], n >= 4
  EpsilonPrime,
  Beta1,       // n >= 5
  Beta2,
  Beta1Prime,
  Beta2Prime,
  Beta2i,      // indexed; i odd (odd n) / even (even n)
  LambdaI,     // indexed, 3 <= i <= n
  LambdaPrimeI,
  XiI,         // indexed, odd i
  XiPrimeI,
  NuI,         // indexed, even i
  NuPrimeI,
  GammaN,            // n >= 4
  GammaPrimeN,       // n >= 7
  GammaDoublePrimeN, // n >= 8
  DeltaN,            // n >= 5
  DeltaPrimeN,       // n >= 6
  Pi,                // (1,2)(3,4)...(n-1,n), even n
  OplusLambda,       // (1,2)(m+1,m+2) on [m+n]
  OplusMu,           // block cycle on [m]
  OplusMuPrime,      // block cycle on {m+1,...,m+n}
};

class OutOfRange : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct NamedElement {
  ElemId id;
  int n = 0;  // degree (= m + second block for the two-block elements)
  int i = 0;  // index for the indexed ids, first block size m for Oplus*

  static NamedElement of(ElemId id, int n) { return {id, n, 0}; }
  static NamedElement idx(ElemId id, int n, int i) { return {id, n, i}; }
  /// Two-block element for degrees (m, k); ground set [m+k].
  static NamedElement oplus(ElemId id, int m, int k) {
    return {id, m + k, m};
  }
};

/// The exact transformation each display defines. Throws OutOfRange with
/// the violated constraint in the message.
Transformation build(const NamedElement& e);

std::string elem_name(ElemId id);

enum class GenFamily { GammaGroup, DeltaMonoid, SigmaMonoid, GammaOplus, Bn, BnPrime };

struct GeneratingSetSpec {
  GenFamily family;
  int n;
  int m = 0;  // first block for GammaOplus
};

struct GenOptions {
  // odd-degree Gamma generators default to {theta, eta}; this switches to
  // the {theta, zeta} variant
  bool zeta_variant = false;
};

/// The minimal generating set the rank theorems name; empty for trivial
/// groups (n <= 3 except the Gamma_2 transposition). Size always equals
/// the published rank value.
std::vector<Transformation> generating_set(const GeneratingSetSpec& s,
                                           const GenOptions& opts = {});

/// One executable identity: the product of `word` must equal `expected`.
struct WordIdentity {
  std::string description;
  std::vector<Transformation> word;
  Transformation expected;

  Transformation evaluate() const;
  bool holds() const { return evaluate() == expected; }
};

/// All identities whose range/congruence guard admits n.
std::vector<WordIdentity> word_identities(int n);

/// Parses CLI element names: "epsilon@6", "gamma'@8", "lambda_i@9:5",
/// "theta@7", "beta_2i@9:7", "oplus_mu@4,3".
std::optional<NamedElement> parse_named(const std::string& text);

}  // namespace evenres
