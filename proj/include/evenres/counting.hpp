#pragma once

// Exact evaluation of the cardinality formulas: the unit-group and
// monoid sizes, the rank strata, and the summary table.

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "evenres/families.hpp"

namespace evenres {

using BigInt = boost::multiprecision::cpp_int;

class NoFormula : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Stirling number of the second kind with the zero convention for
/// b <= 0 or b > a (a >= 1).
BigInt stirling2(int a, int b);

BigInt factorial(int n);
BigInt binomial(int n, int k);

/// Closed-form count of the family; throws NoFormula where none is
/// proved (SigmaT/DeltaT at mid-range widths).
BigInt card(const FamilySpec& f);

// rank strata used by the table and the closure cross-checks
BigInt card_sigma_rank_n1(int n);     // |Sigma_n(r = n-1)|
BigInt card_rank_le_n2(int n);        // |T_n(r <= n-2)|
BigInt card_sigma_minus_delta(int n); // |Sigma_n \ Delta_n| = |X|

struct CountReport {
  int n;
  BigInt gamma, sym, delta, sigma, full_t;
  BigInt pap, pap_plus, pap_minus;
  BigInt sigma_rank_n1, rank_le_n2, sigma_minus_delta;
};

CountReport count_report(int n);

/// Rows n = 1..max_n.
std::vector<CountReport> table(int max_n);

}  // namespace evenres
