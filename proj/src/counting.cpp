#include "evenres/counting.hpp"

namespace evenres {

namespace {

BigInt ipow(BigInt b, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt stirling2(int a, int b) {
  if (a < 1) throw std::invalid_argument("stirling2: a must be >= 1");
  if (b <= 0 || b > a) return 0;
  // S(a,b) = b S(a-1,b) + S(a-1,b-1), row by row
  std::vector<BigInt> row(b + 1, 0);
  row[std::min(1, b)] = 1;  // row a=1
  for (int i = 2; i <= a; ++i)
    for (int j = std::min(i, b); j >= 1; --j) row[j] = j * row[j] + row[j - 1];
  return row[b];
}

BigInt card_sigma_rank_n1(int n) {
  if (n % 2 == 1) return factorial(n) * (n - 1) * (n + 1) / 8;
  return factorial(n) * n * n / 8;
}

BigInt card_rank_le_n2(int n) {
  return ipow(n, n) - (1 + binomial(n, 2)) * factorial(n);
}

BigInt card_sigma_minus_delta(int n) {
  if (n < 3) return 0;
  const int h = (n + 1) / 2;   // odd points
  const int hp = n / 2;        // even points
  BigInt total = 0;
  for (int r = 1; r <= n - 2; ++r) {
    BigInt kernels = 0;
    for (int s = 1; s <= h; ++s)
      kernels += stirling2(h, s) * stirling2(hp, r - s);
    total += binomial(n, r) * factorial(r) * kernels;
  }
  return total;
}

namespace {

BigInt card_pap(int n) {
  if (n % 2 == 0) {
    BigInt half = factorial(n / 2);
    return 2 * half * half;
  }
  return factorial((n - 1) / 2) * factorial((n + 1) / 2);
}

BigInt card_gamma(int n) {
  if (n <= 2) return factorial(n);
  return card_pap(n) / 2;
}

BigInt card_sigma(int n) {
  if (n <= 2) return ipow(n, n);
  return card_rank_le_n2(n) + card_sigma_rank_n1(n) + card_gamma(n);
}

[[noreturn]] void no_formula(const FamilySpec& f) {
  throw NoFormula("no closed count for " + f.str());
}

}  // namespace

BigInt card(const FamilySpec& f) {
  const int n = f.n;
  switch (f.tag) {
    case FamilyTag::FullT:
      return ipow(n, n);
    case FamilyTag::Sym:
      return factorial(n);
    case FamilyTag::Alt:
      return n <= 1 ? 1 : factorial(n) / 2;
    case FamilyTag::PAP:
      return card_pap(n);
    case FamilyTag::PAPplus:
      return n % 2 == 1 ? card_pap(n) : card_pap(n) / 2;
    case FamilyTag::PAPminus:
      return n % 2 == 1 ? 0 : card_pap(n) / 2;
    case FamilyTag::Gamma:
      return card_gamma(n);
    case FamilyTag::GammaPlus:
      return n % 2 == 1 || n <= 2 ? card_gamma(n) : card_gamma(n) / 2;
    case FamilyTag::GammaMinus:
      return n % 2 == 1 || n <= 2 ? 0 : card_gamma(n) / 2;
    case FamilyTag::Sigma:
      return card_sigma(n);
    case FamilyTag::Delta:
      return card_sigma(n) - card_sigma_minus_delta(n);
    case FamilyTag::ScriptX:
      return card_sigma_minus_delta(n);
    case FamilyTag::GammaOplus: {
      const int m = f.m, k = n - f.m;
      if (m + k <= 2) return 1;
      return factorial(m) * factorial(k) / 2;
    }
    case FamilyTag::Bn:
    case FamilyTag::BnPrime:
      if (n < 5) no_formula(f);
      return factorial(n - 2) / 2;
    case FamilyTag::GammaT: {
      const int t = f.t;
      if (t == 1) return factorial(n);
      if (t == n) return n <= 1 ? 1 : factorial(n) / 2;
      if (t == n - 1) return card_gamma(n);
      switch (t % 4) {
        case 2: return 1;
        case 3: return n;
        case 0: return 2;
        default: return 2 * n;
      }
    }
    case FamilyTag::SigmaT:
    case FamilyTag::DeltaT: {
      const int t = f.t;
      if (t == 1) return ipow(n, n);
      if (t == n) return ipow(n, n) - factorial(n) / 2;
      if (t == n - 1)
        return f.tag == FamilyTag::SigmaT
                   ? card_sigma(n)
                   : card_sigma(n) - card_sigma_minus_delta(n);
      no_formula(f);
    }
    default:
      no_formula(f);
  }
}

CountReport count_report(int n) {
  CountReport r;
  r.n = n;
  r.gamma = card_gamma(n);
  r.sym = factorial(n);
  r.sigma = card_sigma(n);
  r.delta = r.sigma - card_sigma_minus_delta(n);
  r.full_t = ipow(n, n);
  r.pap = card_pap(n);
  r.pap_plus = card(FamilySpec::make(FamilyTag::PAPplus, n));
  r.pap_minus = card(FamilySpec::make(FamilyTag::PAPminus, n));
  r.sigma_rank_n1 = n >= 3 ? card_sigma_rank_n1(n) : 0;
  r.rank_le_n2 = card_rank_le_n2(n);
  r.sigma_minus_delta = card_sigma_minus_delta(n);
  return r;
}

std::vector<CountReport> table(int max_n) {
  std::vector<CountReport> rows;
  for (int n = 1; n <= max_n; ++n) rows.push_back(count_report(n));
  return rows;
}

}  // namespace evenres
