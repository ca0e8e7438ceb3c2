#include "doctest.h"
#include "evenres/counting.hpp"
#include "evenres/engine.hpp"
#include "evenres/named.hpp"

using namespace evenres;

namespace {
template <class F>
void for_all_maps(int n, F&& f) {
  std::vector<int> img(n, 1);
  for (;;) {
    f(tf_vec(img));
    int i = n - 1;
    while (i >= 0 && img[i] == n) img[i--] = 1;
    if (i < 0) break;
    ++img[i];
  }
}

long long brute_count(const FamilySpec& f) {
  long long c = 0;
  for_all_maps(f.n, [&](const Transformation& a) {
    if (contains(f, a)) ++c;
  });
  return c;
}
}  // namespace

TEST_CASE("stirling numbers") {
  CHECK(stirling2(4, 2) == 7);
  CHECK(stirling2(5, 3) == 25);
  CHECK(stirling2(6, 1) == 1);
  CHECK(stirling2(3, 0) == 0);
  CHECK(stirling2(3, 4) == 0);
  CHECK(stirling2(3, -1) == 0);
}

TEST_CASE("published column values") {
  CHECK(card(FamilySpec::make(FamilyTag::Gamma, 10)) == 14400);
  CHECK(card(FamilySpec::make(FamilyTag::Delta, 10)) == BigInt("9120890710"));
  CHECK(card(FamilySpec::make(FamilyTag::Sigma, 10)) == BigInt("9878449600"));
  CHECK(card(FamilySpec::make(FamilyTag::Sigma, 3)) == 10);
  CHECK(card(FamilySpec::make(FamilyTag::Delta, 2)) == 4);
  CHECK(card(FamilySpec::make(FamilyTag::Gamma, 3)) == 1);
  CHECK(card(FamilySpec::make(FamilyTag::PAP, 6)) == 72);
}

TEST_CASE("formulas match brute force (n <= 5)") {
  for (int n = 1; n <= 5; ++n) {
    for (FamilyTag tag : {FamilyTag::Gamma, FamilyTag::Sigma, FamilyTag::Delta,
                          FamilyTag::PAP, FamilyTag::PAPplus,
                          FamilyTag::PAPminus, FamilyTag::ScriptX}) {
      if (tag == FamilyTag::ScriptX && n < 3) continue;
      auto f = FamilySpec::make(tag, n);
      INFO(f.str());
      CHECK(card(f) == brute_count(f));
    }
    if (n >= 3) {
      CHECK(card_sigma_rank_n1(n) ==
            brute_count(FamilySpec::make(FamilyTag::Sigma, n)) -
                brute_count(FamilySpec::make(FamilyTag::Gamma, n)) -
                card_rank_le_n2(n));
      long long low = 0;
      for_all_maps(n, [&](const Transformation& a) {
        if (a.rank() <= n - 2) ++low;
      });
      CHECK(card_rank_le_n2(n) == low);
    }
  }
}

TEST_CASE("two-block group sizes") {
  for (int m = 2; m <= 4; ++m)
    for (int k = 2; k <= m; ++k) {
      if (m + k > 7) continue;
      CHECK(card(FamilySpec::oplus(m, k)) ==
            brute_count(FamilySpec::oplus(m, k)));
      CHECK(card(FamilySpec::oplus(m, k)) ==
            factorial(m) * factorial(k) / 2);
    }
}

TEST_CASE("shape family size: (n-2)!/2") {
  for (int n = 5; n <= 6; ++n) {
    CHECK(card(FamilySpec::make(FamilyTag::Bn, n)) ==
          factorial(n - 2) / 2);
    CHECK(card(FamilySpec::make(FamilyTag::Bn, n)) ==
          brute_count(FamilySpec::make(FamilyTag::Bn, n)));
  }
}

TEST_CASE("width endpoints and periodic widths") {
  CHECK(card(FamilySpec::width(FamilyTag::SigmaT, 5, 1)) == 3125);
  // width n: everything except the odd permutations
  CHECK(card(FamilySpec::width(FamilyTag::SigmaT, 5, 5)) ==
        3125 - factorial(5) / 2);
  CHECK(card(FamilySpec::width(FamilyTag::GammaT, 7, 2)) == 1);
  CHECK(card(FamilySpec::width(FamilyTag::GammaT, 7, 3)) == 7);
  CHECK(card(FamilySpec::width(FamilyTag::GammaT, 8, 4)) == 2);
  CHECK(card(FamilySpec::width(FamilyTag::GammaT, 9, 5)) == 18);
  CHECK_THROWS_AS(card(FamilySpec::width(FamilyTag::SigmaT, 7, 4)), NoFormula);
}

TEST_CASE("report invariants up to n = 30") {
  for (int n = 1; n <= 30; ++n) {
    auto r = count_report(n);
    CHECK(r.pap == r.pap_plus + r.pap_minus);
    CHECK(r.sigma == r.delta + r.sigma_minus_delta);
    if (n >= 3) {
      CHECK(r.pap == 2 * r.gamma);
      CHECK(r.sigma == r.gamma + r.sigma_rank_n1 + r.rank_le_n2);
    }
    CHECK(r.delta <= r.sigma);
    CHECK(r.sigma <= r.full_t);
  }
}

TEST_CASE("table shape") {
  auto rows = table(3);
  REQUIRE(rows.size() == 3);
  CHECK(rows[2].delta == 10);
  CHECK(rows[2].sigma == 10);
  CHECK(rows[0].gamma == 1);
}
