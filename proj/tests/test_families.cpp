#include <random>

#include "doctest.h"
#include "evenres/engine.hpp"
#include "evenres/families.hpp"
#include "evenres/named.hpp"

using namespace evenres;

namespace {

// every map of degree n, in lexicographic order
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

struct OracleInstaller {
  OracleInstaller() { register_engine_oracle(); }
};
OracleInstaller installer;

}  // namespace

TEST_CASE("spot memberships") {
  CHECK(contains(FamilySpec::make(FamilyTag::Gamma, 4), tf({2, 3, 4, 1})));
  CHECK_FALSE(contains(FamilySpec::make(FamilyTag::Gamma, 4), tf({2, 1, 3, 4})));
  CHECK_FALSE(contains(FamilySpec::make(FamilyTag::Delta, 4), tf({1, 2, 1, 2})));
  CHECK(contains(FamilySpec::make(FamilyTag::Sigma, 4), tf({1, 2, 1, 2})));
  CHECK(contains(FamilySpec::make(FamilyTag::ScriptX, 4), tf({1, 2, 1, 2})));
  CHECK(contains(FamilySpec::make(FamilyTag::Sigma, 5), tf({1, 1, 2, 3, 4})));
  // rank <= n-2 maps always qualify
  CHECK(contains(FamilySpec::make(FamilyTag::Sigma, 5), tf({1, 1, 1, 2, 3})));
}

TEST_CASE("pap recognition") {
  CHECK(is_pap(tf({2, 1, 4, 3})));
  CHECK(pap_split(tf({2, 1, 4, 3})) == PapSplit::Minus);   // starts even
  CHECK(pap_split(tf({1, 2, 3, 4})) == PapSplit::Plus);    // starts odd
  CHECK(pap_split(tf({1, 3, 2, 4})) == PapSplit::NotPAP);
  // degree 3: only the identity and the reversal alternate
  int count = 0;
  for_all_maps(3, [&](const Transformation& a) {
    if (a.is_permutation() && is_pap(a)) ++count;
  });
  CHECK(count == 2);
}

TEST_CASE("fast membership agrees with the oracle exhaustively (n <= 5)") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<FamilySpec> fams = {
        FamilySpec::make(FamilyTag::PAP, n),
        FamilySpec::make(FamilyTag::PAPplus, n),
        FamilySpec::make(FamilyTag::PAPminus, n),
        FamilySpec::make(FamilyTag::Gamma, n),
        FamilySpec::make(FamilyTag::Sigma, n),
        FamilySpec::make(FamilyTag::Delta, n),
        FamilySpec::make(FamilyTag::ScriptX, n),
    };
    for (int t = 2; t < n; ++t) {
      fams.push_back(FamilySpec::width(FamilyTag::GammaT, n, t));
      fams.push_back(FamilySpec::width(FamilyTag::SigmaT, n, t));
    }
    for_all_maps(n, [&](const Transformation& a) {
      for (const auto& f : fams) {
        INFO(f.str(), " at ", a.str());
        CHECK(contains(f, a) == oracle_contains(f, a));
      }
    });
  }
}

TEST_CASE("fast membership agrees with the oracle on samples (n = 6, 7)") {
  std::mt19937_64 rng(2024);
  for (int n = 6; n <= 7; ++n) {
    std::vector<FamilySpec> fams = {
        FamilySpec::make(FamilyTag::PAP, n),
        FamilySpec::make(FamilyTag::Gamma, n),
        FamilySpec::make(FamilyTag::Sigma, n),
        FamilySpec::make(FamilyTag::Delta, n),
        FamilySpec::make(FamilyTag::ScriptX, n),
        FamilySpec::width(FamilyTag::GammaT, n, 3),
        FamilySpec::width(FamilyTag::SigmaT, n, n - 2),
    };
    std::uniform_int_distribution<int> d(1, n);
    for (int s = 0; s < 20'000; ++s) {
      std::vector<int> img(n);
      for (auto& v : img) v = d(rng);
      auto a = tf_vec(img);
      for (const auto& f : fams) {
        INFO(f.str(), " at ", a.str());
        CHECK(contains(f, a) == oracle_contains(f, a));
      }
    }
  }
}

TEST_CASE("width periodicity of the permutation groups") {
  // widths 2..n-2 cycle with period 4 through {id}, shifts, {id, rho},
  // dihedral
  auto sz = [](int n, int t) {
    long long c = 0;
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    auto f = FamilySpec::width(FamilyTag::GammaT, n, t);
    do {
      if (contains(f, tf_vec(img))) ++c;
    } while (std::next_permutation(img.begin(), img.end()));
    return c;
  };
  CHECK(sz(7, 2) == 1);
  CHECK(sz(7, 3) == 7);
  CHECK(sz(7, 4) == 2);
  CHECK(sz(7, 5) == 14);
  CHECK(sz(8, 2) == 1);
  CHECK(sz(8, 4) == 2);
}

TEST_CASE("width-1 and width-n endpoints") {
  auto all = FamilySpec::width(FamilyTag::SigmaT, 4, 1);
  for_all_maps(4, [&](const Transformation& a) { CHECK(contains(all, a)); });
  // width n: non-permutations always, permutations iff even
  auto w4 = FamilySpec::width(FamilyTag::SigmaT, 4, 4);
  CHECK(contains(w4, tf({2, 3, 1, 4})));
  CHECK_FALSE(contains(w4, tf({2, 1, 3, 4})));
  CHECK(contains(w4, tf({1, 1, 2, 3})));
}

TEST_CASE("two-block groups") {
  auto f = FamilySpec::oplus(2, 2);
  int count = 0;
  for_all_maps(4, [&](const Transformation& a) {
    if (a.is_permutation() && contains(f, a)) ++count;
  });
  CHECK(count == 2);  // m!k!/2
  CHECK(contains(f, cyc(4, {{1, 2}, {3, 4}})));
  CHECK_FALSE(contains(f, cyc(4, {{1, 2}})));    // unequal block signs
  CHECK_FALSE(contains(f, cyc(4, {{1, 3}, {2, 4}})));  // not block-preserving
}

TEST_CASE("rank n-2 shapes") {
  auto s = classify_rank_n_minus_2(tf({1, 2, 1, 2}));
  CHECK(s.variant == Rank2Shape::Variant::TypeB);  // two 2-blocks
  CHECK(s.fibers.size() == 2);
  auto s2 = classify_rank_n_minus_2(tf({1, 2, 1, 3, 1}));
  CHECK(s2.variant == Rank2Shape::Variant::TypeA);  // one 3-block
  CHECK(s2.fibers.size() == 1);
  CHECK_THROWS_AS(classify_rank_n_minus_2(tf({1, 1, 1, 1})), WrongRank);
}

TEST_CASE("shape families B_n") {
  auto b1 = build(NamedElement::of(ElemId::Beta1, 5));
  CHECK(contains(FamilySpec::make(FamilyTag::Bn, 5), b1));
  auto b1p = build(NamedElement::of(ElemId::Beta1Prime, 5));
  CHECK(contains(FamilySpec::make(FamilyTag::BnPrime, 5), b1p));
  CHECK_FALSE(contains(FamilySpec::make(FamilyTag::Bn, 5), b1p));
}

TEST_CASE("explanations mention the decisive fact") {
  auto why = explain_membership(FamilySpec::make(FamilyTag::Delta, 4),
                                tf({1, 2, 1, 2}));
  CHECK(why.find("parity-monochromatic") != std::string::npos);
}

TEST_CASE("family name parsing") {
  CHECK(parse_family("gamma", 5)->tag == FamilyTag::Gamma);
  CHECK(parse_family("sigma_t@3", 6)->t == 3);
  CHECK(parse_family("gamma_oplus@4,3", 7)->m == 4);
  CHECK_FALSE(parse_family("nope", 5).has_value());
}
