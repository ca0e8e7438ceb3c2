// Acceptance gate: one pass/fail line per criterion, exit 0 only when all
// twelve pass. argv[1] = path to the CLI binary (for the table and
// determinism criteria).

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "evenres/counting.hpp"
#include "evenres/engine.hpp"
#include "evenres/families.hpp"
#include "evenres/named.hpp"

using namespace evenres;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& what, bool ok,
            const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion-" << criterion << " "
            << what;
  if (!detail.empty()) std::cout << " [" << detail << "]";
  std::cout << std::endl;
  if (!ok) ++g_failures;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string run_capture(const std::string& cmd, int& exit_code) {
  std::string out;
  FILE* p = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!p) {
    exit_code = -1;
    return out;
  }
  char buf[4096];
  size_t k;
  while ((k = fread(buf, 1, sizeof(buf), p)) > 0) out.append(buf, k);
  exit_code = pclose(p);
  return out;
}

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

Transformation random_map(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(1, n);
  std::vector<int> img(n);
  for (auto& v : img) v = d(rng);
  return tf_vec(img);
}

EnumeratedMonoid family_monoid(GenFamily f, int n, int m = 0) {
  return closure(m ? m + (n - m) : n, generating_set({f, n, m}), {});
}

// ---- criteria ----

void criterion_1(const std::string& cli) {
  const std::string expected =
      "n,gamma,sym,delta,sigma,total\n"
      "1,1,1,1,1,1\n"
      "2,2,2,4,4,4\n"
      "3,1,6,10,10,27\n"
      "4,4,24,128,140,256\n"
      "5,6,120,1911,2171,3125\n"
      "6,36,720,33702,38412,46656\n"
      "7,72,5040,651793,742975,823543\n"
      "8,576,40320,14237912,15931072,16777216\n"
      "9,1440,362880,342062865,377624169,387420489\n"
      "10,14400,3628800,9120890710,9878449600,10000000000\n";
  auto t0 = Clock::now();
  int rc = 0;
  auto got = run_capture(cli + " table 10 --format csv", rc);
  double dt = seconds_since(t0);
  report(1, "table reproduction", rc == 0 && got == expected && dt < 1.0,
         "elapsed " + std::to_string(dt) + "s");
}

void criterion_2() {
  bool ok = true;
  std::string detail;
  double sigma7 = 0;
  for (int n = 4; n <= 7 && ok; ++n)
    for (auto [gf, tag] :
         {std::pair{GenFamily::GammaGroup, FamilyTag::Gamma},
          std::pair{GenFamily::DeltaMonoid, FamilyTag::Delta},
          std::pair{GenFamily::SigmaMonoid, FamilyTag::Sigma}}) {
      auto t0 = Clock::now();
      auto M = family_monoid(gf, n);
      double dt = seconds_since(t0);
      if (tag == FamilyTag::Sigma && n == 7) sigma7 = dt;
      if (BigInt(static_cast<long long>(M.size())) !=
          card(FamilySpec::make(tag, n))) {
        ok = false;
        detail = FamilySpec::make(tag, n).str() + " count " +
                 std::to_string(M.size());
      }
    }
  if (ok) {
    auto g9 = family_monoid(GenFamily::GammaGroup, 9);
    if (g9.size() != 1440) {
      ok = false;
      detail = "gamma@9 count " + std::to_string(g9.size());
    }
  }
  if (ok && sigma7 >= 120.0) {
    ok = false;
    detail = "sigma@7 took " + std::to_string(sigma7) + "s";
  }
  if (ok)
    detail = "sigma@7 in " + std::to_string(sigma7) +
             "s; degree-8 stress tier not exercised (optional)";
  report(2, "formula vs enumeration (n=4..7, gamma@9)", ok, detail);
}

std::vector<FamilySpec> oracle_families(int n) {
  std::vector<FamilySpec> fams = {
      FamilySpec::make(FamilyTag::PAP, n),
      FamilySpec::make(FamilyTag::PAPplus, n),
      FamilySpec::make(FamilyTag::PAPminus, n),
      FamilySpec::make(FamilyTag::Gamma, n),
      FamilySpec::make(FamilyTag::Sigma, n),
      FamilySpec::make(FamilyTag::Delta, n),
      FamilySpec::make(FamilyTag::ScriptX, n),
      FamilySpec::make(FamilyTag::OrderPreserving, n),
      FamilySpec::make(FamilyTag::OrientationPreserving, n),
      FamilySpec::make(FamilyTag::Bn, n),
      FamilySpec::make(FamilyTag::BnPrime, n),
  };
  for (int t = 2; t < n; ++t) {
    fams.push_back(FamilySpec::width(FamilyTag::GammaT, n, t));
    fams.push_back(FamilySpec::width(FamilyTag::SigmaT, n, t));
    if (n <= 5) fams.push_back(FamilySpec::width(FamilyTag::DeltaT, n, t));
  }
  if (n >= 4) fams.push_back(FamilySpec::oplus(2, n - 2));
  return fams;
}

void criterion_3() {
  bool ok = true;
  std::string detail = "exhaustive n<=5";
  for (int n = 1; n <= 5 && ok; ++n) {
    auto fams = oracle_families(n);
    for_all_maps(n, [&](const Transformation& a) {
      if (!ok) return;
      for (const auto& f : fams) {
        if (f.tag == FamilyTag::Bn && n < 4) continue;
        if (f.tag == FamilyTag::BnPrime && n < 4) continue;
        if (contains(f, a) != oracle_contains(f, a)) {
          ok = false;
          detail = f.str() + " disagrees at " + a.str();
          return;
        }
      }
    });
  }
  long long done = 0;
  for (int n = 6; n <= 7 && ok; ++n) {
    std::vector<FamilySpec> fams = {
        FamilySpec::make(FamilyTag::PAP, n),
        FamilySpec::make(FamilyTag::PAPplus, n),
        FamilySpec::make(FamilyTag::PAPminus, n),
        FamilySpec::make(FamilyTag::Gamma, n),
        FamilySpec::make(FamilyTag::Sigma, n),
        FamilySpec::make(FamilyTag::Delta, n),
        FamilySpec::make(FamilyTag::ScriptX, n),
        FamilySpec::width(FamilyTag::GammaT, n, 3),
        FamilySpec::width(FamilyTag::GammaT, n, 4),
        FamilySpec::width(FamilyTag::SigmaT, n, n - 2),
    };
    std::mt19937_64 rng(0x5eed0000ULL + static_cast<std::uint64_t>(n));
    for (long long s = 0; s < 1'000'000 && ok; ++s) {
      auto a = random_map(n, rng);
      ++done;
      for (const auto& f : fams)
        if (contains(f, a) != oracle_contains(f, a)) {
          ok = false;
          detail = f.str() + " disagrees at " + a.str();
          break;
        }
    }
  }
  if (ok)
    detail += ", " + std::to_string(done) + " random samples at n=6,7";
  report(3, "fast membership == oracle", ok, detail);
}

void criterion_4() {
  bool ok = true;
  std::string detail;
  for (int n = 4; n <= 6 && ok; ++n) {
    auto D = family_monoid(GenFamily::DeltaMonoid, n);
    auto S = family_monoid(GenFamily::SigmaMonoid, n);
    std::vector<std::uint64_t> filtered;
    for (std::size_t i = 0; i < S.size(); ++i) {
      auto a = S.element(i);
      if (!in_script_x(a)) filtered.push_back(pack(a));
    }
    if (filtered != D.packed()) {
      ok = false;
      detail = "n=" + std::to_string(n);
    }
  }
  report(4, "delta closure == predicate-filtered sigma closure (n=4,5,6)", ok,
         detail);
}

void criterion_5() {
  struct Job {
    GenFamily f;
    int n;
    int m;
    int expected;
  };
  const std::vector<Job> jobs = {
      {GenFamily::GammaGroup, 4, 0, 1},  {GenFamily::GammaGroup, 5, 0, 2},
      {GenFamily::GammaGroup, 6, 0, 2},  {GenFamily::GammaGroup, 7, 0, 3},
      {GenFamily::GammaGroup, 8, 0, 2},  {GenFamily::GammaGroup, 9, 0, 2},
      {GenFamily::GammaGroup, 10, 0, 2}, {GenFamily::DeltaMonoid, 3, 0, 3},
      {GenFamily::DeltaMonoid, 4, 0, 2}, {GenFamily::DeltaMonoid, 6, 0, 3},
      {GenFamily::SigmaMonoid, 4, 0, 3}, {GenFamily::SigmaMonoid, 6, 0, 5},
      {GenFamily::GammaOplus, 4, 2, 1},  {GenFamily::GammaOplus, 6, 3, 3},
      {GenFamily::GammaOplus, 7, 4, 3},  {GenFamily::GammaOplus, 8, 4, 3},
  };
  bool ok = true;
  std::string detail;
  for (const auto& j : jobs) {
    auto M = closure(j.n, generating_set({j.f, j.n, j.m}), {});
    RankOptions opts;
    opts.budget = 200'000'000;
    auto r = exhaustive_rank(M, j.expected, opts);
    if (!r || *r != j.expected) {
      ok = false;
      detail = "degree " + std::to_string(j.n) + " family " +
               std::to_string(static_cast<int>(j.f)) + ": got " +
               (r ? std::to_string(*r) : std::string("budget"));
      break;
    }
  }
  report(5, "exhaustive ranks match the published values", ok, detail);
}

void criterion_6() {
  static const int expected[] = {1, 2, 2, 4, 3, 5, 3, 5};  // n = 4..11
  auto rank_delta = [](int n) {
    if (n == 3) return 3;
    if (n == 4) return 2;
    if (n == 7) return 5;
    return n % 2 ? 4 : 3;
  };
  auto rank_sigma = [](int n) {
    if (n == 4) return 3;
    if (n == 5) return 6;
    if (n == 6) return 5;
    return n % 2 ? 9 : 6;
  };
  bool ok = true;
  std::string detail;
  for (int n = 4; n <= 11; ++n) {
    auto rep = kernel_orbit_count(n);
    if (rep.orbit_count != expected[n - 4] ||
        rank_delta(n) + rep.orbit_count != rank_sigma(n)) {
      ok = false;
      detail = "n=" + std::to_string(n) + " got " +
               std::to_string(rep.orbit_count);
      break;
    }
  }
  report(6, "kernel orbit counts and the rank gap identity (n=4..11)", ok,
         detail);
}

void criterion_7() {
  bool ok = true;
  std::string detail;
  for (int n = 3; n <= 5 && ok; ++n)
    for (GenFamily gf : {GenFamily::DeltaMonoid, GenFamily::SigmaMonoid}) {
      auto M = family_monoid(gf, n);
      for (std::size_t i = 0; i < M.size() && ok; ++i) {
        auto a = M.element(i);
        auto r = is_regular(M, a);
        if (!r.regular || a * *r.witness * a != a || !M.contains(*r.witness)) {
          ok = false;
          detail = "n=" + std::to_string(n) + " at " + a.str();
        }
      }
    }
  if (ok) {
    auto S = family_monoid(GenFamily::SigmaMonoid, 6);
    std::mt19937_64 rng(0x600dULL);
    for (long long s = 0; s < 100'000 && ok; ++s) {
      auto a = S.element(rng() % S.size());
      auto r = is_regular(S, a);
      if (!r.regular || a * *r.witness * a != a || !S.contains(*r.witness)) {
        ok = false;
        detail = "n=6 at " + a.str();
      }
    }
  }
  report(7, "regularity with validated witnesses", ok, detail);
}

void criterion_8() {
  bool ok = true;
  std::string detail;
  for (int n = 4; n <= 7 && ok; ++n)
    for (int x = 1; x <= n && ok; ++x)
      for (int y = x + 1; y <= n && ok; ++y) {
        if ((x + y) % 2 == 0) continue;
        std::vector<std::vector<int>> blocks{{x, y}};
        for (int p = 1; p <= n; ++p)
          if (p != x && p != y) blocks.push_back({p});
        auto rep = r_class_half_check(n, KernelPartition(n, blocks));
        if (rep.members_in_family * 2 != rep.class_size) {
          ok = false;
          detail = "n=" + std::to_string(n) + " kernel {" + std::to_string(x) +
                   "," + std::to_string(y) + "}";
        }
      }
  report(8, "odd-pair R-classes are half inside the family (n=4..7)", ok,
         detail);
}

void criterion_9() {
  bool ok = true;
  std::string detail;
  long long total = 0;
  for (int n = 4; n <= 13 && ok; ++n)
    for (const auto& id : word_identities(n)) {
      ++total;
      if (!id.holds()) {
        ok = false;
        detail = "n=" + std::to_string(n) + ": " + id.description;
        break;
      }
    }
  if (ok) detail = std::to_string(total) + " identities";
  report(9, "word identities hold for all applicable n <= 13", ok, detail);
}

void criterion_10() {
  bool ok = true;
  std::string detail;
  auto check_one = [&](int n, const Transformation& a) {
    if (a.rank() <= n - 2 && !in_script_x(a)) {
      auto [a1, a2] = lemma_delta1_factor(a);
      if (a1 * a2 != a || a1.rank() != a.rank() + 1 || a2.rank() != n - 2 ||
          in_script_x(a1) || in_script_x(a2)) {
        ok = false;
        detail = "factorization at " + a.str();
        return;
      }
    }
    bool pair = false;
    for (int i = 1; i <= n && !pair; ++i)
      for (int j = i + 1; j <= n && !pair; ++j)
        if ((i + j) % 2 == 1 && a.apply(i) == a.apply(j)) pair = true;
    if (a.rank() <= n - 1 && pair) {
      auto nr = lemma_delta2_normalize(a);
      auto g = FamilySpec::make(FamilyTag::Gamma, n);
      auto b = nr.sigma * a * nr.tau;
      if (!contains(g, nr.sigma) || !contains(g, nr.tau) ||
          b.apply(1) != nr.c || b.apply(2) != nr.c) {
        ok = false;
        detail = "normalization at " + a.str();
      }
    }
  };
  for (int n = 4; n <= 5 && ok; ++n)
    for_all_maps(n, [&](const Transformation& a) {
      if (ok) check_one(n, a);
    });
  for (int n = 6; n <= 7 && ok; ++n) {
    std::mt19937_64 rng(0xDE17A0ULL + static_cast<std::uint64_t>(n));
    for (long long s = 0; s < 100'000 && ok; ++s) check_one(n, random_map(n, rng));
  }
  report(10, "constructive lemmas (exhaustive n=4,5; sampled n=6,7)", ok,
         detail);
}

void criterion_11() {
  bool ok = true;
  std::string detail;
  long long total = 0;
  for (int n = 2; n <= 9 && ok; ++n) {
    std::mt19937_64 rng(0x11ULL * static_cast<std::uint64_t>(n) + 7);
    std::uniform_int_distribution<int> pd(1, n);
    std::vector<int> base(n);
    for (long long s = 0; s < 1'000'000 && ok; ++s) {
      std::iota(base.begin(), base.end(), 1);
      std::shuffle(base.begin(), base.end(), rng);
      auto p = tf_vec(base);
      std::iota(base.begin(), base.end(), 1);
      std::shuffle(base.begin(), base.end(), rng);
      auto q = tf_vec(base);
      int drop = pd(rng);
      std::vector<int> X, Y;
      for (int i = 1; i <= n; ++i)
        if (i != drop) X.push_back(i);
      for (int i : X) Y.push_back(p.apply(i));
      std::sort(Y.begin(), Y.end());
      auto a = restrict_to(p, X);
      auto b = restrict_to(q, Y);
      auto ab = restrict_to(p * q, X);
      ++total;
      if ((parity(a) == parity(b)) != (parity(ab) == Parity::Even)) {
        ok = false;
        detail = "n=" + std::to_string(n) + " at " + p.str() + "," + q.str();
      }
    }
  }
  if (ok) detail = std::to_string(total) + " chained pairs";
  report(11, "parity multiplies under chained restriction composition", ok,
         detail);
}

void criterion_12(const std::string& cli) {
  int rc1 = 0, rc2 = 0;
  auto r1 = run_capture(cli + " verify paper-core --max-n 5 --threads 1", rc1);
  auto r2 = run_capture(cli + " verify paper-core --max-n 5 --threads 4", rc2);
  bool ok = rc1 == rc2 && !r1.empty() && r1 == r2;
  report(12, "verify reports are byte-identical across thread counts", ok,
         ok ? std::to_string(r1.size()) + " bytes" : "reports differ");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-cli>\n";
    return 2;
  }
  const std::string cli = argv[1];
  register_engine_oracle();

  criterion_1(cli);
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  criterion_12(cli);

  std::cout << (g_failures ? "ACCEPTANCE: FAILED " : "ACCEPTANCE: PASSED ")
            << (12 - g_failures) << "/12" << std::endl;
  return g_failures ? 1 : 0;
}
