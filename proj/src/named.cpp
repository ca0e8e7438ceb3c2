#include "evenres/named.hpp"

#include <sstream>

#include "evenres/families.hpp"

namespace evenres {

namespace {

Transformation from_table(int n, std::initializer_list<std::pair<int, int>> tab,
                          int shift_from = 0) {
  // points listed in tab map as given; points >= shift_from map to x-2;
  // everything else is fixed
  std::vector<Point> img(n);
  for (int x = 1; x <= n; ++x)
    img[x - 1] = static_cast<Point>(shift_from && x >= shift_from ? x - 2 : x);
  for (auto [x, y] : tab) img[x - 1] = static_cast<Point>(y);
  return Transformation(std::move(img));
}

std::vector<int> arith(int lo, int hi, int step) {
  std::vector<int> v;
  for (int x = lo; x <= hi; x += step) v.push_back(x);
  return v;
}

Transformation perm_from(int n, std::vector<std::vector<int>> cycles) {
  std::erase_if(cycles, [](const std::vector<int>& c) { return c.size() < 2; });
  return cyc(n, std::move(cycles));
}

[[noreturn]] void out_of_range(ElemId id, int n, const char* constraint) {
  std::ostringstream os;
  os << elem_name(id) << " at n=" << n << " needs " << constraint;
  throw OutOfRange(os.str());
}

void need(bool ok, ElemId id, int n, const char* constraint) {
  if (!ok) out_of_range(id, n, constraint);
}

Transformation power(const Transformation& a, long long k) {
  Transformation acc = Transformation::identity(a.degree());
  Transformation base = k < 0 ? inverse(a) : a;
  for (long long i = 0, kk = k < 0 ? -k : k; i < kk; ++i) acc = acc * base;
  return acc;
}

// sanity checks mirroring the membership each element is claimed to have
void check_built(const NamedElement& e, const Transformation& a) {
  const int n = e.n;
  switch (e.id) {
    case ElemId::Theta:
    case ElemId::Eta:
    case ElemId::Zeta:
    case ElemId::MuN:
    case ElemId::MuPrimeN:
      if (!contains(FamilySpec::make(FamilyTag::Gamma, n), a))
        throw std::logic_error(elem_name(e.id) + ": unit-group check failed");
      break;
    case ElemId::Epsilon:
    case ElemId::EpsilonPrime:
    case ElemId::Beta1:
    case ElemId::Beta2:
    case ElemId::Beta1Prime:
    case ElemId::Beta2Prime:
    case ElemId::Beta2i:
    case ElemId::LambdaI:
    case ElemId::LambdaPrimeI:
    case ElemId::XiI:
    case ElemId::XiPrimeI:
    case ElemId::NuI:
    case ElemId::NuPrimeI:
      if (a.rank() != n - 1 ||
          !contains(FamilySpec::make(FamilyTag::Sigma, n), a))
        throw std::logic_error(elem_name(e.id) + ": rank n-1 check failed");
      break;
    case ElemId::GammaN:
    case ElemId::GammaPrimeN:
    case ElemId::GammaDoublePrimeN:
    case ElemId::DeltaN:
    case ElemId::DeltaPrimeN:
      // rank n-2, all fibers parity-monochromatic (so outside Delta)
      if (a.rank() != n - 2 || !in_script_x(a))
        throw std::logic_error(elem_name(e.id) + ": rank n-2 check failed");
      break;
    case ElemId::OplusLambda:
    case ElemId::OplusMu:
    case ElemId::OplusMuPrime:
      if (!contains(FamilySpec::oplus(e.i, n - e.i), a))
        throw std::logic_error(elem_name(e.id) + ": block check failed");
      break;
    default:
      break;
  }
}

}  // namespace

std::string elem_name(ElemId id) {
  switch (id) {
    case ElemId::Iota: return "iota";
    case ElemId::SigmaCycle: return "sigma";
    case ElemId::Rho: return "rho";
    case ElemId::Theta: return "theta";
    case ElemId::Eta: return "eta";
    case ElemId::Zeta: return "zeta";
    case ElemId::MuN: return "mu";
    case ElemId::MuPrimeN: return "mu'";
    case ElemId::Epsilon: return "epsilon";
    case ElemId::EpsilonPrime: return "epsilon'";
    case ElemId::Beta1: return "beta_1";
    case ElemId::Beta2: return "beta_2";
    case ElemId::Beta1Prime: return "beta_1'";
    case ElemId::Beta2Prime: return "beta_2'";
    case ElemId::Beta2i: return "beta_2i";
    case ElemId::LambdaI: return "lambda_i";
    case ElemId::LambdaPrimeI: return "lambda_i'";
    case ElemId::XiI: return "xi_i";
    case ElemId::XiPrimeI: return "xi_i'";
    case ElemId::NuI: return "nu_i";
    case ElemId::NuPrimeI: return "nu_i'";
    case ElemId::GammaN: return "gamma";
    case ElemId::GammaPrimeN: return "gamma'";
    case ElemId::GammaDoublePrimeN: return "gamma''";
    case ElemId::DeltaN: return "delta";
    case ElemId::DeltaPrimeN: return "delta'";
    case ElemId::Pi: return "pi";
    case ElemId::OplusLambda: return "oplus_lambda";
    case ElemId::OplusMu: return "oplus_mu";
    case ElemId::OplusMuPrime: return "oplus_mu'";
  }
  return "?";
}

Transformation build(const NamedElement& e) {
  const int n = e.n;
  const int i = e.i;
  Transformation a;
  switch (e.id) {
    case ElemId::Iota:
      need(n >= 1, e.id, n, "n >= 1");
      a = Transformation::identity(n);
      break;
    case ElemId::SigmaCycle: {
      need(n >= 1, e.id, n, "n >= 1");
      std::vector<Point> img(n);
      for (int x = 1; x <= n; ++x) img[x - 1] = static_cast<Point>(x % n + 1);
      a = Transformation(std::move(img));
      break;
    }
    case ElemId::Rho: {
      need(n >= 1, e.id, n, "n >= 1");
      std::vector<Point> img(n);
      for (int x = 1; x <= n; ++x) img[x - 1] = static_cast<Point>(n + 1 - x);
      a = Transformation(std::move(img));
      break;
    }
    case ElemId::Theta:
      need(n >= 4, e.id, n, "n >= 4");
      a = cyc(n, {{1, 3}, {2, 4}});
      break;
    case ElemId::Eta:
      need(n >= 5 && n % 2 == 1, e.id, n, "odd n >= 5");
      a = perm_from(n, {arith(3, n, 2), arith(2, n - 1, 2)});
      break;
    case ElemId::Zeta:
      need(n >= 5 && n % 2 == 1, e.id, n, "odd n >= 5");
      a = perm_from(n, {arith(1, n, 2), arith(4, n - 1, 2)});
      break;
    case ElemId::MuN:
      need(n >= 4 && n % 2 == 0, e.id, n, "even n >= 4");
      a = perm_from(n, {n % 4 == 0 ? arith(3, n - 1, 2) : arith(1, n - 1, 2)});
      break;
    case ElemId::MuPrimeN:
      need(n >= 4 && n % 2 == 0, e.id, n, "even n >= 4");
      a = perm_from(n, {n % 4 == 0 ? arith(4, n, 2) : arith(2, n, 2)});
      break;
    case ElemId::Epsilon:
      need(n >= 4, e.id, n, "n >= 4");
      a = from_table(n, {{2, 1}});
      break;
    case ElemId::EpsilonPrime:
      need(n >= 4, e.id, n, "n >= 4");
      a = from_table(n, {{1, 2}});
      break;
    case ElemId::Beta1:
      need(n >= 5, e.id, n, "n >= 5");
      a = from_table(n, {{2, 1}, {3, 4}, {4, 5}, {5, 3}});
      break;
    case ElemId::Beta1Prime:
      need(n >= 5, e.id, n, "n >= 5");
      a = from_table(n, {{1, 2}, {2, 2}, {3, 4}, {4, 5}, {5, 3}});
      break;
    case ElemId::Beta2:
    case ElemId::Beta2Prime: {
      need(n >= 5, e.id, n, "n >= 5");
      std::vector<Point> img(n);
      const int c = e.id == ElemId::Beta2 ? 1 : 2;
      img[0] = img[1] = static_cast<Point>(c);
      if (n % 2 == 1) {
        // 3 -> 4 -> ... -> n -> 3
        for (int x = 3; x < n; ++x) img[x - 1] = static_cast<Point>(x + 1);
        img[n - 1] = 3;
      } else {
        img[2] = 3;
        for (int x = 4; x < n; ++x) img[x - 1] = static_cast<Point>(x + 1);
        img[n - 1] = 4;
      }
      a = Transformation(std::move(img));
      break;
    }
    case ElemId::Beta2i:
      if (n % 2 == 1) {
        need(i % 2 == 1 && i >= 5 && i <= n, e.id, n, "odd i in [5, n]");
        a = from_table(n, {{2, 1}, {3, i - 1}, {i - 1, i}, {i, 3}});
      } else {
        need(i % 2 == 0 && i >= 6 && i <= n, e.id, n, "even i in [6, n]");
        a = from_table(n, {{2, 1}, {4, i - 1}, {i - 1, i}, {i, 4}});
      }
      break;
    case ElemId::LambdaI: {
      need(n >= 5 && i >= 3 && i <= n, e.id, n, "n >= 5 and i in [3, n]");
      std::vector<Point> img(n);
      img[0] = img[1] = 1;
      for (int x = 3; x <= n; ++x)
        img[x - 1] = static_cast<Point>(x <= i ? x - 1 : x);
      a = Transformation(std::move(img));
      break;
    }
    case ElemId::LambdaPrimeI: {
      need(n >= 5 && i >= 3 && i <= n, e.id, n, "n >= 5 and i in [3, n]");
      std::vector<Point> img(n);
      img[0] = 1;
      for (int x = 2; x <= n; ++x)
        img[x - 1] = static_cast<Point>(x <= i - 1 ? x + 1 : x);
      a = Transformation(std::move(img));
      break;
    }
    case ElemId::XiI:
      need(n >= 5 && i % 2 == 1 && i >= 3 && i <= n, e.id, n,
           "n >= 5 and odd i in [3, n]");
      a = from_table(n, {{2, 1}, {i, 2}});
      break;
    case ElemId::XiPrimeI:
      need(n >= 5 && i % 2 == 1 && i >= 3 && i <= n, e.id, n,
           "n >= 5 and odd i in [3, n]");
      a = from_table(n, {{1, 2}, {2, i}});
      break;
    case ElemId::NuI:
      need(n >= 5 && i % 2 == 0 && i >= 4 && i <= n, e.id, n,
           "n >= 5 and even i in [4, n]");
      a = from_table(n, {{1, 2}, {i, 1}});
      break;
    case ElemId::NuPrimeI:
      need(n >= 5 && i % 2 == 0 && i >= 4 && i <= n, e.id, n,
           "n >= 5 and even i in [4, n]");
      a = from_table(n, {{1, i}, {2, 1}});
      break;
    case ElemId::GammaN:
      need(n >= 4, e.id, n, "n >= 4");
      a = from_table(n, {{3, 1}, {4, 2}}, 5);
      break;
    case ElemId::GammaPrimeN:
      need(n >= 7, e.id, n, "n >= 7");
      a = from_table(n, {{2, 3}, {3, 1}, {4, 4}, {5, 2}, {6, 5}, {7, 2}}, 8);
      break;
    case ElemId::GammaDoublePrimeN:
      need(n >= 8, e.id, n, "n >= 8");
      a = from_table(
          n, {{1, 3}, {2, 1}, {3, 4}, {4, 1}, {5, 5}, {6, 2}, {7, 6}, {8, 2}},
          9);
      break;
    case ElemId::DeltaN:
      need(n >= 5, e.id, n, "n >= 5");
      a = from_table(n, {{3, 1}, {4, 3}, {5, 1}}, 6);
      break;
    case ElemId::DeltaPrimeN:
      need(n >= 6, e.id, n, "n >= 6");
      a = from_table(n, {{1, 2}, {2, 1}, {3, 3}, {4, 1}, {5, 4}, {6, 1}}, 7);
      break;
    case ElemId::Pi: {
      need(n >= 2 && n % 2 == 0, e.id, n, "even n >= 2");
      std::vector<std::vector<int>> cycles;
      for (int x = 1; x < n; x += 2) cycles.push_back({x, x + 1});
      a = perm_from(n, std::move(cycles));
      break;
    }
    case ElemId::OplusLambda:
      need(i >= 2 && n - i >= 2, e.id, n, "block sizes m, k >= 2");
      a = cyc(n, {{1, 2}, {i + 1, i + 2}});
      break;
    case ElemId::OplusMu:
      need(i >= 2 && n - i >= 1, e.id, n, "block sizes m >= 2, k >= 1");
      a = perm_from(n, {i % 2 == 1 ? arith(1, i, 1) : arith(2, i, 1)});
      break;
    case ElemId::OplusMuPrime: {
      need(i >= 1 && n - i >= 2, e.id, n, "block sizes m >= 1, k >= 2");
      const int k = n - i;
      a = perm_from(n, {k % 2 == 1 ? arith(i + 1, n, 1) : arith(i + 2, n, 1)});
      break;
    }
  }
  check_built(e, a);
  return a;
}

std::vector<Transformation> generating_set(const GeneratingSetSpec& s,
                                           const GenOptions& opts) {
  const int n = s.n;
  auto bld = [n](ElemId id) { return build(NamedElement::of(id, n)); };
  switch (s.family) {
    case GenFamily::GammaGroup: {
      if (n <= 1 || n == 3) return {};  // trivial group
      if (n == 2) return {cyc(2, {{1, 2}})};
      if (n == 4) return {bld(ElemId::SigmaCycle)};
      if (n == 7)
        return {cyc(7, {{1, 3}, {2, 4}}), cyc(7, {{3, 5, 7}}),
                cyc(7, {{2, 4, 6}})};
      if (n % 2 == 0) return {bld(ElemId::Theta), bld(ElemId::SigmaCycle)};
      return {bld(ElemId::Theta),
              bld(opts.zeta_variant ? ElemId::Zeta : ElemId::Eta)};
    }
    case GenFamily::DeltaMonoid: {
      if (n <= 1) return {};
      if (n == 2) return {cyc(2, {{1, 2}}), tf({1, 1})};  // Delta_2 = T_2
      if (n == 3) return {tf({1, 2, 2}), tf({1, 1, 3}), tf({2, 3, 3})};
      auto gens = generating_set({GenFamily::GammaGroup, n}, opts);
      gens.push_back(bld(ElemId::Epsilon));
      if (n % 2 == 1) gens.push_back(bld(ElemId::EpsilonPrime));
      return gens;
    }
    case GenFamily::SigmaMonoid: {
      if (n <= 3) return generating_set({GenFamily::DeltaMonoid, n}, opts);
      auto gens = generating_set({GenFamily::DeltaMonoid, n}, opts);
      gens.push_back(bld(ElemId::GammaN));
      if (n == 4) return gens;
      if (n >= 7) gens.push_back(bld(ElemId::GammaPrimeN));
      if (n >= 9 && n % 2 == 1) gens.push_back(bld(ElemId::GammaDoublePrimeN));
      gens.push_back(bld(ElemId::DeltaN));
      if (n == 7 || (n >= 9 && n % 2 == 1))
        gens.push_back(bld(ElemId::DeltaPrimeN));
      return gens;
    }
    case GenFamily::GammaOplus: {
      const int m = s.m, k = n - m;
      if (m < 2 || k < 2)
        throw OutOfRange("two-block generating set needs both blocks >= 2");
      return {build(NamedElement::oplus(ElemId::OplusLambda, m, k)),
              build(NamedElement::oplus(ElemId::OplusMu, m, k)),
              build(NamedElement::oplus(ElemId::OplusMuPrime, m, k))};
    }
    case GenFamily::Bn:
      return {bld(ElemId::Beta1), bld(ElemId::Beta2)};
    case GenFamily::BnPrime:
      return {bld(ElemId::Beta1Prime), bld(ElemId::Beta2Prime)};
  }
  throw std::logic_error("generating_set: unhandled family");
}

Transformation WordIdentity::evaluate() const {
  Transformation acc = Transformation::identity(expected.degree());
  for (const auto& w : word) acc = acc * w;
  return acc;
}

std::vector<WordIdentity> word_identities(int n) {
  std::vector<WordIdentity> out;
  auto bld = [n](ElemId id) { return build(NamedElement::of(id, n)); };
  auto cat = [](std::vector<Transformation> a,
                const std::vector<Transformation>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };

  if (n >= 4 && n % 2 == 0) {
    const auto eps = bld(ElemId::Epsilon);
    const auto epsp = bld(ElemId::EpsilonPrime);
    const auto sig = bld(ElemId::SigmaCycle);
    const auto sigi = inverse(sig);
    std::vector<Transformation> w;
    for (int r = 0; r < n - 1; ++r) w = cat(std::move(w), {eps, sigi});
    out.push_back({"epsilon' = (epsilon sigma^-1)^(n-1)", w, epsp});
    w.clear();
    for (int r = 0; r < n - 1; ++r) w = cat(std::move(w), {epsp, sig});
    out.push_back({"epsilon = (epsilon' sigma)^(n-1)", w, eps});
  }

  if (n >= 6 && n % 4 == 2) {
    const auto sig = bld(ElemId::SigmaCycle);
    const auto sigi = inverse(sig);
    const auto th = bld(ElemId::Theta);
    // mu = (sigma^-1 (theta sigma theta sigma^(n-3))^((n-4)/2) sigma^(n-3))^((n-2)/4)
    auto inner = power(th * sig * th * power(sig, n - 3), (n - 4) / 2);
    auto mu_word = power(sigi * inner * power(sig, n - 3), (n - 2) / 4);
    out.push_back({"mu closed form (n = 2 mod 4)", {mu_word}, bld(ElemId::MuN)});
    out.push_back({"mu' = mu^-1 sigma^2",
                   {inverse(bld(ElemId::MuN)), sig, sig},
                   bld(ElemId::MuPrimeN)});
  }
  if (n >= 8 && n % 4 == 0) {
    const auto sig = bld(ElemId::SigmaCycle);
    const auto th = bld(ElemId::Theta);
    auto inner = power(power(sig, n - 3) * th * sig * th, (n - 6) / 2);
    auto mu_word = power(inner * power(sig, n - 6), (n - 4) / 4);
    out.push_back({"mu closed form (n = 0 mod 4)", {mu_word}, bld(ElemId::MuN)});
    out.push_back({"mu' = mu^-1 sigma^2 theta",
                   {inverse(bld(ElemId::MuN)), sig, sig, th},
                   bld(ElemId::MuPrimeN)});
  }

  if (n >= 5 && n % 2 == 1) {
    const auto th = bld(ElemId::Theta);
    const auto eta = bld(ElemId::Eta);
    const auto zeta = bld(ElemId::Zeta);
    out.push_back({"eta theta = zeta", {eta, th}, zeta});
    out.push_back({"zeta theta = eta", {zeta, th}, eta});
  }

  if (n >= 7 && n % 4 == 3) {
    const auto th = bld(ElemId::Theta);
    const auto eta = bld(ElemId::Eta);
    const auto zeta = bld(ElemId::Zeta);
    auto w = power(eta * power(zeta, (n - 3) / 2) * eta, (n - 3) / 4) * eta;
    // these cycles overlap at 3, so the display is a product, not a
    // disjoint decomposition
    auto odd_cycle = [n](std::vector<int> pre) {
      std::vector<int> c;
      for (int x = 3; x <= n; x += 2) c.push_back(x);
      auto tail = cyc(n, {std::move(c)});
      if (pre.empty()) return tail;
      return cyc(n, {std::move(pre)}) * tail;
    };
    Transformation expect = n % 12 == 3   ? odd_cycle({})
                            : n % 12 == 7 ? odd_cycle({1, n, 3})
                                          : odd_cycle({1, 3, n});
    out.push_back({"(eta zeta^((n-3)/2) eta)^((n-3)/4) eta", {w}, expect});
    if (n % 12 == 11)
      out.push_back({"(3,5,...,n) = theta w theta", {th, w, th}, odd_cycle({})});
    if (n % 12 == 7) {
      auto nu = w;  // = (1,3)(5,7,...,n)
      std::vector<std::vector<int>> cs{{1, 3}};
      std::vector<int> c;
      for (int x = 5; x <= n; x += 2) c.push_back(x);
      if (c.size() >= 2) cs.push_back(std::move(c));
      out.push_back({"nu = (1,3)(5,7,...,n)", {nu}, cyc(n, std::move(cs))});
      auto lhs = power(eta, 4) * power(nu, (n - 5) / 2) *
                 power(eta, (n - 5) / 2) * power(nu, 3) *
                 power(eta, (n - 5) / 2) * power(nu, (n - 5) / 2);
      out.push_back({"eta^4 nu^a eta^a nu^3 eta^a nu^a (a=(n-5)/2)",
                     {lhs},
                     n == 7 ? Transformation::identity(n) : odd_cycle({})});
    }
  }

  if (n >= 5) {
    const auto eps = bld(ElemId::Epsilon);
    const auto epsp = bld(ElemId::EpsilonPrime);
    auto bld_i = [n](ElemId id, int i) {
      return build(NamedElement::idx(id, n, i));
    };
    out.push_back({"beta_1 = epsilon (1,5,3) epsilon' (2,4)(3,5) epsilon (1,5,3)",
                   {eps, cyc(n, {{1, 5, 3}}), epsp, cyc(n, {{2, 4}, {3, 5}}),
                    eps, cyc(n, {{1, 5, 3}})},
                   bld(ElemId::Beta1)});
    out.push_back({"lambda_3 = epsilon (1,5,3) epsilon' (1,3,5)",
                   {eps, cyc(n, {{1, 5, 3}}), epsp, cyc(n, {{1, 3, 5}})},
                   bld_i(ElemId::LambdaI, 3)});
    for (int i = 4; i <= n; ++i) {
      auto prev = bld_i(ElemId::LambdaI, i - 1);
      if (i % 2 == 0)
        out.push_back(
            {"lambda_i recurrence (even i=" + std::to_string(i) + ")",
             {prev, cyc(n, {{1, i - 1}, {2, i}}), eps,
              cyc(n, {{1, i - 1}, {2, i}})},
             bld_i(ElemId::LambdaI, i)});
      else
        out.push_back(
            {"lambda_i recurrence (odd i=" + std::to_string(i) + ")",
             {prev, cyc(n, {{1, i}, {2, i - 1}}), epsp,
              cyc(n, {{1, i}, {2, i - 1}})},
             bld_i(ElemId::LambdaI, i)});
    }
    for (int i = 4; i <= n; i += 2)
      out.push_back({"nu_i = epsilon' (2,i)(3,5) epsilon (2,i)(3,5), i=" +
                         std::to_string(i),
                     {epsp, cyc(n, {{2, i}, {3, 5}}), eps,
                      cyc(n, {{2, i}, {3, 5}})},
                     bld_i(ElemId::NuI, i)});
    if (n % 2 == 1) {
      std::vector<Transformation> b2;
      for (int i = 5; i <= n; i += 2) {
        auto b2i = bld_i(ElemId::Beta2i, i);
        out.push_back(
            {"beta_2i = epsilon (1,i,3) epsilon' (2,i-1)(3,i) epsilon (1,i,3), "
             "i=" + std::to_string(i),
             {eps, cyc(n, {{1, i, 3}}), epsp, cyc(n, {{2, i - 1}, {3, i}}),
              eps, cyc(n, {{1, i, 3}})},
             b2i});
        b2.push_back(b2i);
      }
      out.push_back({"beta_2 = beta_2,5 beta_2,7 ... beta_2,n", b2,
                     bld(ElemId::Beta2)});
    } else if (n >= 6) {
      std::vector<Transformation> b2;
      for (int i = 6; i <= n; i += 2) {
        auto b2i = bld_i(ElemId::Beta2i, i);
        out.push_back(
            {"beta_2i = epsilon (1,3,i-1) epsilon' (2,i,4) epsilon (1,i-1,3), "
             "i=" + std::to_string(i),
             {eps, cyc(n, {{1, 3, i - 1}}), epsp, cyc(n, {{2, i, 4}}), eps,
              cyc(n, {{1, i - 1, 3}})},
             b2i});
        b2.push_back(b2i);
      }
      out.push_back({"beta_2 = beta_2,6 beta_2,8 ... beta_2,n", b2,
                     bld(ElemId::Beta2)});
    }
    out.push_back({"beta_1' = beta_1 epsilon'",
                   {bld(ElemId::Beta1), epsp},
                   bld(ElemId::Beta1Prime)});
    out.push_back({"beta_2' = beta_2 epsilon'",
                   {bld(ElemId::Beta2), epsp},
                   bld(ElemId::Beta2Prime)});
  }

  if (n >= 6 && n % 2 == 0) {
    const auto eps = bld(ElemId::Epsilon);
    const auto sig = bld(ElemId::SigmaCycle);
    const auto sigi = inverse(sig);
    std::vector<int> c1{1}, c2;
    for (int x = 5; x <= n - 1; x += 2) c1.push_back(x);  // (1,5,7,...,n-1)
    for (int x = 4; x <= n; x += 2) c2.push_back(x);
    out.push_back(
        {"beta_1 = (epsilon sigma^-1)^2 epsilon (1,5,7,...,n-1)(4,6,...,n)",
         {eps, sigi, eps, sigi, eps, cyc(n, {c1, c2})},
         bld(ElemId::Beta1)});
    std::vector<int> big{1, n};
    for (int x = 3; x <= n - 1; ++x) big.push_back(x);
    big.push_back(2);
    auto bigc = cyc(n, {big});
    std::vector<Transformation> w;
    for (int r = 0; r < n - 4; ++r) w = cat(std::move(w), {eps, bigc});
    std::vector<int> odds;
    for (int x = 1; x <= n - 1; x += 2) odds.push_back(x);
    auto tail = power(cyc(n, {odds}), 2) * power(cyc(n, {c2}), 2);
    w = cat(std::move(w), {eps, tail});
    out.push_back(
        {"beta_2 = (epsilon (1,n,3,...,n-1,2))^(n-4) epsilon (1,3,...,n-1)^2 "
         "(4,6,...,n)^2",
         w, bld(ElemId::Beta2)});
    for (int i = 3; i <= n; ++i) {
      std::vector<Transformation> wi{eps};
      for (int r = 0; r < i - 2; ++r) wi = cat(std::move(wi), {sigi, eps});
      wi.push_back(power(sig, i - 2));
      out.push_back({"lambda_i = epsilon (sigma^-1 epsilon)^(i-2) sigma^(i-2), "
                     "i=" + std::to_string(i),
                     wi, build(NamedElement::idx(ElemId::LambdaI, n, i))});
    }
  }

  if (n == 4) {
    const auto eps = bld(ElemId::Epsilon);
    const auto sig = bld(ElemId::SigmaCycle);
    const auto sigi = inverse(sig);
    out.push_back({"[1,1,2,4] = epsilon sigma^-1 epsilon sigma",
                   {eps, sigi, eps, sig},
                   tf({1, 1, 2, 4})});
    out.push_back({"[1,1,2,3] = (epsilon sigma^-1)^2 epsilon sigma^2",
                   {eps, sigi, eps, sigi, eps, sig, sig},
                   tf({1, 1, 2, 3})});
  }

  return out;
}

std::optional<NamedElement> parse_named(const std::string& text) {
  auto at = text.find('@');
  if (at == std::string::npos) return std::nullopt;
  std::string base = text.substr(0, at);
  std::string arg = text.substr(at + 1);
  auto parse_int = [](const std::string& s, int& v) {
    try {
      std::size_t pos = 0;
      v = std::stoi(s, &pos);
      return pos == s.size();
    } catch (...) {
      return false;
    }
  };
  static const std::pair<const char*, ElemId> plain[] = {
      {"iota", ElemId::Iota},         {"sigma", ElemId::SigmaCycle},
      {"rho", ElemId::Rho},           {"theta", ElemId::Theta},
      {"eta", ElemId::Eta},           {"zeta", ElemId::Zeta},
      {"mu", ElemId::MuN},            {"mu'", ElemId::MuPrimeN},
      {"epsilon", ElemId::Epsilon},   {"epsilon'", ElemId::EpsilonPrime},
      {"beta_1", ElemId::Beta1},      {"beta_2", ElemId::Beta2},
      {"beta_1'", ElemId::Beta1Prime},{"beta_2'", ElemId::Beta2Prime},
      {"gamma", ElemId::GammaN},      {"gamma'", ElemId::GammaPrimeN},
      {"gamma''", ElemId::GammaDoublePrimeN},
      {"delta", ElemId::DeltaN},      {"delta'", ElemId::DeltaPrimeN},
      {"pi", ElemId::Pi},
  };
  static const std::pair<const char*, ElemId> indexed[] = {
      {"beta_2i", ElemId::Beta2i},     {"lambda_i", ElemId::LambdaI},
      {"lambda_i'", ElemId::LambdaPrimeI}, {"xi_i", ElemId::XiI},
      {"xi_i'", ElemId::XiPrimeI},     {"nu_i", ElemId::NuI},
      {"nu_i'", ElemId::NuPrimeI},
  };
  static const std::pair<const char*, ElemId> blocky[] = {
      {"oplus_lambda", ElemId::OplusLambda},
      {"oplus_mu", ElemId::OplusMu},
      {"oplus_mu'", ElemId::OplusMuPrime},
  };
  for (auto [name, id] : blocky)
    if (base == name) {
      auto comma = arg.find(',');
      if (comma == std::string::npos) return std::nullopt;
      int m = 0, k = 0;
      if (!parse_int(arg.substr(0, comma), m) ||
          !parse_int(arg.substr(comma + 1), k))
        return std::nullopt;
      return NamedElement::oplus(id, m, k);
    }
  for (auto [name, id] : indexed)
    if (base == name) {
      auto colon = arg.find(':');
      if (colon == std::string::npos) return std::nullopt;
      int n = 0, i = 0;
      if (!parse_int(arg.substr(0, colon), n) ||
          !parse_int(arg.substr(colon + 1), i))
        return std::nullopt;
      return NamedElement::idx(id, n, i);
    }
  for (auto [name, id] : plain)
    if (base == name) {
      int n = 0;
      if (!parse_int(arg, n)) return std::nullopt;
      return NamedElement::of(id, n);
    }
  return std::nullopt;
}

}  // namespace evenres
