#include <random>

#include "doctest.h"
#include "evenres/parse.hpp"
#include "evenres/transf.hpp"

using namespace evenres;

namespace {
Transformation random_map(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(1, n);
  std::vector<int> img(n);
  for (auto& v : img) v = d(rng);
  return tf_vec(img);
}
}  // namespace

TEST_CASE("composition is left-to-right") {
  auto a = tf({2, 3, 1});
  auto b = tf({2, 1, 3});
  CHECK((a * b).images() == std::vector<int>{1, 3, 2});  // x(a*b) = (xa)b
  CHECK(compose(a, b) == a * b);
  CHECK_THROWS_AS(tf({1, 2}) * tf({1, 2, 3}), DegreeMismatch);
}

TEST_CASE("composition is associative") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + static_cast<int>(rng() % 9);
    auto a = random_map(n, rng), b = random_map(n, rng), c = random_map(n, rng);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("rank, kernel, identity") {
  auto a = tf({1, 1, 3, 4});
  CHECK(a.rank() == 3);
  CHECK_FALSE(a.is_permutation());
  auto k = kernel(a);
  CHECK(k.nontrivial_blocks() == std::vector<std::vector<int>>{{1, 2}});
  CHECK(k.blocks().size() == 3);
  CHECK(Transformation::identity(5).rank() == 5);
  CHECK((Transformation::identity(4) * a) == a);
  CHECK((a * Transformation::identity(4)) == a);
}

TEST_CASE("restriction and partial permutations") {
  auto a = tf({2, 3, 4, 1});
  auto p = restrict_to(a, {1, 2, 4});
  CHECK(p.str() == "{1:2, 2:3, 4:1}");
  CHECK_THROWS_AS(restrict_to(tf({1, 1, 3}), {1, 2}), NonInjectiveRestriction);
}

TEST_CASE("inversions: merge counting agrees with the naive scan") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng() % 12);
    std::vector<int> pts(n);
    std::iota(pts.begin(), pts.end(), 1);
    std::shuffle(pts.begin(), pts.end(), rng);
    auto perm = tf_vec(pts);
    std::vector<int> X;
    for (int i = 1; i <= n; ++i)
      if (rng() % 2) X.push_back(i);
    if (X.empty()) X.push_back(1);
    auto p = restrict_to(perm, X);
    CHECK(inversions(p) == inversions_naive(p));
  }
}

TEST_CASE("parity basics") {
  CHECK(parity(tf({2, 1, 3})) == Parity::Odd);
  CHECK(parity(tf({2, 3, 1})) == Parity::Even);
  CHECK(parity(Transformation::identity(6)) == Parity::Even);
  // restriction parity differs from full parity in general
  auto p = restrict_to(tf({2, 1, 3}), {1, 3});  // 1->2, 3->3: no inversion
  CHECK(parity(p) == Parity::Even);
}

TEST_CASE("cycles round-trip") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 10);
    std::vector<int> pts(n);
    std::iota(pts.begin(), pts.end(), 1);
    std::shuffle(pts.begin(), pts.end(), rng);
    auto perm = tf_vec(pts);
    CHECK(eval_cycles(cycle_decomposition(perm), n) == perm);
  }
  CHECK(cyc(4, {{1, 3}, {2, 4}}).images() == std::vector<int>{3, 4, 1, 2});
  CHECK_THROWS(cyc(4, {{1, 3}, {3, 4}}));  // overlap
}

TEST_CASE("order of a permutation") {
  CHECK(order(Transformation::identity(3)) == 1);
  CHECK(order(cyc(6, {{1, 2}, {3, 4, 5}})) == 6);
  CHECK_THROWS_AS(order(tf({1, 1})), NotAPermutation);
}

TEST_CASE("inverse") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + static_cast<int>(rng() % 10);
    std::vector<int> pts(n);
    std::iota(pts.begin(), pts.end(), 1);
    std::shuffle(pts.begin(), pts.end(), rng);
    auto p = tf_vec(pts);
    CHECK(p * inverse(p) == Transformation::identity(n));
  }
}

TEST_CASE("parsing all three forms") {
  CHECK(parse_transformation("[2,3,4,1]") == tf({2, 3, 4, 1}));
  CHECK(parse_transformation(" [ 2 , 3 , 4 , 1 ] ", 4) == tf({2, 3, 4, 1}));
  CHECK(parse_transformation("(1,3)(2,4)", 4) == cyc(4, {{1, 3}, {2, 4}}));
  CHECK(parse_partial_perm("{1:3, 2:1, 4:2}", 4).str() == "{1:3, 2:1, 4:2}");
  CHECK_THROWS_AS(parse_transformation("[2,3,x]"), ParseError);
  CHECK_THROWS_AS(parse_transformation("(1,3)", 0), ParseError);  // needs n
  CHECK_THROWS_AS(parse_transformation("[2,3,4,1]", 5), ParseError);
  try {
    parse_transformation("[2,,3]");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position() > 0);
  }
}

TEST_CASE("formatting") {
  CHECK(tf({2, 3, 4, 1}).str() == "[2,3,4,1]");
  CHECK(format_cycles(cyc(5, {{1, 3}, {2, 4}})) == "(1,3)(2,4)");
  CHECK(format_cycles(Transformation::identity(4)) == "()");
}
