#include "evenres/transf.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>

namespace evenres {

Transformation::Transformation(std::vector<Point> img_one_based) {
  const int n = static_cast<int>(img_one_based.size());
  if (n == 0 || n > 255) throw std::invalid_argument("degree must be in 1..255");
  img_.resize(n);
  for (int i = 0; i < n; ++i) {
    const int v = img_one_based[i];
    if (v < 1 || v > n) throw std::invalid_argument("image entry out of [n]");
    img_[i] = static_cast<Point>(v - 1);
  }
}

Transformation Transformation::identity(int n) {
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{1});
  return Transformation(std::move(img));
}

int Transformation::rank() const {
  if (degree() <= 64) {
    std::uint64_t bits = 0;
    for (Point v : img_) bits |= (1ULL << v);
    return std::popcount(bits);
  }
  std::vector<bool> seen(degree(), false);
  int cnt = 0;
  for (Point v : img_)
    if (!seen[v]) { seen[v] = true; ++cnt; }
  return cnt;
}

Transformation Transformation::operator*(const Transformation& rhs) const {
  return compose(*this, rhs);
}

std::vector<int> Transformation::images() const {
  std::vector<int> out(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) out[i] = img_[i] + 1;
  return out;
}

std::string Transformation::str() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < degree(); ++i) {
    if (i) os << ',';
    os << img_[i] + 1;
  }
  os << ']';
  return os.str();
}

Transformation compose(const Transformation& a, const Transformation& b) {
  if (a.degree() != b.degree())
    throw DegreeMismatch("compose: degree mismatch");
  const auto& ai = a.raw();
  const auto& bi = b.raw();
  std::vector<Point> one(ai.size());
  for (std::size_t i = 0; i < ai.size(); ++i) one[i] = bi[ai[i]] + 1;
  return Transformation(std::move(one));
}

PartialPerm::PartialPerm(int n, std::vector<std::pair<int, int>> pairs)
    : n_(n), pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  std::set<int> doms, ims;
  for (auto& [p, q] : pairs_) {
    if (p < 1 || p > n_ || q < 1 || q > n_)
      throw std::invalid_argument("PartialPerm: point out of [n]");
    if (!doms.insert(p).second)
      throw std::invalid_argument("PartialPerm: duplicate domain point");
    if (!ims.insert(q).second)
      throw NonInjectiveRestriction("PartialPerm: duplicate image point");
  }
}

std::vector<int> PartialPerm::domain() const {
  std::vector<int> d;
  d.reserve(pairs_.size());
  for (auto& [p, q] : pairs_) d.push_back(p);
  return d;
}

std::vector<int> PartialPerm::image() const {
  std::vector<int> im;
  im.reserve(pairs_.size());
  for (auto& [p, q] : pairs_) im.push_back(q);
  std::sort(im.begin(), im.end());
  return im;
}

std::optional<int> PartialPerm::apply(int p) const {
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(),
                             std::pair<int, int>{p, 0});
  if (it != pairs_.end() && it->first == p) return it->second;
  return std::nullopt;
}

std::string PartialPerm::str() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto& [p, q] : pairs_) {
    if (!first) os << ", ";
    first = false;
    os << p << ':' << q;
  }
  os << '}';
  return os.str();
}

KernelPartition::KernelPartition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  std::vector<bool> covered(n_ + 1, false);
  for (auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("KernelPartition: empty block");
    std::sort(b.begin(), b.end());
    for (int x : b) {
      if (x < 1 || x > n_ || covered[x])
        throw std::invalid_argument("KernelPartition: blocks must partition [n]");
      covered[x] = true;
    }
  }
  for (int x = 1; x <= n_; ++x)
    if (!covered[x])
      throw std::invalid_argument("KernelPartition: blocks must cover [n]");
  std::sort(blocks_.begin(), blocks_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

std::vector<std::vector<int>> KernelPartition::nontrivial_blocks() const {
  std::vector<std::vector<int>> out;
  for (auto& b : blocks_)
    if (b.size() >= 2) out.push_back(b);
  return out;
}

std::string KernelPartition::str() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) os << ", ";
    os << '{';
    for (std::size_t j = 0; j < blocks_[i].size(); ++j) {
      if (j) os << ',';
      os << blocks_[i][j];
    }
    os << '}';
  }
  os << '}';
  return os.str();
}

PartialPerm restrict_to(const Transformation& a, const std::vector<int>& X) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(X.size());
  for (int x : X) {
    if (x < 1 || x > a.degree())
      throw std::invalid_argument("restrict: point out of [n]");
    pairs.emplace_back(x, a.apply(x));
  }
  return PartialPerm(a.degree(), std::move(pairs));  // throws if not injective
}

long long inversions_naive(const PartialPerm& p) {
  const auto& pr = p.pairs();
  long long c = 0;
  for (std::size_t i = 0; i < pr.size(); ++i)
    for (std::size_t j = i + 1; j < pr.size(); ++j)
      if (pr[i].second > pr[j].second) ++c;
  return c;
}

namespace {

long long merge_count(std::vector<int>& v, std::vector<int>& tmp, std::size_t lo,
                      std::size_t hi) {
  if (hi - lo <= 1) return 0;
  std::size_t mid = lo + (hi - lo) / 2;
  long long c = merge_count(v, tmp, lo, mid) + merge_count(v, tmp, mid, hi);
  std::size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (v[i] <= v[j]) tmp[k++] = v[i++];
    else {
      c += static_cast<long long>(mid - i);
      tmp[k++] = v[j++];
    }
  }
  while (i < mid) tmp[k++] = v[i++];
  while (j < hi) tmp[k++] = v[j++];
  std::copy(tmp.begin() + lo, tmp.begin() + hi, v.begin() + lo);
  return c;
}

constexpr std::size_t kMergeThreshold = 32;

}  // namespace

long long inversions(const PartialPerm& p) {
  const auto& pr = p.pairs();
  if (pr.size() < kMergeThreshold) return inversions_naive(p);
  std::vector<int> seq;  // images in domain order
  seq.reserve(pr.size());
  for (auto& [a, b] : pr) seq.push_back(b);
  std::vector<int> tmp(seq.size());
  return merge_count(seq, tmp, 0, seq.size());
}

Parity parity(const PartialPerm& p) {
  return inversions(p) % 2 == 0 ? Parity::Even : Parity::Odd;
}

Parity parity(const Transformation& a) {
  if (!a.is_permutation()) throw NotAPermutation("parity: not a permutation");
  const auto& img = a.raw();
  long long c = 0;
  for (std::size_t i = 0; i < img.size(); ++i)
    for (std::size_t j = i + 1; j < img.size(); ++j)
      if (img[i] > img[j]) ++c;
  return c % 2 == 0 ? Parity::Even : Parity::Odd;
}

KernelPartition kernel(const Transformation& a) {
  const int n = a.degree();
  std::vector<std::vector<int>> fibers(n);
  for (int x = 1; x <= n; ++x) fibers[a.apply(x) - 1].push_back(x);
  std::vector<std::vector<int>> blocks;
  for (auto& f : fibers)
    if (!f.empty()) blocks.push_back(std::move(f));
  return KernelPartition(n, std::move(blocks));
}

long long order(const Transformation& p) {
  if (!p.is_permutation()) throw NotAPermutation("order: not a permutation");
  const int n = p.degree();
  std::vector<bool> seen(n + 1, false);
  long long ord = 1;
  for (int x = 1; x <= n; ++x) {
    if (seen[x]) continue;
    long long len = 0;
    for (int y = x; !seen[y]; y = p.apply(y)) {
      seen[y] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

Transformation eval_cycles(const CycleExpr& c, int n) {
  std::vector<Point> img(n);
  for (int i = 0; i < n; ++i) img[i] = static_cast<Point>(i + 1);
  std::vector<bool> used(n + 1, false);
  for (const auto& cyc : c.cycles) {
    if (cyc.size() < 2)
      throw std::invalid_argument("eval_cycles: cycle shorter than 2");
    for (int x : cyc) {
      if (x < 1 || x > n)
        throw std::invalid_argument("eval_cycles: point out of range");
      if (used[x]) throw std::invalid_argument("eval_cycles: overlapping cycles");
      used[x] = true;
    }
    for (std::size_t i = 0; i < cyc.size(); ++i)
      img[cyc[i] - 1] = static_cast<Point>(cyc[(i + 1) % cyc.size()]);
  }
  return Transformation(std::move(img));
}

CycleExpr cycle_decomposition(const Transformation& p) {
  if (!p.is_permutation())
    throw NotAPermutation("cycle_decomposition: not a permutation");
  const int n = p.degree();
  CycleExpr out;
  std::vector<bool> seen(n + 1, false);
  for (int x = 1; x <= n; ++x) {
    if (seen[x] || p.apply(x) == x) {
      seen[x] = true;
      continue;
    }
    std::vector<int> cyc;
    for (int y = x; !seen[y]; y = p.apply(y)) {
      seen[y] = true;
      cyc.push_back(y);
    }
    out.cycles.push_back(std::move(cyc));
  }
  return out;
}

Transformation tf(std::initializer_list<int> img) {
  return tf_vec(std::vector<int>(img));
}

Transformation tf_vec(const std::vector<int>& img) {
  std::vector<Point> v(img.size());
  for (std::size_t i = 0; i < img.size(); ++i) {
    if (img[i] < 1 || img[i] > static_cast<int>(img.size()))
      throw std::invalid_argument("image entry out of [n]");
    v[i] = static_cast<Point>(img[i]);
  }
  return Transformation(std::move(v));
}

Transformation cyc(int n, std::vector<std::vector<int>> cycles) {
  CycleExpr e{std::move(cycles)};
  return eval_cycles(e, n);
}

Transformation inverse(const Transformation& p) {
  if (!p.is_permutation()) throw NotAPermutation("inverse: not a permutation");
  std::vector<Point> img(p.degree());
  for (int x = 1; x <= p.degree(); ++x)
    img[p.apply(x) - 1] = static_cast<Point>(x);
  return Transformation(std::move(img));
}

}  // namespace evenres
