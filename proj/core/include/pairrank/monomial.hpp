#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace pairrank {

// Dense exponent vector. Rings in this engine stay small (tower variables
// plus a handful of fresh point/parameter variables).
struct Monomial {
  std::vector<std::uint32_t> e;

  explicit Monomial(int nvars = 0) : e(static_cast<size_t>(nvars), 0u) {}

  int nvars() const { return static_cast<int>(e.size()); }

  std::uint64_t degree() const {
    std::uint64_t d = 0;
    for (auto x : e) d += x;
    return d;
  }

  bool is_one() const {
    for (auto x : e)
      if (x) return false;
    return true;
  }

  bool operator==(const Monomial& o) const { return e == o.e; }

  Monomial operator*(const Monomial& o) const {
    Monomial r(nvars());
    for (size_t i = 0; i < e.size(); ++i) r.e[i] = e[i] + o.e[i];
    return r;
  }

  bool divides(const Monomial& o) const {
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }

  // quotient o / this, assuming divisibility
  Monomial quotient_into(const Monomial& o) const {
    Monomial r(nvars());
    for (size_t i = 0; i < e.size(); ++i) r.e[i] = o.e[i] - e[i];
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.nvars());
    for (size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
    return r;
  }

  static Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r(a.nvars());
    for (size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.e[i] < b.e[i] ? a.e[i] : b.e[i];
    return r;
  }

  bool coprime(const Monomial& o) const {
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] && o.e[i]) return false;
    return true;
  }
};

// Graded reverse lexicographic comparison on a variable index range
// [lo, hi). Variable lo is the biggest. Returns <0, 0, >0.
inline int grevlex_cmp_range(const Monomial& a, const Monomial& b, int lo, int hi) {
  std::uint64_t da = 0, db = 0;
  for (int i = lo; i < hi; ++i) {
    da += a.e[static_cast<size_t>(i)];
    db += b.e[static_cast<size_t>(i)];
  }
  if (da != db) return da < db ? -1 : 1;
  for (int i = hi - 1; i >= lo; --i) {
    auto xa = a.e[static_cast<size_t>(i)], xb = b.e[static_cast<size_t>(i)];
    if (xa != xb) return xa > xb ? -1 : 1;  // reverse lex: bigger tail loses
  }
  return 0;
}

// Monomial order: a sequence of variable blocks compared grevlex
// block-by-block. One block spanning all variables is plain grevlex;
// leading blocks are elimination blocks.
class MonomialOrder {
 public:
  struct Block {
    int lo, hi;
  };

  static MonomialOrder grevlex(int nvars) { return MonomialOrder({{0, nvars}}); }

  // Blocks given by cut points, e.g. {k, n} -> [0,k) then [k,n).
  static MonomialOrder blocks(const std::vector<int>& cuts) {
    std::vector<Block> bs;
    int lo = 0;
    for (int c : cuts) {
      if (c > lo) bs.push_back({lo, c});
      lo = c;
    }
    return MonomialOrder(std::move(bs));
  }

  int cmp(const Monomial& a, const Monomial& b) const {
    for (const auto& blk : blocks_) {
      int c = grevlex_cmp_range(a, b, blk.lo, blk.hi);
      if (c != 0) return c;
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }

  const std::vector<Block>& blocks() const { return blocks_; }

 private:
  explicit MonomialOrder(std::vector<Block> bs) : blocks_(std::move(bs)) {}
  std::vector<Block> blocks_;
};

}  // namespace pairrank
