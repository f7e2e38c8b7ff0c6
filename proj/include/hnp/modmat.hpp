#pragma once
// Linear algebra over Z/e (e composite): streaming echelon reduction with
// annihilator closure (Howell-style), kernels, and diagonalization. Entries
// are int64 reduced to [0, e). Every quotient handled here contains e*Z^n,
// so reducing mod e is exact.

#include <cstdint>
#include <numeric>
#include <vector>

#include "hnp/ab_invariants.hpp"
#include "hnp/errors.hpp"

namespace hnp::modmat {

using Row = std::vector<long long>;

inline long long norm(long long v, long long e) {
  v %= e;
  return v < 0 ? v + e : v;
}

inline long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

inline long long xgcd_ll(long long a, long long b, long long& x, long long& y) {
  long long old_r = a, r = b, old_x = 1, xx = 0, old_y = 0, yy = 1;
  while (r) {
    long long q = old_r / r;
    long long t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_x - q * xx;
    old_x = xx;
    xx = t;
    t = old_y - q * yy;
    old_y = yy;
    yy = t;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_x = -old_x;
    old_y = -old_y;
  }
  x = old_x;
  y = old_y;
  return old_r;
}

// Row-space echelon form over Z/e with annihilator closure: the stored pivot
// rows span the same row module as everything fed in, and any element of the
// span whose leading column is >= j lies in the span of pivots at columns
// >= j. Feeding rows one at a time keeps memory at O(pivots).
class Echelon {
public:
  Echelon(int width, long long e) : width_(width), e_(e) {}

  void add(Row r) {
    HNP_CHECK(static_cast<int>(r.size()) == width_, "echelon row width");
    for (auto& v : r) v = norm(v, e_);
    reduce_in(std::move(r));
    while (!queue_.empty()) {
      Row q = std::move(queue_.back());
      queue_.pop_back();
      reduce_in(std::move(q));
    }
  }

  const std::vector<Row>& pivot_rows() const { return pivots_; }
  const std::vector<int>& pivot_cols() const { return pivot_at_; }

  // rows whose reduction ended at zero, with a callback capturing them
  // (used by the kernel computation via transform columns)
  void set_zero_row_sink(std::vector<Row>* sink, int tail_from) {
    sink_ = sink;
    tail_from_ = tail_from;
  }

private:
  int width_;
  long long e_;
  std::vector<Row> pivots_;
  std::vector<int> pivot_at_;
  std::vector<Row> queue_;
  std::vector<Row>* sink_ = nullptr;
  int tail_from_ = 0;

  int leading(const Row& r, int upto) const {
    for (int j = 0; j < upto; ++j)
      if (r[j]) return j;
    return upto;
  }

  void enqueue_annihilator(const Row& p, int c) {
    long long mult = e_ / gcd_ll(p[c], e_);
    if (mult <= 1) return;
    Row ann(width_);
    for (int j = 0; j < width_; ++j) ann[j] = norm(p[j] * mult, e_);
    queue_.push_back(std::move(ann));
  }

  void reduce_in(Row r) {
    const int upto = sink_ ? tail_from_ : width_;
    for (;;) {
      int c = leading(r, upto);
      if (c == upto) {
        if (sink_) {
          Row tail(r.begin() + tail_from_, r.end());
          bool nz = false;
          for (long long v : tail) nz |= v != 0;
          if (nz) sink_->push_back(std::move(tail));
        }
        return;
      }
      int slot = -1;
      for (size_t k = 0; k < pivots_.size(); ++k)
        if (pivot_at_[k] == c) {
          slot = static_cast<int>(k);
          break;
        }
      if (slot < 0) {
        pivots_.push_back(std::move(r));
        pivot_at_.push_back(c);
        enqueue_annihilator(pivots_.back(), c);
        return;
      }
      Row& p = pivots_[slot];
      long long dp = p[c], b = r[c];
      if (b % dp == 0) {
        long long q = b / dp;
        for (int j = 0; j < width_; ++j) r[j] = norm(r[j] - q * p[j], e_);
      } else {
        // strengthen the pivot: span{p, r} = span{new_p, r'}
        long long x, y;
        long long g = xgcd_ll(dp, b, x, y);
        Row np(width_), rp(width_);
        long long ag = dp / g, bg = b / g;
        for (int j = 0; j < width_; ++j) {
          np[j] = norm(x * p[j] + y * r[j], e_);
          rp[j] = norm(ag * r[j] - bg * p[j], e_);
        }
        p = std::move(np);
        enqueue_annihilator(p, c);
        r = std::move(rp);
      }
    }
  }
};

// Generators (as columns, length n) of { x in (Z/e)^n : A x = 0 (mod e) }.
// Rows of `a` are the conditions; zero rows are fine.
inline std::vector<Row> kernel_mod(const std::vector<Row>& a, int n, long long e) {
  HNP_CHECK(e >= 1, "kernel_mod: modulus must be >= 1");
  if (e == 1) {
    std::vector<Row> gens(n, Row(n, 0));
    for (int i = 0; i < n; ++i) gens[i][i] = 1;
    return gens;
  }
  const int m = static_cast<int>(a.size());
  std::vector<Row> kernel;
  Echelon ech(m + n, e);
  ech.set_zero_row_sink(&kernel, m);
  for (int i = 0; i < n; ++i) {
    Row r(m + n, 0);
    for (int j = 0; j < m; ++j) r[j] = norm(a[j][i], e);
    r[m + i] = 1;
    ech.add(std::move(r));
  }
  return kernel;
}

// Invariant factors of Z^k / (column span of t + e Z^k); t is k x m, entries
// mod e. Any diagonalization works: the quotient is the direct sum of the
// Z/gcd(d_i, e).
inline AbInvariants diagonal_invariants_mod(std::vector<Row> t, int k, long long e) {
  HNP_CHECK(e >= 1, "diagonal_invariants_mod: modulus must be >= 1");
  if (e == 1) return AbInvariants{};
  const int m = t.empty() ? 0 : static_cast<int>(t[0].size());
  for (auto& row : t)
    for (auto& v : row) v = norm(v, e);
  std::vector<BigInt> orders;
  int pos = 0;
  const int steps = std::min(k, m);
  for (; pos < steps; ++pos) {
    int pi = -1, pj = -1;
    long long best = 0;
    for (int i = pos; i < k; ++i)
      for (int j = pos; j < m; ++j) {
        if (!t[i][j]) continue;
        long long g = gcd_ll(t[i][j], e);
        if (pi < 0 || g < best) {
          best = g;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    std::swap(t[pos], t[pi]);
    for (int i = 0; i < k; ++i) std::swap(t[i][pos], t[i][pj]);
    for (;;) {
      bool dirty = false;
      for (int i = pos + 1; i < k; ++i) {
        if (!t[i][pos]) continue;
        long long d = t[pos][pos], b = t[i][pos];
        if (b % d == 0) {
          long long q = b / d;
          for (int j = pos; j < m; ++j) t[i][j] = norm(t[i][j] - q * t[pos][j], e);
        } else {
          long long x, y;
          long long g = xgcd_ll(d, b, x, y);
          long long ag = d / g, bg = b / g;
          for (int j = pos; j < m; ++j) {
            long long np = norm(x * t[pos][j] + y * t[i][j], e);
            long long nr = norm(ag * t[i][j] - bg * t[pos][j], e);
            t[pos][j] = np;
            t[i][j] = nr;
          }
          dirty = true;
        }
      }
      for (int j = pos + 1; j < m; ++j) {
        if (!t[pos][j]) continue;
        long long d = t[pos][pos], b = t[pos][j];
        if (b % d == 0) {
          long long q = b / d;
          for (int i = pos; i < k; ++i) t[i][j] = norm(t[i][j] - q * t[i][pos], e);
        } else {
          long long x, y;
          long long g = xgcd_ll(d, b, x, y);
          long long ag = d / g, bg = b / g;
          for (int i = pos; i < k; ++i) {
            long long np = norm(x * t[i][pos] + y * t[i][j], e);
            long long nc = norm(ag * t[i][j] - bg * t[i][pos], e);
            t[i][pos] = np;
            t[i][j] = nc;
          }
          dirty = true;
        }
      }
      if (!dirty) break;
    }
    orders.emplace_back(gcd_ll(t[pos][pos], e));
  }
  for (int i = pos; i < k; ++i) orders.emplace_back(e);  // no pivot: bare Z/e
  return AbInvariants::canonical(orders, 0);
}

// Invariants of span(v_cols)/span(w_cols) inside (Z/e)^n; w must lie in
// span(v) + eZ^n (true for coboundaries inside cocycles).
inline AbInvariants quotient_invariants_mod(const std::vector<Row>& v_cols,
                                            const std::vector<Row>& w_cols, int n,
                                            long long e) {
  if (e == 1) return AbInvariants{};
  const int k = static_cast<int>(v_cols.size());
  if (k == 0) return AbInvariants{};
  std::vector<Row> sys(n, Row(k + w_cols.size(), 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < k; ++j) sys[i][j] = norm(v_cols[j][i], e);
    for (size_t j = 0; j < w_cols.size(); ++j) sys[i][k + j] = norm(w_cols[j][i], e);
  }
  auto rel = kernel_mod(sys, k + static_cast<int>(w_cols.size()), e);
  std::vector<Row> t(k, Row(rel.size(), 0));
  for (size_t j = 0; j < rel.size(); ++j)
    for (int i = 0; i < k; ++i) t[i][j] = rel[j][i];
  return diagonal_invariants_mod(std::move(t), k, e);
}

}  // namespace hnp::modmat
