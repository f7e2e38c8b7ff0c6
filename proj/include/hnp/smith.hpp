#pragma once
// Exact integer linear algebra: Smith normal form with transforms,
// kernel lattices, and quotient-lattice invariant factors.

#include <optional>
#include <vector>

#include "hnp/ab_invariants.hpp"
#include "hnp/errors.hpp"
#include "hnp/int_matrix.hpp"

namespace hnp {

struct SmithForm {
  std::vector<BigInt> d;  // diagonal, d[i] | d[i+1] over the nonzero prefix
  IntMatrix u, v;         // unimodular, u*A*v = diag(d) padded with zeros
  int rank = 0;

  IntMatrix diagonal(int rows, int cols) const {
    IntMatrix m(rows, cols);
    for (size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
  }
};

namespace detail {

inline void check_growth(const IntMatrix& m, const Caps& caps) {
  if (static_cast<long long>(m.max_bit_length()) > caps.snf_bit_bound)
    throw BudgetError("entry growth exceeded configured bit bound");
}

}  // namespace detail

// Deterministic SNF: pivot = minimal |entry|, ties at lowest row then column.
inline SmithForm smith_normal_form(const IntMatrix& a, const Caps& caps = default_caps()) {
  const int m = a.rows(), n = a.cols();
  IntMatrix w = a;
  SmithForm s;
  s.u = IntMatrix::identity(m);
  s.v = IntMatrix::identity(n);
  const int steps = std::min(m, n);

  auto row_sub = [&](IntMatrix& mat, int dst, int src, const BigInt& q) {
    for (int j = 0; j < mat.cols(); ++j)
      if (!mat.at(src, j).is_zero()) mat.at(dst, j) -= q * mat.at(src, j);
  };
  auto col_sub = [&](IntMatrix& mat, int dst, int src, const BigInt& q) {
    for (int i = 0; i < mat.rows(); ++i)
      if (!mat.at(i, src).is_zero()) mat.at(i, dst) -= q * mat.at(i, src);
  };
  auto row_swap = [&](IntMatrix& mat, int i1, int i2) {
    for (int j = 0; j < mat.cols(); ++j) std::swap(mat.at(i1, j), mat.at(i2, j));
  };
  auto col_swap = [&](IntMatrix& mat, int j1, int j2) {
    for (int i = 0; i < mat.rows(); ++i) std::swap(mat.at(i, j1), mat.at(i, j2));
  };

  int t = 0;
  for (; t < steps; ++t) {
    // locate pivot
    int pi = -1, pj = -1;
    BigInt best;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j) {
        const BigInt& v = w.at(i, j);
        if (v.is_zero()) continue;
        BigInt av = v.abs();
        if (pi < 0 || av < best) {
          best = av;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;  // submatrix is zero
    if (pi != t) {
      row_swap(w, t, pi);
      row_swap(s.u, t, pi);
    }
    if (pj != t) {
      col_swap(w, t, pj);
      col_swap(s.v, t, pj);
    }

    for (;;) {
      detail::check_growth(w, caps);
      // clear column t
      bool dirty = false;
      for (int i = 0; i < m; ++i) {
        if (i == t || w.at(i, t).is_zero()) continue;
        BigInt q = w.at(i, t) / w.at(t, t);
        if (!q.is_zero()) {
          row_sub(w, i, t, q);
          row_sub(s.u, i, t, q);
        }
        if (!w.at(i, t).is_zero()) {  // remainder smaller than pivot: promote it
          row_swap(w, t, i);
          row_swap(s.u, t, i);
          dirty = true;
          break;
        }
      }
      if (dirty) continue;
      // clear row t
      for (int j = 0; j < n; ++j) {
        if (j == t || w.at(t, j).is_zero()) continue;
        BigInt q = w.at(t, j) / w.at(t, t);
        if (!q.is_zero()) {
          col_sub(w, j, t, q);
          col_sub(s.v, j, t, q);
        }
        if (!w.at(t, j).is_zero()) {
          col_swap(w, t, j);
          col_swap(s.v, t, j);
          dirty = true;
          break;
        }
      }
      if (dirty) continue;
      // pivot must divide the remaining submatrix
      int bi = -1;
      for (int i = t + 1; i < m && bi < 0; ++i)
        for (int j = t + 1; j < n; ++j)
          if (!(w.at(i, j) % w.at(t, t)).is_zero()) {
            bi = i;
            break;
          }
      if (bi < 0) break;
      row_sub(w, t, bi, BigInt(-1));  // pull the offending row up, re-clear
      row_sub(s.u, t, bi, BigInt(-1));
    }
    if (w.at(t, t).sign() < 0) {
      for (int j = 0; j < n; ++j) w.at(t, j).negate();
      for (int j = 0; j < m; ++j) s.u.at(t, j).negate();
    }
  }

  s.d.resize(steps);
  for (int i = 0; i < steps; ++i) s.d[i] = w.at(i, i);
  s.rank = t;
  return s;
}

// Z-basis of { x : a*x = 0 }, as matrix columns (cols = cols(a) - rank(a)).
// Incremental: intersect with each row's kernel via unimodular column ops.
inline IntMatrix kernel_lattice(const IntMatrix& a, const Caps& caps = default_caps()) {
  const int n = a.cols();
  std::vector<std::vector<BigInt>> cols(n);
  for (int j = 0; j < n; ++j) {
    cols[j].assign(n, BigInt());
    cols[j][j] = BigInt(1);
  }
  for (int r = 0; r < a.rows(); ++r) {
    // w = row_r * K
    std::vector<std::pair<int, BigInt>> row;
    for (int j = 0; j < n; ++j)
      if (!a.at(r, j).is_zero()) row.emplace_back(j, a.at(r, j));
    if (row.empty()) continue;
    std::vector<BigInt> w(cols.size());
    for (size_t j = 0; j < cols.size(); ++j) {
      BigInt acc;
      for (auto& [i, v] : row) acc += v * cols[j][i];
      w[j] = acc;
    }
    // the running span is a kernel of an integer matrix, hence saturated, so
    // each column may be divided by its content without changing the span
    auto content_reduce = [&](std::vector<BigInt>& col) {
      BigInt c;
      for (const auto& v : col) {
        c = BigInt::gcd(c, v);
        if (c.is_one()) return;
      }
      if (c.is_zero() || c.is_one()) return;
      for (auto& v : col) v = v / c;
    };
    // Euclidean passes with nearest-integer quotients keep the entries tame
    for (;;) {
      int p = -1;
      for (size_t j = 0; j < w.size(); ++j) {
        if (w[j].is_zero()) continue;
        if (p < 0 || w[j].abs() < w[p].abs()) p = static_cast<int>(j);
      }
      if (p < 0) break;
      bool others = false;
      for (size_t j = 0; j < w.size(); ++j) {
        if (static_cast<int>(j) == p || w[j].is_zero()) continue;
        others = true;
        BigInt q, rem;
        BigInt::divmod(w[j], w[p], q, rem);
        // round to nearest: |rem| <= |w[p]| / 2
        BigInt two_rem = rem + rem;
        if (two_rem.abs() > w[p].abs()) {
          q += BigInt(rem.sign() * w[p].sign());
          rem = w[j] - q * w[p];
        }
        if (!q.is_zero()) {
          auto& cj = cols[j];
          const auto& cp = cols[p];
          for (int i = 0; i < n; ++i) {
            if (cp[i].is_zero()) continue;
            cj[i] -= q * cp[i];
            if (static_cast<long long>(cj[i].bit_length()) > caps.snf_bit_bound)
              throw BudgetError("entry growth exceeded configured bit bound");
          }
        }
        w[j] = rem;
        if (w[j].is_zero()) content_reduce(cols[j]);
      }
      if (!others) {  // single nonzero left: drop that column
        cols.erase(cols.begin() + p);
        break;
      }
    }
  }
  return IntMatrix::from_columns(n, cols);
}

namespace detail {

// Solve ambient * X = target over Z. Throws MembershipError naming the first
// offending target column; throws Error if ambient columns are dependent.
inline IntMatrix solve_in_span(const IntMatrix& ambient, const IntMatrix& target,
                               const Caps& caps = default_caps()) {
  HNP_CHECK(ambient.rows() == target.rows(), "solve_in_span shape mismatch");
  const int k = ambient.cols(), m = target.cols();
  SmithForm s = smith_normal_form(ambient, caps);
  if (s.rank != k) throw Error("ambient generators are not a basis (dependent columns)");
  IntMatrix us = s.u * target;  // rows(a) x m
  IntMatrix y(k, m);
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < ambient.rows(); ++i) {
      if (i < k) {
        BigInt q, r;
        BigInt::divmod(us.at(i, j), s.d[i], q, r);
        if (!r.is_zero())
          throw MembershipError("column not in the span of the ambient basis", j);
        y.at(i, j) = q;
      } else if (!us.at(i, j).is_zero()) {
        throw MembershipError("column not in the span of the ambient basis", j);
      }
    }
  }
  return s.v * y;
}

}  // namespace detail

// Invariant factors of (lattice spanned by ambient_basis)/(lattice spanned by
// sub_generators). Precondition: sub lies in the span of ambient (checked;
// violation reported with the offending column).
inline AbInvariants quotient_invariants(const IntMatrix& ambient_basis,
                                        const IntMatrix& sub_generators,
                                        const Caps& caps = default_caps()) {
  const int k = ambient_basis.cols();
  IntMatrix x = detail::solve_in_span(ambient_basis, sub_generators, caps);
  SmithForm s = smith_normal_form(x, caps);
  std::vector<BigInt> orders(s.d.begin(), s.d.begin() + s.rank);
  return AbInvariants::canonical(orders, k - s.rank);
}

// a basis (independent columns) of the lattice spanned by m's columns
inline IntMatrix lattice_column_basis(const IntMatrix& m,
                                      const Caps& caps = default_caps()) {
  if (m.cols() == 0) return m;
  SmithForm s = smith_normal_form(m, caps);
  IntMatrix reduced = m * s.v;  // column ops preserve the span; tail is zero
  return reduced.columns(0, s.rank);
}

// true iff every column of b lies in the Z-span of a's columns
inline bool span_contains(const IntMatrix& a, const IntMatrix& b,
                          const Caps& caps = default_caps()) {
  try {
    detail::solve_in_span(lattice_column_basis(a, caps), b, caps);
    return true;
  } catch (const MembershipError&) {
    return false;
  }
}

}  // namespace hnp
