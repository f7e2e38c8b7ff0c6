#pragma once
// Dense matrices over Z with arbitrary-precision entries.

#include <initializer_list>
#include <vector>

#include "hnp/bigint.hpp"
#include "hnp/errors.hpp"

namespace hnp {

class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> init) {
    rows_ = static_cast<int>(init.size());
    cols_ = rows_ ? static_cast<int>(init.begin()->size()) : 0;
    e_.reserve(size_t(rows_) * cols_);
    for (const auto& row : init) {
      HNP_CHECK(static_cast<int>(row.size()) == cols_, "ragged initializer");
      for (long long v : row) e_.emplace_back(v);
    }
  }

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = BigInt(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  BigInt& at(int i, int j) { return e_[size_t(i) * cols_ + j]; }
  const BigInt& at(int i, int j) const { return e_[size_t(i) * cols_ + j]; }

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }

  bool is_zero() const {
    for (const auto& v : e_)
      if (!v.is_zero()) return false;
    return true;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    HNP_CHECK(a.cols_ == b.rows_, "matmul shape mismatch");
    IntMatrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const BigInt& av = a.at(i, k);
        if (av.is_zero()) continue;
        for (int j = 0; j < b.cols_; ++j) {
          const BigInt& bv = b.at(k, j);
          if (!bv.is_zero()) r.at(i, j) += av * bv;
        }
      }
    return r;
  }

  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    HNP_CHECK(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matsub shape mismatch");
    IntMatrix r(a.rows_, a.cols_);
    for (size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] - b.e_[i];
    return r;
  }

  // columns [c0, c1) as a new matrix
  IntMatrix columns(int c0, int c1) const {
    IntMatrix r(rows_, c1 - c0);
    for (int i = 0; i < rows_; ++i)
      for (int j = c0; j < c1; ++j) r.at(i, j - c0) = at(i, j);
    return r;
  }

  std::vector<BigInt> column(int j) const {
    std::vector<BigInt> c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
  }

  static IntMatrix from_columns(int rows, const std::vector<std::vector<BigInt>>& cols) {
    IntMatrix m(rows, static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j) {
      HNP_CHECK(static_cast<int>(cols[j].size()) == rows, "column length mismatch");
      for (int i = 0; i < rows; ++i) m.at(i, static_cast<int>(j)) = cols[j][i];
    }
    return m;
  }

  size_t max_bit_length() const {
    size_t b = 0;
    for (const auto& v : e_) b = std::max(b, v.bit_length());
    return b;
  }

private:
  int rows_ = 0, cols_ = 0;
  std::vector<BigInt> e_;  // row-major
};

}  // namespace hnp
