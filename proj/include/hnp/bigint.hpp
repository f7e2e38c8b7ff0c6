#pragma once
// Arbitrary-precision signed integers, 32-bit limbs.
// Only what the exact linear algebra needs: ring ops, divmod, gcd, printing.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>
#include <iosfwd>
#include <ostream>

namespace hnp {

class BigInt {
public:
  BigInt() = default;
  BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    // careful with LLONG_MIN
    unsigned long long a = v < 0 ? ~static_cast<unsigned long long>(v) + 1ULL
                                 : static_cast<unsigned long long>(v);
    while (a) {
      mag_.push_back(static_cast<uint32_t>(a & 0xffffffffULL));
      a >>= 32;
    }
  }
  BigInt(int v) : BigInt(static_cast<long long>(v)) {}

  static BigInt from_string(const std::string& s) {
    size_t i = 0;
    int sg = 1;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      sg = s[i] == '-' ? -1 : 1;
      ++i;
    }
    if (i == s.size()) throw std::invalid_argument("BigInt: empty numeral");
    BigInt r;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
      r = r * BigInt(10) + BigInt(s[i] - '0');
    }
    if (sg < 0) r.negate();
    return r;
  }

  int sign() const { return sign_; }
  bool is_zero() const { return sign_ == 0; }
  bool is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }
  void negate() { sign_ = -sign_; }

  BigInt operator-() const {
    BigInt r = *this;
    r.negate();
    return r;
  }

  BigInt abs() const { return sign_ < 0 ? -*this : *this; }

  friend bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.mag_ == b.mag_;
  }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
  friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a, b) < 0; }
  friend bool operator>(const BigInt& a, const BigInt& b) { return cmp(a, b) > 0; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return cmp(a, b) <= 0; }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return cmp(a, b) >= 0; }

  static int cmp(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
    int c = cmp_mag(a.mag_, b.mag_);
    return a.sign_ >= 0 ? c : -c;
  }

  friend BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt r;
    if (a.sign_ == b.sign_) {
      r.mag_ = add_mag(a.mag_, b.mag_);
      r.sign_ = a.sign_;
    } else {
      int c = cmp_mag(a.mag_, b.mag_);
      if (c == 0) return BigInt();
      if (c > 0) {
        r.mag_ = sub_mag(a.mag_, b.mag_);
        r.sign_ = a.sign_;
      } else {
        r.mag_ = sub_mag(b.mag_, a.mag_);
        r.sign_ = b.sign_;
      }
    }
    return r;
  }
  friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

  friend BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
    BigInt r;
    r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
    for (size_t i = 0; i < a.mag_.size(); ++i) {
      uint64_t carry = 0;
      for (size_t j = 0; j < b.mag_.size(); ++j) {
        uint64_t cur = static_cast<uint64_t>(a.mag_[i]) * b.mag_[j] +
                       r.mag_[i + j] + carry;
        r.mag_[i + j] = static_cast<uint32_t>(cur);
        carry = cur >> 32;
      }
      size_t k = i + b.mag_.size();
      while (carry) {
        uint64_t cur = r.mag_[k] + carry;
        r.mag_[k] = static_cast<uint32_t>(cur);
        carry = cur >> 32;
        ++k;
      }
    }
    r.trim();
    r.sign_ = a.sign_ * b.sign_;
    return r;
  }

  // Truncated division, C++ semantics: (a/b)*b + a%b == a, |a%b| < |b|.
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
    int c = cmp_mag(a.mag_, b.mag_);
    if (c < 0) {
      q = BigInt();
      r = a;
      return;
    }
    divmod_mag(a.mag_, b.mag_, q.mag_, r.mag_);
    q.trim();
    r.trim();
    q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
    r.sign_ = r.mag_.empty() ? 0 : a.sign_;
  }

  friend BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divmod(a, b, q, r);
    return q;
  }
  friend BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divmod(a, b, q, r);
    return r;
  }

  BigInt& operator+=(const BigInt& o) {
    *this = *this + o;
    return *this;
  }
  BigInt& operator-=(const BigInt& o) {
    *this = *this - o;
    return *this;
  }
  BigInt& operator*=(const BigInt& o) {
    *this = *this * o;
    return *this;
  }

  static BigInt gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
      BigInt r = a % b;
      a = b;
      b = r;
    }
    return a;
  }

  // g = gcd(a,b) >= 0 with a*x + b*y = g.
  static BigInt xgcd(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y) {
    BigInt old_r = a, r = b;
    BigInt old_x(1), xx(0), old_y(0), yy(1);
    while (!r.is_zero()) {
      BigInt q, rem;
      divmod(old_r, r, q, rem);
      old_r = r;
      r = rem;
      BigInt t = old_x - q * xx;
      old_x = xx;
      xx = t;
      t = old_y - q * yy;
      old_y = yy;
      yy = t;
    }
    if (old_r.sign_ < 0) {
      old_r.negate();
      old_x.negate();
      old_y.negate();
    }
    x = old_x;
    y = old_y;
    return old_r;
  }

  size_t bit_length() const {
    if (mag_.empty()) return 0;
    uint32_t top = mag_.back();
    size_t b = 0;
    while (top) {
      ++b;
      top >>= 1;
    }
    return (mag_.size() - 1) * 32 + b;
  }

  bool fits_ll() const { return bit_length() <= 62; }
  long long to_ll() const {
    if (!fits_ll()) throw std::overflow_error("BigInt: does not fit long long");
    long long v = 0;
    for (size_t i = mag_.size(); i-- > 0;) v = (v << 32) | mag_[i];
    return sign_ < 0 ? -v : v;
  }

  std::string to_string() const {
    if (sign_ == 0) return "0";
    std::vector<uint32_t> m = mag_;
    std::string digits;
    while (!m.empty()) {
      uint64_t rem = 0;
      for (size_t i = m.size(); i-- > 0;) {
        uint64_t cur = (rem << 32) | m[i];
        m[i] = static_cast<uint32_t>(cur / 1000000000ULL);
        rem = cur % 1000000000ULL;
      }
      while (!m.empty() && m.back() == 0) m.pop_back();
      for (int k = 0; k < 9; ++k) {
        digits.push_back(static_cast<char>('0' + rem % 10));
        rem /= 10;
      }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
  }

  friend std::ostream& operator<<(std::ostream& os, const BigInt& v) {
    return os << v.to_string();
  }

private:
  int sign_ = 0;
  std::vector<uint32_t> mag_;  // little-endian, no leading zeros

  void trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
  }

  static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }

  static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& sml = a.size() >= b.size() ? b : a;
    std::vector<uint32_t> r(big.size() + 1, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < big.size(); ++i) {
      uint64_t cur = carry + big[i] + (i < sml.size() ? sml[i] : 0);
      r[i] = static_cast<uint32_t>(cur);
      carry = cur >> 32;
    }
    r[big.size()] = static_cast<uint32_t>(carry);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }

  // requires |a| >= |b|
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r(a.size(), 0);
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
      int64_t cur = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
      if (cur < 0) {
        cur += 1LL << 32;
        borrow = 1;
      } else {
        borrow = 0;
      }
      r[i] = static_cast<uint32_t>(cur);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }

  // Knuth algorithm D on magnitudes; requires |a| >= |b| > 0.
  static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                         std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
    if (b.size() == 1) {
      uint64_t d = b[0], rem = 0;
      q.assign(a.size(), 0);
      for (size_t i = a.size(); i-- > 0;) {
        uint64_t cur = (rem << 32) | a[i];
        q[i] = static_cast<uint32_t>(cur / d);
        rem = cur % d;
      }
      r.clear();
      if (rem) r.push_back(static_cast<uint32_t>(rem));
      return;
    }
    // normalize so the top limb of b has its high bit set
    int s = 0;
    for (uint32_t top = b.back(); !(top & 0x80000000u); top <<= 1) ++s;
    std::vector<uint32_t> u = shl_mag(a, s), v = shl_mag(b, s);
    u.push_back(0);
    size_t n = v.size(), m = u.size() - n - 1;
    q.assign(m + 1, 0);
    for (size_t j = m + 1; j-- > 0;) {
      uint64_t num = (static_cast<uint64_t>(u[j + n]) << 32) | u[j + n - 1];
      uint64_t qhat = num / v[n - 1], rhat = num % v[n - 1];
      while (qhat >= (1ULL << 32) ||
             qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
        --qhat;
        rhat += v[n - 1];
        if (rhat >= (1ULL << 32)) break;
      }
      // multiply-subtract
      int64_t borrow = 0;
      uint64_t carry = 0;
      for (size_t i = 0; i < n; ++i) {
        uint64_t p = qhat * v[i] + carry;
        carry = p >> 32;
        int64_t t = static_cast<int64_t>(u[i + j]) - borrow -
                    static_cast<int64_t>(p & 0xffffffffULL);
        if (t < 0) {
          t += 1LL << 32;
          borrow = 1;
        } else {
          borrow = 0;
        }
        u[i + j] = static_cast<uint32_t>(t);
      }
      int64_t t = static_cast<int64_t>(u[j + n]) - borrow - static_cast<int64_t>(carry);
      if (t < 0) {
        // qhat was one too large: add back
        t += 1LL << 32;
        --qhat;
        uint64_t c2 = 0;
        for (size_t i = 0; i < n; ++i) {
          uint64_t cur = static_cast<uint64_t>(u[i + j]) + v[i] + c2;
          u[i + j] = static_cast<uint32_t>(cur);
          c2 = cur >> 32;
        }
        t += static_cast<int64_t>(c2);
      }
      u[j + n] = static_cast<uint32_t>(t);
      q[j] = static_cast<uint32_t>(qhat);
    }
    u.resize(n);
    r = shr_mag(u, s);
  }

  static std::vector<uint32_t> shl_mag(const std::vector<uint32_t>& a, int s) {
    if (s == 0) return a;
    std::vector<uint32_t> r(a.size() + 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
      r[i] |= a[i] << s;
      r[i + 1] = a[i] >> (32 - s);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }
  static std::vector<uint32_t> shr_mag(const std::vector<uint32_t>& a, int s) {
    if (s == 0) {
      auto r = a;
      while (!r.empty() && r.back() == 0) r.pop_back();
      return r;
    }
    std::vector<uint32_t> r(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
      r[i] = a[i] >> s;
      if (i + 1 < a.size()) r[i] |= a[i + 1] << (32 - s);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }
};

inline BigInt abs(const BigInt& v) { return v.abs(); }

}  // namespace hnp
