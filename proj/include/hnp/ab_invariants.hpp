#pragma once
// Finite(ly generated) abelian groups as canonical invariant-factor lists.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "hnp/bigint.hpp"
#include "hnp/errors.hpp"

namespace hnp {

namespace detail {

inline uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}
inline uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

// deterministic for n < 2^64
inline bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  int s = 0;
  while (!(d & 1)) {
    d >>= 1;
    ++s;
  }
  for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool comp = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        comp = false;
        break;
      }
    }
    if (comp) return false;
  }
  return true;
}

// prime -> exponent; throws BudgetError on values we cannot factor exactly
inline std::map<uint64_t, int> factorize_u64(uint64_t n) {
  std::map<uint64_t, int> f;
  for (uint64_t p = 2; p * p <= n && p < (1ULL << 21); p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      ++f[p];
      n /= p;
    }
  }
  if (n > 1) {
    if (!is_prime_u64(n))
      throw BudgetError("factorize: composite cofactor beyond trial-division bound");
    ++f[n];
  }
  return f;
}

}  // namespace detail

// Invariant factors sorted with factors[i] | factors[i+1], none equal 1,
// plus the number of free Z summands. Empty factors + free_rank 0 is trivial.
struct AbInvariants {
  std::vector<BigInt> factors;
  int free_rank = 0;

  AbInvariants() = default;
  AbInvariants(std::initializer_list<long long> fs, int fr = 0) : free_rank(fr) {
    std::vector<BigInt> v;
    for (long long f : fs) v.emplace_back(f);
    *this = canonical(v, fr);
  }

  // Canonicalize an arbitrary list of cyclic orders (>=0; 0 means a Z summand).
  static AbInvariants canonical(std::vector<BigInt> orders, int free_rank = 0) {
    AbInvariants r;
    r.free_rank = free_rank;
    // primary decomposition, then rebuild the divisor chain
    std::map<uint64_t, std::vector<int>> primary;  // prime -> exponents (desc)
    for (auto& d : orders) {
      HNP_CHECK(d.sign() >= 0, "negative cyclic order");
      if (d.is_zero()) {
        ++r.free_rank;
        continue;
      }
      if (d.is_one()) continue;
      if (!d.fits_ll())
        throw BudgetError("AbInvariants: cyclic order too large to factor");
      auto f = detail::factorize_u64(static_cast<uint64_t>(d.to_ll()));
      for (auto& [p, e] : f) primary[p].push_back(e);
    }
    size_t chain = 0;
    for (auto& [p, es] : primary) {
      std::sort(es.begin(), es.end(), std::greater<int>());
      chain = std::max(chain, es.size());
    }
    std::vector<BigInt> fs(chain, BigInt(1));
    for (auto& [p, es] : primary)
      for (size_t i = 0; i < es.size(); ++i) {
        BigInt pw(1);
        for (int k = 0; k < es[i]; ++k) pw *= BigInt(static_cast<long long>(p));
        fs[chain - 1 - i] *= pw;  // largest exponents into the last factor
      }
    r.factors = std::move(fs);
    return r;
  }

  bool is_trivial() const { return factors.empty() && free_rank == 0; }

  BigInt order() const {
    HNP_CHECK(free_rank == 0, "order of infinite group");
    BigInt o(1);
    for (const auto& f : factors) o *= f;
    return o;
  }

  // multiset of prime-power components, as (p, e) pairs
  std::vector<std::pair<uint64_t, int>> primary_components() const {
    std::vector<std::pair<uint64_t, int>> out;
    for (const auto& f : factors) {
      auto fac = detail::factorize_u64(static_cast<uint64_t>(f.to_ll()));
      for (auto& [p, e] : fac) out.emplace_back(p, e);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  friend AbInvariants direct_sum(const AbInvariants& a, const AbInvariants& b) {
    std::vector<BigInt> all = a.factors;
    all.insert(all.end(), b.factors.begin(), b.factors.end());
    return canonical(all, a.free_rank + b.free_rank);
  }

  bool operator==(const AbInvariants& o) const {
    return free_rank == o.free_rank && factors == o.factors;
  }
  bool operator!=(const AbInvariants& o) const { return !(*this == o); }

  std::string to_string() const {
    std::string s;
    if (free_rank > 0) {
      s += "Z";
      if (free_rank > 1) s += "^" + std::to_string(free_rank);
      if (!factors.empty()) s += " x ";
    }
    s += "[";
    for (size_t i = 0; i < factors.size(); ++i) {
      if (i) s += ",";
      s += factors[i].to_string();
    }
    s += "]";
    return s;
  }
};

inline BigInt prime_power(const std::pair<uint64_t, int>& pe) {
  BigInt pw(1);
  for (int k = 0; k < pe.second; ++k) pw *= BigInt(static_cast<long long>(pe.first));
  return pw;
}

// total = summand (+) rest for some rest; returns rest canonicalized.
// Error names the prime power where containment fails.
inline AbInvariants primary_subtract(const AbInvariants& total, const AbInvariants& summand) {
  if (summand.free_rank > total.free_rank)
    throw MembershipError("primary_subtract: free rank of summand exceeds total");
  auto tc = total.primary_components();  // sorted (p, e) multisets
  auto sc = summand.primary_components();
  std::vector<BigInt> rest;
  size_t i = 0;
  for (auto& comp : sc) {
    while (i < tc.size() && tc[i] < comp) {
      rest.push_back(prime_power(tc[i]));
      ++i;
    }
    if (i >= tc.size() || tc[i] != comp)
      throw MembershipError("primary_subtract: component " + std::to_string(comp.first) +
                            "^" + std::to_string(comp.second) + " not contained in total");
    ++i;  // consumed
  }
  for (; i < tc.size(); ++i) rest.push_back(prime_power(tc[i]));
  return AbInvariants::canonical(rest, total.free_rank - summand.free_rank);
}

}  // namespace hnp
