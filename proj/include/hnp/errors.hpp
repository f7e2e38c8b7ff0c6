#pragma once
#include <stdexcept>
#include <string>

namespace hnp {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exceeded a configured cap (entry growth, variable count, element count...).
// Callers are expected to catch this and fall back to a cheaper route.
struct BudgetError : Error {
  using Error::Error;
};

struct ParseError : Error {
  size_t position;
  ParseError(const std::string& msg, size_t pos) : Error(msg), position(pos) {}
};

// A value that was required to lie in some lattice/subgroup does not.
struct MembershipError : Error {
  long long witness;  // offending column / element index, -1 if n/a
  explicit MembershipError(const std::string& msg, long long w = -1)
      : Error(msg), witness(w) {}
};

// Violated internal invariant; indicates a bug, not user error.
struct InternalError : Error {
  using Error::Error;
};

#define HNP_CHECK(cond, msg) \
  do { \
    if (!(cond)) throw ::hnp::InternalError(std::string("internal: ") + (msg)); \
  } while (0)

struct Caps {
  long long element_cap = 5000;       // max elements to enumerate
  long long degree_cap = 10000;       // max coset-action degree
  long long h2_var_cap = 20000;       // |G|^2 * rank bound for direct H^2
  long long snf_bit_bound = 100000;   // entry-growth guard in exact elimination
  long long direct_h2_order = 24;     // verdict: direct H^2 only for |G| <= this
  long long direct_h2_degree = 10;    // ... and degree <= this
};

inline const Caps& default_caps() {
  static const Caps caps{};
  return caps;
}

}  // namespace hnp
