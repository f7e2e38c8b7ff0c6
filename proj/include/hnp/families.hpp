#pragma once
// Parametric constructors for the group families with known Schur
// multipliers: metacyclic G0(m,s,r,t) and its named specializations,
// Z-groups, the exponent-p^2 extraspecial group of order p^3, Frobenius
// groups, and raw generator lists.

#include <optional>
#include <string>
#include <vector>

#include "hnp/ab_invariants.hpp"
#include "hnp/perm_group.hpp"

namespace hnp {

struct MetacyclicParams {
  long long m = 1, s = 1, r = 1, t = 1;
};

struct GroupSpec {
  enum class Kind {
    Cyclic,                // C:n
    Dihedral,              // D:n        (order 2n, natural degree n)
    Quasidihedral,         // QD:m       (QD_{8m}, order 16m)
    Modular,               // Mod:m      (M_{16m}, order 16m)
    GeneralizedQuaternion, // Q:m        (Q_{4m}, order 4m)
    Metacyclic,            // G0:m,s,r,t
    Beyl,                  // Beyl:M,N,r,l
    ZGroup,                // Z:m,n,r
    ExtraspecialP2,        // XS:p       (E_{p^2}(p^3))
    Frobenius,             // F:p,l      (C_p x| C_l, natural degree p)
    RawGenerators          // perm:<cycles>;<cycles>;...
  };
  Kind kind = Kind::Cyclic;
  std::vector<long long> params;
  std::vector<std::string> raw_gens;

  enum class StabKind { None, Trivial, Point, Words, Perms };
  StabKind stab_kind = StabKind::None;
  int stab_point = 0;
  std::vector<std::string> stab_spec;  // generator words or cycle strings

  std::string to_string() const {
    std::string s;
    switch (kind) {
      case Kind::Cyclic: s = "C:"; break;
      case Kind::Dihedral: s = "D:"; break;
      case Kind::Quasidihedral: s = "QD:"; break;
      case Kind::Modular: s = "Mod:"; break;
      case Kind::GeneralizedQuaternion: s = "Q:"; break;
      case Kind::Metacyclic: s = "G0:"; break;
      case Kind::Beyl: s = "Beyl:"; break;
      case Kind::ZGroup: s = "Z:"; break;
      case Kind::ExtraspecialP2: s = "XS:"; break;
      case Kind::Frobenius: s = "F:"; break;
      case Kind::RawGenerators: s = "perm:"; break;
    }
    if (kind == Kind::RawGenerators) {
      for (size_t i = 0; i < raw_gens.size(); ++i) {
        if (i) s += ";";
        s += raw_gens[i];
      }
    } else {
      for (size_t i = 0; i < params.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(params[i]);
      }
    }
    switch (stab_kind) {
      case StabKind::None: break;
      case StabKind::Trivial: s += "|H=1"; break;
      case StabKind::Point: s += "|H=point:" + std::to_string(stab_point + 1); break;
      case StabKind::Words:
      case StabKind::Perms: {
        s += "|H=";
        for (size_t i = 0; i < stab_spec.size(); ++i) {
          if (i) s += ";";
          s += stab_spec[i];
        }
        break;
      }
    }
    return s;
  }

  bool operator==(const GroupSpec& o) const {
    return kind == o.kind && params == o.params && raw_gens == o.raw_gens &&
           stab_kind == o.stab_kind && stab_point == o.stab_point &&
           stab_spec == o.stab_spec;
  }
};

namespace detail {

inline long long mod_norm(long long v, long long m) {
  v %= m;
  return v < 0 ? v + m : v;
}

inline long long pow_mod_ll(long long b, long long e, long long m) {
  long long r = 1 % m;
  b = mod_norm(b, m);
  while (e) {
    if (e & 1) r = (r * b) % m;
    b = (b * b) % m;
    e >>= 1;
  }
  return r;
}

// regular left action of G0(m,s,r,t); generators a = (1,0), b = (0,1),
// element (i,j) = a^i b^j at point index i*s + j
inline PermGroup metacyclic_regular(const MetacyclicParams& p) {
  const long long m = p.m, s = p.s, r = mod_norm(p.r, m), t = p.t;
  if (m < 1 || s < 1 || p.r < 1 || t < 1)
    throw Error("G0 parameters must be positive");
  if (pow_mod_ll(r, s, m) != 1 % m)
    throw Error("G0 validity: r^s = 1 (mod m) fails");
  if (mod_norm(t * (r - 1), m) != 0)
    throw Error("G0 validity: m | t(r-1) fails");
  if (m % t != 0) throw Error("G0 validity: t | m fails");
  const long long n = m * s;
  auto mul = [&](long long i1, long long j1, long long i2, long long j2) {
    long long i = mod_norm(i1 + pow_mod_ll(r, j1, m) * i2 + t * ((j1 + j2) / s), m);
    long long j = (j1 + j2) % s;
    return std::pair<long long, long long>(i, j);
  };
  auto perm_of = [&](long long gi, long long gj) {
    std::vector<int> img(n);
    for (long long i = 0; i < m; ++i)
      for (long long j = 0; j < s; ++j) {
        auto [x, y] = mul(gi, gj, i, j);
        img[static_cast<size_t>(i * s + j)] = static_cast<int>(x * s + y);
      }
    return Permutation(std::move(img));
  };
  // normal forms: a = (1, 0); b = (0, 1) for s > 1, and b = a^t when s = 1
  Permutation a = perm_of(1 % m, 0), b = perm_of(s == 1 ? t % m : 0, 1 % s);
  PermGroup g(static_cast<int>(n), {a, b});
  // verify the defining relations and the order
  HNP_CHECK(a.power(m).is_identity() && (m == 1 || a.order() == m),
            "G0 relation a^m = 1 fails");
  HNP_CHECK(b.power(s) == a.power(t), "G0 relation b^s = a^t fails");
  HNP_CHECK(b * a * b.inverse() == a.power(r), "G0 relation bab^-1 = a^r fails");
  HNP_CHECK(g.order() == n, "G0 order is not m*s");
  return g;
}

inline bool is_prime_ll(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// (p, k) with v = p^k, or nullopt
inline std::optional<std::pair<long long, int>> prime_power_of(long long v) {
  if (v < 2) return std::nullopt;
  for (long long p = 2; p * p <= v; ++p) {
    if (v % p) continue;
    int k = 0;
    long long w = v;
    while (w % p == 0) {
      w /= p;
      ++k;
    }
    if (w == 1) return std::make_pair(p, k);
    return std::nullopt;
  }
  return std::make_pair(v, 1);
}

}  // namespace detail

// Beyl parameters (M, N, r, lambda) as G0 parameters; G(M,N,r,l) has
// b^N = a^{M*l/gcd(M,r-1)}.
inline MetacyclicParams beyl_to_g0(long long M, long long N, long long r, long long lambda) {
  if (M < 1 || N < 1 || lambda < 0) throw Error("Beyl parameters out of range");
  long long rn = detail::mod_norm(r, M);
  long long g = std::gcd(M, detail::mod_norm(rn - 1, M) == 0 ? M : rn - 1);
  if (lambda != 0 && g % lambda != 0)
    throw Error("Beyl validity: lambda must divide gcd(M, r-1)");
  long long t = lambda == 0 ? M : (M / g) * lambda;
  if (t == 0) t = M;
  return MetacyclicParams{M, N, rn == 0 ? M : rn, t};
}

inline void validate_spec(const GroupSpec& spec) {
  using K = GroupSpec::Kind;
  const auto& p = spec.params;
  auto need = [&](size_t n, const char* what) {
    if (p.size() != n) throw Error(std::string("spec needs ") + what);
  };
  switch (spec.kind) {
    case K::Cyclic:
      need(1, "C:n");
      if (p[0] < 1) throw Error("C:n requires n >= 1");
      break;
    case K::Dihedral:
      need(1, "D:n");
      if (p[0] < 3) throw Error("D:n requires n >= 3");
      break;
    case K::Quasidihedral:
    case K::Modular:
      need(1, "one parameter m >= 1");
      if (p[0] < 1) throw Error("family parameter must be >= 1");
      break;
    case K::GeneralizedQuaternion:
      need(1, "Q:m");
      if (p[0] < 2) throw Error("Q:m requires m >= 2");
      break;
    case K::Metacyclic:
      need(4, "G0:m,s,r,t");
      break;
    case K::Beyl:
      need(4, "Beyl:M,N,r,l");
      break;
    case K::ZGroup: {
      need(3, "Z:m,n,r");
      long long m = p[0], n = p[1], r = p[2];
      if (m < 1 || n < 1) throw Error("Z-group: m, n >= 1");
      if (m % 2 == 0) throw Error("Z-group: m must be odd");
      if (std::gcd(m, n) != 1) throw Error("Z-group: gcd(m,n) = 1 fails");
      if (std::gcd(m, detail::mod_norm(r - 1, m) == 0 ? m : r - 1) != 1 && m > 1)
        throw Error("Z-group: gcd(m,r-1) = 1 fails");
      if (detail::pow_mod_ll(r, n, m) != 1 % m)
        throw Error("Z-group: r^n = 1 (mod m) fails");
      break;
    }
    case K::ExtraspecialP2:
      need(1, "XS:p");
      if (!detail::is_prime_ll(p[0]) || p[0] < 3)
        throw Error("XS:p requires an odd prime p");
      break;
    case K::Frobenius: {
      need(2, "F:p,l");
      if (!detail::is_prime_ll(p[0])) throw Error("F:p,l requires p prime");
      if (p[1] < 1 || (p[0] - 1) % p[1] != 0)
        throw Error("F:p,l requires l | p-1");
      break;
    }
    case K::RawGenerators:
      if (spec.raw_gens.empty()) throw Error("perm: needs at least one generator");
      break;
  }
}

// The group in its defining action (natural for D:n and F:p,l, regular for
// the presentation families), before any stabilizer override is applied.
inline PermGroup build_base_group(const GroupSpec& spec) {
  using K = GroupSpec::Kind;
  validate_spec(spec);
  const auto& p = spec.params;
  switch (spec.kind) {
    case K::Cyclic: {
      int n = static_cast<int>(p[0]);
      std::vector<int> img(n);
      for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;
      return PermGroup(n, {Permutation(std::move(img))});
    }
    case K::Dihedral: {
      int n = static_cast<int>(p[0]);
      std::vector<int> rot(n), ref(n);
      for (int i = 0; i < n; ++i) {
        rot[i] = (i + 1) % n;
        ref[i] = (n - i) % n;
      }
      Permutation s(std::move(rot)), t(std::move(ref));
      PermGroup g(n, {s, t});
      HNP_CHECK(s.order() == n && t.order() == 2 &&
                    t * s * t.inverse() == s.inverse() && g.order() == 2 * n,
                "dihedral relations fail");
      return g;
    }
    case K::Quasidihedral:
      return detail::metacyclic_regular({8 * p[0], 2, 4 * p[0] - 1, 8 * p[0]});
    case K::Modular:
      return detail::metacyclic_regular({8 * p[0], 2, 4 * p[0] + 1, 8 * p[0]});
    case K::GeneralizedQuaternion:
      return detail::metacyclic_regular({2 * p[0], 2, 2 * p[0] - 1, p[0]});
    case K::Metacyclic:
      return detail::metacyclic_regular({p[0], p[1], p[2], p[3]});
    case K::Beyl:
      return detail::metacyclic_regular(beyl_to_g0(p[0], p[1], p[2], p[3]));
    case K::ZGroup:
      return detail::metacyclic_regular({p[0], p[1], p[2] == 0 ? p[0] : p[2], p[0]});
    case K::ExtraspecialP2:
      return detail::metacyclic_regular({p[0] * p[0], p[0], p[0] + 1, p[0] * p[0]});
    case K::Frobenius: {
      long long q = p[0], l = p[1];
      // smallest multiplicative element of order l mod q
      long long r = 1;
      for (long long c = 2; c < q; ++c) {
        long long o = 1, v = c;
        while (v != 1) {
          v = (v * c) % q;
          ++o;
        }
        if (o == l) {
          r = c;
          break;
        }
      }
      if (l > 1 && r == 1) throw Error("F:p,l has no multiplier of order l");
      std::vector<int> add(q), mul(q);
      for (long long i = 0; i < q; ++i) {
        add[i] = static_cast<int>((i + 1) % q);
        mul[i] = static_cast<int>((i * r) % q);
      }
      Permutation a(std::move(add)), b(std::move(mul));
      std::vector<Permutation> gens{a};
      if (l > 1) gens.push_back(b);
      PermGroup g(static_cast<int>(q), std::move(gens));
      HNP_CHECK(g.order() == q * l, "Frobenius order fails");
      HNP_CHECK(l == 1 || b * a * b.inverse() == a.power(r), "Frobenius relation fails");
      return g;
    }
    case K::RawGenerators:
      return PermGroup::from_cycle_strings(spec.raw_gens);
  }
  throw InternalError("unreachable");
}

namespace detail {

// "a2b-1" -> a^2 * b^-1 over the group's first two generators
inline Permutation eval_word(const std::string& w, const PermGroup& g) {
  Permutation acc(g.degree());
  size_t i = 0;
  while (i < w.size()) {
    char c = w[i];
    int gi;
    if (c == 'a')
      gi = 0;
    else if (c == 'b')
      gi = 1;
    else
      throw ParseError("stabilizer word: expected 'a' or 'b'", i);
    if (gi >= static_cast<int>(g.generators().size()))
      throw Error("stabilizer word names a missing generator");
    ++i;
    long long e = 1;
    size_t start = i;
    if (i < w.size() && (w[i] == '-' || std::isdigit(static_cast<unsigned char>(w[i])))) {
      bool neg = w[i] == '-';
      if (neg) ++i;
      size_t ds = i;
      while (i < w.size() && std::isdigit(static_cast<unsigned char>(w[i]))) ++i;
      if (i == ds) throw ParseError("stabilizer word: bad exponent", start);
      e = std::stoll(w.substr(ds, i - ds));
      if (neg) e = -e;
    }
    acc = acc * g.generators()[gi].power(e);
  }
  return acc;
}

}  // namespace detail

inline PermGroup resolve_stabilizer(const GroupSpec& spec, const PermGroup& base) {
  switch (spec.stab_kind) {
    case GroupSpec::StabKind::None:
    case GroupSpec::StabKind::Trivial:
      return PermGroup::trivial(base.degree());
    case GroupSpec::StabKind::Point:
      if (spec.stab_point < 0 || spec.stab_point >= base.degree())
        throw Error("stabilizer point out of range");
      return base.stabilizer(spec.stab_point);
    case GroupSpec::StabKind::Words: {
      std::vector<Permutation> gens;
      for (const auto& w : spec.stab_spec) {
        if (w == "reflection" || w == "tau") {
          gens.push_back(detail::eval_word("b", base));
        } else {
          gens.push_back(detail::eval_word(w, base));
        }
      }
      return PermGroup(base.degree(), std::move(gens));
    }
    case GroupSpec::StabKind::Perms: {
      std::vector<Permutation> gens;
      for (const auto& t : spec.stab_spec)
        gens.push_back(Permutation::parse(t, base.degree()));
      return PermGroup(base.degree(), std::move(gens));
    }
  }
  throw InternalError("unreachable");
}

// Full construction: base group, then the coset action for the stabilizer
// override when one is present. The override must be core-free: the standing
// hypothesis is that H contains no nontrivial normal subgroup of G.
inline PermGroup build_group(const GroupSpec& spec, const Caps& caps = default_caps()) {
  PermGroup base = build_base_group(spec);
  if (spec.stab_kind == GroupSpec::StabKind::None) return base;
  PermGroup h = resolve_stabilizer(spec, base);
  if (!h.is_subgroup_of(base)) throw MembershipError("stabilizer is not a subgroup");
  if (!core(base, h, caps).is_trivial())
    throw Error("stabilizer override is not core-free; replace the group by its "
                "quotient by the core");
  return coset_action(base, h, caps).image;
}

// gcd(m, r-1) * gcd(1 + r + ... + r^{s-1}, t) / m, as an AbInvariants value
inline AbInvariants metacyclic_multiplier(const MetacyclicParams& p) {
  BigInt sum;
  BigInt rk(1);
  for (long long k = 0; k < p.s; ++k) {
    sum += rk;
    rk *= BigInt(p.r);
  }
  BigInt g1 = BigInt::gcd(BigInt(p.m), BigInt(p.r - 1));
  BigInt g2 = BigInt::gcd(sum, BigInt(p.t));
  BigInt num = g1 * g2;
  BigInt q, rem;
  BigInt::divmod(num, BigInt(p.m), q, rem);
  HNP_CHECK(rem.is_zero(), "metacyclic multiplier formula is not integral");
  return AbInvariants::canonical({q});
}

// The published closed-form M(G) for each family; nullopt for raw generators.
inline std::optional<AbInvariants> expected_multiplier(const GroupSpec& spec) {
  using K = GroupSpec::Kind;
  validate_spec(spec);
  const auto& p = spec.params;
  switch (spec.kind) {
    case K::Cyclic:
    case K::Quasidihedral:
    case K::Modular:
    case K::GeneralizedQuaternion:
    case K::ZGroup:
    case K::ExtraspecialP2:
    case K::Frobenius:
      return AbInvariants{};
    case K::Dihedral:
      return p[0] % 2 == 0 ? AbInvariants{2} : AbInvariants{};
    case K::Metacyclic:
      return metacyclic_multiplier({p[0], p[1], p[2], p[3]});
    case K::Beyl:
      return metacyclic_multiplier(beyl_to_g0(p[0], p[1], p[2], p[3]));
    case K::RawGenerators:
      return std::nullopt;
  }
  throw InternalError("unreachable");
}

// Which of Beyl's seven trivial-multiplier cases (M,N,r,lambda) falls in.
inline std::string beyl_case_of(long long M, long long N, long long r, long long lambda) {
  auto mp = detail::prime_power_of(M);
  auto np = detail::prime_power_of(N);
  if (!mp || !np || mp->first != np->first)
    throw Error("Beyl case: M and N must be powers of the same prime");
  long long p = mp->first;
  int m = mp->second, n = np->second;
  if (lambda != 0 && lambda != 1) return "not in list";
  long long rn = detail::mod_norm(r, M);
  if (detail::pow_mod_ll(rn, N, M) != 1 % M)
    throw Error("Beyl case: r^N = 1 (mod M) fails");
  auto pow_p = [&](int k) {
    long long v = 1;
    for (int i = 0; i < k; ++i) v *= p;
    return v;
  };
  // exponent k with r = p^k + delta (mod M), if any
  auto k_with = [&](long long delta) -> int {
    for (int k = 1; pow_p(k) < M; ++k)
      if (detail::mod_norm(pow_p(k) + delta, M) == rn) return k;
    return -1;
  };
  if (p % 2 == 1) {
    if (lambda == 0 && m > n && n >= 1 &&
        rn == detail::mod_norm(pow_p(m - n) + 1, M))
      return "I";
    if (lambda == 1 && n >= 3 && 2 * n - 2 > m && m > 2) {
      int k = k_with(+1);
      if (k >= 1 && 2 * k < m && k >= std::max(1, m - n + 1)) return "II";
    }
    return "not in list";
  }
  // p = 2
  if (lambda == 0 && m - 2 >= n && n >= 1) {
    if (rn == detail::mod_norm(pow_p(m - n) + 1, M)) return "III";
    if (rn == detail::mod_norm(pow_p(m - n) - 1, M)) return "IV";
  }
  if (lambda == 1) {
    if (N == 2 && m >= 2 && rn == detail::mod_norm(-1, M)) return "VI";
    if (n >= 4 && 2 * n - 2 > m && m > 4) {
      int k = k_with(+1);
      if (k >= 1 && 2 * k < m && k >= std::max(2, m - n + 1)) return "V";
    }
    if (n >= 2 && m >= 3) {
      int k = k_with(-1);
      if (k >= 1 && m > k && k >= std::max(2, m - n + 1)) return "VII";
    }
  }
  return "not in list";
}

}  // namespace hnp
