#include "doctest.h"

#include "hnp/families.hpp"
#include "hnp/hnp.hpp"

using namespace hnp;

namespace {

long long count_order(const PermGroup& g, long long o) {
  long long c = 0;
  for (const auto& x : g.element_list())
    if (x.order() == o) ++c;
  return c;
}

GroupSpec spec(GroupSpec::Kind k, std::vector<long long> params) {
  GroupSpec s;
  s.kind = k;
  s.params = std::move(params);
  return s;
}

}  // namespace

TEST_CASE("family constructions") {
  using K = GroupSpec::Kind;
  PermGroup c5 = build_group(spec(K::Cyclic, {5}));
  CHECK(c5.order() == 5);
  CHECK(c5.degree() == 5);
  CHECK(c5.is_transitive());

  // Metacyclic(8,2,3,8) is the quasidihedral group of order 16
  PermGroup qd8 = build_group(spec(K::Metacyclic, {8, 2, 3, 8}));
  CHECK(qd8.order() == 16);
  CHECK(count_order(qd8, 2) == 5);  // quasidihedral signature
  CHECK(count_order(qd8, 8) > 0);
  CHECK(abelian_invariants(qd8) == AbInvariants{2, 2});

  PermGroup q8 = build_group(spec(K::GeneralizedQuaternion, {2}));
  CHECK(q8.order() == 8);
  CHECK(count_order(q8, 2) == 1);  // quaternion signature

  PermGroup qd = build_group(spec(K::Quasidihedral, {1}));
  CHECK(qd.order() == 16);
  CHECK(count_order(qd, 2) == 5);

  PermGroup m16 = build_group(spec(K::Modular, {1}));
  CHECK(m16.order() == 16);
  CHECK(count_order(m16, 2) == 3);  // modular signature
  CHECK(abelian_invariants(m16) == AbInvariants{2, 4});

  PermGroup q12 = build_group(spec(K::GeneralizedQuaternion, {3}));
  CHECK(q12.order() == 12);
  CHECK(abelian_invariants(q12) == AbInvariants{4});  // paper: C4 for m odd

  PermGroup q16 = build_group(spec(K::GeneralizedQuaternion, {4}));
  CHECK(abelian_invariants(q16) == AbInvariants{2, 2});  // C2 x C2 for m even

  PermGroup xs3 = build_group(spec(K::ExtraspecialP2, {3}));
  CHECK(xs3.order() == 27);
  CHECK(count_order(xs3, 9) > 0);  // exponent 9
  CHECK(abelian_invariants(xs3) == AbInvariants{3, 3});

  PermGroup f20 = build_group(spec(K::Frobenius, {5, 4}));
  CHECK(f20.order() == 20);
  CHECK(f20.degree() == 5);
  CHECK(f20.is_transitive());
  CHECK(f20.stabilizer(0).is_cyclic());

  PermGroup d4 = build_group(spec(K::Dihedral, {4}));
  CHECK(d4.order() == 8);
  CHECK(d4.degree() == 4);

  PermGroup z21 = build_group(spec(K::ZGroup, {7, 3, 2}));
  CHECK(z21.order() == 21);
}

TEST_CASE("invalid family parameters are rejected with named constraints") {
  using K = GroupSpec::Kind;
  CHECK_THROWS_AS(build_group(spec(K::Metacyclic, {8, 2, 2, 8})), Error);   // r^s != 1
  CHECK_THROWS_AS(build_group(spec(K::Metacyclic, {8, 2, 3, 3})), Error);   // t does not divide m
  CHECK_THROWS_AS(build_group(spec(K::Metacyclic, {9, 2, 2, 1})), Error);   // m | t(r-1) fails
  CHECK_THROWS_AS(build_group(spec(K::Dihedral, {2})), Error);
  CHECK_THROWS_AS(build_group(spec(K::ZGroup, {6, 2, 5})), Error);          // m even
  CHECK_THROWS_AS(build_group(spec(K::ZGroup, {9, 2, 4})), Error);          // r^n != 1
  CHECK_THROWS_AS(build_group(spec(K::ExtraspecialP2, {4})), Error);
  CHECK_THROWS_AS(build_group(spec(K::Frobenius, {5, 3})), Error);          // l does not divide p-1
}

TEST_CASE("expected multiplier closed forms") {
  using K = GroupSpec::Kind;
  // u = gcd(8,2) * gcd(1+3, 8) / 8 = 1
  CHECK(expected_multiplier(spec(K::Metacyclic, {8, 2, 3, 8}))->is_trivial());
  CHECK(*expected_multiplier(spec(K::Dihedral, {4})) == AbInvariants{2});
  CHECK(expected_multiplier(spec(K::Dihedral, {3}))->is_trivial());
  CHECK(expected_multiplier(spec(K::Quasidihedral, {2}))->is_trivial());
  CHECK(expected_multiplier(spec(K::GeneralizedQuaternion, {5}))->is_trivial());
  CHECK(expected_multiplier(spec(K::ZGroup, {7, 3, 2}))->is_trivial());
  CHECK(expected_multiplier(spec(K::ExtraspecialP2, {5}))->is_trivial());
  GroupSpec raw;
  raw.kind = K::RawGenerators;
  raw.raw_gens = {"(1,2,3)"};
  CHECK_FALSE(expected_multiplier(raw).has_value());
  // C_n x C_n = G0(n, n, 1, n) has M = Z/n
  CHECK(*expected_multiplier(spec(K::Metacyclic, {3, 3, 1, 3})) == AbInvariants{3});
  CHECK(*expected_multiplier(spec(K::Metacyclic, {4, 2, 1, 4})) == AbInvariants{2});  // C4 x C2
}

TEST_CASE("beyl case classification") {
  CHECK(beyl_case_of(8, 2, -1, 1) == "VI");    // Q16
  CHECK(beyl_case_of(9, 3, 4, 0) == "I");      // p=3, m=2, n=1
  CHECK(beyl_case_of(8, 2, 5, 0) == "III");    // modular M16
  CHECK(beyl_case_of(8, 2, 3, 0) == "IV");     // QD16
  CHECK(beyl_case_of(27, 3, 19, 0) == "not in list");  // 19-1 is not a power of 3
  CHECK(beyl_case_of(27, 3, 10, 0) == "I");
  CHECK(beyl_case_of(8, 4, 3, 1) == "VII");
  CHECK_THROWS_AS(beyl_case_of(9, 3, 2, 0), Error);  // r^N != 1 (mod M)
  CHECK_THROWS_AS(beyl_case_of(6, 2, 5, 0), Error);  // M not a prime power
  // every Beyl-list member has trivial closed-form multiplier
  for (auto [M, N, r, l] : std::vector<std::array<long long, 4>>{
           {8, 2, -1, 1}, {9, 3, 4, 0}, {8, 2, 5, 0}, {8, 2, 3, 0},
           {16, 2, 9, 0}, {16, 2, 7, 0}, {16, 2, -1, 1}, {8, 4, 3, 1}}) {
    CHECK(beyl_case_of(M, N, r, l) != "not in list");
    CHECK(metacyclic_multiplier(beyl_to_g0(M, N, r, l)).is_trivial());
  }
}

TEST_CASE("stabilizer overrides and coset actions") {
  using K = GroupSpec::Kind;
  GroupSpec s = spec(K::Quasidihedral, {1});
  s.stab_kind = GroupSpec::StabKind::Words;
  s.stab_spec = {"b"};
  PermGroup g = build_group(s);  // 8T8: QD_8 of order 16 acting on 8 points
  CHECK(g.degree() == 8);
  CHECK(g.order() == 16);
  CHECK(g.is_transitive());
  CHECK(g.stabilizer(0).order() == 2);

  GroupSpec bad = spec(K::GeneralizedQuaternion, {2});
  bad.stab_kind = GroupSpec::StabKind::Words;
  bad.stab_spec = {"a2"};  // the center of Q8: not core-free
  CHECK_THROWS_WITH_AS(build_group(bad), doctest::Contains("core"), Error);

  GroupSpec reg = spec(K::Dihedral, {3});
  reg.stab_kind = GroupSpec::StabKind::Trivial;
  PermGroup d3reg = build_group(reg);  // 6T2: S3 regular
  CHECK(d3reg.degree() == 6);
  CHECK(d3reg.order() == 6);
  CHECK(d3reg.stabilizer(0).is_trivial());
}

TEST_CASE("spec to_string round trip shape") {
  using K = GroupSpec::Kind;
  GroupSpec s = spec(K::Metacyclic, {8, 2, 3, 8});
  CHECK(s.to_string() == "G0:8,2,3,8");
  s.stab_kind = GroupSpec::StabKind::Words;
  s.stab_spec = {"b"};
  CHECK(s.to_string() == "G0:8,2,3,8|H=b");
  GroupSpec raw;
  raw.kind = K::RawGenerators;
  raw.raw_gens = {"(1,2,3,4,5)", "(2,3,5,4)"};
  CHECK(raw.to_string() == "perm:(1,2,3,4,5);(2,3,5,4)");
}

TEST_CASE("z-groups: trivial expected multiplier and metacyclic when built") {
  using K = GroupSpec::Kind;
  for (auto [m, n, r] : std::vector<std::array<long long, 3>>{
           {7, 3, 2}, {5, 4, 2}, {15, 4, 2}, {13, 3, 3}, {11, 5, 3}, {1, 8, 1}}) {
    GroupSpec s = spec(K::ZGroup, {m, n, r});
    CHECK(expected_multiplier(s)->is_trivial());
    PermGroup g = build_group(s);
    CHECK(g.order() == m * n);
    CHECK(is_metacyclic(g));
  }
}
