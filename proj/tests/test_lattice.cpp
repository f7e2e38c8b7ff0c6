#include "doctest.h"

#include <random>

#include "hnp/families.hpp"
#include "hnp/glattice.hpp"
#include "hnp/smith.hpp"

using namespace hnp;

namespace {
PermGroup grp(const std::vector<std::string>& gens, int min_degree = 0) {
  return PermGroup::from_cycle_strings(gens, min_degree);
}
}  // namespace

TEST_CASE("permutation lattice") {
  PermGroup c3 = grp({"(1,2,3)"});
  GLattice m = permutation_lattice(c3);
  CHECK(m.rank() == 3);
  IntMatrix a = m.generator_actions()[0];
  IntMatrix expect{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}};  // e_i -> e_{i+1}
  CHECK(a == expect);
  CHECK(permutation_lattice(grp({"(1,2,3)", "(1,2)"})).rank() == 3);
  CHECK(permutation_lattice(grp({"(1,2,3,4,5)", "(2,3,5,4)"})).rank() == 5);
  CHECK_THROWS_AS(permutation_lattice(grp({"(1,2)"}, 3)), Error);
}

TEST_CASE("j lattice") {
  // C2 on 2 points: rank 1, nontrivial generator acts as -1
  GLattice sign = j_lattice(grp({"(1,2)"}));
  CHECK(sign.rank() == 1);
  CHECK(sign.generator_actions()[0].at(0, 0) == BigInt(-1));

  // S3 natural: the rank-2 standard representation, matrices by hand
  GLattice std2 = j_lattice(grp({"(1,2,3)", "(1,2)"}));
  CHECK(std2.rank() == 2);
  IntMatrix rot{{0, -1}, {1, -1}};   // e0 -> e1, e1 -> e2 = -(e0+e1)
  IntMatrix swap{{0, 1}, {1, 0}};    // e0 <-> e1
  CHECK(std2.generator_actions()[0] == rot);
  CHECK(std2.generator_actions()[1] == swap);

  // V4 regular: rank 3
  PermGroup v4 = grp({"(1,2)(3,4)", "(1,3)(2,4)"});
  CHECK(j_lattice(v4).rank() == 3);

  CHECK_THROWS_AS(j_lattice(grp({"()"})), Error);  // degree < 2
}

TEST_CASE("trivial lattice") {
  PermGroup s3 = grp({"(1,2,3)", "(1,2)"});
  GLattice t1 = trivial_lattice(s3, 1);
  CHECK(t1.generator_actions()[0] == IntMatrix::identity(1));
  CHECK(trivial_lattice(s3, 0).rank() == 0);
  CHECK(trivial_lattice(s3, 2).generator_actions()[1] == IntMatrix::identity(2));
}

TEST_CASE("element action is a homomorphism") {
  PermGroup f20 = grp({"(1,2,3,4,5)", "(2,3,5,4)"});
  GLattice j = j_lattice(f20);
  std::mt19937_64 rng(99);
  const auto& elts = f20.element_list();
  for (int iter = 0; iter < 100; ++iter) {
    const Permutation& x = elts[rng() % elts.size()];
    const Permutation& y = elts[rng() % elts.size()];
    CHECK(j.element_action(x * y) == j.element_action(x) * j.element_action(y));
  }
  CHECK(j.element_action(Permutation(5)) == IntMatrix::identity(4));
  CHECK(j.element_action(f20.generators()[0]) == j.generator_actions()[0]);
  CHECK_THROWS_AS(j.element_action(Permutation::parse("(1,2)", 5)), MembershipError);
}

TEST_CASE("restriction") {
  PermGroup s3 = grp({"(1,2,3)", "(1,2)"});
  GLattice j = j_lattice(s3);
  PermGroup a3 = grp({"(1,2,3)"});
  GLattice rj = restrict_lattice(j, a3);
  CHECK(rj.rank() == 2);
  IntMatrix a = rj.generator_actions()[0];
  CHECK(a * a * a == IntMatrix::identity(2));  // order 3 action
  CHECK(a != IntMatrix::identity(2));
  GLattice rt = restrict_lattice(j, PermGroup::trivial(3));
  CHECK(rt.rank() == 2);
  CHECK(rt.generator_actions().empty());
  CHECK_THROWS_AS(restrict_lattice(j, grp({"(1,4)"}, 4)), Error);
}

TEST_CASE("exactness witness: Z -> Z[G/H] -> J kills exactly the all-ones line") {
  for (const auto& g : {grp({"(1,2,3)", "(1,2)"}), grp({"(1,2,3,4,5)", "(2,3,5,4)"}),
                        grp({"(1,2)(3,4)", "(1,3)(2,4)"})}) {
    int n = g.degree();
    // quotient map q: Z[G/H] -> J, e_i -> e_i (i < n-1), e_{n-1} -> -(sum)
    IntMatrix q(n - 1, n);
    for (int i = 0; i < n - 1; ++i) q.at(i, i) = BigInt(1);
    for (int i = 0; i < n - 1; ++i) q.at(i, n - 1) = BigInt(-1);
    IntMatrix k = kernel_lattice(q);
    CHECK(k.cols() == 1);
    IntMatrix ones(n, 1);
    for (int i = 0; i < n; ++i) ones.at(i, 0) = BigInt(1);
    CHECK(span_contains(k, ones));
    CHECK(span_contains(ones, k));
  }
}

TEST_CASE("j lattice has no nonzero fixed vector for core-free transitive actions") {
  std::vector<PermGroup> corpus = {
      grp({"(1,2,3)", "(1,2)"}),             // S3 natural
      grp({"(1,2,3,4,5)", "(2,3,5,4)"}),     // F20
      grp({"(1,2,3,4)", "(1,3)"}),           // D4 natural
      grp({"(1,2)(3,4)", "(1,3)(2,4)"}),     // V4 regular
  };
  for (const auto& g : corpus) {
    GLattice j = j_lattice(g);
    int r = j.rank();
    // stack (A_s - I) over generators; fixed sublattice is its kernel
    IntMatrix stacked(static_cast<int>(g.generators().size()) * r, r);
    for (size_t k = 0; k < g.generators().size(); ++k) {
      IntMatrix d = j.generator_actions()[k] - IntMatrix::identity(r);
      for (int i = 0; i < r; ++i)
        for (int c = 0; c < r; ++c) stacked.at(static_cast<int>(k) * r + i, c) = d.at(i, c);
    }
    CHECK(kernel_lattice(stacked).cols() == 0);
  }
}
