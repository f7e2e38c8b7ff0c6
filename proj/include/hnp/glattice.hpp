#pragma once
// G-lattices: free Z-modules with a G-action given by one integer matrix per
// generator. Houses Z[G/H], the rank-(n-1) quotient module J, and Z itself.

#include <memory>
#include <mutex>
#include <vector>

#include "hnp/int_matrix.hpp"
#include "hnp/perm_group.hpp"

namespace hnp {

class GLattice {
  struct Impl {
    int rank = 0;
    PermGroup group;
    std::vector<IntMatrix> actions;  // actions[k] = matrix of group.generators()[k]
    mutable std::mutex mu;
    mutable std::vector<IntMatrix> elt_mats;  // memoized, indexed like element_list
    mutable std::vector<char> elt_done;
  };
  std::shared_ptr<Impl> impl_;

public:
  GLattice(PermGroup group, int rank, std::vector<IntMatrix> actions) {
    HNP_CHECK(actions.size() == group.generators().size(),
              "one action matrix per generator");
    for (const auto& a : actions)
      HNP_CHECK(a.rows() == rank && a.cols() == rank, "action matrix shape");
    auto impl = std::make_shared<Impl>();
    impl->rank = rank;
    impl->group = std::move(group);
    impl->actions = std::move(actions);
    impl_ = std::move(impl);
  }

  int rank() const { return impl_->rank; }
  const PermGroup& group() const { return impl_->group; }
  const std::vector<IntMatrix>& generator_actions() const { return impl_->actions; }

  // action matrix of an arbitrary element; memoized over the element table
  IntMatrix element_action(const Permutation& g, const Caps& caps = default_caps()) const {
    const PermGroup& grp = impl_->group;
    int idx = grp.element_index(g, caps);  // throws MembershipError if outside
    std::lock_guard<std::mutex> lock(impl_->mu);
    auto& mats = impl_->elt_mats;
    auto& done = impl_->elt_done;
    if (mats.empty()) {
      mats.assign(grp.element_list(caps).size(), IntMatrix());
      done.assign(mats.size(), 0);
      mats[0] = IntMatrix::identity(impl_->rank);
      done[0] = 1;
    }
    // walk up the BFS tree to the nearest computed ancestor, then fill down
    std::vector<int> chain;
    int cur = idx;
    while (!done[cur]) {
      chain.push_back(cur);
      cur = grp.element_parent(cur);
    }
    for (size_t k = chain.size(); k-- > 0;) {
      int node = chain[k];
      mats[node] =
          mats[grp.element_parent(node)] * impl_->actions[grp.element_via_gen(node)];
      done[node] = 1;
    }
    return mats[idx];
  }
};

// Z[G/H] for a transitive g: rank = degree, generators act by their
// permutation matrices (column i maps to unit vector at s(i)).
inline GLattice permutation_lattice(const PermGroup& g) {
  if (!g.is_transitive()) throw Error("permutation_lattice: group must be transitive");
  int n = g.degree();
  std::vector<IntMatrix> acts;
  for (const auto& s : g.generators()) {
    IntMatrix a(n, n);
    for (int i = 0; i < n; ++i) a.at(s(i), i) = BigInt(1);
    acts.push_back(std::move(a));
  }
  return GLattice(g, n, std::move(acts));
}

// J = Z[G/H] / Z*(sum of basis vectors), rank n-1, on the images of
// e_0..e_{n-2}; e_{n-1} = -(e_0 + ... + e_{n-2}).
inline GLattice j_lattice(const PermGroup& g) {
  if (!g.is_transitive()) throw Error("j_lattice: group must be transitive");
  int n = g.degree();
  if (n < 2) throw Error("j_lattice: degree must be >= 2");
  std::vector<IntMatrix> acts;
  for (const auto& s : g.generators()) {
    IntMatrix a(n - 1, n - 1);
    for (int i = 0; i < n - 1; ++i) {
      int im = s(i);
      if (im < n - 1) {
        a.at(im, i) = BigInt(1);
      } else {
        for (int k = 0; k < n - 1; ++k) a.at(k, i) = BigInt(-1);
      }
    }
    acts.push_back(std::move(a));
  }
  GLattice m(g, n - 1, std::move(acts));
  // unimodularity witness: A_s * A_{s^-1} = I, from the same construction
  for (const auto& s : g.generators()) {
    IntMatrix a = m.element_action(s);
    IntMatrix b = m.element_action(s.inverse());
    HNP_CHECK(a * b == IntMatrix::identity(n - 1), "j-lattice action not unimodular");
  }
  return m;
}

inline GLattice trivial_lattice(const PermGroup& g, int rank) {
  if (rank < 0) throw Error("trivial_lattice: rank must be >= 0");
  std::vector<IntMatrix> acts(g.generators().size(), IntMatrix::identity(rank));
  return GLattice(g, rank, std::move(acts));
}

// Same module, action on the subgroup's own generators via word evaluation.
inline GLattice restrict_lattice(const GLattice& m, const PermGroup& subgroup,
                                 const Caps& caps = default_caps()) {
  if (!subgroup.is_subgroup_of(m.group()))
    throw MembershipError("restrict: not a subgroup of the acting group");
  std::vector<IntMatrix> acts;
  for (const auto& s : subgroup.generators()) acts.push_back(m.element_action(s, caps));
  return GLattice(subgroup, m.rank(), std::move(acts));
}

}  // namespace hnp
