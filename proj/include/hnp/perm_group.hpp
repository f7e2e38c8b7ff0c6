#pragma once
// Permutation groups with a base and strong generating set: order, membership,
// stabilizers, coset actions, and the structural subgroup operations.

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "hnp/ab_invariants.hpp"
#include "hnp/errors.hpp"
#include "hnp/perm.hpp"

namespace hnp {

class PermGroup {
  struct Level {
    int base_pt = 0;
    std::vector<Permutation> gens;    // strong generators fixing earlier base points
    std::vector<int> orbit;           // BFS order
    std::vector<int> slot;            // point -> index into tr, -1 outside orbit
    std::vector<Permutation> tr;      // tr[k](base_pt) = orbit[k]
    std::vector<Permutation> tr_inv;
  };

  struct Impl {
    int degree = 1;
    std::vector<Permutation> gens;
    std::vector<Permutation> strong;
    std::vector<int> base;
    std::vector<Level> levels;
    long long order = 1;

    mutable std::mutex mu;
    mutable std::vector<Permutation> elements;  // BFS order, [0] = identity
    mutable std::map<std::vector<int>, int> index_of;
    mutable std::vector<int> parent, via_gen;   // BFS tree over gens

    // residue of g after peeling transversals from `from`; fail_level = level
    // where the base image left the orbit, or levels.size() on full sift
    Permutation sift(const Permutation& g, size_t from, size_t& fail_level) const {
      Permutation cur = g;
      for (size_t i = from; i < levels.size(); ++i) {
        const Level& lv = levels[i];
        int p = cur(lv.base_pt);
        if (lv.slot[p] < 0) {
          fail_level = i;
          return cur;
        }
        cur = lv.tr_inv[lv.slot[p]] * cur;
      }
      fail_level = levels.size();
      return cur;
    }

    void rebuild_levels() {
      levels.clear();
      for (int b : base) {
        Level lv;
        lv.base_pt = b;
        levels.push_back(std::move(lv));
      }
      for (size_t i = 0; i < levels.size(); ++i) {
        Level& lv = levels[i];
        lv.gens.clear();
        for (const auto& s : strong) {
          bool fixes_prefix = true;
          for (size_t k = 0; k < i && fixes_prefix; ++k)
            fixes_prefix = s(base[k]) == base[k];
          if (fixes_prefix) lv.gens.push_back(s);
        }
        lv.orbit.assign(1, lv.base_pt);
        lv.slot.assign(degree, -1);
        lv.slot[lv.base_pt] = 0;
        lv.tr.assign(1, Permutation(degree));
        lv.tr_inv.assign(1, Permutation(degree));
        for (size_t qi = 0; qi < lv.orbit.size(); ++qi) {
          int q = lv.orbit[qi];
          for (const auto& s : lv.gens) {
            int p = s(q);
            if (lv.slot[p] >= 0) continue;
            lv.slot[p] = static_cast<int>(lv.orbit.size());
            lv.orbit.push_back(p);
            lv.tr.push_back(s * lv.tr[qi]);
            lv.tr_inv.push_back(lv.tr.back().inverse());
          }
        }
      }
    }

    void build(const std::vector<int>& base_hint) {
      strong.clear();
      for (const auto& g : gens)
        if (!g.is_identity()) strong.push_back(g);
      base.clear();
      for (int b : base_hint)
        if (b >= 0 && b < degree) base.push_back(b);
      for (;;) {
        // every strong generator must move some base point
        for (const auto& s : strong) {
          bool moves_base = false;
          for (int b : base)
            if (s(b) != b) {
              moves_base = true;
              break;
            }
          if (!moves_base) base.push_back(s.first_moved());
        }
        rebuild_levels();
        // verify strong generation: all Schreier generators must sift away
        bool ok = true;
        for (size_t i = 0; i < levels.size() && ok; ++i) {
          const Level& lv = levels[i];
          for (size_t qi = 0; qi < lv.orbit.size() && ok; ++qi) {
            for (const auto& s : lv.gens) {
              int p = s(lv.orbit[qi]);
              Permutation schreier = lv.tr_inv[lv.slot[p]] * s * lv.tr[qi];
              if (schreier.is_identity()) continue;
              size_t fl;
              Permutation res = sift(schreier, i + 1, fl);
              if (!res.is_identity()) {
                strong.push_back(res);
                ok = false;
                break;
              }
            }
          }
        }
        if (ok) break;
      }
      order = 1;
      for (const auto& lv : levels) {
        order *= static_cast<long long>(lv.orbit.size());
        if (order > (1LL << 62)) throw BudgetError("group order overflows");
      }
    }

    void ensure_elements(const Caps& caps) const {
      std::lock_guard<std::mutex> lock(mu);
      if (!elements.empty()) return;
      if (order > caps.element_cap)
        throw BudgetError("element enumeration exceeds the configured cap");
      elements.push_back(Permutation(degree));
      index_of[elements[0].images()] = 0;
      parent.push_back(-1);
      via_gen.push_back(-1);
      for (size_t qi = 0; qi < elements.size(); ++qi) {
        for (size_t k = 0; k < gens.size(); ++k) {
          Permutation nxt = elements[qi] * gens[k];
          auto [it, fresh] = index_of.try_emplace(nxt.images(),
                                                  static_cast<int>(elements.size()));
          if (fresh) {
            elements.push_back(std::move(nxt));
            parent.push_back(static_cast<int>(qi));
            via_gen.push_back(static_cast<int>(k));
          }
        }
      }
      HNP_CHECK(static_cast<long long>(elements.size()) == order,
                "element closure disagrees with BSGS order");
    }
  };

public:
  PermGroup() : PermGroup(1, {}) {}
  PermGroup(int degree, std::vector<Permutation> generators,
            std::vector<int> base_hint = {}) {
    if (degree < 1) throw Error("degree must be >= 1");
    auto impl = std::make_shared<Impl>();
    impl->degree = degree;
    for (auto& g : generators) {
      if (g.degree() > degree) throw Error("generator degree exceeds group degree");
      impl->gens.push_back(g.degree() == degree ? std::move(g) : g.extended(degree));
    }
    impl->build(base_hint);
    impl_ = std::move(impl);
  }

  static PermGroup trivial(int degree = 1) { return PermGroup(degree, {}); }

  static PermGroup from_cycle_strings(const std::vector<std::string>& texts,
                                      int min_degree = 0) {
    int deg = min_degree;
    std::vector<Permutation> gens;
    for (const auto& t : texts) {
      gens.push_back(Permutation::parse(t, 1));
      deg = std::max(deg, gens.back().degree());
    }
    for (auto& g : gens) g = g.extended(deg);
    return PermGroup(std::max(deg, 1), std::move(gens));
  }

  int degree() const { return impl_->degree; }
  const std::vector<Permutation>& generators() const { return impl_->gens; }
  long long order() const { return impl_->order; }
  bool is_trivial() const { return impl_->order == 1; }

  bool contains(const Permutation& g) const {
    if (g.degree() != impl_->degree) return false;
    size_t fl;
    return impl_->sift(g, 0, fl).is_identity();
  }

  bool is_subgroup_of(const PermGroup& g) const {
    if (degree() != g.degree()) return false;
    for (const auto& s : generators())
      if (!g.contains(s)) return false;
    return true;
  }

  bool same_group(const PermGroup& o) const {
    return order() == o.order() && is_subgroup_of(o);
  }

  std::vector<int> orbit_of(int point) const {
    std::vector<int> orb{point};
    std::vector<bool> seen(degree(), false);
    seen[point] = true;
    for (size_t i = 0; i < orb.size(); ++i)
      for (const auto& s : impl_->gens) {
        int p = s(orb[i]);
        if (!seen[p]) {
          seen[p] = true;
          orb.push_back(p);
        }
      }
    return orb;
  }

  bool is_transitive() const {
    return static_cast<int>(orbit_of(0).size()) == degree();
  }

  PermGroup stabilizer(int point) const {
    PermGroup rebased(degree(), impl_->gens, {point});
    std::vector<Permutation> sub;
    for (const auto& s : rebased.impl_->strong)
      if (s(point) == point) sub.push_back(s);
    return PermGroup(degree(), std::move(sub), {point});
  }

  // all elements, identity first, in deterministic BFS order
  const std::vector<Permutation>& element_list(const Caps& caps = default_caps()) const {
    impl_->ensure_elements(caps);
    return impl_->elements;
  }
  int element_index(const Permutation& g, const Caps& caps = default_caps()) const {
    impl_->ensure_elements(caps);
    auto it = impl_->index_of.find(g.images());
    if (it == impl_->index_of.end())
      throw MembershipError("permutation is not a group element");
    return it->second;
  }
  // BFS factorization: element i = element[parent(i)] * gens[via_gen(i)]
  int element_parent(int i) const { return impl_->parent[i]; }
  int element_via_gen(int i) const { return impl_->via_gen[i]; }

  PermGroup generated(std::vector<Permutation> more) const {
    std::vector<Permutation> gs = impl_->gens;
    for (auto& m : more) gs.push_back(std::move(m));
    return PermGroup(degree(), std::move(gs));
  }

  PermGroup normal_closure_in(const PermGroup& ambient,
                              const Caps& caps = default_caps()) const {
    (void)caps;
    std::vector<Permutation> kgens;
    for (const auto& g : impl_->gens)
      if (!g.is_identity()) kgens.push_back(g);
    PermGroup k(ambient.degree(), kgens);
    std::vector<Permutation> work = kgens;
    while (!work.empty()) {
      Permutation x = work.back();
      work.pop_back();
      for (const auto& s : ambient.generators()) {
        Permutation c = s.inverse() * x * s;
        if (!k.contains(c)) {
          kgens.push_back(c);
          k = PermGroup(ambient.degree(), kgens);
          work.push_back(std::move(c));
        }
      }
    }
    return k;
  }

  PermGroup derived_subgroup(const Caps& caps = default_caps()) const {
    std::vector<Permutation> comms;
    for (const auto& a : impl_->gens)
      for (const auto& b : impl_->gens) {
        Permutation c = a.inverse() * b.inverse() * a * b;
        if (!c.is_identity()) comms.push_back(std::move(c));
      }
    return PermGroup(degree(), comms).normal_closure_in(*this, caps);
  }

  // cyclic iff abelian with lcm of generator orders equal to |G|
  bool is_cyclic(const Caps& = default_caps()) const {
    long long n = order();
    if (n == 1) return true;
    const auto& gs = impl_->gens;
    for (size_t i = 0; i < gs.size(); ++i)
      for (size_t j = i + 1; j < gs.size(); ++j)
        if (gs[i] * gs[j] != gs[j] * gs[i]) return false;
    long long l = 1;
    for (const auto& g : gs) l = std::lcm(l, g.order());
    return l == n;
  }

  friend PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
    int deg = a.degree() + b.degree();
    std::vector<Permutation> gens;
    for (const auto& g : a.generators()) gens.push_back(g.extended(deg));
    for (const auto& g : b.generators()) {
      std::vector<int> img(deg);
      for (int i = 0; i < a.degree(); ++i) img[i] = i;
      for (int i = 0; i < b.degree(); ++i) img[a.degree() + i] = a.degree() + g(i);
      gens.push_back(Permutation(std::move(img)));
    }
    return PermGroup(deg, std::move(gens));
  }

private:
  std::shared_ptr<Impl> impl_;
};

struct CosetAction {
  PermGroup image;                 // transitive of degree [g:h]
  std::vector<Permutation> reps;   // reps[i]*H is coset i; reps[0] = identity
  bool faithful = false;
};

// Action of g on the left cosets of h; point 0 is the coset h itself.
inline CosetAction coset_action(const PermGroup& g, const PermGroup& h,
                                const Caps& caps = default_caps()) {
  if (!h.is_subgroup_of(g)) throw MembershipError("h is not a subgroup of g");
  if (h.order() == 0 || g.order() % h.order() != 0)
    throw InternalError("Lagrange violation");
  long long index = g.order() / h.order();
  if (index > caps.degree_cap) throw BudgetError("coset-action degree exceeds cap");
  std::vector<Permutation> reps{Permutation(g.degree())};
  auto locate = [&](const Permutation& z) {
    for (size_t j = 0; j < reps.size(); ++j)
      if (h.contains(reps[j].inverse() * z)) return static_cast<int>(j);
    return -1;
  };
  for (size_t i = 0; i < reps.size(); ++i)
    for (const auto& s : g.generators()) {
      Permutation z = s * reps[i];
      if (locate(z) < 0) reps.push_back(std::move(z));
    }
  HNP_CHECK(static_cast<long long>(reps.size()) == index, "coset count mismatch");
  int n = static_cast<int>(reps.size());
  std::vector<Permutation> images;
  for (const auto& s : g.generators()) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = locate(s * reps[i]);
    images.push_back(Permutation(std::move(img)));
  }
  CosetAction ca{PermGroup(std::max(n, 1), std::move(images)), std::move(reps), false};
  ca.faithful = ca.image.order() == g.order();
  return ca;
}

// Largest subgroup of h normal in g (the kernel of the action on g/h).
inline PermGroup core(const PermGroup& g, const PermGroup& h,
                      const Caps& caps = default_caps()) {
  CosetAction ca = coset_action(g, h, caps);
  if (ca.faithful) return PermGroup::trivial(g.degree());
  auto locate = [&](const Permutation& z) {
    for (size_t j = 0; j < ca.reps.size(); ++j)
      if (h.contains(ca.reps[j].inverse() * z)) return static_cast<int>(j);
    return -1;
  };
  std::vector<Permutation> ker;
  for (const auto& x : h.element_list(caps)) {
    bool trivial_action = true;
    for (size_t i = 0; i < ca.reps.size() && trivial_action; ++i)
      trivial_action = locate(x * ca.reps[i]) == static_cast<int>(i);
    if (trivial_action && !x.is_identity()) ker.push_back(x);
  }
  return PermGroup(g.degree(), std::move(ker));
}

inline PermGroup intersection(const PermGroup& a, const PermGroup& b,
                              const Caps& caps = default_caps()) {
  HNP_CHECK(a.degree() == b.degree(), "intersection: degree mismatch");
  const PermGroup& small = a.order() <= b.order() ? a : b;
  const PermGroup& large = a.order() <= b.order() ? b : a;
  std::vector<Permutation> common;
  for (const auto& x : small.element_list(caps))
    if (!x.is_identity() && large.contains(x)) common.push_back(x);
  return PermGroup(a.degree(), std::move(common));
}

// Invariant factors of g/[g,g] from element-order statistics of the quotient.
inline AbInvariants abelian_invariants(const PermGroup& g,
                                       const Caps& caps = default_caps()) {
  PermGroup d = g.derived_subgroup(caps);
  CosetAction ca = coset_action(g, d, caps);
  const PermGroup& q = ca.image;  // isomorphic to g^ab
  long long n = q.order();
  if (n == 1) return AbInvariants{};
  const auto& elts = q.element_list(caps);
  std::vector<long long> orders;
  orders.reserve(elts.size());
  for (const auto& x : elts) orders.push_back(x.order());
  auto nf = detail::factorize_u64(static_cast<uint64_t>(n));
  std::vector<BigInt> primary;
  for (auto& [p, vmax] : nf) {
    long long prev = 0;
    std::vector<int> ge_count;  // ge_count[k-1] = number of parts >= k
    long long pk = 1;
    for (int k = 1; k <= vmax; ++k) {
      pk *= static_cast<long long>(p);
      long long t = 0;
      for (long long o : orders)
        if (pk % o == 0) ++t;
      // t = p^m is the p^k-torsion count
      long long m = 0, chk = 1;
      while (chk < t) {
        chk *= static_cast<long long>(p);
        ++m;
      }
      HNP_CHECK(chk == t, "torsion count is not a prime power");
      ge_count.push_back(static_cast<int>(m - prev));
      prev = m;
    }
    int nparts = ge_count.empty() ? 0 : ge_count[0];
    for (int j = 1; j <= nparts; ++j) {
      int lambda = 0;
      for (int k = 0; k < static_cast<int>(ge_count.size()); ++k)
        if (ge_count[k] >= j) lambda = k + 1;
      BigInt pw(1);
      for (int t = 0; t < lambda; ++t) pw *= BigInt(static_cast<long long>(p));
      primary.push_back(pw);
    }
  }
  return AbInvariants::canonical(primary);
}

// Deterministic normalizer climb; requires element enumeration within caps.
inline PermGroup sylow_subgroup(const PermGroup& g, long long p,
                                const Caps& caps = default_caps()) {
  long long n = g.order(), ppart = 1;
  while (n % p == 0) {
    ppart *= p;
    n /= p;
  }
  if (ppart == 1) return PermGroup::trivial(g.degree());
  const auto& elts = g.element_list(caps);
  // seed: maximal-order p-element's cyclic group
  Permutation seed(g.degree());
  long long best = 1;
  for (const auto& x : elts) {
    long long o = x.order(), po = 1;
    while (o % p == 0) {
      po *= p;
      o /= p;
    }
    if (po > best) {
      best = po;
      seed = x.power(x.order() / po);
    }
  }
  PermGroup pg(g.degree(), {seed});
  while (pg.order() < ppart) {
    // normalizer of pg by scanning elements
    std::vector<Permutation> ngens;
    for (const auto& x : elts) {
      bool normalizes = true;
      for (const auto& s : pg.generators())
        if (!pg.contains(x.inverse() * s * x)) {
          normalizes = false;
          break;
        }
      if (normalizes && !x.is_identity()) ngens.push_back(x);
    }
    PermGroup norm(g.degree(), ngens);
    // extend by an order-p element of norm/pg
    bool extended = false;
    for (const auto& y : norm.element_list(caps)) {
      if (pg.contains(y)) continue;
      if (pg.contains(y.power(p))) {
        pg = pg.generated({y});
        extended = true;
        break;
      }
    }
    HNP_CHECK(extended, "sylow climb stalled");
  }
  return pg;
}

}  // namespace hnp
