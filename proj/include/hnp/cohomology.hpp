#pragma once
// Group cohomology of G-lattices and of Z/e with trivial action:
//   H^1 by normalized 1-cocycle linear algebra over Z,
//   H^2(G,M) through the connecting map of 0 -> M -e-> M -> M/e -> 0 with
//   e = |G| (e kills H^2, so delta: H^1(G,M/e) ->> H^2(G,M) with kernel the
//   reduction of H^1(G,M)); class representatives come out as explicit
//   2-cocycles, which is what the restriction kernels need,
//   H^2(G,Z/e) by generator-value reduction of normalized 2-cochains,
// plus the three Schur-multiplier engines and Sha^2_omega.

#include <memory>
#include <optional>
#include <set>

#include "hnp/glattice.hpp"
#include "hnp/modmat.hpp"
#include "hnp/smith.hpp"

namespace hnp {

namespace detail {

// element table with the generator indices and a multiplication table
struct GroupTable {
  PermGroup g;
  int n = 1;
  std::vector<int> gen_of;             // element index of each generator
  std::vector<std::vector<int>> mult;  // mult[i][j] = index(elt_i * elt_j)
  std::vector<int> inv;

  explicit GroupTable(const PermGroup& grp, const Caps& caps) : g(grp) {
    const auto& elts = g.element_list(caps);
    n = static_cast<int>(elts.size());
    for (const auto& s : g.generators()) gen_of.push_back(g.element_index(s, caps));
    mult.assign(n, std::vector<int>(n));
    inv.assign(n, 0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) mult[i][j] = g.element_index(elts[i] * elts[j], caps);
      inv[i] = g.element_index(elts[i].inverse(), caps);
    }
  }
};

// all element action matrices as small integers (row-major r x r)
inline std::vector<std::vector<long long>> action_tables(const GLattice& m,
                                                         const GroupTable& t,
                                                         const Caps& caps) {
  const auto& elts = t.g.element_list(caps);
  std::vector<std::vector<long long>> rho(t.n);
  for (int i = 0; i < t.n; ++i) {
    IntMatrix a = m.element_action(elts[i], caps);
    auto& out = rho[i];
    out.resize(static_cast<size_t>(m.rank()) * m.rank());
    for (int x = 0; x < m.rank(); ++x)
      for (int y = 0; y < m.rank(); ++y) {
        const BigInt& v = a.at(x, y);
        if (!v.fits_ll()) throw BudgetError("action entries exceed machine range");
        out[static_cast<size_t>(x) * m.rank() + y] = v.to_ll();
      }
  }
  return rho;
}

// Normalized 1-cocycle conditions f(s h) = f(s) + rho(s) f(h) for s over the
// generators; unknowns are f on the n-1 nontrivial elements, blocked by r.
// Returned as sparse rows (col, coeff).
inline std::vector<std::vector<std::pair<int, long long>>> z1_condition_rows(
    const GroupTable& t, const std::vector<std::vector<long long>>& rho, int r) {
  std::vector<std::vector<std::pair<int, long long>>> rows;
  auto block = [&](int elt) { return (elt - 1) * r; };
  for (int si = 0; si < static_cast<int>(t.gen_of.size()); ++si) {
    int s = t.gen_of[si];
    if (s == 0) continue;  // identity generator contributes nothing
    const auto& rs = rho[s];
    for (int h = 1; h < t.n; ++h) {
      int sh = t.mult[s][h];
      for (int k = 0; k < r; ++k) {
        std::vector<std::pair<int, long long>> row;
        if (sh != 0) row.emplace_back(block(sh) + k, 1);
        row.emplace_back(block(s) + k, -1);
        for (int j = 0; j < r; ++j) {
          long long c = rs[static_cast<size_t>(k) * r + j];
          if (c) row.emplace_back(block(h) + j, -c);
        }
        // merge duplicate columns
        std::sort(row.begin(), row.end());
        std::vector<std::pair<int, long long>> merged;
        for (auto& [c, v] : row) {
          if (!merged.empty() && merged.back().first == c)
            merged.back().second += v;
          else
            merged.emplace_back(c, v);
        }
        std::erase_if(merged, [](auto& p) { return p.second == 0; });
        if (!merged.empty()) rows.push_back(std::move(merged));
      }
    }
  }
  return rows;
}

inline IntMatrix rows_to_matrix(
    const std::vector<std::vector<std::pair<int, long long>>>& rows, int cols) {
  IntMatrix m(static_cast<int>(rows.size()), cols);
  for (size_t i = 0; i < rows.size(); ++i)
    for (auto& [c, v] : rows[i]) m.at(static_cast<int>(i), c) = BigInt(v);
  return m;
}

// columns generating the 1-coboundaries: x |-> rho(x) v - v over a basis of M
inline std::vector<std::vector<long long>> b1_columns(
    const GroupTable& t, const std::vector<std::vector<long long>>& rho, int r) {
  std::vector<std::vector<long long>> cols;
  for (int j = 0; j < r; ++j) {
    std::vector<long long> col(static_cast<size_t>(t.n - 1) * r, 0);
    for (int x = 1; x < t.n; ++x)
      for (int k = 0; k < r; ++k) {
        long long v = rho[x][static_cast<size_t>(k) * r + j] - (k == j ? 1 : 0);
        col[static_cast<size_t>(x - 1) * r + k] = v;
      }
    cols.push_back(std::move(col));
  }
  return cols;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// H^1

inline IntMatrix z1_integer_basis(const GLattice& m, const detail::GroupTable& t,
                                  const std::vector<std::vector<long long>>& rho,
                                  const Caps& caps) {
  int r = m.rank();
  int cols = (t.n - 1) * r;
  auto rows = detail::z1_condition_rows(t, rho, r);
  return kernel_lattice(detail::rows_to_matrix(rows, cols), caps);
}

inline AbInvariants h1(const GLattice& m, const Caps& caps = default_caps()) {
  const PermGroup& g = m.group();
  if (g.order() > caps.element_cap) throw BudgetError("h1: group exceeds element cap");
  if (m.rank() == 0 || g.order() == 1) return AbInvariants{};
  detail::GroupTable t(g, caps);
  auto rho = detail::action_tables(m, t, caps);
  IntMatrix z1 = z1_integer_basis(m, t, rho, caps);
  if (z1.cols() == 0) return AbInvariants{};
  auto bcols = detail::b1_columns(t, rho, m.rank());
  IntMatrix b1(static_cast<int>(bcols.empty() ? 0 : bcols[0].size()),
               static_cast<int>(bcols.size()));
  for (size_t j = 0; j < bcols.size(); ++j)
    for (size_t i = 0; i < bcols[j].size(); ++i)
      b1.at(static_cast<int>(i), static_cast<int>(j)) = BigInt(bcols[j][i]);
  AbInvariants out = quotient_invariants(z1, b1, caps);
  HNP_CHECK(out.free_rank == 0, "H^1 of a finite group must be finite");
  return out;
}

// ---------------------------------------------------------------------------
// H^2 of a lattice, with explicit class representatives

class CocycleSpace {
public:
  // degree-2 cohomology data for the lattice m
  CocycleSpace(const GLattice& m, const Caps& caps) : lattice_(m), caps_(caps) {
    const PermGroup& g = m.group();
    long long budget = g.order() * g.order() * std::max(1, m.rank());
    if (budget > caps.h2_var_cap)
      throw BudgetError("h2: |G|^2 * rank exceeds the variable cap");
    table_ = std::make_shared<detail::GroupTable>(g, caps);
    e_ = g.order();
    r_ = m.rank();
    if (r_ == 0 || e_ == 1) {
      invariants_ = AbInvariants{};
      return;
    }
    rho_ = detail::action_tables(m, *table_, caps);
    const int cols = (table_->n - 1) * r_;
    auto rows = detail::z1_condition_rows(*table_, rho_, r_);
    // Z^1(G, M/e)
    std::vector<modmat::Row> mod_rows(rows.size(), modmat::Row(cols, 0));
    for (size_t i = 0; i < rows.size(); ++i)
      for (auto& [c, v] : rows[i]) mod_rows[i][c] = modmat::norm(v, e_);
    auto v_gens = modmat::kernel_mod(mod_rows, cols, e_);
    // relations: coboundaries mod e plus reductions of integer 1-cocycles
    auto w_cols = detail::b1_columns(*table_, rho_, r_);
    IntMatrix z1 = kernel_lattice(detail::rows_to_matrix(rows, cols), caps_);
    for (int j = 0; j < z1.cols(); ++j) {
      std::vector<long long> col(cols);
      for (int i = 0; i < cols; ++i) {
        BigInt v = z1.at(i, j) % BigInt(e_);
        col[i] = modmat::norm(v.to_ll(), e_);
      }
      w_cols.push_back(std::move(col));
    }
    for (auto& c : w_cols)
      for (auto& v : c) v = modmat::norm(v, e_);
    build_quotient(v_gens, w_cols, cols);
  }

  const AbInvariants& invariants() const { return invariants_; }
  const GLattice& lattice() const { return lattice_; }
  const detail::GroupTable& table() const { return *table_; }
  long long modulus() const { return e_; }
  int class_count() const { return static_cast<int>(reps_.size()); }
  const std::vector<long long>& class_orders() const { return orders_; }

  // value of the i-th representative 2-cocycle at (x, y), a vector in Z^r
  std::vector<long long> value(int i, int x, int y) const {
    const auto& c = reps_[i];
    std::vector<long long> acc(r_, 0);
    auto add = [&](int elt, long long sign) {
      if (elt == 0) return;
      for (int k = 0; k < r_; ++k) acc[k] += sign * c[static_cast<size_t>(elt - 1) * r_ + k];
    };
    add(x, 1);
    add(table_->mult[x][y], -1);
    if (y != 0) {
      const auto& rx = rho_[x];
      for (int k = 0; k < r_; ++k) {
        long long s = 0;
        for (int j = 0; j < r_; ++j)
          s += rx[static_cast<size_t>(k) * r_ + j] * c[static_cast<size_t>(y - 1) * r_ + j];
        acc[k] += s;
      }
    }
    for (auto& v : acc) {
      HNP_CHECK(v % e_ == 0, "connecting-map numerator not divisible by e");
      v /= e_;
    }
    return acc;
  }

  // the full (element pair x coordinate) vector of representative i
  std::vector<long long> full_vector(int i) const {
    int n = table_->n;
    std::vector<long long> out;
    out.reserve(static_cast<size_t>(n - 1) * (n - 1) * r_);
    for (int x = 1; x < n; ++x)
      for (int y = 1; y < n; ++y) {
        auto v = value(i, x, y);
        out.insert(out.end(), v.begin(), v.end());
      }
    return out;
  }

  const std::vector<long long>& rho_of(int elt) const { return rho_[elt]; }
  int rank() const { return r_; }

private:
  GLattice lattice_;
  Caps caps_;
  std::shared_ptr<detail::GroupTable> table_;
  long long e_ = 1;
  int r_ = 0;
  std::vector<std::vector<long long>> rho_;
  AbInvariants invariants_;
  std::vector<std::vector<long long>> reps_;  // lifted 1-cochains, values in [0,e)
  std::vector<long long> orders_;

  // quotient span(V)/span(W) in (Z/e)^N with tracked generators
  void build_quotient(const std::vector<modmat::Row>& v_gens,
                      const std::vector<modmat::Row>& w_cols, int N) {
    const long long e = e_;
    const int k = static_cast<int>(v_gens.size());
    if (k == 0) {
      invariants_ = AbInvariants{};
      return;
    }
    // relation coefficients: kernel of [V | W] projected to the V part
    std::vector<modmat::Row> sys(N, modmat::Row(k + w_cols.size(), 0));
    for (int i = 0; i < N; ++i) {
      for (int j = 0; j < k; ++j) sys[i][j] = modmat::norm(v_gens[j][i], e);
      for (size_t j = 0; j < w_cols.size(); ++j)
        sys[i][k + j] = modmat::norm(w_cols[j][i], e);
    }
    auto rel = modmat::kernel_mod(sys, k + static_cast<int>(w_cols.size()), e);
    std::vector<modmat::Row> t(k, modmat::Row(std::max<size_t>(rel.size(), 1), 0));
    for (size_t j = 0; j < rel.size(); ++j)
      for (int i = 0; i < k; ++i) t[i][j] = rel[j][i];
    // diagonalize with a tracked inverse row transform
    std::vector<modmat::Row> rinv(k, modmat::Row(k, 0));
    for (int i = 0; i < k; ++i) rinv[i][i] = 1;
    const int m = static_cast<int>(t[0].size());
    auto col_op = [&](int dst, int src, long long q) {  // rinv col_dst += q*col_src
      for (int i = 0; i < k; ++i) rinv[i][dst] = modmat::norm(rinv[i][dst] + q * rinv[i][src], e);
    };
    auto col_combine = [&](int a, int b, long long ag, long long bg, long long x,
                           long long y) {
      // rows (a,b) of t got L = [[x,y],[-bg,ag]]; rinv gets L^{-1} on columns
      for (int i = 0; i < k; ++i) {
        long long ca = rinv[i][a], cb = rinv[i][b];
        rinv[i][a] = modmat::norm(ag * ca + bg * cb, e);
        rinv[i][b] = modmat::norm(-y * ca + x * cb, e);
      }
    };
    int pos = 0;
    std::vector<long long> diag;
    for (; pos < std::min(k, m); ++pos) {
      int pi = -1, pj = -1;
      long long best = 0;
      for (int i = pos; i < k; ++i)
        for (int j = pos; j < m; ++j) {
          if (!t[i][j]) continue;
          long long g = modmat::gcd_ll(t[i][j], e);
          if (pi < 0 || g < best) {
            best = g;
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) break;
      if (pi != pos) {
        std::swap(t[pi], t[pos]);
        for (int i = 0; i < k; ++i) std::swap(rinv[i][pi], rinv[i][pos]);
      }
      if (pj != pos)
        for (int i = 0; i < k; ++i) std::swap(t[i][pj], t[i][pos]);
      for (;;) {
        bool dirty = false;
        for (int i = pos + 1; i < k; ++i) {
          if (!t[i][pos]) continue;
          long long d = t[pos][pos], b = t[i][pos];
          if (b % d == 0) {
            long long q = b / d;
            for (int j = pos; j < m; ++j) t[i][j] = modmat::norm(t[i][j] - q * t[pos][j], e);
            col_op(pos, i, q);
          } else {
            long long x, y;
            long long g = modmat::xgcd_ll(d, b, x, y);
            long long ag = d / g, bg = b / g;
            for (int j = pos; j < m; ++j) {
              long long np = modmat::norm(x * t[pos][j] + y * t[i][j], e);
              long long nr = modmat::norm(ag * t[i][j] - bg * t[pos][j], e);
              t[pos][j] = np;
              t[i][j] = nr;
            }
            col_combine(pos, i, ag, bg, x, y);
            dirty = true;
          }
        }
        for (int j = pos + 1; j < m; ++j) {
          if (!t[pos][j]) continue;
          long long d = t[pos][pos], b = t[pos][j];
          long long q = b / d;
          if (b % d == 0) {
            for (int i = pos; i < k; ++i) t[i][j] = modmat::norm(t[i][j] - q * t[i][pos], e);
          } else {
            long long x, y;
            long long g = modmat::xgcd_ll(d, b, x, y);
            long long ag = d / g, bg = b / g;
            for (int i = pos; i < k; ++i) {
              long long np = modmat::norm(x * t[i][pos] + y * t[i][j], e);
              long long nc = modmat::norm(ag * t[i][j] - bg * t[i][pos], e);
              t[i][pos] = np;
              t[i][j] = nc;
            }
            dirty = true;
          }
        }
        if (!dirty) break;
      }
      diag.push_back(modmat::gcd_ll(t[pos][pos], e));
    }
    std::vector<BigInt> orders;
    std::vector<std::pair<long long, int>> keep;  // (order, coordinate index)
    for (int i = 0; i < k; ++i) {
      long long d = i < static_cast<int>(diag.size()) ? diag[i] : e;
      long long summand = modmat::gcd_ll(d, e);  // Z/(dZ + eZ) = Z/gcd(d,e)
      if (summand == 0) summand = e;
      orders.emplace_back(summand);
      if (summand != 1) keep.emplace_back(summand, i);
    }
    invariants_ = AbInvariants::canonical(orders, 0);
    // representatives: columns rinv * e_i combined into V generators, lifted
    for (auto& [ord, i] : keep) {
      std::vector<long long> rep(N, 0);
      for (int j = 0; j < k; ++j) {
        long long c = rinv[j][i];
        if (!c) continue;
        for (int x = 0; x < N; ++x) rep[x] = modmat::norm(rep[x] + c * v_gens[j][x], e);
      }
      bool nonzero = false;
      for (long long v : rep) nonzero |= v != 0;
      if (nonzero) {
        reps_.push_back(std::move(rep));
        orders_.push_back(ord);
      }
    }
  }
};

inline AbInvariants h2(const GLattice& m, const Caps& caps = default_caps()) {
  return CocycleSpace(m, caps).invariants();
}

// ---------------------------------------------------------------------------
// restriction kernels and Sha^2_omega

// coboundary columns of B^2(C, Res M) in the coordinates used by
// CocycleSpace::full restriction vectors over the subgroup element list
namespace detail {

struct SubgroupData {
  std::vector<int> elts;            // element indices in the big table, [0] = 0
  std::vector<int> pos;             // big index -> position, -1 outside
};

inline SubgroupData subgroup_positions(const GroupTable& t, const PermGroup& c,
                                       const Caps& caps) {
  SubgroupData d;
  d.pos.assign(t.n, -1);
  for (const auto& x : c.element_list(caps)) {
    int idx = t.g.element_index(x, caps);
    d.elts.push_back(idx);
  }
  // deterministic order: identity first, then by big-table index
  std::sort(d.elts.begin(), d.elts.end());
  HNP_CHECK(!d.elts.empty() && d.elts[0] == 0, "subgroup misses the identity");
  for (size_t i = 0; i < d.elts.size(); ++i) d.pos[d.elts[i]] = static_cast<int>(i);
  return d;
}

}  // namespace detail

// Generators (in the H^2 class basis, as columns of a lattice in Z^k
// containing diag(class orders)) of the kernel of
// H^2(G, M) -> H^2(C, Res M) for cyclic C.
inline IntMatrix restriction_kernel(const CocycleSpace& space, const PermGroup& c,
                                    const Caps& caps = default_caps()) {
  if (!c.is_cyclic(caps)) throw Error("restriction_kernel: subgroup must be cyclic");
  const int k = space.class_count();
  if (k == 0) return IntMatrix(0, 0);
  if (!c.is_subgroup_of(space.table().g))
    throw MembershipError("restriction_kernel: not a subgroup");
  const auto& t = space.table();
  const int r = space.rank();
  auto sub = detail::subgroup_positions(t, c, caps);
  const int cn = static_cast<int>(sub.elts.size());
  if (cn == 1) {  // trivial subgroup: everything restricts to zero
    IntMatrix d(k, k);
    for (int i = 0; i < k; ++i) d.at(i, i) = BigInt(1);
    return d;
  }
  const int pairs = (cn - 1) * (cn - 1);
  // [ F | -Delta ] where F has the restricted class cocycles as columns and
  // Delta the coboundaries of C-cochains
  IntMatrix sys(pairs * r, k + (cn - 1) * r);
  for (int i = 0; i < k; ++i) {
    int row = 0;
    for (int xi = 1; xi < cn; ++xi)
      for (int yi = 1; yi < cn; ++yi) {
        auto v = space.value(i, sub.elts[xi], sub.elts[yi]);
        for (int kk = 0; kk < r; ++kk) sys.at(row + kk, i) = BigInt(v[kk]);
        row += r;
      }
  }
  // coboundary of the C-cochain with value e_j at subgroup element zi:
  // (delta c)(x,y) = rho(x) c(y) - c(xy) + c(x)
  for (int zi = 1; zi < cn; ++zi)
    for (int j = 0; j < r; ++j) {
      int col = k + ((zi - 1) * r + j);
      int row = 0;
      for (int xi = 1; xi < cn; ++xi)
        for (int yi = 1; yi < cn; ++yi) {
          int x = sub.elts[xi], y = sub.elts[yi];
          int xy = t.mult[x][y];
          for (int kk = 0; kk < r; ++kk) {
            long long v = 0;
            if (yi == zi) v += space.rho_of(x)[static_cast<size_t>(kk) * r + j];
            if (sub.pos[xy] == zi && kk == j) v -= 1;
            if (xi == zi && kk == j) v += 1;
            if (v) sys.at(row + kk, col) = BigInt(-v);  // move Delta to the other side
          }
          row += r;
        }
    }
  IntMatrix ker = kernel_lattice(sys, caps);
  // project to the class-coefficient block
  IntMatrix proj(k, ker.cols());
  for (int j = 0; j < ker.cols(); ++j)
    for (int i = 0; i < k; ++i) proj.at(i, j) = ker.at(i, j);
  return proj;
}

// representatives of the conjugacy classes of nontrivial cyclic subgroups
inline std::vector<PermGroup> cyclic_subgroup_class_reps(const PermGroup& g,
                                                         const Caps& caps = default_caps()) {
  const auto& elts = g.element_list(caps);
  const int n = static_cast<int>(elts.size());
  std::map<std::vector<int>, int> subgroup_gen;  // sorted element set -> generator
  for (int i = 1; i < n; ++i) {
    std::vector<int> cyc;
    Permutation x = elts[i];
    Permutation cur = x;
    while (!cur.is_identity()) {
      cyc.push_back(g.element_index(cur, caps));
      cur = cur * x;
    }
    cyc.push_back(0);
    std::sort(cyc.begin(), cyc.end());
    subgroup_gen.try_emplace(cyc, i);
  }
  // conjugacy classes of the subgroup sets
  std::set<std::vector<int>> seen;
  std::vector<PermGroup> reps;
  for (auto& [set, gen] : subgroup_gen) {
    if (seen.count(set)) continue;
    for (int ti = 0; ti < n; ++ti) {
      std::vector<int> conj;
      conj.reserve(set.size());
      for (int s : set)
        conj.push_back(g.element_index(elts[ti].inverse() * elts[s] * elts[ti], caps));
      std::sort(conj.begin(), conj.end());
      seen.insert(std::move(conj));
    }
    reps.push_back(PermGroup(g.degree(), {elts[gen]}));
  }
  return reps;
}

// Sha^2_omega(G, M): intersection over (classes of) cyclic subgroups of the
// restriction kernels inside H^2(G, M).
inline AbInvariants sha2_omega(const CocycleSpace& space, const Caps& caps = default_caps()) {
  const int k = space.class_count();
  if (k == 0) return AbInvariants{};
  IntMatrix d(k, k);
  for (int i = 0; i < k; ++i) d.at(i, i) = BigInt(space.class_orders()[i]);
  // start with the full class lattice Z^k and intersect; every kernel
  // contains diag(orders) Z^k, so the intersection keeps full rank
  IntMatrix current = IntMatrix::identity(k);
  for (const auto& c : cyclic_subgroup_class_reps(space.table().g, caps)) {
    IntMatrix kc = lattice_column_basis(restriction_kernel(space, c, caps), caps);
    IntMatrix sys(k, current.cols() + kc.cols());
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < current.cols(); ++j) sys.at(i, j) = current.at(i, j);
      for (int j = 0; j < kc.cols(); ++j)
        sys.at(i, current.cols() + j) = BigInt() - kc.at(i, j);
    }
    IntMatrix ker = kernel_lattice(sys, caps);
    IntMatrix apart(current.cols(), ker.cols());
    for (int j = 0; j < ker.cols(); ++j)
      for (int i = 0; i < current.cols(); ++i) apart.at(i, j) = ker.at(i, j);
    current = lattice_column_basis(current * apart, caps);
    HNP_CHECK(current.cols() == k, "sha intersection lost rank");
  }
  return quotient_invariants(current, d, caps);
}

inline AbInvariants sha2_omega(const GLattice& m, const Caps& caps = default_caps()) {
  CocycleSpace space(m, caps);
  if (space.invariants().is_trivial()) return AbInvariants{};
  return sha2_omega(space, caps);
}

// ---------------------------------------------------------------------------
// H^2(G, Z/e), trivial action, by generator-value reduction

inline AbInvariants h2_trivial_mod(const PermGroup& g, long long e,
                                   const Caps& caps = default_caps()) {
  if (e < 1) throw Error("h2_trivial_mod: e must be >= 1");
  if (e == 1 || g.order() == 1) return AbInvariants{};
  if (g.order() * g.order() > caps.h2_var_cap)
    throw BudgetError("h2_trivial_mod: |G|^2 exceeds the variable cap");
  detail::GroupTable t(g, caps);
  const int n = t.n;
  const int ngen = static_cast<int>(t.gen_of.size());
  const int C = (n - 1) * ngen;  // unknowns f(x, s), x nontrivial, s a generator
  auto ucol = [&](int x, int si) { return (x - 1) * ngen + si; };
  // Stream the cocycle conditions through an echelon; for a fixed x the
  // expansions E[x][h] of f(x, h) over the unknowns come from the BFS-tree
  // recursion f(x, q s) = f(x, q) + f(xq, s) - f(q, s), so only one x-slice
  // is alive at a time.
  modmat::Echelon reducer(C, e);
  std::vector<std::vector<long long>> slice(n);  // E[x][h] for the current x
  for (int x = 1; x < n; ++x) {
    for (int h = 1; h < n; ++h) {
      int q = t.g.element_parent(h);
      int si = t.g.element_via_gen(h);
      std::vector<long long> v;
      if (q == 0) {
        v.assign(C, 0);
        v[ucol(x, si)] = 1;
      } else {
        v = slice[q];
        int xq = t.mult[x][q];
        if (xq != 0) v[ucol(xq, si)] = modmat::norm(v[ucol(xq, si)] + 1, e);
        v[ucol(q, si)] = modmat::norm(v[ucol(q, si)] - 1, e);
      }
      slice[h] = std::move(v);
    }
    for (int h = 1; h < n; ++h)
      for (int si = 0; si < ngen; ++si) {
        modmat::Row row(C, 0);
        row[ucol(h, si)] = modmat::norm(row[ucol(h, si)] + 1, e);
        int xh = t.mult[x][h];
        if (xh != 0) row[ucol(xh, si)] = modmat::norm(row[ucol(xh, si)] - 1, e);
        int hs = t.mult[h][t.gen_of[si]];
        if (hs != 0)
          for (int c = 0; c < C; ++c) row[c] = modmat::norm(row[c] + slice[hs][c], e);
        for (int c = 0; c < C; ++c) row[c] = modmat::norm(row[c] - slice[h][c], e);
        bool nz = false;
        for (long long v : row) nz |= v != 0;
        if (nz) reducer.add(std::move(row));
      }
  }
  auto v_gens = modmat::kernel_mod(reducer.pivot_rows(), C, e);
  // coboundaries in reduced coordinates: (delta c)(x, s) = c(s) - c(xs) + c(x)
  std::vector<modmat::Row> w_cols;
  for (int z = 1; z < n; ++z) {
    modmat::Row col(C, 0);
    for (int x = 1; x < n; ++x)
      for (int si = 0; si < ngen; ++si) {
        long long v = 0;
        if (t.gen_of[si] == z) v += 1;
        int xs = t.mult[x][t.gen_of[si]];
        if (xs == z) v -= 1;
        if (x == z) v += 1;
        if (v) col[ucol(x, si)] = modmat::norm(v, e);
      }
    w_cols.push_back(std::move(col));
  }
  return modmat::quotient_invariants_mod(v_gens, w_cols, C, e);
}

// ---------------------------------------------------------------------------
// Schur multiplier engines

// universal-coefficients extraction: H^2(G, Z/|G|) = G^ab (+) M(G)
inline AbInvariants schur_multiplier_uct(const PermGroup& g,
                                         const Caps& caps = default_caps()) {
  AbInvariants total = h2_trivial_mod(g, g.order(), caps);
  AbInvariants gab = abelian_invariants(g, caps);
  return primary_subtract(total, gab);
}

// Sylow bound: if every M(Sylow_p) = 0, then M(G) = 0 (injectivity of the
// restriction to Sylow subgroups). Returns nullopt when inconclusive.
inline std::optional<AbInvariants> schur_multiplier_sylow_bound(
    const PermGroup& g, const Caps& caps = default_caps()) {
  long long n = g.order();
  if (n == 1) return AbInvariants{};
  auto f = detail::factorize_u64(static_cast<uint64_t>(n));
  for (auto& [p, e] : f) {
    PermGroup sp = sylow_subgroup(g, static_cast<long long>(p), caps);
    if (sp.order() * sp.order() > caps.h2_var_cap) return std::nullopt;
    if (!schur_multiplier_uct(sp, caps).is_trivial()) return std::nullopt;
  }
  return AbInvariants{};
}

// engine order: family closed form (when the caller knows one), then UCT,
// then the Sylow bound
inline AbInvariants schur_multiplier(const PermGroup& g,
                                     const std::optional<AbInvariants>& family_value =
                                         std::nullopt,
                                     const Caps& caps = default_caps()) {
  if (family_value) return *family_value;
  if (g.order() * g.order() <= caps.h2_var_cap && g.order() <= caps.element_cap)
    return schur_multiplier_uct(g, caps);
  auto bound = schur_multiplier_sylow_bound(g, caps);
  if (bound) return *bound;
  throw BudgetError("schur_multiplier: all engines out of budget");
}

}  // namespace hnp
