// Generates data/transitive_2_10.txt: transitive permutation groups of
// degree 2..10 in the standard census numbering, each built from a verified
// construction (family presentation, coset action, affine or projective
// group) and checked against its published invariants before being emitted.
//
// Census slots without an anchored construction are omitted; the file header
// documents the gaps (complete for degrees 2..7, partial for 8..10).

#include <functional>
#include <iostream>
#include <map>

#include "hnp/cli.hpp"

using namespace hnp;

namespace {

Caps gen_caps() {
  Caps c;
  c.element_cap = 25000;
  c.degree_cap = 30000;
  c.h2_var_cap = 30000;
  return c;
}

PermGroup fam(const std::string& text) {
  return build_group(parse_group_spec(text), gen_caps());
}

PermGroup raw(const std::vector<std::string>& gens, int deg = 0) {
  return PermGroup::from_cycle_strings(gens, deg);
}

PermGroup reg(const PermGroup& g) {
  return coset_action(g, PermGroup::trivial(g.degree()), gen_caps()).image;
}

PermGroup act_h(const PermGroup& g, const PermGroup& h) {
  CosetAction ca = coset_action(g, h, gen_caps());
  HNP_CHECK(ca.faithful, "act: stabilizer is not core-free");
  return ca.image;
}

PermGroup act(const PermGroup& g, const std::vector<std::string>& hgens) {
  return act_h(g, PermGroup::from_cycle_strings(hgens, g.degree()));
}

// restrict a group fixing `fixed` to its action on the other points
PermGroup on_moved_points(const PermGroup& g, int fixed) {
  int n = g.degree();
  std::vector<Permutation> gens;
  for (const auto& s : g.generators()) {
    HNP_CHECK(s(fixed) == fixed, "on_moved_points: point not fixed");
    std::vector<int> img(n - 1);
    for (int i = 0; i < n; ++i) {
      if (i == fixed) continue;
      int from = i < fixed ? i : i - 1;
      int to = s(i) < fixed ? s(i) : s(i) - 1;
      img[from] = to;
    }
    gens.push_back(Permutation(std::move(img)));
  }
  return PermGroup(n - 1, std::move(gens));
}

// ---- small finite fields --------------------------------------------------

struct GF {
  int p, k, q;
  std::vector<int> red;  // monic modulus: x^k + red[k-1] x^{k-1} + ... + red[0]
  std::vector<std::vector<int>> mul_t, add_t;

  GF(int p_, int k_, std::vector<int> red_) : p(p_), k(k_), red(std::move(red_)) {
    q = 1;
    for (int i = 0; i < k; ++i) q *= p;
    auto digits = [&](int v) {
      std::vector<int> d(k);
      for (int i = 0; i < k; ++i) {
        d[i] = v % p;
        v /= p;
      }
      return d;
    };
    auto value = [&](const std::vector<int>& d) {
      int v = 0;
      for (int i = k - 1; i >= 0; --i) v = v * p + d[i];
      return v;
    };
    add_t.assign(q, std::vector<int>(q));
    mul_t.assign(q, std::vector<int>(q));
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        auto da = digits(a), db = digits(b);
        std::vector<int> s(k);
        for (int i = 0; i < k; ++i) s[i] = (da[i] + db[i]) % p;
        add_t[a][b] = value(s);
        std::vector<int> prod(2 * k - 1, 0);
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        for (int d = 2 * k - 2; d >= k; --d) {
          int c = prod[d];
          if (!c) continue;
          prod[d] = 0;
          for (int i = 0; i < k; ++i)
            prod[d - k + i] = ((prod[d - k + i] - c * red[i]) % p + p) % p;
        }
        prod.resize(k);
        mul_t[a][b] = value(prod);
      }
  }
  int add(int a, int b) const { return add_t[a][b]; }
  int mul(int a, int b) const { return mul_t[a][b]; }
  int neg(int a) const {
    for (int b = 0; b < q; ++b)
      if (add(a, b) == 0) return b;
    return -1;
  }
  int inv(int a) const {
    for (int b = 1; b < q; ++b)
      if (mul(a, b) == 1) return b;
    return -1;
  }
  int pow(int a, int e) const {
    int r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  int order(int a) const {
    int o = 1, v = a;
    while (v != 1) {
      v = mul(v, a);
      ++o;
    }
    return o;
  }
  int primitive() const {
    for (int g = 2; g < q; ++g)
      if (order(g) == q - 1) return g;
    HNP_CHECK(false, "no primitive element");
    return -1;
  }
  int frob(int a) const { return pow(a, p); }
};

// <x -> x+1, x -> c*x> on the q field points
PermGroup affine1(const GF& f, int c, bool with_frobenius = false) {
  std::vector<int> t(f.q), m(f.q), fr(f.q);
  for (int x = 0; x < f.q; ++x) {
    t[x] = f.add(x, 1);
    m[x] = f.mul(c, x);
    fr[x] = f.frob(x);
  }
  std::vector<Permutation> gens{Permutation(std::move(t)), Permutation(std::move(m))};
  if (with_frobenius) gens.push_back(Permutation(std::move(fr)));
  return PermGroup(f.q, std::move(gens));
}

// subgroups of PGammaL(2,q) on the q+1 projective points (point q = infinity)
// which: 0 = PSL, 1 = PGL, 2 = PGammaL
PermGroup projective2(const GF& f, int which) {
  const int n = f.q + 1, inf = f.q;
  auto perm_of = [&](const std::function<int(int)>& map) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = map(i);
    return Permutation(std::move(img));
  };
  Permutation t = perm_of([&](int x) { return x == inf ? inf : f.add(x, 1); });
  int g = f.primitive();
  Permutation scale = perm_of([&](int x) {
    int c = which == 0 && f.p != 2 ? f.mul(g, g) : g;
    return x == inf ? inf : f.mul(c, x);
  });
  Permutation w = perm_of([&](int x) {  // x -> -1/x
    if (x == inf) return 0;
    if (x == 0) return inf;
    return f.neg(f.inv(x));
  });
  std::vector<Permutation> gens{t, w, scale};
  if (which >= 2) gens.push_back(perm_of([&](int x) { return x == inf ? inf : f.frob(x); }));
  return PermGroup(n, std::move(gens));
}

// affine group on F_p^2: translations plus the given matrices; point p*x + y
PermGroup affine2(int p, const std::vector<std::array<int, 4>>& mats) {
  int n = p * p;
  auto idx = [&](int x, int y) { return p * ((x % p + p) % p) + ((y % p + p) % p); };
  std::vector<int> t1(n), t2(n);
  for (int x = 0; x < p; ++x)
    for (int y = 0; y < p; ++y) {
      t1[idx(x, y)] = idx(x + 1, y);
      t2[idx(x, y)] = idx(x, y + 1);
    }
  std::vector<Permutation> gens{Permutation(std::move(t1)), Permutation(std::move(t2))};
  for (auto& m : mats) {
    std::vector<int> img(n);
    for (int x = 0; x < p; ++x)
      for (int y = 0; y < p; ++y)
        img[idx(x, y)] = idx(m[0] * x + m[1] * y, m[2] * x + m[3] * y);
    gens.push_back(Permutation(std::move(img)));
  }
  return PermGroup(n, std::move(gens));
}

// GL(3,2) on the 7 nonzero vectors of F_2^3, or AGL(3,2) on all 8
PermGroup gl32(bool affine) {
  auto apply = [&](const std::array<std::array<int, 3>, 3>& m, int v) {
    int out = 0;
    for (int i = 0; i < 3; ++i) {
      int bit = 0;
      for (int j = 0; j < 3; ++j) bit ^= m[i][j] & (v >> j);
      out |= (bit & 1) << i;
    }
    return out;
  };
  std::array<std::array<int, 3>, 3> a{{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}};
  std::array<std::array<int, 3>, 3> b{{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}};
  if (!affine) {
    std::vector<int> pa(7), pb(7);
    for (int v = 1; v < 8; ++v) {
      pa[v - 1] = apply(a, v) - 1;
      pb[v - 1] = apply(b, v) - 1;
    }
    return PermGroup(7, {Permutation(std::move(pa)), Permutation(std::move(pb))});
  }
  std::vector<int> pa(8), pb(8), t(8);
  for (int v = 0; v < 8; ++v) {
    pa[v] = apply(a, v);
    pb[v] = apply(b, v);
    t[v] = v ^ 1;
  }
  return PermGroup(8, {Permutation(std::move(t)), Permutation(std::move(pa)),
                       Permutation(std::move(pb))});
}

// the central product C4 o D4 of order 16, acting regularly: elements
// (j, x), j in Z4 central, x in V4 = {1,a,b,ab}, with [a,b] = c^2
PermGroup pauli16() {
  auto tau = [](int x1, int x2) { return ((x1 >> 1) & (x2 & 1)) ? 2 : 0; };
  auto idx = [](int j, int x) { return 4 * x + j; };
  auto perm_of = [&](int j0, int x0) {
    std::vector<int> img(16);
    for (int j = 0; j < 4; ++j)
      for (int x = 0; x < 4; ++x)
        img[idx(j, x)] = idx((j0 + j + tau(x0, x)) % 4, x0 ^ x);
    return Permutation(std::move(img));
  };
  return PermGroup(16, {perm_of(0, 1), perm_of(0, 2), perm_of(1, 0)});
}

// (C4 x C2) : C2 with z x z = xy, z y z = y, acting regularly
PermGroup g16_3() {
  auto idx = [](int i, int j, int k) { return i + 4 * j + 8 * k; };
  auto mulp = [&](int i1, int j1, int k1, int i2, int j2, int k2) {
    int i = i1 + i2, j = j1 + j2, k = k1 + k2;
    if (k1 & 1) j += i2;  // z x^i = x^i y^i z
    return idx(i % 4, j % 2, k % 2);
  };
  auto perm_of = [&](int i0, int j0, int k0) {
    std::vector<int> img(16);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) img[idx(i, j, k)] = mulp(i0, j0, k0, i, j, k);
    return Permutation(std::move(img));
  };
  return PermGroup(16, {perm_of(1, 0, 0), perm_of(0, 1, 0), perm_of(0, 0, 1)});
}

// ---- entries ---------------------------------------------------------------

struct Expect {
  long long order = 0;
  long long h_order = -1;
  int h_cyclic = -1;   // 1/0/-1 = yes/no/skip
  int metacyclic = -1;
  std::optional<AbInvariants> mg;
};

struct Entry {
  int degree, index;
  std::string name;
  std::function<PermGroup()> build;
  Expect expect;
};

constexpr long long kMgCheckBound = 170;  // verify M(G) only for |G| <= this

bool verify(const Entry& e, const PermGroup& g, std::string& why) {
  Caps caps = gen_caps();
  if (g.degree() != e.degree) {
    why = "degree " + std::to_string(g.degree());
    return false;
  }
  if (!g.is_transitive()) {
    why = "not transitive";
    return false;
  }
  if (g.order() != e.expect.order) {
    why = "order " + std::to_string(g.order());
    return false;
  }
  PermGroup h = g.stabilizer(0);
  if (e.expect.h_order >= 0 && h.order() != e.expect.h_order) {
    why = "stabilizer order " + std::to_string(h.order());
    return false;
  }
  if (e.expect.h_cyclic >= 0 && h.is_cyclic(caps) != (e.expect.h_cyclic == 1)) {
    why = "stabilizer cyclicity";
    return false;
  }
  if (e.expect.metacyclic >= 0 && g.order() <= caps.element_cap) {
    if (is_metacyclic(g, caps) != (e.expect.metacyclic == 1)) {
      why = "metacyclic flag";
      return false;
    }
  }
  if (e.expect.mg && g.order() <= kMgCheckBound) {
    AbInvariants got = schur_multiplier_uct(g, caps);
    if (got != *e.expect.mg) {
      why = "M(G) = " + got.to_string() + " expected " + e.expect.mg->to_string();
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  std::vector<Entry> entries;
  auto add = [&](int d, int i, std::string name, std::function<PermGroup()> b,
                 Expect ex) {
    entries.push_back({d, i, std::move(name), std::move(b), std::move(ex)});
  };
  auto MG = [](std::initializer_list<long long> v) {
    return std::optional<AbInvariants>(AbInvariants(v));
  };

  // degree 2..5
  add(2, 1, "C2", [] { return fam("C:2"); }, {2, 1, 1, 1, MG({})});
  add(3, 1, "C3", [] { return fam("C:3"); }, {3, 1, 1, 1, MG({})});
  add(3, 2, "S3", [] { return fam("D:3"); }, {6, 2, 1, 1, MG({})});
  add(4, 1, "C4", [] { return fam("C:4"); }, {4, 1, 1, 1, MG({})});
  add(4, 2, "V4", [] { return reg(raw({"(1,2)", "(3,4)"})); }, {4, 1, 1, 1, MG({2})});
  add(4, 3, "D4", [] { return fam("D:4"); }, {8, 2, 1, 1, MG({2})});
  add(4, 4, "A4", [] { return raw({"(1,2,3)", "(1,2)(3,4)"}); }, {12, 3, 1, 0, MG({2})});
  add(4, 5, "S4", [] { return raw({"(1,2,3,4)", "(1,2)"}); }, {24, 6, 0, 0, MG({2})});
  add(5, 1, "C5", [] { return fam("C:5"); }, {5, 1, 1, 1, MG({})});
  add(5, 2, "D5", [] { return fam("D:5"); }, {10, 2, 1, 1, MG({})});
  add(5, 3, "F20", [] { return fam("F:5,4"); }, {20, 4, 1, 1, MG({})});
  add(5, 4, "A5", [] { return raw({"(1,2,3,4,5)", "(1,2,3)"}); }, {60, 12, 0, 0, MG({2})});
  add(5, 5, "S5", [] { return raw({"(1,2,3,4,5)", "(1,2)"}); }, {120, 24, 0, 0, MG({2})});

  // degree 6
  add(6, 1, "C6", [] { return fam("C:6"); }, {6, 1, 1, 1, MG({})});
  add(6, 2, "S3 regular", [] { return fam("D:3|H=1"); }, {6, 1, 1, 1, MG({})});
  add(6, 3, "D6", [] { return fam("D:6"); }, {12, 2, 1, 1, MG({2})});
  add(6, 4, "A4 / C2",
      [] { return act(raw({"(1,2,3)", "(1,2)(3,4)"}), {"(1,2)(3,4)"}); },
      {12, 2, 1, 0, MG({2})});
  add(6, 5, "C3 x S3 / diag C3",
      [] { return act(raw({"(1,2,3)", "(4,5,6)", "(4,5)"}), {"(1,2,3)(4,5,6)"}); },
      {18, 3, 1, 1, MG({})});
  add(6, 6, "C2 x A4 / C2^2",
      [] {
        return act(raw({"(1,2,3)", "(1,2)(3,4)", "(5,6)"}),
                   {"(1,2)(3,4)(5,6)", "(1,3)(2,4)"});
      },
      {24, 4, 0, 0, MG({2})});
  add(6, 7, "S4 / C4", [] { return act(raw({"(1,2,3,4)", "(1,2)"}), {"(1,2,3,4)"}); },
      {24, 4, 1, 0, MG({2})});
  add(6, 8, "S4 / V4 (non-normal)",
      [] { return act(raw({"(1,2,3,4)", "(1,2)"}), {"(1,2)", "(3,4)"}); },
      {24, 4, 0, 0, MG({2})});
  add(6, 9, "S3 x S3 / diag",
      [] {
        return act(raw({"(1,2,3)", "(1,2)", "(4,5,6)", "(4,5)"}),
                   {"(1,2,3)(4,5,6)", "(1,2)(4,5)"});
      },
      {36, 6, 0, 0, MG({2})});
  add(6, 10, "C3^2:C4 / S3",
      [] {
        PermGroup g = affine2(3, {{0, 2, 1, 0}});
        PermGroup neg = affine2(3, {{2, 0, 0, 2}});
        PermGroup h(9, {g.generators()[0], neg.generators()[2]});
        return act_h(g, h);
      },
      {36, 6, 0, 0, MG({3})});
  add(6, 11, "C2 wr S3",
      [] { return raw({"(1,2)", "(1,3,5)(2,4,6)", "(1,3)(2,4)"}); },
      {48, 8, 0, 0, std::nullopt});
  add(6, 12, "PSL(2,5)", [] { return projective2(GF(5, 1, {0}), 0); },
      {60, 10, 0, 0, MG({2})});
  add(6, 13, "S3 wr C2",
      [] { return raw({"(1,2,3)", "(1,2)", "(1,4)(2,5)(3,6)"}); },
      {72, 12, 0, 0, MG({2})});
  add(6, 14, "PGL(2,5)", [] { return projective2(GF(5, 1, {0}), 1); },
      {120, 20, 0, 0, MG({2})});
  add(6, 15, "A6", [] { return raw({"(1,2,3,4,5)", "(4,5,6)"}); },
      {360, 60, 0, 0, MG({6})});
  add(6, 16, "S6", [] { return raw({"(1,2,3,4,5,6)", "(1,2)"}); },
      {720, 120, 0, 0, MG({2})});

  // degree 7
  add(7, 1, "C7", [] { return fam("C:7"); }, {7, 1, 1, 1, MG({})});
  add(7, 2, "D7", [] { return fam("D:7"); }, {14, 2, 1, 1, MG({})});
  add(7, 3, "F21", [] { return fam("F:7,3"); }, {21, 3, 1, 1, MG({})});
  add(7, 4, "F42", [] { return fam("F:7,6"); }, {42, 6, 1, 1, MG({})});
  add(7, 5, "PSL(3,2)", [] { return gl32(false); }, {168, 24, 0, 0, MG({2})});
  add(7, 6, "A7", [] { return raw({"(1,2,3,4,5,6,7)", "(5,6,7)"}); },
      {2520, 360, 0, 0, std::nullopt});
  add(7, 7, "S7", [] { return raw({"(1,2,3,4,5,6,7)", "(1,2)"}); },
      {5040, 720, 0, 0, std::nullopt});

  // degree 8
  add(8, 1, "C8", [] { return fam("C:8"); }, {8, 1, 1, 1, MG({})});
  add(8, 2, "C4 x C2", [] { return reg(raw({"(1,2,3,4)", "(5,6)"})); },
      {8, 1, 1, 1, MG({2})});
  add(8, 3, "C2^3", [] { return reg(raw({"(1,2)", "(3,4)", "(5,6)"})); },
      {8, 1, 1, 0, MG({2, 2, 2})});
  add(8, 4, "D4 regular", [] { return fam("D:4|H=1"); }, {8, 1, 1, 1, MG({2})});
  add(8, 5, "Q8", [] { return fam("Q:2"); }, {8, 1, 1, 1, MG({})});
  add(8, 6, "D8", [] { return fam("D:8"); }, {16, 2, 1, 1, MG({2})});
  add(8, 7, "M16", [] { return fam("Mod:1|H=b"); }, {16, 2, 1, 1, MG({})});
  add(8, 8, "QD16", [] { return fam("QD:1|H=b"); }, {16, 2, 1, 1, MG({})});
  add(8, 9, "C2 x D4 / C2",
      [] { return act(raw({"(1,2,3,4)", "(1,3)", "(5,6)"}), {"(1,3)"}); },
      {16, 2, 1, 0, MG({2, 2, 2})});
  add(8, 10, "C4 o D4 / C2",
      [] {
        PermGroup g = pauli16();
        return act_h(g, PermGroup(16, {g.generators()[0]}));
      },
      {16, 2, 1, 0, MG({2, 2})});
  add(8, 11, "(C4 x C2):C2 / C2",
      [] {
        PermGroup g = g16_3();
        return act_h(g, PermGroup(16, {g.generators()[2]}));
      },
      {16, 2, 1, 0, MG({2, 2})});
  add(8, 12, "SL(2,3)",
      [] {
        PermGroup asl = affine2(3, {{1, 1, 0, 1}, {1, 0, 1, 1}});
        return on_moved_points(asl.stabilizer(0), 0);
      },
      {24, 3, 1, 0, MG({})});
  add(8, 13, "C2 x A4 / C3",
      [] { return act(raw({"(1,2,3)", "(1,2)(3,4)", "(5,6)"}), {"(1,2,3)"}); },
      {24, 3, 1, 0, MG({2})});
  add(8, 14, "S4 / C3", [] { return act(raw({"(1,2,3,4)", "(1,2)"}), {"(1,2,3)"}); },
      {24, 3, 1, 0, MG({2})});
  add(8, 17, "C4 wr C2", [] { return raw({"(1,2,3,4)", "(1,5)(2,6)(3,7)(4,8)"}); },
      {32, 4, 1, 0, MG({2})});
  add(8, 19, "C2^3:C4 (affine)",
      [] {
        // translations of F_2^3 with the order-4 unipotent I + N
        auto apply = [](int v) {
          int x = v & 1, y = (v >> 1) & 1, z = (v >> 2) & 1;
          return (x ^ y) | ((y ^ z) << 1) | (z << 2);
        };
        std::vector<int> t(8), m(8);
        for (int v = 0; v < 8; ++v) {
          t[v] = v ^ 4;  // translate along the non-invariant basis vector
          m[v] = apply(v);
        }
        return PermGroup(8, {Permutation(std::move(t)), Permutation(std::move(m))});
      },
      {32, 4, 1, 0, MG({2, 2})});
  add(8, 23, "GL(2,3)",
      [] {
        PermGroup agl = affine2(3, {{1, 1, 0, 1}, {1, 0, 1, 1}, {1, 0, 0, 2}});
        return on_moved_points(agl.stabilizer(0), 0);
      },
      {48, 6, 0, 0, MG({})});
  add(8, 24, "C2 x S4 / S3",
      [] { return act(raw({"(1,2,3,4)", "(1,2)", "(5,6)"}), {"(1,2,3)", "(1,2)"}); },
      {48, 6, 0, 0, MG({2, 2})});
  add(8, 25, "AGL(1,8)",
      [] {
        GF f(2, 3, {1, 1, 0});
        return affine1(f, f.primitive());
      },
      {56, 7, 1, 0, MG({})});
  add(8, 36, "AGammaL(1,8)",
      [] {
        GF f(2, 3, {1, 1, 0});
        return affine1(f, f.primitive(), true);
      },
      {168, 21, 0, 0, MG({})});
  add(8, 37, "PSL(2,7)", [] { return projective2(GF(7, 1, {0}), 0); },
      {168, 21, 0, 0, MG({2})});
  add(8, 43, "PGL(2,7)", [] { return projective2(GF(7, 1, {0}), 1); },
      {336, 42, 0, 0, std::nullopt});
  add(8, 48, "AGL(3,2)", [] { return gl32(true); }, {1344, 168, 0, 0, std::nullopt});
  add(8, 49, "A8", [] { return raw({"(1,2,3)", "(2,3,4,5,6,7,8)"}); },
      {20160, 2520, 0, -1, std::nullopt});
  add(8, 50, "S8", [] { return raw({"(1,2,3,4,5,6,7,8)", "(1,2)"}); },
      {40320, 5040, 0, -1, std::nullopt});

  // degree 9
  add(9, 1, "C9", [] { return fam("C:9"); }, {9, 1, 1, 1, MG({})});
  add(9, 2, "C3^2", [] { return affine2(3, {}); }, {9, 1, 1, 1, MG({3})});
  add(9, 3, "D9", [] { return fam("D:9"); }, {18, 2, 1, 1, MG({})});
  add(9, 4, "C3 x S3 / C2",
      [] { return act(raw({"(1,2,3)", "(4,5,6)", "(4,5)"}), {"(4,5)"}); },
      {18, 2, 1, 1, MG({})});
  add(9, 5, "C3^2:C2", [] { return affine2(3, {{2, 0, 0, 2}}); },
      {18, 2, 1, 0, MG({3})});
  add(9, 6, "E9(27) = C9:C3", [] { return fam("XS:3|H=b"); }, {27, 3, 1, 1, MG({})});
  add(9, 7, "He3",
      [] { return raw({"(1,4,7)(2,5,8)(3,6,9)", "(4,5,6)(7,9,8)"}); },
      {27, 3, 1, 0, MG({3, 3})});
  add(9, 8, "S3 x S3 (product action)",
      [] {
        return raw({"(1,4,7)(2,5,8)(3,6,9)", "(1,4)(2,5)(3,6)",
                    "(1,2,3)(4,5,6)(7,8,9)", "(1,2)(4,5)(7,8)"});
      },
      {36, 4, 0, 0, MG({2})});
  add(9, 9, "C3^2:C4", [] { return affine2(3, {{0, 2, 1, 0}}); },
      {36, 4, 1, 0, MG({3})});
  add(9, 10, "C9:C6", [] { return fam("G0:9,6,2,9|H=b"); }, {54, 6, 1, 1, MG({})});
  add(9, 11, "C3^2:C6 (H = C6)", [] { return affine2(3, {{2, 1, 0, 2}}); },
      {54, 6, 1, 0, MG({3})});
  add(9, 12, "He3:C2",
      [] {
        return raw({"(1,4,7)(2,5,8)(3,6,9)", "(4,5,6)(7,9,8)", "(4,7)(5,8)(6,9)"});
      },
      {54, 6, 0, 0, MG({})});
  add(9, 13, "C3^2:C6 (H = S3)",
      [] {
        PermGroup g = affine2(3, {{2, 1, 0, 2}});
        PermGroup neg = affine2(3, {{2, 0, 0, 2}});
        PermGroup h(9, {g.generators()[1], neg.generators()[2]});
        return act_h(g, h);
      },
      {54, 6, 0, 0, MG({3})});
  add(9, 14, "C3^2:Q8", [] { return affine2(3, {{0, 2, 1, 0}, {1, 1, 1, 2}}); },
      {72, 8, 0, 0, MG({3})});
  add(9, 15, "AGL(1,9)",
      [] {
        GF f(3, 2, {1, 0});
        return affine1(f, f.primitive());
      },
      {72, 8, 1, 0, MG({})});
  add(9, 16, "S3 wr C2 (product action)",
      [] {
        return raw({"(1,4,7)(2,5,8)(3,6,9)", "(1,4)(2,5)(3,6)",
                    "(1,2,3)(4,5,6)(7,8,9)", "(1,2)(4,5)(7,8)", "(2,4)(3,7)(6,8)"});
      },
      {72, 8, 0, 0, MG({2})});
  add(9, 19, "AGammaL(1,9)",
      [] {
        GF f(3, 2, {1, 0});
        return affine1(f, f.primitive(), true);
      },
      {144, 16, 0, 0, MG({})});
  add(9, 20, "(C3^3:C3):C2",
      [] {
        return raw({"(1,2,3)", "(1,4,7)(2,5,8)(3,6,9)", "(2,3)(4,7)(5,9)(6,8)"});
      },
      {162, 18, 0, 0, MG({})});
  add(9, 23, "ASL(2,3)", [] { return affine2(3, {{1, 1, 0, 1}, {1, 0, 1, 1}}); },
      {216, 24, 0, 0, MG({3})});
  add(9, 26, "AGL(2,3)",
      [] { return affine2(3, {{1, 1, 0, 1}, {1, 0, 1, 1}, {1, 0, 0, 2}}); },
      {432, 48, 0, 0, std::nullopt});
  add(9, 27, "PSL(2,8)", [] { return projective2(GF(2, 3, {1, 1, 0}), 0); },
      {504, 56, 0, 0, std::nullopt});
  add(9, 32, "PGammaL(2,8)", [] { return projective2(GF(2, 3, {1, 1, 0}), 2); },
      {1512, 168, 0, 0, std::nullopt});
  add(9, 33, "A9", [] { return raw({"(1,2,3)", "(1,2,3,4,5,6,7,8,9)"}); },
      {181440, 20160, 0, -1, std::nullopt});
  add(9, 34, "S9", [] { return raw({"(1,2,3,4,5,6,7,8,9)", "(1,2)"}); },
      {362880, 40320, 0, -1, std::nullopt});

  // degree 10
  add(10, 1, "C10", [] { return fam("C:10"); }, {10, 1, 1, 1, MG({})});
  add(10, 2, "D5 regular", [] { return fam("D:5|H=1"); }, {10, 1, 1, 1, MG({})});
  add(10, 3, "D10", [] { return fam("D:10"); }, {20, 2, 1, 1, MG({2})});
  add(10, 4, "F20 / C2", [] { return fam("F:5,4|H=b2"); }, {20, 2, 1, 1, MG({})});
  add(10, 5, "C2 x F20 / C4",
      [] {
        PermGroup g = direct_product(fam("F:5,4"), raw({"(1,2)"}));
        return act(g, {"(2,3,5,4)"});
      },
      {40, 4, 1, 1, MG({2})});
  add(10, 6, "C5 x D5 / diag C5",
      [] {
        PermGroup g = direct_product(fam("C:5"), fam("D:5"));
        return act(g, {"(1,2,3,4,5)(6,7,8,9,10)"});
      },
      {50, 5, 1, 1, MG({})});
  add(10, 7, "A5 / S3",
      [] { return act(raw({"(1,2,3,4,5)", "(1,2,3)"}), {"(1,2,3)", "(1,2)(4,5)"}); },
      {60, 6, 0, 0, MG({2})});
  add(10, 9, "D5 x D5 / diag",
      [] {
        PermGroup g = direct_product(fam("D:5"), fam("D:5"));
        return act(g, {"(1,2,3,4,5)(6,7,8,9,10)", "(2,5)(3,4)(7,10)(8,9)"});
      },
      {100, 10, 0, 0, MG({2})});
  add(10, 10, "C5^2:C4 / D5",
      [] {
        PermGroup g = affine2(5, {{0, 4, 1, 0}});
        PermGroup neg = affine2(5, {{4, 0, 0, 4}});
        PermGroup h(25, {g.generators()[0], neg.generators()[2]});
        return act_h(g, h);
      },
      {100, 10, 0, 0, MG({5})});
  add(10, 17, "C5^2:(C4 x C2) / F20",
      [] {
        PermGroup g = affine2(5, {{2, 0, 0, 2}, {0, 1, 1, 0}});
        PermGroup h(25, {g.generators()[0], g.generators()[2]});
        return act_h(g, h);
      },
      {200, 20, 0, 0, std::nullopt});
  add(10, 18, "C5^2:C8 / F20",
      [] {
        GF f(5, 2, {3, 0});
        int g8 = f.pow(f.primitive(), 3);
        PermGroup g = affine1(f, g8);
        int scal = f.pow(g8, 2);
        std::vector<int> t(f.q), m(f.q);
        for (int x = 0; x < f.q; ++x) {
          t[x] = f.add(x, 1);
          m[x] = f.mul(scal, x);
        }
        PermGroup h(f.q, {Permutation(std::move(t)), Permutation(std::move(m))});
        return act_h(g, h);
      },
      {200, 20, 0, 0, std::nullopt});
  add(10, 26, "A6 / C3^2:C4",
      [] {
        return act(raw({"(1,2,3,4,5)", "(4,5,6)"}),
                   {"(1,2,3)", "(4,5,6)", "(1,4,2,5)(3,6)"});
      },
      {360, 36, 0, 0, std::nullopt});
  add(10, 35, "PGammaL(2,9)", [] { return projective2(GF(3, 2, {1, 0}), 2); },
      {1440, 144, 0, 0, std::nullopt});
  add(10, 44, "A10", [] { return raw({"(1,2,3)", "(2,3,4,5,6,7,8,9,10)"}); },
      {1814400, 181440, 0, -1, std::nullopt});
  add(10, 45, "S10", [] { return raw({"(1,2,3,4,5,6,7,8,9,10)", "(1,2)"}); },
      {3628800, 362880, 0, -1, std::nullopt});

  // build, verify, emit
  int failures = 0;
  std::map<int, int> per_degree;
  std::string out;
  out += "# Transitive permutation groups of degree 2..10, standard census numbering.\n";
  out += "# Format: <degree> <index> <generator>;<generator>;...\n";
  out += "# Entries come from verified constructions (family presentations, coset\n";
  out += "# actions, affine and projective groups) checked against their published\n";
  out += "# order, stabilizer and Schur-multiplier data; census slots without such\n";
  out += "# a construction are omitted. Complete for degrees 2..7; partial for 8..10.\n";
  for (const auto& e : entries) {
    PermGroup g = PermGroup::trivial();
    std::string why;
    bool ok = false;
    try {
      g = e.build();
      ok = verify(e, g, why);
    } catch (const std::exception& ex) {
      why = ex.what();
    }
    if (!ok) {
      std::cerr << "FAIL " << e.degree << "T" << e.index << " (" << e.name
                << "): " << why << "\n";
      ++failures;
      continue;
    }
    ++per_degree[e.degree];
    out += std::to_string(e.degree) + " " + std::to_string(e.index) + " ";
    for (size_t i = 0; i < g.generators().size(); ++i) {
      if (i) out += ";";
      out += g.generators()[i].to_cycle_string();
    }
    out += "  # " + e.name + "\n";
    std::cerr << "ok   " << e.degree << "T" << e.index << " (" << e.name << ")\n";
  }
  std::cout << out;
  std::cerr << "records:";
  for (auto& [d, c] : per_degree) std::cerr << " " << d << ":" << c;
  std::cerr << "\nfailures: " << failures << "\n";
  return failures == 0 ? 0 : 1;
}
