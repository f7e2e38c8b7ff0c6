#pragma once
// Permutations on {0..n-1} with cycle-notation text I/O (1-based in text).

#include <numeric>
#include <string>
#include <vector>

#include "hnp/errors.hpp"

namespace hnp {

class Permutation {
public:
  Permutation() = default;
  explicit Permutation(int degree) : img_(degree) {
    std::iota(img_.begin(), img_.end(), 0);
  }
  explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
      if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
        throw Error("permutation images are not a bijection");
      seen[v] = true;
    }
  }

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[x]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  // (a*b)(x) = a(b(x))
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    HNP_CHECK(a.degree() == b.degree(), "degree mismatch in composition");
    std::vector<int> r(a.degree());
    for (int i = 0; i < a.degree(); ++i) r[i] = a.img_[b.img_[i]];
    Permutation p;
    p.img_ = std::move(r);
    return p;
  }

  Permutation inverse() const {
    std::vector<int> r(degree());
    for (int i = 0; i < degree(); ++i) r[img_[i]] = i;
    Permutation p;
    p.img_ = std::move(r);
    return p;
  }

  Permutation power(long long e) const {
    long long o = order();
    e %= o;
    if (e < 0) e += o;
    Permutation acc(degree()), sq = *this;
    while (e) {
      if (e & 1) acc = acc * sq;
      sq = sq * sq;
      e >>= 1;
    }
    return acc;
  }

  long long order() const {
    std::vector<bool> seen(degree(), false);
    long long o = 1;
    for (int i = 0; i < degree(); ++i) {
      if (seen[i]) continue;
      long long len = 0;
      for (int j = i; !seen[j]; j = img_[j]) {
        seen[j] = true;
        ++len;
      }
      o = std::lcm(o, len);
    }
    return o;
  }

  int first_moved() const {  // -1 if identity
    for (int i = 0; i < degree(); ++i)
      if (img_[i] != i) return i;
    return -1;
  }

  Permutation extended(int new_degree) const {
    HNP_CHECK(new_degree >= degree(), "cannot shrink a permutation");
    std::vector<int> r = img_;
    for (int i = degree(); i < new_degree; ++i) r.push_back(i);
    Permutation p;
    p.img_ = std::move(r);
    return p;
  }

  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator!=(const Permutation& o) const { return !(*this == o); }
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

  // "(1,2,3)(4,5)"; identity prints "()"
  std::string to_cycle_string() const {
    std::string s;
    std::vector<bool> seen(degree(), false);
    for (int i = 0; i < degree(); ++i) {
      if (seen[i] || img_[i] == i) {
        seen[i] = true;
        continue;
      }
      s += "(";
      bool first = true;
      for (int j = i; !seen[j]; j = img_[j]) {
        seen[j] = true;
        if (!first) s += ",";
        s += std::to_string(j + 1);
        first = false;
      }
      s += ")";
    }
    return s.empty() ? "()" : s;
  }

  // whitespace-insensitive; points are 1-based in text; result degree is
  // max(min_degree, largest point mentioned)
  static Permutation parse(const std::string& text, int min_degree = 0) {
    std::vector<std::vector<int>> cycles;
    size_t i = 0;
    auto skip_ws = [&] {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    int max_pt = min_degree - 1;
    skip_ws();
    if (i == text.size()) throw ParseError("empty permutation", i);
    while (i < text.size()) {
      skip_ws();
      if (i == text.size()) break;
      if (text[i] != '(') throw ParseError("expected '('", i);
      ++i;
      std::vector<int> cyc;
      skip_ws();
      while (i < text.size() && text[i] != ')') {
        size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw ParseError("expected point number", i);
        int pt = std::stoi(text.substr(start, i - start)) - 1;
        if (pt < 0) throw ParseError("points are 1-based", start);
        cyc.push_back(pt);
        max_pt = std::max(max_pt, pt);
        skip_ws();
        if (i < text.size() && text[i] == ',') {
          ++i;
          skip_ws();
        }
      }
      if (i == text.size()) throw ParseError("unterminated cycle", i);
      ++i;  // ')'
      if (!cyc.empty()) cycles.push_back(std::move(cyc));
      skip_ws();
    }
    int deg = std::max(min_degree, max_pt + 1);
    std::vector<int> img(deg);
    std::iota(img.begin(), img.end(), 0);
    std::vector<bool> touched(deg, false);
    for (const auto& cyc : cycles) {
      for (int p : cyc) {
        if (touched[p]) throw ParseError("point repeated across cycles", 0);
        touched[p] = true;
      }
      for (size_t k = 0; k < cyc.size(); ++k) img[cyc[k]] = cyc[(k + 1) % cyc.size()];
    }
    return Permutation(std::move(img));
  }

private:
  std::vector<int> img_;
};

}  // namespace hnp
