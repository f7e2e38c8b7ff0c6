#pragma once
// Catalog files of transitive groups: plain text, one record per line,
//   <degree> <index> <gen>;<gen>;...
// '#' starts a comment. Generators are validated on load: they must parse,
// have the stated degree, and generate a transitive group.

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hnp/perm_group.hpp"

namespace hnp {

struct CatalogRecord {
  int degree = 0;
  int index = 0;  // the m of the nTm label
  std::vector<std::string> generators;
  std::string note;  // optional free text after the generators

  std::string label() const {
    return std::to_string(degree) + "T" + std::to_string(index);
  }
};

struct CatalogError {
  int line = 0;
  std::string message;
};

// Throws Error with every bad record listed; duplicates of (n, m) rejected.
inline std::vector<CatalogRecord> load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("catalog: cannot read " + path);
  std::vector<CatalogRecord> records;
  std::vector<CatalogError> errors;
  std::set<std::pair<int, int>> seen;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string body = line.substr(0, line.find('#'));
    size_t a = body.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    std::istringstream ss(body);
    CatalogRecord rec;
    if (!(ss >> rec.degree >> rec.index)) {
      errors.push_back({lineno, "expected '<degree> <index> <generators>'"});
      continue;
    }
    std::string gens;
    std::getline(ss, gens);
    size_t g0 = gens.find_first_not_of(" \t");
    if (g0 == std::string::npos) {
      errors.push_back({lineno, "missing generators"});
      continue;
    }
    gens = gens.substr(g0);
    std::string cur;
    for (char c : gens) {
      if (c == ';') {
        if (!cur.empty()) rec.generators.push_back(cur);
        cur.clear();
      } else if (!std::isspace(static_cast<unsigned char>(c))) {
        cur.push_back(c);
      }
    }
    if (!cur.empty()) rec.generators.push_back(cur);
    if (rec.degree < 1 || rec.index < 1) {
      errors.push_back({lineno, "degree and index must be positive"});
      continue;
    }
    if (!seen.insert({rec.degree, rec.index}).second) {
      errors.push_back({lineno, "duplicate record " + rec.label()});
      continue;
    }
    try {
      PermGroup g = PermGroup::from_cycle_strings(rec.generators, rec.degree);
      if (g.degree() != rec.degree) {
        errors.push_back({lineno, rec.label() + ": generators exceed the stated degree"});
        continue;
      }
      if (!g.is_transitive()) {
        errors.push_back({lineno, rec.label() + ": generators are not transitive"});
        continue;
      }
    } catch (const std::exception& e) {
      errors.push_back({lineno, rec.label() + ": " + e.what()});
      continue;
    }
    records.push_back(std::move(rec));
  }
  if (!errors.empty()) {
    std::string msg = "catalog validation failed:";
    for (const auto& e : errors)
      msg += "\n  line " + std::to_string(e.line) + ": " + e.message;
    throw Error(msg);
  }
  std::sort(records.begin(), records.end(), [](const auto& x, const auto& y) {
    return std::pair(x.degree, x.index) < std::pair(y.degree, y.index);
  });
  return records;
}

}  // namespace hnp
