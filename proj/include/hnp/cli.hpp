#pragma once
// Command surface shared by the CLI binary and the tests: the group-spec
// mini-language, report rows for census sweeps, and the batch
// driver with a deterministic-output worker pool.

#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "hnp/catalog.hpp"
#include "hnp/families.hpp"
#include "hnp/hnp.hpp"

namespace hnp {

// C:n | D:n | QD:m | Mod:m | Q:m | G0:m,s,r,t | Beyl:M,N,r,l | Z:m,n,r |
// XS:p | F:p,l | perm:<gens>, optionally followed by |H=<selector> where the
// selector is 1, point:<k>, cycle strings, or words in the generators a, b.
inline GroupSpec parse_group_spec(const std::string& text) {
  GroupSpec spec;
  size_t colon = text.find(':');
  if (colon == std::string::npos)
    throw ParseError("expected '<family>:<parameters>'", 0);
  std::string tag = text.substr(0, colon);
  using K = GroupSpec::Kind;
  if (tag == "C")
    spec.kind = K::Cyclic;
  else if (tag == "D")
    spec.kind = K::Dihedral;
  else if (tag == "QD")
    spec.kind = K::Quasidihedral;
  else if (tag == "Mod")
    spec.kind = K::Modular;
  else if (tag == "Q")
    spec.kind = K::GeneralizedQuaternion;
  else if (tag == "G0")
    spec.kind = K::Metacyclic;
  else if (tag == "Beyl")
    spec.kind = K::Beyl;
  else if (tag == "Z")
    spec.kind = K::ZGroup;
  else if (tag == "XS")
    spec.kind = K::ExtraspecialP2;
  else if (tag == "F")
    spec.kind = K::Frobenius;
  else if (tag == "perm")
    spec.kind = K::RawGenerators;
  else
    throw ParseError("unknown family '" + tag +
                         "' (expected C, D, QD, Mod, Q, G0, Beyl, Z, XS, F, perm)",
                     0);
  size_t bar = text.find('|', colon);
  std::string body = text.substr(colon + 1, bar == std::string::npos
                                                ? std::string::npos
                                                : bar - colon - 1);
  if (spec.kind == K::RawGenerators) {
    std::string cur;
    for (char c : body) {
      if (c == ';') {
        if (!cur.empty()) spec.raw_gens.push_back(cur);
        cur.clear();
      } else if (!std::isspace(static_cast<unsigned char>(c))) {
        cur.push_back(c);
      }
    }
    if (!cur.empty()) spec.raw_gens.push_back(cur);
    if (spec.raw_gens.empty())
      throw ParseError("perm: expected cycle strings", colon + 1);
  } else {
    size_t pos = 0;
    while (pos < body.size()) {
      size_t comma = body.find(',', pos);
      std::string tok = body.substr(pos, comma == std::string::npos
                                             ? std::string::npos
                                             : comma - pos);
      try {
        size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("trailing junk");
        spec.params.push_back(v);
      } catch (const std::exception&) {
        throw ParseError("expected an integer parameter, got '" + tok + "'",
                         colon + 1 + pos);
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (spec.params.empty())
      throw ParseError("expected parameters after '" + tag + ":'", colon + 1);
  }
  if (bar != std::string::npos) {
    std::string suffix = text.substr(bar + 1);
    if (suffix.rfind("H=", 0) != 0)
      throw ParseError("expected '|H=<stabilizer>'", bar + 1);
    std::string sel = suffix.substr(2);
    if (sel.empty()) throw ParseError("empty stabilizer selector", bar + 3);
    if (sel == "1") {
      spec.stab_kind = GroupSpec::StabKind::Trivial;
    } else if (sel.rfind("point:", 0) == 0) {
      spec.stab_kind = GroupSpec::StabKind::Point;
      try {
        spec.stab_point = std::stoi(sel.substr(6)) - 1;
      } catch (const std::exception&) {
        throw ParseError("expected 'point:<k>' with 1-based k", bar + 3);
      }
    } else {
      spec.stab_kind = sel[0] == '(' ? GroupSpec::StabKind::Perms
                                     : GroupSpec::StabKind::Words;
      std::string cur;
      for (char c : sel) {
        if (c == ';') {
          if (!cur.empty()) spec.stab_spec.push_back(cur);
          cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
          cur.push_back(c);
        }
      }
      if (!cur.empty()) spec.stab_spec.push_back(cur);
    }
  }
  validate_spec(spec);
  return spec;
}

struct ReportRow {
  std::string label;
  long long g_order = 0;
  long long h_order = 0;
  std::string metacyclic = "?";   // yes / no / ?(reason)
  std::string zgroup = "?";
  std::string mg = "?";
  std::string mh = "?";
  std::string cond0 = "?";
  std::string verdict = "?";
  std::string tamagawa = "-";
  std::string timing = "-";

  // the flags as booleans when known, for filtering
  std::optional<bool> metacyclic_b, zgroup_b, mg_trivial_b, mh_trivial_b, cond0_b;
  bool inconclusive = false;

  static std::string tsv_header() {
    return "label\t|G|\t|H|\tmetacyclic\tzgroup\tM(G)\tM(H)\tcond0\tverdict\ttamagawa\ttime_ms";
  }
  std::string tsv() const {
    std::ostringstream os;
    os << label << '\t' << g_order << '\t' << h_order << '\t' << metacyclic << '\t'
       << zgroup << '\t' << mg << '\t' << mh << '\t' << cond0 << '\t' << verdict
       << '\t' << tamagawa << '\t' << timing;
    return os.str();
  }
  nlohmann::ordered_json json() const {
    nlohmann::ordered_json j;
    j["label"] = label;
    j["order"] = g_order;
    j["stabilizer_order"] = h_order;
    j["metacyclic"] = metacyclic;
    j["zgroup"] = zgroup;
    j["MG"] = mg;
    j["MH"] = mh;
    j["cond0"] = cond0;
    j["verdict"] = verdict;
    j["tamagawa"] = tamagawa;
    j["time_ms"] = timing;
    return j;
  }
};

struct RunOptions {
  VerdictOptions verdict;
  bool timings = false;
  std::string format = "tsv";  // tsv | json
  int jobs = 0;                // 0: hardware_concurrency
};

// one fully populated row for a transitive group
inline ReportRow analyze_group(const std::string& label, const PermGroup& g,
                               const RunOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  ReportRow row;
  row.label = label;
  Verdict v = hnp_verdict(g, opt.verdict);
  row.g_order = v.g_order;
  row.h_order = v.h_order;
  if (v.metacyclic_known) {
    row.metacyclic = v.metacyclic ? "yes" : "no";
    row.metacyclic_b = v.metacyclic;
  } else {
    row.metacyclic = "?(budget)";
  }
  if (v.zgroup_known) {
    row.zgroup = v.zgroup ? "yes" : "no";
    row.zgroup_b = v.zgroup;
  } else {
    row.zgroup = "?(budget)";
  }
  if (v.mg) {
    row.mg = v.mg->to_string();
    row.mg_trivial_b = v.mg->is_trivial();
  } else {
    row.mg = "?(budget)";
  }
  if (v.mh) {
    row.mh = v.mh->to_string();
    row.mh_trivial_b = v.mh->is_trivial();
  } else {
    row.mh = "?(budget)";
  }
  if (v.cond0_known) {
    row.cond0 = v.cond0_holds ? "yes" : "no";
    row.cond0_b = v.cond0_holds;
  } else {
    row.cond0 = "?(budget)";
  }
  row.verdict = std::string(Verdict::status_name(v.h2_status)) + ":" +
                Verdict::conclusion_name(v.conclusion);
  if (v.sha_omega) row.verdict += ";sha=" + v.sha_omega->to_string();
  if (v.tamagawa) row.tamagawa = v.tamagawa->to_string();
  row.inconclusive = v.conclusion == Verdict::Conclusion::INCONCLUSIVE;
  if (opt.timings) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    row.timing = std::to_string(ms);
  }
  return row;
}

inline ReportRow analyze_spec(const GroupSpec& spec, const RunOptions& opt_in) {
  RunOptions opt = opt_in;
  opt.verdict.family_mg = expected_multiplier(spec);
  PermGroup g = build_group(spec, opt.verdict.caps);
  if (!g.is_transitive())
    throw Error("the built group is not transitive; give a stabilizer with |H=...");
  return analyze_group(spec.to_string(), g, opt);
}

// paper-table filters
struct TableFilter {
  std::optional<bool> metacyclic;
  std::optional<bool> mg_trivial;
  std::optional<bool> mh_trivial;
  std::optional<bool> cond0;

  // presets: 1 = metacyclic with M(G) = 0; 2 = metacyclic, M(G) != 0,
  // M(H) = 0; 3 and 4 the same splits for non-metacyclic groups; all with cond0
  static TableFilter preset(int table) {
    TableFilter f;
    switch (table) {
      case 1: f.metacyclic = true;  f.mg_trivial = true;  f.cond0 = true; break;
      case 2: f.metacyclic = true;  f.mg_trivial = false; f.mh_trivial = true; f.cond0 = true; break;
      case 3: f.metacyclic = false; f.mg_trivial = true;  f.cond0 = true; break;
      case 4: f.metacyclic = false; f.mg_trivial = false; f.mh_trivial = true; f.cond0 = true; break;
      default: throw Error("table preset must be 1..4");
    }
    return f;
  }

  bool admits(const ReportRow& r) const {
    auto ok = [](const std::optional<bool>& want, const std::optional<bool>& have) {
      if (!want) return true;
      return have.has_value() && *have == *want;
    };
    return ok(metacyclic, r.metacyclic_b) && ok(mg_trivial, r.mg_trivial_b) &&
           ok(mh_trivial, r.mh_trivial_b) && ok(cond0, r.cond0_b);
  }
};

// rows for every catalog record in [deg_lo, deg_hi] passing the filter, in
// (degree, index) order regardless of worker completion order
inline std::vector<ReportRow> run_table(const std::vector<CatalogRecord>& catalog,
                                        int deg_lo, int deg_hi, const TableFilter& filter,
                                        const RunOptions& opt) {
  std::vector<const CatalogRecord*> selected;
  for (const auto& r : catalog)
    if (r.degree >= deg_lo && r.degree <= deg_hi) selected.push_back(&r);
  std::vector<ReportRow> rows(selected.size());
  std::vector<char> keep(selected.size(), 0);
  std::atomic<size_t> next{0};
  int jobs = opt.jobs > 0 ? opt.jobs
                          : static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= selected.size()) return;
      const CatalogRecord& rec = *selected[i];
      ReportRow row;
      try {
        PermGroup g = PermGroup::from_cycle_strings(rec.generators, rec.degree);
        row = analyze_group(rec.label(), g, opt);
      } catch (const std::exception& e) {
        row.label = rec.label();
        row.verdict = std::string("error:") + e.what();
        row.inconclusive = true;
      }
      keep[i] = filter.admits(row) ? 1 : 0;
      rows[i] = std::move(row);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  std::vector<ReportRow> out;
  for (size_t i = 0; i < rows.size(); ++i)
    if (keep[i]) out.push_back(std::move(rows[i]));
  return out;
}

inline std::string render_rows(const std::vector<ReportRow>& rows, const std::string& format) {
  if (format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) arr.push_back(r.json());
    return arr.dump(2) + "\n";
  }
  std::string out = ReportRow::tsv_header() + "\n";
  for (const auto& r : rows) out += r.tsv() + "\n";
  return out;
}

}  // namespace hnp
