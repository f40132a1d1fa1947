#include "coxkit/report.hpp"

#include <sstream>

#include "json.hpp"

namespace coxkit {

using Json = nlohmann::ordered_json;

namespace {

Json profile_json(const EulerianProfile& p) {
  Json a = Json::array();
  for (const auto& s : to_strings(p)) a.push_back(s);
  return a;
}

}  // namespace

std::string to_json(const TableReport& rep) {
  Json j;
  j["table"] = to_string(rep.id);
  j["mode"] = to_string(rep.mode);
  if (rep.id == TableId::ExceptionalEulerian) {
    Json rows = Json::array();
    for (const auto& row : rep.eulerian) {
      Json r;
      r["family"] = row.name;
      r["profile"] = profile_json(row.profile);
      r["invariants_ok"] = row.invariants_ok;
      if (row.counting_ok) r["counting_ok"] = *row.counting_ok;
      rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
  } else {
    Json cells = Json::array();
    for (const auto& c : rep.cells) {
      Json x;
      x["family"] = c.family;
      x["m"] = c.m;
      if (c.mu) x["mu"] = c.mu;
      x["r"] = c.r;
      x["n"] = c.n;
      x["k"] = c.k;
      x["d"] = c.d;
      x["d_status"] = to_string(c.status);
      if (c.published) {
        x["published"] = {{"n", c.published->n}, {"k", c.published->k}, {"d", c.published->d},
                          {"italic", c.published->italic}};
      }
      if (rep.mode == TableMode::Exact) {
        x["built"] = c.built;
        if (c.rank) x["rank"] = *c.rank;
        x["method"] = c.method;
        x["evaluations"] = c.evaluations;
        if (c.best_known) x["best_known"] = *c.best_known;
      }
      cells.push_back(std::move(x));
    }
    j["cells"] = std::move(cells);
  }
  Json diffs = Json::array();
  for (const auto& d : rep.diffs) {
    Json x{{"cell", d.cell}, {"field", d.field}, {"published", d.published}, {"computed", d.computed},
           {"documented", d.documented}};
    if (!d.note.empty()) x["note"] = d.note;
    diffs.push_back(std::move(x));
  }
  j["diffs"] = std::move(diffs);
  j["failures"] = rep.failures;
  j["ok"] = rep.ok();
  return j.dump(2) + "\n";
}

std::string to_json(const SweepReport& rep) {
  Json j;
  j["max_length"] = rep.max_length;
  j["systems"] = rep.systems;
  Json entries = Json::array();
  for (const auto& e : rep.entries) {
    Json x;
    x["family"] = e.system;
    x["m"] = e.m;
    x["r"] = e.r;
    x["n"] = e.n;
    x["k"] = e.k;
    x["d"] = e.distance.exact ? Json(*e.distance.exact) : Json(nullptr);
    x["d_status"] = to_string(e.distance.status);
    x["conjectured"] = e.conjectured;
    x["lower_bound"] = e.lower_bound;
    x["best_known"] = e.distance.best_known;
    x["method"] = e.distance.method;
    x["evaluations"] = e.distance.evaluations;
    x["pass"] = e.pass;
    entries.push_back(std::move(x));
  }
  j["entries"] = std::move(entries);
  j["failures"] = rep.failures();
  return j.dump(2) + "\n";
}

std::string to_json(const StructureReport& rep) {
  Json j;
  j["system"] = rep.system;
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    Json x{{"name", c.name}, {"ok", c.ok}, {"cases", c.cases}};
    if (!c.ok) x["counterexample"] = c.counterexample;
    checks.push_back(std::move(x));
  }
  j["checks"] = std::move(checks);
  j["ok"] = rep.ok();
  return j.dump(2) + "\n";
}

std::string to_markdown(const TableReport& rep) {
  std::ostringstream os;
  os << "## " << to_string(rep.id) << " (" << to_string(rep.mode) << ")\n\n";
  if (rep.id == TableId::ExceptionalEulerian) {
    os << "| W | Eulerian numbers | invariants | counting |\n|---|---|---|---|\n";
    for (const auto& row : rep.eulerian) {
      os << "| " << row.name << " | ";
      const auto s = to_strings(row.profile);
      for (std::size_t i = 0; i < s.size(); ++i) os << (i ? " " : "") << s[i];
      os << " | " << (row.invariants_ok ? "ok" : "FAIL") << " | "
         << (row.counting_ok ? (*row.counting_ok ? "ok" : "FAIL") : "-") << " |\n";
    }
  } else {
    os << "| family | r | [n, k, d] | status | published | method |\n|---|---|---|---|---|---|\n";
    for (const auto& c : rep.cells) {
      os << "| " << c.family << " | " << c.r << " | [" << c.n << ", " << c.k << ", " << c.d << "] | "
         << to_string(c.status) << " | ";
      if (c.published) {
        os << "[" << c.published->n << ", " << c.published->k << ", " << c.published->d << (c.published->italic ? "*" : "")
           << "]";
      }
      os << " | " << (c.method.empty() ? "-" : c.method) << " |\n";
    }
  }
  if (!rep.diffs.empty()) {
    os << "\nDiffs against the published table:\n\n";
    for (const auto& d : rep.diffs) {
      os << "- " << d.cell << " " << d.field << ": published " << d.published << ", computed " << d.computed
         << (d.documented ? " (documented erratum)" : " (UNEXPECTED)") << "\n";
    }
  }
  for (const auto& f : rep.failures) os << "\nFAILURE: " << f << "\n";
  return os.str();
}

std::string to_markdown(const SweepReport& rep) {
  std::ostringstream os;
  os << "## Distance sweep, |W| <= " << rep.max_length << " (" << rep.systems << " systems, " << rep.entries.size()
     << " codes)\n\n| system | r | [n, k] | d | conjectured | method | pass |\n|---|---|---|---|---|---|---|\n";
  for (const auto& e : rep.entries) {
    os << "| " << e.system << " | " << e.r << " | [" << e.n << ", " << e.k << "] | "
       << (e.distance.exact ? std::to_string(*e.distance.exact) : "?") << " | " << e.conjectured << " | "
       << e.distance.method << " | " << (e.pass ? "yes" : "NO") << " |\n";
  }
  os << "\nfailures: " << rep.failures() << "\n";
  return os.str();
}

std::string to_markdown(const StructureReport& rep) {
  std::ostringstream os;
  os << "## Structural checks for " << rep.system << "\n\n| check | cases | result |\n|---|---|---|\n";
  for (const auto& c : rep.checks) {
    os << "| " << c.name << " | " << c.cases << " | " << (c.ok ? "ok" : "FAIL: " + c.counterexample) << " |\n";
  }
  return os.str();
}

}  // namespace coxkit
