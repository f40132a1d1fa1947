// coxkit: command-line front end for Coxeter groups, codes and quantum codes.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "coxkit/codes.hpp"
#include "coxkit/coxeter_system.hpp"
#include "coxkit/distance.hpp"
#include "coxkit/error.hpp"
#include "coxkit/eulerian.hpp"
#include "coxkit/gf2.hpp"
#include "coxkit/group_table.hpp"
#include "coxkit/quantum.hpp"
#include "coxkit/report.hpp"
#include "coxkit/structure.hpp"
#include "coxkit/sweep.hpp"
#include "coxkit/tables.hpp"
#include "json.hpp"

using namespace coxkit;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitError = 2;

struct SystemArgs {
  std::string family;
  int m = 0;
  int n = 0;
  int mu = 1;
  std::string matrix_file;
  std::string product;
};

void add_system_flags(CLI::App* app, SystemArgs& a) {
  app->add_option("--family", a.family, "A, B, D, E, F, H, I2 or Z2");
  app->add_option("--m", a.m, "rank parameter of the family");
  app->add_option("--n", a.n, "dihedral label for I2(n)");
  app->add_option("--mu", a.mu, "dihedral power for I2(n)^mu");
  app->add_option("--matrix", a.matrix_file, "file with a Coxeter matrix (JSON or whitespace-separated rows)");
  app->add_option("--product", a.product, "product descriptor, e.g. A2xB3 or I2(3)^2");
}

CoxeterSystem read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadParameter("cannot open matrix file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '[' || text[first] == '{')) {
    return system_from_json(text[first] == '[' ? R"j({"matrix":)j" + text + "}" : text);
  }
  std::vector<int> values;
  std::istringstream is(text);
  int v = 0;
  while (is >> v) values.push_back(v);
  if (!is.eof()) throw MalformedMatrix("matrix file contains a non-integer token");
  std::size_t rank = 0;
  while (rank * rank < values.size()) ++rank;
  if (rank * rank != values.size() || rank == 0) throw MalformedMatrix("matrix file does not hold a square matrix");
  CoxeterMatrix m(rank, std::vector<int>(rank));
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t j = 0; j < rank; ++j) m[i][j] = values[i * rank + j];
  }
  return CoxeterSystem(m);
}

CoxeterSystem resolve_system(const SystemArgs& a) {
  const int given = !a.family.empty() + !a.matrix_file.empty() + !a.product.empty();
  if (given != 1) throw BadParameter("give exactly one of --family, --matrix, --product");
  if (!a.matrix_file.empty()) return read_matrix_file(a.matrix_file);
  if (!a.product.empty()) return parse_system(a.product);
  const std::string& f = a.family;
  if (f == "A") return family_a(a.m);
  if (f == "B") return family_b(a.m);
  if (f == "D") return family_d(a.m);
  if (f == "E") return family_e(a.m);
  if (f == "F") return family_f4();
  if (f == "H") return family_h(a.m);
  if (f == "I2") return family_i2(a.n, a.mu);
  if (f == "Z2") return family_z2(a.m);
  throw UnknownName("unknown family '" + f + "'");
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw BadParameter("cannot write '" + path + "'");
  out << text;
  if (!out) throw BadParameter("error writing '" + path + "'");
}

Json profile_json(const EulerianProfile& p) {
  Json a = Json::array();
  for (const auto& s : to_strings(p)) a.push_back(s);
  return a;
}

DistanceOptions distance_options(std::uint64_t budget, int jobs) {
  DistanceOptions o;
  if (budget) o.budget = budget;
  o.jobs = std::max(1, jobs);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coxkit: Coxeter groups, Coxeter codes and quantum Coxeter codes"};
  app.require_subcommand(1);
  SystemArgs sys_args;
  int r = 0;
  int q = 0;
  std::string mode;
  std::uint64_t sweep = 0;
  int jobs = 1;
  std::string out;
  std::uint64_t budget = 0;
  int zk = 0;
  int coset_rank = -1;
  bool json = false;
  std::string table_id;
  std::string what;

  auto* group = app.add_subcommand("group", "classify and enumerate a Coxeter group");
  add_system_flags(group, sys_args);
  group->add_flag("--json", json, "print JSON");

  auto* euler = app.add_subcommand("euler", "W-Eulerian numbers of a system");
  add_system_flags(euler, sys_args);
  euler->add_option("--mode", mode, "formula (default) or counting");
  euler->add_flag("--json", json, "print JSON");

  auto* code = app.add_subcommand("code", "parameters of the Coxeter code C(r)");
  add_system_flags(code, sys_args);
  code->add_option("--r", r, "order")->required();
  code->add_option("--mode", mode, "formula (default) or exact");
  code->add_option("--budget", budget, "distance search budget (evaluations)");
  code->add_option("--jobs", jobs, "worker threads");
  code->add_flag("--json", json, "print JSON");

  auto* quantum = app.add_subcommand("quantum", "quantum Coxeter code Q(q, r)");
  add_system_flags(quantum, sys_args);
  quantum->add_option("--q", q, "X order")->required();
  quantum->add_option("--r", r, "Z order")->required();
  quantum->add_option("--zk", zk, "level k of the transversal Z(k) test");
  quantum->add_option("--coset-rank", coset_rank, "rank of the standard cosets for --zk");
  quantum->add_flag("--json", json, "print JSON");

  auto* tables = app.add_subcommand("tables", "reproduce a parameter table");
  tables->add_option("id", table_id, "Am | I23 | I24 | exceptional-eulerian")->required();
  tables->add_option("--mode", mode, "formula (default) or exact");
  tables->add_option("--budget", budget, "distance search budget (evaluations)");
  tables->add_option("--jobs", jobs, "worker threads");
  tables->add_option("--out", out, "write the JSON report here");
  tables->add_flag("--json", json, "print JSON instead of markdown");

  auto* verify = app.add_subcommand("verify", "structural checks or the distance sweep");
  add_system_flags(verify, sys_args);
  verify->add_option("--sweep", sweep, "sweep all finite systems with |W| up to this length");
  verify->add_option("--budget", budget, "distance search budget (evaluations)");
  verify->add_option("--jobs", jobs, "worker threads");
  verify->add_option("--out", out, "write the JSON report here");
  verify->add_flag("--json", json, "print JSON instead of markdown");

  auto* exporter = app.add_subcommand("export", "write generator matrices, Cayley graphs or stabilizers");
  exporter->add_option("what", what, "genmat | cayley | stabilizers")->required();
  add_system_flags(exporter, sys_args);
  exporter->add_option("--r", r, "order");
  exporter->add_option("--q", q, "X order (stabilizers)");
  exporter->add_option("--out", out, "output path (stdout if absent)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (group->parsed()) {
      const CoxeterSystem sys = resolve_system(sys_args);
      Json j{{"family", sys.name()}, {"classification", sys.classification()}, {"m", sys.rank()},
             {"order", sys.order().str()}};
      std::map<int, std::uint64_t> lengths;
      int max_length = -1;
      if (sys.order() <= default_cap()) {
        const GroupTable t = enumerate_group(sys);
        for (Elem w = 0; w < t.size(); ++w) ++lengths[t.length(w)];
        max_length = t.max_length();
        Json dist = Json::array();
        for (const auto& [len, count] : lengths) dist.push_back(count);
        j["longest_element_length"] = max_length;
        j["length_distribution"] = dist;
      }
      if (json) {
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << sys.name() << ": " << sys.classification() << ", rank " << sys.rank() << ", |W| = " << sys.order()
                  << "\n";
        if (max_length >= 0) {
          std::cout << "longest element length " << max_length << "; lengths:";
          for (const auto& [len, count] : lengths) std::cout << " " << count;
          std::cout << "\n";
        } else {
          std::cout << "(not enumerated: |W| exceeds the cap " << default_cap() << ")\n";
        }
      }
      return 0;
    }

    if (euler->parsed()) {
      const CoxeterSystem sys = resolve_system(sys_args);
      EulerianProfile p = profile_of(sys);
      if (mode == "counting") {
        const EulerianProfile counted = profile_by_counting(enumerate_group(sys));
        if (!(counted == p)) {
          std::cerr << "descent counting disagrees with the formula\n";
          return kExitFailure;
        }
      } else if (!mode.empty() && mode != "formula") {
        throw BadParameter("euler --mode must be formula or counting");
      }
      if (json) {
        Json j{{"family", sys.name()}, {"m", sys.rank()}, {"profile", profile_json(p)}, {"total", p.total().str()}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << sys.name() << ":";
        for (const auto& s : to_strings(p)) std::cout << " " << s;
        std::cout << "\n";
      }
      return 0;
    }

    if (code->parsed()) {
      const CoxeterSystem sys = resolve_system(sys_args);
      const int m = sys.rank();
      if (r < 0 || r > m) throw BadParameter("--r must lie in [0, m]");
      const EulerianProfile p = profile_of(sys);
      Json j{{"family", sys.name()}, {"m", m}, {"r", r}, {"n", p.total().str()}, {"k", p.partial_sum(r).str()}};
      const BigInt conjectured = conjectured_distance(sys, r);
      std::string status = r >= m / 2 ? to_string(DistanceStatus::ProvenByCorollary) : to_string(DistanceStatus::ConjectureOnly);
      std::string d = conjectured.str();
      if (mode == "exact") {
        const GroupTable t = enumerate_group(sys);
        const LinearCode c = build_code(t, sys, r);
        const DistanceReport rep = exact_min_distance(c, distance_options(budget, jobs));
        j["k"] = std::to_string(c.dimension);
        if (rep.exact) d = std::to_string(*rep.exact);
        status = to_string(rep.status);
        j["method"] = rep.method;
        j["best_known"] = rep.best_known;
        j["evaluations"] = rep.evaluations;
        if (rep.exact && *rep.exact != to_u64(conjectured)) {
          std::cerr << "exact distance " << *rep.exact << " differs from min |<J>| = " << conjectured << "\n";
          j["d"] = d;
          j["d_status"] = status;
          std::cout << j.dump(2) << "\n";
          return kExitFailure;
        }
      } else if (!mode.empty() && mode != "formula") {
        throw BadParameter("code --mode must be formula or exact");
      }
      j["d"] = d;
      j["d_status"] = status;
      if (json) {
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << sys.name() << " C(" << r << "): [" << j["n"].get<std::string>() << ", " << j["k"].get<std::string>()
                  << ", " << d << "] (" << status << ")\n";
      }
      return 0;
    }

    if (quantum->parsed()) {
      const CoxeterSystem sys = resolve_system(sys_args);
      const int m = sys.rank();
      const EulerianProfile p = profile_of(sys);
      Json j{{"family", sys.name()}, {"q", q}, {"r", r}, {"n", p.total().str()}};
      if (q == r) {
        if (q < -1 || r > m) throw BadParameter("orders must satisfy -1 <= q <= r <= m");
        j["k"] = "0";
        j["d"] = nullptr;
        std::cerr << "warning: q = r gives k = 0; the distance is undefined\n";
      } else {
        const CssParams cp = css_params(p, q, r);
        j["k"] = cp.k.str();
        j["d"] = cp.d.str();
      }
      if (zk > 0) {
        if (coset_rank < 0 || coset_rank > m) throw BadParameter("--zk needs --coset-rank in [0, m]");
        const ZkVerdict predicted = zk_predict(q, r, zk, coset_rank);
        j["zk"] = zk;
        j["coset_rank"] = coset_rank;
        j["predicted"] = to_string(predicted);
        const GroupTable t = enumerate_group(sys);
        const CssCode css = build_css(t, sys, q, r);
        // Codes are left ideals, so one coset per J decides every translate.
        Json sims = Json::array();
        bool agree = true;
        for (GenSet J : subsets_of_size(m, coset_rank)) {
          const ZkSimulation s = zk_simulate(css, standard_coset(t, 0, J), zk);
          std::string gens;
          for (int i = 0; i < m; ++i) {
            if (has_gen(J, i)) gens += (gens.empty() ? "s" : " s") + std::to_string(i + 1);
          }
          sims.push_back({{"J", gens}, {"simulated", to_string(s.verdict)}, {"exhaustive", s.exhaustive},
                          {"evidence", s.evidence}});
          agree &= s.verdict == predicted;
        }
        j["simulations"] = sims;
        j["agree"] = agree;
        std::cout << j.dump(2) << "\n";
        return agree ? 0 : kExitFailure;
      }
      if (json) {
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << sys.name() << " Q(" << q << ", " << r << "): [[" << j["n"].get<std::string>() << ", "
                  << j["k"].get<std::string>() << ", " << (j["d"].is_null() ? "-" : j["d"].get<std::string>()) << "]]\n";
      }
      return 0;
    }

    if (tables->parsed()) {
      TableOptions opt;
      opt.distance = distance_options(budget, jobs);
      const TableReport rep =
          reproduce_table(parse_table_id(table_id), mode.empty() ? TableMode::Formula : parse_table_mode(mode), opt);
      if (!out.empty()) emit(to_json(rep), out);
      std::cout << (json ? to_json(rep) : to_markdown(rep));
      return rep.ok() ? 0 : kExitFailure;
    }

    if (verify->parsed()) {
      const DistanceOptions opt = distance_options(budget, jobs);
      if (sweep > 0 || (sys_args.family.empty() && sys_args.matrix_file.empty() && sys_args.product.empty())) {
        const SweepReport rep = conjecture_sweep(sweep, opt);
        if (!out.empty()) emit(to_json(rep), out);
        std::cout << (json ? to_json(rep) : to_markdown(rep));
        return rep.failures() == 0 ? 0 : kExitFailure;
      }
      const CoxeterSystem sys = resolve_system(sys_args);
      const GroupTable t = enumerate_group(sys);
      StructureReport rep = structural_verify(t, sys);
      CheckResult restriction{"restriction", true, 0, {}};
      for (int rr = 0; rr <= sys.rank() && restriction.ok; ++rr) {
        restriction.counterexample = check_restriction(t, sys, rr);
        restriction.ok = restriction.counterexample.empty();
        ++restriction.cases;
      }
      rep.checks.push_back(restriction);
      if (!out.empty()) emit(to_json(rep), out);
      std::cout << (json ? to_json(rep) : to_markdown(rep));
      return rep.ok() ? 0 : kExitFailure;
    }

    if (exporter->parsed()) {
      const CoxeterSystem sys = resolve_system(sys_args);
      const GroupTable t = enumerate_group(sys);
      if (what == "genmat") {
        std::ostringstream os;
        write_generator_matrix(os, rank_and_rref(build_code(t, sys, r).generators).rref);
        emit(os.str(), out);
      } else if (what == "cayley") {
        emit(export_cayley_dot(t, sys), out);
      } else if (what == "stabilizers") {
        emit(export_stabilizers(stabilizer_generators(t, q, r)), out);
      } else {
        throw BadParameter("export target must be genmat, cayley or stabilizers");
      }
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const DimensionMismatch& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return kExitFailure;
  }
  return 0;
}
