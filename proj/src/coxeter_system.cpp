#include "coxkit/coxeter_system.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <stdexcept>
#include <sstream>

#include "json.hpp"

#include "coxkit/error.hpp"

namespace coxkit {

BigInt component_order(ComponentKind kind, int rank, int label) {
  switch (kind) {
    case ComponentKind::A:
      return factorial(rank + 1);
    case ComponentKind::B:
      return power(2, rank) * factorial(rank);
    case ComponentKind::D:
      return power(2, rank - 1) * factorial(rank);
    case ComponentKind::I2:
      return 2 * label;
    case ComponentKind::H:
      return rank == 3 ? BigInt(120) : BigInt(14400);
    case ComponentKind::F:
      return 1152;
    case ComponentKind::E:
      if (rank == 6) return 51840;
      if (rank == 7) return 2903040;
      return 696729600;
  }
  return 0;
}

std::string Component::name() const {
  switch (kind) {
    case ComponentKind::A:
      return "A" + std::to_string(rank);
    case ComponentKind::B:
      return "B" + std::to_string(rank);
    case ComponentKind::D:
      return "D" + std::to_string(rank);
    case ComponentKind::E:
      return "E" + std::to_string(rank);
    case ComponentKind::F:
      return "F4";
    case ComponentKind::H:
      return "H" + std::to_string(rank);
    case ComponentKind::I2:
      return "I2(" + std::to_string(label) + ")";
  }
  return "?";
}

BigInt Component::order() const { return component_order(kind, rank, label); }

namespace {

void validate(const CoxeterMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) throw MalformedMatrix("defining matrix is empty");
  if (n > static_cast<std::size_t>(kMaxRank)) {
    throw MalformedMatrix("rank " + std::to_string(n) + " exceeds the supported maximum");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw MalformedMatrix("defining matrix is not square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i][i] != 1) {
      throw MalformedMatrix("diagonal entry M(" + std::to_string(i + 1) + "," +
                            std::to_string(i + 1) + ") must be 1");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (m[i][j] != m[j][i]) throw MalformedMatrix("defining matrix is not symmetric");
      if (m[i][j] < 2) {
        throw MalformedMatrix("off-diagonal entry M(" + std::to_string(i + 1) + "," +
                              std::to_string(j + 1) + ") must be at least 2");
      }
    }
  }
}

[[noreturn]] void not_finite(const std::vector<int>& nodes, const std::string& why) {
  std::ostringstream os;
  os << "component {";
  for (std::size_t i = 0; i < nodes.size(); ++i) os << (i ? "," : "") << "s" << nodes[i] + 1;
  os << "} is not a finite Coxeter diagram: " << why;
  throw NotFinite(os.str());
}

// Walks a path (all degrees <= 2) starting at `start`.
std::vector<int> walk_path(const CoxeterMatrix& m, const std::vector<int>& nodes, int start) {
  std::vector<int> path{start};
  int prev = -1;
  int cur = start;
  while (true) {
    int next = -1;
    for (int v : nodes) {
      if (v != cur && v != prev && m[cur][v] >= 3) {
        next = v;
        break;
      }
    }
    if (next < 0) break;
    path.push_back(next);
    prev = cur;
    cur = next;
  }
  return path;
}

Component classify_connected(const CoxeterMatrix& m, std::vector<int> nodes) {
  std::sort(nodes.begin(), nodes.end());
  const int k = static_cast<int>(nodes.size());
  Component c;
  c.rank = k;
  if (k == 1) {
    c.kind = ComponentKind::A;
    c.generators = nodes;
    return c;
  }
  if (k == 2) {
    const int label = m[nodes[0]][nodes[1]];
    c.generators = nodes;
    if (label == 3) {
      c.kind = ComponentKind::A;
    } else if (label == 4) {
      c.kind = ComponentKind::B;
    } else {
      c.kind = ComponentKind::I2;
      c.label = label;
    }
    return c;
  }

  int edges = 0;
  std::vector<int> degree(k, 0);
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      const int label = m[nodes[a]][nodes[b]];
      if (label >= 3) {
        ++edges;
        ++degree[a];
        ++degree[b];
        if (label > 5) not_finite(nodes, "edge label " + std::to_string(label) + " in rank >= 3");
      }
    }
  }
  if (edges != k - 1) not_finite(nodes, "diagram contains a cycle");
  const int max_degree = *std::max_element(degree.begin(), degree.end());

  if (max_degree <= 2) {
    // Path. Start at the endpoint with the smaller index, then reorient as needed.
    int start = -1;
    for (int a = 0; a < k && start < 0; ++a) {
      if (degree[a] == 1) start = nodes[a];
    }
    std::vector<int> path = walk_path(m, nodes, start);
    std::vector<int> labels;
    for (int i = 0; i + 1 < k; ++i) labels.push_back(m[path[i]][path[i + 1]]);
    auto count = [&](int v) { return std::count(labels.begin(), labels.end(), v); };
    const auto threes = count(3);
    if (threes == k - 1) {
      c.kind = ComponentKind::A;
      c.generators = path;
      return c;
    }
    if (threes == k - 2) {
      const bool at_front = labels.front() != 3;
      const bool at_back = labels.back() != 3;
      const int special = at_front ? labels.front() : at_back ? labels.back() : 0;
      if (at_back && !at_front) {
        std::reverse(path.begin(), path.end());
        std::reverse(labels.begin(), labels.end());
      }
      if (special == 4) {
        c.kind = ComponentKind::B;
        c.generators = path;
        return c;
      }
      if (special == 5 && (k == 3 || k == 4)) {
        c.kind = ComponentKind::H;
        c.generators = path;
        return c;
      }
      if (k == 4 && labels[1] == 4) {
        c.kind = ComponentKind::F;
        c.generators = nodes;
        return c;
      }
    }
    not_finite(nodes, "path labels do not match A, B, F4, H3 or H4");
  }

  // One branch node of degree 3, all labels 3.
  if (max_degree > 3) not_finite(nodes, "node of degree > 3");
  if (std::count(degree.begin(), degree.end(), 3) != 1) not_finite(nodes, "more than one branch node");
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      if (m[nodes[a]][nodes[b]] >= 4) not_finite(nodes, "branched diagram with label > 3");
    }
  }
  const int center = nodes[std::find(degree.begin(), degree.end(), 3) - degree.begin()];
  std::vector<std::vector<int>> arms;
  for (int v : nodes) {
    if (v == center || m[center][v] < 3) continue;
    std::vector<int> arm{v};
    int prev = center;
    int cur = v;
    while (true) {
      int next = -1;
      for (int u : nodes) {
        if (u != cur && u != prev && m[cur][u] >= 3) next = u;
      }
      if (next < 0) break;
      arm.push_back(next);
      prev = cur;
      cur = next;
    }
    arms.push_back(arm);
  }
  std::stable_sort(arms.begin(), arms.end(),
                   [](const auto& x, const auto& y) { return x.size() < y.size(); });
  const std::size_t a0 = arms[0].size(), a1 = arms[1].size(), a2 = arms[2].size();
  if (a0 == 1 && a1 == 1) {
    c.kind = ComponentKind::D;
    c.generators = {arms[0][0], arms[1][0], center};
    c.generators.insert(c.generators.end(), arms[2].begin(), arms[2].end());
    return c;
  }
  if (a0 == 1 && a1 == 2 && a2 >= 2 && a2 <= 4) {
    c.kind = ComponentKind::E;
    c.generators = nodes;
    return c;
  }
  not_finite(nodes, "branched diagram is not D or E");
}

std::string derived_name(const std::vector<Component>& comps) {
  // Collapse runs of identical consecutive factors into powers.
  std::string out;
  std::size_t i = 0;
  while (i < comps.size()) {
    std::size_t j = i;
    while (j < comps.size() && comps[j].name() == comps[i].name()) ++j;
    if (!out.empty()) out += "x";
    out += comps[i].name();
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace

std::vector<Component> classify(const CoxeterMatrix& m, GenSet subset) {
  const int n = static_cast<int>(m.size());
  std::vector<Component> out;
  GenSet seen = 0;
  for (int start = 0; start < n; ++start) {
    if (!has_gen(subset, start) || has_gen(seen, start)) continue;
    std::vector<int> nodes;
    std::vector<int> stack{start};
    seen |= GenSet{1} << start;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      nodes.push_back(v);
      for (int u = 0; u < n; ++u) {
        if (has_gen(subset, u) && !has_gen(seen, u) && u != v && m[v][u] >= 3) {
          seen |= GenSet{1} << u;
          stack.push_back(u);
        }
      }
    }
    out.push_back(classify_connected(m, std::move(nodes)));
  }
  return out;
}

CoxeterSystem::CoxeterSystem(CoxeterMatrix matrix, std::string name)
    : matrix_(std::move(matrix)), name_(std::move(name)) {
  validate(matrix_);
  components_ = classify(matrix_, full_set(rank()));
  order_ = 1;
  for (const auto& c : components_) order_ *= c.order();
  if (name_.empty()) name_ = classification();
}

std::string CoxeterSystem::classification() const { return derived_name(components_); }

BigInt subgroup_order(const CoxeterSystem& system, GenSet subset) {
  BigInt order = 1;
  for (const auto& c : classify(system.matrix(), subset & full_set(system.rank()))) order *= c.order();
  return order;
}

namespace {

CoxeterMatrix identity_matrix(int m) {
  CoxeterMatrix mat(m, std::vector<int>(m, 2));
  for (int i = 0; i < m; ++i) mat[i][i] = 1;
  return mat;
}

void set_edge(CoxeterMatrix& mat, int i, int j, int label) {
  mat[i][j] = label;
  mat[j][i] = label;
}

void require(bool ok, const std::string& why) {
  if (!ok) throw BadParameter(why);
}

}  // namespace

CoxeterSystem family_a(int m) {
  require(m >= 1, "A_m requires m >= 1");
  auto mat = identity_matrix(m);
  for (int i = 0; i + 1 < m; ++i) set_edge(mat, i, i + 1, 3);
  return CoxeterSystem(std::move(mat), "A" + std::to_string(m));
}

CoxeterSystem family_b(int m) {
  require(m >= 2, "B_m requires m >= 2");
  auto mat = identity_matrix(m);
  for (int i = 0; i + 1 < m; ++i) set_edge(mat, i, i + 1, i == 0 ? 4 : 3);
  return CoxeterSystem(std::move(mat), "B" + std::to_string(m));
}

CoxeterSystem family_d(int m) {
  require(m >= 2, "D_m requires m >= 2");
  auto mat = identity_matrix(m);
  if (m >= 3) {
    set_edge(mat, 0, 2, 3);
    set_edge(mat, 1, 2, 3);
  }
  for (int i = 2; i + 1 < m; ++i) set_edge(mat, i, i + 1, 3);
  CoxeterSystem sys(std::move(mat), "D" + std::to_string(m));
  if (m < 4) sys.mark_alias();
  return sys;
}

CoxeterSystem family_e(int m) {
  require(m >= 6 && m <= 8, "E_m requires m in {6,7,8}");
  auto mat = identity_matrix(m);
  set_edge(mat, 0, 2, 3);
  set_edge(mat, 1, 3, 3);
  for (int i = 2; i + 1 < m; ++i) set_edge(mat, i, i + 1, 3);
  return CoxeterSystem(std::move(mat), "E" + std::to_string(m));
}

CoxeterSystem family_f4() {
  auto mat = identity_matrix(4);
  set_edge(mat, 0, 1, 3);
  set_edge(mat, 1, 2, 4);
  set_edge(mat, 2, 3, 3);
  return CoxeterSystem(std::move(mat), "F4");
}

CoxeterSystem family_h(int m) {
  require(m == 3 || m == 4, "H_m requires m in {3,4}");
  auto mat = identity_matrix(m);
  for (int i = 0; i + 1 < m; ++i) set_edge(mat, i, i + 1, i == 0 ? 5 : 3);
  return CoxeterSystem(std::move(mat), "H" + std::to_string(m));
}

CoxeterSystem family_i2(int n, int mu) {
  require(n >= 2, "I2(n) requires n >= 2");
  require(mu >= 1, "I2(n)^mu requires mu >= 1");
  require(2 * mu <= kMaxRank, "I2(n)^mu rank too large");
  auto mat = identity_matrix(2 * mu);
  for (int p = 0; p < mu; ++p) set_edge(mat, 2 * p, 2 * p + 1, n);
  std::string name = "I2(" + std::to_string(n) + ")";
  if (mu > 1) name += "^" + std::to_string(mu);
  return CoxeterSystem(std::move(mat), name);
}

CoxeterSystem family_z2(int m) {
  require(m >= 1, "Z2^m requires m >= 1");
  return CoxeterSystem(identity_matrix(m), m == 1 ? "Z2" : "Z2^" + std::to_string(m));
}

CoxeterSystem direct_product(const std::vector<CoxeterSystem>& factors) {
  require(!factors.empty(), "empty product");
  int total = 0;
  for (const auto& f : factors) total += f.rank();
  require(total <= kMaxRank, "product rank too large");
  auto mat = identity_matrix(total);
  int offset = 0;
  std::string name;
  for (const auto& f : factors) {
    for (int i = 0; i < f.rank(); ++i) {
      for (int j = 0; j < f.rank(); ++j) mat[offset + i][offset + j] = f.entry(i, j);
    }
    offset += f.rank();
    if (!name.empty()) name += "x";
    name += f.name();
  }
  if (factors.size() == 1) return factors.front();
  return CoxeterSystem(std::move(mat), name);
}

namespace {

std::string strip(std::string_view s) {
  std::string out;
  for (char ch : s) {
    if (!std::isspace(static_cast<unsigned char>(ch))) out += ch;
  }
  return out;
}

int parse_int(const std::string& s, std::size_t& pos) {
  const std::size_t begin = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (begin == pos) throw BadParameter("expected an integer in '" + s + "'");
  return std::stoi(s.substr(begin, pos - begin));
}

CoxeterSystem parse_factor(const std::string& tok) {
  if (tok.empty()) throw BadParameter("empty system token");
  std::size_t pos = 0;
  const char family = static_cast<char>(std::toupper(static_cast<unsigned char>(tok[0])));
  ++pos;
  CoxeterSystem base = [&]() -> CoxeterSystem {
    if (family == 'I') {
      // I2(n)
      if (tok.compare(pos, 2, "2(") != 0) throw BadParameter("expected I2(n) in '" + tok + "'");
      pos += 2;
      const int n = parse_int(tok, pos);
      if (pos >= tok.size() || tok[pos] != ')') throw BadParameter("missing ')' in '" + tok + "'");
      ++pos;
      return family_i2(n);
    }
    if (family == 'Z') {
      if (tok.compare(pos, 1, "2") != 0) throw BadParameter("expected Z2 in '" + tok + "'");
      ++pos;
      int m = 1;
      if (pos < tok.size() && tok[pos] == '^') {
        ++pos;
        m = parse_int(tok, pos);
      }
      return family_z2(m);
    }
    const int m = parse_int(tok, pos);
    switch (family) {
      case 'A': return family_a(m);
      case 'B': return family_b(m);
      case 'D': return family_d(m);
      case 'E': return family_e(m);
      case 'F':
        if (m != 4) throw BadParameter("only F4 exists");
        return family_f4();
      case 'H': return family_h(m);
      default: throw UnknownName("unknown family '" + tok + "'");
    }
  }();
  if (pos < tok.size() && tok[pos] == '^') {
    ++pos;
    const int mu = parse_int(tok, pos);
    if (mu < 1) throw BadParameter("power must be >= 1");
    if (pos != tok.size()) throw BadParameter("trailing characters in '" + tok + "'");
    if (mu == 1) return base;
    std::vector<CoxeterSystem> copies(mu, base);
    CoxeterSystem prod = direct_product(copies);
    return CoxeterSystem(prod.matrix(), base.name() + "^" + std::to_string(mu));
  }
  if (pos != tok.size()) throw BadParameter("trailing characters in '" + tok + "'");
  return base;
}

CoxeterSystem from_json(const nlohmann::json& j);

CoxeterSystem family_from_json(const nlohmann::json& j) {
  const std::string fam = j.at("family").get<std::string>();
  auto get = [&](const char* key, int fallback) {
    return j.contains(key) ? j.at(key).get<int>() : fallback;
  };
  const int mu = get("mu", 1);
  CoxeterSystem base = [&]() -> CoxeterSystem {
    if (fam == "A") return family_a(get("m", 0));
    if (fam == "B") return family_b(get("m", 0));
    if (fam == "D") return family_d(get("m", 0));
    if (fam == "E") return family_e(get("m", 0));
    if (fam == "F") return family_f4();
    if (fam == "H") return family_h(get("m", 0));
    if (fam == "I2") return family_i2(get("n", 0));
    if (fam == "Z2") return family_z2(get("m", 0));
    return parse_factor(strip(fam));
  }();
  if (mu == 1) return base;
  if (mu < 1) throw BadParameter("mu must be >= 1");
  std::vector<CoxeterSystem> copies(mu, base);
  return CoxeterSystem(direct_product(copies).matrix(), base.name() + "^" + std::to_string(mu));
}

CoxeterSystem from_json(const nlohmann::json& j) {
  if (j.is_array()) return CoxeterSystem(j.get<CoxeterMatrix>());
  if (j.is_string()) return parse_system(j.get<std::string>());
  if (j.contains("matrix")) {
    return CoxeterSystem(j.at("matrix").get<CoxeterMatrix>(), j.value("name", std::string{}));
  }
  if (j.contains("product")) {
    std::vector<CoxeterSystem> factors;
    for (const auto& f : j.at("product")) factors.push_back(from_json(f));
    return direct_product(factors);
  }
  if (j.contains("family")) return family_from_json(j);
  throw BadParameter("system descriptor needs one of family, matrix, product");
}

}  // namespace

CoxeterSystem parse_system(std::string_view text) {
  const std::string s = strip(text);
  std::vector<std::string> tokens;
  std::string cur;
  int depth = 0;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth == 0 && (ch == 'x' || ch == ',' || ch == '*')) {
      tokens.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  tokens.push_back(cur);
  std::vector<CoxeterSystem> factors;
  for (const auto& t : tokens) factors.push_back(parse_factor(t));
  return direct_product(factors);
}

CoxeterSystem system_from_json(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw BadParameter(std::string("invalid system descriptor JSON: ") + e.what());
  }
  try {
    return from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw BadParameter(std::string("invalid system descriptor: ") + e.what());
  }
}

}  // namespace coxkit
