#include "coxkit/group_table.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "coxkit/error.hpp"
#include "realization.hpp"

namespace coxkit {

std::size_t default_cap() {
  if (const char* env = std::getenv("COXKIT_CAP")) {
    try {
      return static_cast<std::size_t>(std::stod(env));
    } catch (const std::exception&) {
      throw BadParameter(std::string("COXKIT_CAP is not a number: ") + env);
    }
  }
  return kDefaultCap;
}

std::vector<int> GroupTable::word(Elem w) const {
  std::vector<int> out;
  while (w != 0) {
    out.push_back(parent_gen_[w]);
    w = parent_[w];
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::string GroupTable::word_string(Elem w) const {
  if (w == 0) return "e";
  std::string out;
  for (int g : word(w)) {
    if (!out.empty()) out += ' ';
    out += 's' + std::to_string(g + 1);
  }
  return out;
}

Elem GroupTable::from_word(const std::vector<int>& word) const {
  Elem w = 0;
  for (int g : word) w = act(w, g);
  return w;
}

Elem GroupTable::inverse(Elem w) const {
  auto wd = word(w);
  std::reverse(wd.begin(), wd.end());
  return from_word(wd);
}

std::vector<Elem> GroupTable::left_multiplication(Elem w) const {
  // u = parent(u) s, so w u = (w parent(u)) s.
  std::vector<Elem> perm(size());
  perm[0] = w;
  for (std::size_t u = 1; u < size(); ++u) perm[u] = act(perm[parent_[u]], parent_gen_[u]);
  return perm;
}

GroupTable enumerate_group(const CoxeterSystem& system, std::size_t cap, Realization route) {
  if (system.order() > cap) {
    throw CapExceeded("|W| = " + system.order().str() + " exceeds the enumeration cap of " +
                      std::to_string(cap));
  }
  const std::size_t n = static_cast<std::size_t>(system.order());
  if (n > 0xFFFFFFFEull) throw CapExceeded("group too large for 32-bit element indices");
  const int m = system.rank();

  // Per-component tables, combined through a mixed-radix code.
  struct Factor {
    detail::ComponentTable table;
    std::size_t stride;
    std::vector<int> local_of_global;
  };
  std::vector<Factor> factors;
  std::vector<int> factor_of_gen(m, -1), local_gen(m, -1);
  std::size_t stride = 1;
  for (const auto& comp : system.components()) {
    auto model = detail::make_model(comp, system.matrix(), route == Realization::Cartan);
    if (!model) model = detail::make_model(comp, system.matrix(), false);
    const std::size_t sz = static_cast<std::size_t>(comp.order());
    Factor f{detail::enumerate_model(*model, sz), stride, {}};
    for (int li = 0; li < comp.rank; ++li) {
      factor_of_gen[comp.generators[li]] = static_cast<int>(factors.size());
      local_gen[comp.generators[li]] = li;
    }
    stride *= sz;
    factors.push_back(std::move(f));
  }

  GroupTable t;
  t.rank_ = m;
  t.action_.assign(n * m, 0);
  t.length_.assign(n, 0);
  t.descent_.assign(n, 0);
  t.parent_.assign(n, 0);
  t.parent_gen_.assign(n, -1);

  constexpr Elem kUnseen = 0xFFFFFFFFu;
  std::vector<Elem> index_of_code(n, kUnseen);
  std::vector<std::size_t> code_of_index;
  code_of_index.reserve(n);
  index_of_code[0] = 0;
  code_of_index.push_back(0);
  for (std::size_t u = 0; u < code_of_index.size(); ++u) {
    const std::size_t code = code_of_index[u];
    for (int g = 0; g < m; ++g) {
      const Factor& f = factors[factor_of_gen[g]];
      const std::size_t local = (code / f.stride) % f.table.size;
      const std::size_t moved = f.table.action[local * f.table.rank + local_gen[g]];
      const std::size_t next = code + (moved - local) * f.stride;
      Elem idx = index_of_code[next];
      if (idx == kUnseen) {
        idx = static_cast<Elem>(code_of_index.size());
        index_of_code[next] = idx;
        code_of_index.push_back(next);
        t.length_[idx] = static_cast<std::uint16_t>(t.length_[u] + 1);
        t.parent_[idx] = static_cast<Elem>(u);
        t.parent_gen_[idx] = static_cast<std::int8_t>(g);
      }
      t.action_[u * m + g] = idx;
    }
  }
  if (code_of_index.size() != n) throw std::logic_error("Cayley graph is not connected");
  for (std::size_t u = 0; u < n; ++u) {
    GenSet d = 0;
    for (int g = 0; g < m; ++g) {
      if (t.length_[t.action_[u * m + g]] < t.length_[u]) d |= GenSet{1} << g;
    }
    t.descent_[u] = d;
  }
  return t;
}

StandardCoset standard_coset(const GroupTable& table, Elem w, GenSet J) {
  if (w >= table.size()) throw BadParameter("element index out of range");
  if (J & ~full_set(table.rank())) throw BadParameter("generator subset out of range");
  StandardCoset c;
  c.gens = J;
  std::vector<char> seen(table.size(), 0);
  std::vector<Elem> stack{w};
  seen[w] = 1;
  while (!stack.empty()) {
    const Elem u = stack.back();
    stack.pop_back();
    c.members.push_back(u);
    for (int g = 0; g < table.rank(); ++g) {
      if (!has_gen(J, g)) continue;
      const Elem v = table.act(u, g);
      if (!seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
    }
  }
  std::sort(c.members.begin(), c.members.end());
  c.representative = c.members.front();
  return c;
}

CosetPartition coset_partition(const GroupTable& table, GenSet J) {
  CosetPartition p;
  p.gens = J;
  constexpr Elem kUnset = 0xFFFFFFFFu;
  p.label.assign(table.size(), kUnset);
  std::vector<Elem> stack;
  for (Elem u = 0; u < table.size(); ++u) {
    if (p.label[u] != kUnset) continue;
    // Every smaller element is already labelled, so u is the minimum here.
    const auto id = static_cast<Elem>(p.representatives.size());
    p.representatives.push_back(u);
    p.label[u] = id;
    stack.push_back(u);
    std::size_t count = 0;
    while (!stack.empty()) {
      const Elem v = stack.back();
      stack.pop_back();
      ++count;
      for (int g = 0; g < table.rank(); ++g) {
        if (!has_gen(J, g)) continue;
        const Elem x = table.act(v, g);
        if (p.label[x] == kUnset) {
          p.label[x] = id;
          stack.push_back(x);
        }
      }
    }
    p.coset_size = count;
  }
  return p;
}

CosetMembers coset_members(const CosetPartition& p) {
  CosetMembers out;
  const std::size_t cosets = p.representatives.size();
  out.offset.assign(cosets + 1, 0);
  for (Elem l : p.label) ++out.offset[l + 1];
  for (std::size_t c = 0; c < cosets; ++c) out.offset[c + 1] += out.offset[c];
  out.members.resize(p.label.size());
  std::vector<Elem> fill(out.offset.begin(), out.offset.end() - 1);
  for (Elem u = 0; u < p.label.size(); ++u) out.members[fill[p.label[u]]++] = u;
  return out;
}

std::string export_cayley_dot(const GroupTable& table, const CoxeterSystem& system) {
  std::ostringstream os;
  std::string name = system.name();
  for (char& ch : name) {
    if (ch == '"') ch = '\'';
  }
  os << "graph \"" << name << "\" {\n";
  os << "  node [shape=circle];\n";
  // Brewer's set1 palettes stop at 9 colours; larger ranks keep the numeric
  // colour attribute without a scheme.
  if (system.rank() <= 9) os << "  edge [colorscheme=set1" << std::max(system.rank(), 3) << "];\n";
  for (Elem u = 0; u < table.size(); ++u) {
    os << "  " << u << " [label=\"" << table.word_string(u) << "\"];\n";
  }
  for (Elem u = 0; u < table.size(); ++u) {
    for (int g = 0; g < table.rank(); ++g) {
      const Elem v = table.act(u, g);
      if (u < v) os << "  " << u << " -- " << v << " [color=" << g + 1 << "];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace coxkit
