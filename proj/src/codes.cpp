#include "coxkit/codes.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "coxkit/error.hpp"
#include "coxkit/eulerian.hpp"

namespace coxkit {

std::string to_string(BasisTag tag) {
  switch (tag) {
    case BasisTag::CosetGenerators:
      return "coset-generators";
    case BasisTag::Extensions:
      return "extensions";
    case BasisTag::ReverseExtensions:
      return "reverse-extensions";
    case BasisTag::Dual:
      return "dual";
  }
  return "?";
}

std::vector<GenSet> subsets_of_size(int m, int size) {
  std::vector<GenSet> out;
  if (size < 0 || size > m) return out;
  if (size == 0) return {0};
  // Gosper's hack walks same-popcount masks in increasing order.
  GenSet s = (GenSet{1} << size) - 1;
  const GenSet limit = GenSet{1} << m;
  while (s < limit) {
    out.push_back(s);
    const GenSet c = s & (~s + 1);
    const GenSet r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return out;
}

BigInt conjectured_distance(const CoxeterSystem& system, int r) {
  const int m = system.rank();
  if (r < 0 || r > m) throw BadParameter("conjectured distance needs 0 <= r <= m");
  BigInt best = -1;
  for (GenSet J : subsets_of_size(m, m - r)) {
    const BigInt o = subgroup_order(system, J);
    if (best < 0 || o < best) best = o;
  }
  return best;
}

LinearCode build_code(const GroupTable& table, const CoxeterSystem& system, int r) {
  const int m = system.rank();
  if (r < -1 || r > m) throw BadParameter("order r must lie in [-1, m]");
  const std::size_t n = table.size();
  LinearCode code;
  code.system_name = system.name();
  code.m = m;
  code.order = r;
  code.length = n;
  code.generators = BitMatrix(n);
  code.basis = BasisTag::CosetGenerators;
  for (GenSet J : subsets_of_size(m, m - r)) {
    const CosetPartition p = coset_partition(table, J);
    std::vector<BitVector> rows(p.representatives.size(), BitVector(n));
    for (Elem u = 0; u < n; ++u) rows[p.label[u]].set(u);
    for (auto& row : rows) code.generators.append(std::move(row));
  }
  code.dimension = code.generators.rank();
  const BigInt expected = profile_of(system).partial_sum(r);
  if (BigInt(code.dimension) != expected) {
    throw DimensionMismatch("C(" + std::to_string(r) + ") of " + system.name() + " has rank " +
                            std::to_string(code.dimension) + ", expected " + expected.str());
  }
  if (r >= 0) code.conjectured_distance = conjectured_distance(system, r);
  return code;
}

BitMatrix extension_basis(const GroupTable& table, int r, Direction direction) {
  const int m = table.rank();
  if (r < -1 || r > m) throw BadParameter("order r must lie in [-1, m]");
  const std::size_t n = table.size();
  const GenSet all = full_set(m);
  std::map<GenSet, CosetPartition> partitions;
  BitMatrix out(n);
  for (Elem w = 0; w < n; ++w) {
    const int d = table.descent_number(w);
    const bool take = direction == Direction::Forward ? d <= r : d >= m - r;
    if (!take) continue;
    const GenSet J = direction == Direction::Forward ? all & ~table.descent(w) : table.descent(w);
    auto it = partitions.find(J);
    if (it == partitions.end()) it = partitions.emplace(J, coset_partition(table, J)).first;
    const CosetPartition& p = it->second;
    BitVector row(n);
    const Elem label = p.label[w];
    for (Elem u = 0; u < n; ++u) {
      if (p.label[u] == label) row.set(u);
    }
    out.append(std::move(row));
  }
  return out;
}

LinearCode dual_code(const LinearCode& code) {
  LinearCode d;
  d.system_name = code.system_name;
  d.m = code.m;
  d.order = code.m - code.order - 1;
  d.basis = BasisTag::Dual;
  d.length = code.length;
  d.generators = nullspace_basis(code.generators);
  d.dimension = d.generators.row_count();
  return d;
}

std::string check_restriction(const GroupTable& table, const CoxeterSystem& system, int r) {
  const int m = system.rank();
  if (m < 2) return {};
  const LinearCode code = build_code(table, system, r);
  for (int drop = 0; drop < m; ++drop) {
    std::vector<int> keep;
    for (int i = 0; i < m; ++i) {
      if (i != drop) keep.push_back(i);
    }
    CoxeterMatrix sub(m - 1, std::vector<int>(m - 1));
    for (int a = 0; a < m - 1; ++a) {
      for (int b = 0; b < m - 1; ++b) sub[a][b] = system.entry(keep[a], keep[b]);
    }
    const CoxeterSystem subsystem(sub);
    const GroupTable subtable = enumerate_group(subsystem);
    const int sub_r = std::min(r, m - 1);
    const RowSpace subcode(build_code(subtable, subsystem, sub_r).generators);
    const GenSet K = full_set(m) & ~(GenSet{1} << drop);
    const CosetPartition p = coset_partition(table, K);
    for (Elem rep : p.representatives) {
      // position v of the subsystem corresponds to rep * v
      std::vector<Elem> image(subtable.size());
      image[0] = rep;
      for (Elem v = 1; v < subtable.size(); ++v) {
        image[v] = table.act(image[subtable.parent(v)], keep[subtable.parent_gen(v)]);
      }
      for (std::size_t g = 0; g < code.generators.row_count(); ++g) {
        const BitVector& c = code.generators.row(g);
        BitVector restricted(subtable.size());
        for (Elem v = 0; v < subtable.size(); ++v) {
          if (c.get(image[v])) restricted.set(v);
        }
        if (!subcode.contains(restricted)) {
          std::ostringstream os;
          os << "generator " << g << " of C(" << r << ") restricted to coset of element " << rep
             << " with s" << drop + 1 << " removed is not in the subsystem code";
          return os.str();
        }
      }
    }
  }
  return {};
}

}  // namespace coxkit
