#include "coxkit/eulerian.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "coxkit/error.hpp"

namespace coxkit {

BigInt EulerianProfile::total() const {
  BigInt s = 0;
  for (const auto& c : counts) s += c;
  return s;
}

BigInt EulerianProfile::partial_sum(int r) const { return range_sum(-1, r); }

BigInt EulerianProfile::range_sum(int q, int r) const {
  BigInt s = 0;
  for (int i = std::max(q + 1, 0); i <= std::min(r, rank()); ++i) s += counts[i];
  return s;
}

bool EulerianProfile::satisfies_invariants(const BigInt& order) const {
  if (counts.empty() || counts.front() != 1 || counts.back() != 1) return false;
  if (!std::equal(counts.begin(), counts.end(), counts.rbegin())) return false;
  return total() == order;
}

EulerianProfile profile_by_counting(const GroupTable& table) {
  std::vector<std::uint64_t> c(table.rank() + 1, 0);
  for (Elem w = 0; w < table.size(); ++w) ++c[table.descent_number(w)];
  EulerianProfile p;
  for (auto v : c) p.counts.emplace_back(v);
  return p;
}

namespace {

std::vector<BigInt> type_a(int m) {
  std::vector<BigInt> row{1};
  for (int k = 1; k <= m; ++k) {
    std::vector<BigInt> next(k + 1, 0);
    for (int i = 0; i <= k; ++i) {
      if (i >= 1) next[i] += (k - i + 1) * row[i - 1];
      if (i < k) next[i] += (i + 1) * row[i];
    }
    row = std::move(next);
  }
  return row;
}

std::vector<BigInt> type_b(int m) {
  std::vector<BigInt> row{1};
  for (int k = 1; k <= m; ++k) {
    std::vector<BigInt> next(k + 1, 0);
    for (int i = 0; i <= k; ++i) {
      if (i >= 1) next[i] += (2 * k - 2 * i + 1) * row[i - 1];
      if (i < k) next[i] += (2 * i + 1) * row[i];
    }
    row = std::move(next);
  }
  return row;
}

std::vector<BigInt> type_d(int m) {
  std::vector<BigInt> b = type_b(m);
  const std::vector<BigInt> a = type_a(m - 2);
  const BigInt factor = BigInt(m) * power(2, m - 1);
  for (int i = 1; i <= m - 1; ++i) {
    if (i - 1 < static_cast<int>(a.size())) b[i] -= factor * a[i - 1];
  }
  return b;
}

const std::map<std::string, std::vector<unsigned long long>>& exceptional_table() {
  static const std::map<std::string, std::vector<unsigned long long>> table = {
      {"H3", {1, 59, 59, 1}},
      {"H4", {1, 2636, 9126, 2636, 1}},
      {"F4", {1, 236, 678, 236, 1}},
      {"E6", {1, 1272, 12183, 24928, 12183, 1272, 1}},
      {"E7", {1, 17635, 309969, 1123915, 1123915, 309969, 17635, 1}},
      {"E8", {1, 881752, 28336348, 169022824, 300247750, 169022824, 28336348, 881752, 1}},
  };
  return table;
}

}  // namespace

EulerianProfile profile_by_recurrence(EulerFamily family, int m) {
  EulerianProfile p;
  switch (family) {
    case EulerFamily::A:
      if (m < 1) throw BadParameter("A_m recurrence requires m >= 1");
      p.counts = type_a(m);
      break;
    case EulerFamily::B:
      if (m < 2) throw BadParameter("B_m recurrence requires m >= 2");
      p.counts = type_b(m);
      break;
    case EulerFamily::D:
      if (m < 2) throw BadParameter("D_m formula requires m >= 2");
      p.counts = type_d(m);
      break;
  }
  return p;
}

EulerianProfile profile_exceptional(const std::string& name) {
  const auto& table = exceptional_table();
  const auto it = table.find(name);
  if (it == table.end()) throw UnknownName("no exceptional Eulerian row for '" + name + "'");
  EulerianProfile p;
  for (auto v : it->second) p.counts.emplace_back(v);
  const int rank = name[1] - '0';
  const ComponentKind kind = name[0] == 'H' ? ComponentKind::H
                             : name[0] == 'F' ? ComponentKind::F
                                              : ComponentKind::E;
  if (!p.satisfies_invariants(component_order(kind, rank, 0))) {
    throw DimensionMismatch("exceptional Eulerian row " + name + " fails its invariants");
  }
  return p;
}

EulerianProfile profile_product(const EulerianProfile& a, const EulerianProfile& b) {
  EulerianProfile p;
  p.counts.assign(a.counts.size() + b.counts.size() - 1, 0);
  for (std::size_t i = 0; i < a.counts.size(); ++i) {
    for (std::size_t j = 0; j < b.counts.size(); ++j) p.counts[i + j] += a.counts[i] * b.counts[j];
  }
  return p;
}

EulerianProfile profile_of(const Component& c) {
  switch (c.kind) {
    case ComponentKind::A:
      return profile_by_recurrence(EulerFamily::A, c.rank);
    case ComponentKind::B:
      return profile_by_recurrence(EulerFamily::B, c.rank);
    case ComponentKind::D:
      return profile_by_recurrence(EulerFamily::D, c.rank);
    case ComponentKind::I2:
      return EulerianProfile{{1, 2 * c.label - 2, 1}};
    case ComponentKind::E:
    case ComponentKind::F:
    case ComponentKind::H:
      return profile_exceptional(c.name());
  }
  return {};
}

EulerianProfile profile_of(const CoxeterSystem& system) {
  EulerianProfile p{{1}};
  for (const auto& c : system.components()) p = profile_product(p, profile_of(c));
  return p;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

RatePoint code_rate_point(const EulerianProfile& profile, int r) {
  const int m = profile.rank();
  if (r < -1 || r > m) throw BadParameter("order r must lie in [-1, m]");
  RatePoint out;
  out.rate = Rational(profile.partial_sum(r), profile.total());
  out.gaussian = m == 0 ? (r >= 0 ? 1.0 : 0.0) : normal_cdf((r - m / 2.0) / std::sqrt(m / 12.0));
  return out;
}

std::vector<std::string> to_strings(const EulerianProfile& p) {
  std::vector<std::string> out;
  for (const auto& c : p.counts) out.push_back(c.str());
  return out;
}

}  // namespace coxkit
