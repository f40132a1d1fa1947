#include "coxkit/sweep.hpp"

#include <functional>

#include "coxkit/codes.hpp"
#include "coxkit/group_table.hpp"

namespace coxkit {

std::size_t SweepReport::failures() const {
  std::size_t f = 0;
  for (const auto& e : entries) f += e.pass ? 0 : 1;
  return f;
}

namespace {

struct Irreducible {
  std::uint64_t order;
  std::function<CoxeterSystem()> make;
};

std::vector<Irreducible> irreducibles_up_to(std::uint64_t max_order) {
  std::vector<Irreducible> out;
  auto add = [&](const BigInt& order, std::function<CoxeterSystem()> make) {
    if (order <= max_order) out.push_back({static_cast<std::uint64_t>(order), std::move(make)});
  };
  // A2 = I2(3) and B2 = I2(4) appear only once, under A and B.
  for (int k = 1; factorial(k + 1) <= max_order; ++k) add(factorial(k + 1), [k] { return family_a(k); });
  for (int k = 2; component_order(ComponentKind::B, k, 0) <= max_order; ++k) {
    add(component_order(ComponentKind::B, k, 0), [k] { return family_b(k); });
  }
  for (int k = 4; component_order(ComponentKind::D, k, 0) <= max_order; ++k) {
    add(component_order(ComponentKind::D, k, 0), [k] { return family_d(k); });
  }
  for (int n = 5; 2 * static_cast<std::uint64_t>(n) <= max_order; ++n) {
    add(2 * n, [n] { return family_i2(n); });
  }
  add(120, [] { return family_h(3); });
  add(14400, [] { return family_h(4); });
  add(1152, [] { return family_f4(); });
  add(51840, [] { return family_e(6); });
  add(2903040, [] { return family_e(7); });
  add(696729600, [] { return family_e(8); });
  return out;
}

}  // namespace

std::vector<CoxeterSystem> finite_systems_up_to(std::uint64_t max_order) {
  const auto catalog = irreducibles_up_to(max_order);
  std::vector<CoxeterSystem> out;
  std::vector<std::size_t> pick;
  // Multisets as nondecreasing index sequences.
  std::function<void(std::size_t, std::uint64_t)> extend = [&](std::size_t from, std::uint64_t order) {
    if (!pick.empty()) {
      std::vector<CoxeterSystem> factors;
      for (auto i : pick) factors.push_back(catalog[i].make());
      out.push_back(direct_product(factors));
    }
    for (std::size_t i = from; i < catalog.size(); ++i) {
      if (order * catalog[i].order > max_order) continue;
      pick.push_back(i);
      extend(i, order * catalog[i].order);
      pick.pop_back();
    }
  };
  extend(0, 1);
  return out;
}

SweepReport conjecture_sweep(std::uint64_t max_length, const DistanceOptions& options) {
  SweepReport report;
  report.max_length = max_length;
  if (max_length < 2) return report;
  const auto systems = finite_systems_up_to(max_length);
  report.systems = systems.size();
  for (const auto& sys : systems) {
    const int m = sys.rank();
    if (m < 3) continue;
    const GroupTable table = enumerate_group(sys);
    for (int r = 1; r <= m - 2; ++r) {
      const LinearCode code = build_code(table, sys, r);
      SweepEntry e;
      e.system = sys.name();
      e.m = m;
      e.r = r;
      e.n = table.size();
      e.k = code.dimension;
      e.conjectured = to_u64(code.conjectured_distance);
      e.lower_bound = std::uint64_t{1} << (m - r);
      e.distance = exact_min_distance(code, options);
      e.distance.witness.reset();
      e.pass = e.distance.exact && *e.distance.exact == e.conjectured;
      report.entries.push_back(std::move(e));
    }
  }
  return report;
}

}  // namespace coxkit
