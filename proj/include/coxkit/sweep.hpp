#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coxkit/coxeter_system.hpp"
#include "coxkit/distance.hpp"

namespace coxkit {

/// Every finite Coxeter system with |W| <= max_order, up to relabelling:
/// one system per multiset of irreducible types, factors in a fixed order.
std::vector<CoxeterSystem> finite_systems_up_to(std::uint64_t max_order);

struct SweepEntry {
  std::string system;
  int m = 0;
  int r = 0;
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::uint64_t conjectured = 0;
  std::uint64_t lower_bound = 0;
  DistanceReport distance;
  bool pass = false;  // exact distance established and equal to the conjectured value
};

struct SweepReport {
  std::uint64_t max_length = 0;
  std::size_t systems = 0;
  std::vector<SweepEntry> entries;
  std::size_t failures() const;
};

/// Exact distances of C_W(r) for all systems with |W| <= max_length and all
/// orders 1 <= r <= m-2, compared against min_J |<J>|.
SweepReport conjecture_sweep(std::uint64_t max_length, const DistanceOptions& options = {});

}  // namespace coxkit
