#pragma once

#include <string>
#include <vector>

#include "coxkit/bigint.hpp"
#include "coxkit/coxeter_system.hpp"
#include "coxkit/group_table.hpp"

namespace coxkit {

/// W-Eulerian numbers <W>_0 .. <W>_m as the coefficients of W(t).
struct EulerianProfile {
  std::vector<BigInt> counts;

  int rank() const { return static_cast<int>(counts.size()) - 1; }
  BigInt total() const;
  /// sum_{i<=r} <W>_i, with r clamped to [-1, m].
  BigInt partial_sum(int r) const;
  /// sum_{q<i<=r} <W>_i.
  BigInt range_sum(int q, int r) const;

  /// Boundary ones, palindromic, sum equals `order`.
  bool satisfies_invariants(const BigInt& order) const;

  friend bool operator==(const EulerianProfile&, const EulerianProfile&) = default;
};

EulerianProfile profile_by_counting(const GroupTable& table);

enum class EulerFamily { A, B, D };
/// A: m >= 1; B: m >= 2; D: m >= 2 (m < 4 are the aliases D2 = A1xA1, D3 = A3).
EulerianProfile profile_by_recurrence(EulerFamily family, int m);

/// H3, H4, F4, E6, E7, E8. Throws UnknownName otherwise.
EulerianProfile profile_exceptional(const std::string& name);

EulerianProfile profile_product(const EulerianProfile& a, const EulerianProfile& b);

/// Profile from the classification, without enumeration.
EulerianProfile profile_of(const Component& component);
EulerianProfile profile_of(const CoxeterSystem& system);

struct RatePoint {
  Rational rate;    // sum_{i<=r} <W>_i / |W|
  double gaussian;  // Phi((r - m/2) / sqrt(m/12))
};
RatePoint code_rate_point(const EulerianProfile& profile, int r);

/// Standard normal CDF.
double normal_cdf(double x);

/// Decimal strings, for JSON.
std::vector<std::string> to_strings(const EulerianProfile& p);

}  // namespace coxkit
