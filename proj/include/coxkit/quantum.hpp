#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coxkit/bigint.hpp"
#include "coxkit/codes.hpp"
#include "coxkit/eulerian.hpp"
#include "coxkit/group_table.hpp"

namespace coxkit {

/// CSS(C(m-q-1), C(r)). X stabilizers span C1^perp = C(q), Z stabilizers
/// span C2^perp = C(m-r-1).
struct CssCode {
  std::string system_name;
  int m = 0;
  int q = 0;
  int r = 0;
  LinearCode c1;  // C(m - q - 1)
  LinearCode c2;  // C(r)
  std::size_t n = 0;
  std::size_t k = 0;
  std::optional<std::uint64_t> d;  // 2^{min(q+1, m-r)}; absent when q == r
};

/// Verifies C1^perp in C2 and k = dim C1 + dim C2 - n (throws DimensionMismatch).
CssCode build_css(const GroupTable& table, const CoxeterSystem& system, int q, int r);

struct CssParams {
  BigInt n;
  BigInt k;
  BigInt d;
};
/// [[|W|, sum_{q<i<=r} <W>_i, 2^{min(q+1, m-r)}]]; requires -1 <= q < r <= m.
CssParams css_params(const EulerianProfile& profile, int q, int r);

/// Supports of the X generators (rank m-q cosets) and Z generators (rank r+1
/// cosets), each deduplicated and ordered by J then minimal representative.
struct StabilizerSupports {
  std::vector<BitVector> x;
  std::vector<BitVector> z;
};
StabilizerSupports stabilizer_generators(const GroupTable& table, int q, int r);

/// Text export: one line per generator, "X <bits>" or "Z <bits>".
std::string export_stabilizers(const StabilizerSupports& s);

enum class ZkVerdict { BreaksCodespace, NontrivialLogical, LogicalIdentity };
std::string to_string(ZkVerdict v);

/// Interval rule for Z(k) on a rank-rho coset of Q(q, r): breaks for
/// rho <= q + k r, nontrivial for q + k r < rho <= (k+1) r, identity above.
ZkVerdict zk_predict(int q, int r, int k_level, int coset_rank);

struct ZkOptions {
  bool allow_randomized = true;
  std::uint64_t samples = 10'000;
  std::uint64_t seed = 0xC0C5EEDull;
};

struct ZkSimulation {
  ZkVerdict verdict = ZkVerdict::LogicalIdentity;
  bool exhaustive = true;  // false in randomized mode
  std::uint64_t states = 0;
  /// Phase (in units of pi/2^k) of each coset c + C1^perp, when exhaustive
  /// and the code space is preserved; transversal order.
  std::vector<std::uint32_t> phases;
  std::string evidence;
};

/// Exact in full mode (dim C1^perp <= 20, dim C2 <= 22); otherwise sampled
/// unless randomized mode is disabled (ModeUnavailable).
ZkSimulation zk_simulate(const CssCode& css, const StandardCoset& R, int k_level,
                         const ZkOptions& options = {});

struct QmuDimension {
  BigInt dimension;                  // central coefficient of (t^2 + (2n-2) t + 1)^mu
  std::optional<BigInt> closed_form; // n = 3 only
  BigInt hypercube;                  // 4^mu
  bool bound_holds = false;          // dim >= (1 + mu(mu-1)/16) 4^mu
  bool bound_strict = false;
};
QmuDimension qmu_dimension(int n, int mu);

}  // namespace coxkit
