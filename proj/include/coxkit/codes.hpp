#pragma once

#include <string>
#include <vector>

#include "coxkit/bigint.hpp"
#include "coxkit/coxeter_system.hpp"
#include "coxkit/gf2.hpp"
#include "coxkit/group_table.hpp"

namespace coxkit {

enum class BasisTag { CosetGenerators, Extensions, ReverseExtensions, Dual };
std::string to_string(BasisTag tag);

/// Order-r Coxeter code: span of the indicators of all rank-(m-r) standard
/// cosets. Coordinates are element indices of the GroupTable.
struct LinearCode {
  std::string system_name;
  int m = 0;
  int order = 0;
  BasisTag basis = BasisTag::CosetGenerators;
  BitMatrix generators;
  std::size_t dimension = 0;
  std::size_t length = 0;
  BigInt conjectured_distance = 0;  // min over |J| = m - r of |<J>|; 0 when undefined
};

/// All subsets of {0..m-1} of the given size, as ascending bitmasks.
std::vector<GenSet> subsets_of_size(int m, int size);

/// Generator rows: for each J of size m-r (ascending bitmask), the cosets of
/// <J> ordered by minimal representative. Verifies rank == sum_{i<=r} <W>_i
/// and throws DimensionMismatch otherwise.
LinearCode build_code(const GroupTable& table, const CoxeterSystem& system, int r);

enum class Direction { Forward, Reverse };

/// Forward: 1_{w<S \ D(w)>} for d(w) <= r. Reverse: 1_{w<D(w)>} for d(w) >= m-r.
/// Rows are in element order.
BitMatrix extension_basis(const GroupTable& table, int r, Direction direction);

/// Nullspace of the generators, tagged with order m-r-1.
LinearCode dual_code(const LinearCode& code);

/// min_{J subset S, |J| = m-r} |<J>|, from the classification.
BigInt conjectured_distance(const CoxeterSystem& system, int r);

/// Restriction of every generator of C(r) to every rank-(m-1) coset w<K>
/// lies in the order-r code of the subsystem <K> (coordinates read in the
/// coset's own shortlex order). Returns an empty string on success, else a
/// description of the first counterexample.
std::string check_restriction(const GroupTable& table, const CoxeterSystem& system, int r);

}  // namespace coxkit
