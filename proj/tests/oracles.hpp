#pragma once

// Independent reference computations used by the tests. None of these go
// through the library's enumeration or search code paths.

#include <complex>
#include <cstdint>
#include <vector>

#include "coxkit/gf2.hpp"
#include "coxkit/group_table.hpp"

namespace oracle {

using Perm = std::vector<int>;

/// All permutations of {0..n-1} via std::next_permutation.
std::vector<Perm> all_permutations(int n);
int inversions(const Perm& p);
/// Positions i with p[i] > p[i+1], as a bitmask.
std::uint64_t descent_mask(const Perm& p);

/// One-line notation of the product of adjacent transpositions in `word`.
Perm permutation_of_word(int n, const std::vector<int>& word);

/// Classical Eulerian numbers A(n, k) by the explicit alternating sum.
std::vector<std::int64_t> eulerian_explicit(int n);

/// Brute-force minimum weight: recomputes every combination from scratch.
std::uint64_t brute_min_weight(const coxkit::BitMatrix& basis);

/// All codewords of span(rows) (rank must be small).
std::vector<coxkit::BitVector> all_codewords(const coxkit::BitMatrix& rows);

/// RM(r, m) as evaluations of monomials of degree <= r on F_2^m, with point
/// p at position `position_of_point[p]`.
coxkit::BitMatrix reed_muller(int r, int m, const std::vector<std::uint32_t>& position_of_point);

/// Dense code-space projector of CSS(X gens, Z gens) on n <= 12 qubits.
struct Dense {
  std::size_t dim = 0;
  std::vector<std::complex<double>> a;  // row-major dim x dim
  std::complex<double>& at(std::size_t i, std::size_t j) { return a[i * dim + j]; }
  std::complex<double> at(std::size_t i, std::size_t j) const { return a[i * dim + j]; }
};
Dense css_projector(std::size_t n, const std::vector<coxkit::BitVector>& x_gens,
                    const std::vector<coxkit::BitVector>& z_gens);

enum class Verdict { Breaks, Nontrivial, Identity };
/// Applies diag(e^{i pi |v & R| / 2^k}) and classifies its action on the projector's range.
Verdict dense_zk_verdict(const Dense& projector, std::size_t n, const coxkit::BitVector& support, int k);

}  // namespace oracle
