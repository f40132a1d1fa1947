#pragma once

#include <string>

#include "coxkit/bigint.hpp"
#include "coxkit/distance.hpp"

namespace coxkit {

/// (ceil(m/r)!)^{m mod r} * (floor(m/r)!)^{r - m mod r}, for 1 <= r <= m.
BigInt T(int m, int r);

struct FamilyDescriptor {
  enum class Kind { A, I2 };
  Kind kind = Kind::A;
  int m = 1;   // A_m
  int n = 3;   // I2(n)
  int mu = 1;  // power

  int rank() const { return kind == Kind::A ? m : 2 * mu; }
  std::string name() const;
};

struct FamilyParams {
  BigInt length;
  BigInt dimension;
  BigInt distance;
  DistanceStatus status = DistanceStatus::ConjectureOnly;
};

/// Closed forms: A_m gives [(m+1)!, sum_{i<=r} <A_m>_i, T(m+1, r+1)];
/// I2(n)^mu gives [(2n)^mu, k, 2^{2mu-r} or 2^mu n^{mu-r}] with k from the
/// multinomial sum. Status: proven-by-corollary for r >= floor(m/2),
/// verified-exact for the repetition code r = 0, otherwise conjecture-only.
FamilyParams family_params(const FamilyDescriptor& family, int r);

/// sum over i + j <= mu, 2i + j <= r of mu!/(i! j! (mu-i-j)!) (2n-2)^j.
BigInt dihedral_dimension(int n, int mu, int r);

}  // namespace coxkit
