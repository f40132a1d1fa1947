#include "coxkit/family.hpp"

#include "coxkit/error.hpp"
#include "coxkit/eulerian.hpp"

namespace coxkit {

BigInt T(int m, int r) {
  if (r < 1 || r > m) throw BadParameter("T(m, r) needs 1 <= r <= m");
  const int q = m / r;
  const int rem = m % r;
  return power(factorial(q + (rem ? 1 : 0)), rem) * power(factorial(q), r - rem);
}

std::string FamilyDescriptor::name() const {
  if (kind == Kind::A) return "A" + std::to_string(m);
  std::string s = "I2(" + std::to_string(n) + ")";
  if (mu > 1) s += "^" + std::to_string(mu);
  return s;
}

BigInt dihedral_dimension(int n, int mu, int r) {
  BigInt k = 0;
  for (int i = 0; i <= mu; ++i) {
    for (int j = 0; i + j <= mu && 2 * i + j <= r; ++j) {
      k += factorial(mu) / (factorial(i) * factorial(j) * factorial(mu - i - j)) * power(2 * n - 2, j);
    }
  }
  return k;
}

FamilyParams family_params(const FamilyDescriptor& f, int r) {
  const int m = f.rank();
  if (r < 0 || r > m) throw BadParameter("family parameters need 0 <= r <= m");
  FamilyParams p;
  if (f.kind == FamilyDescriptor::Kind::A) {
    if (f.m < 1) throw BadParameter("A_m needs m >= 1");
    p.length = factorial(f.m + 1);
    p.dimension = profile_by_recurrence(EulerFamily::A, f.m).partial_sum(r);
    p.distance = T(f.m + 1, r + 1);
  } else {
    if (f.n < 2 || f.mu < 1) throw BadParameter("I2(n)^mu needs n >= 2, mu >= 1");
    p.length = power(2 * f.n, f.mu);
    p.dimension = dihedral_dimension(f.n, f.mu, r);
    p.distance = r >= f.mu ? power(2, 2 * f.mu - r) : power(2, f.mu) * power(f.n, f.mu - r);
  }
  if (r >= m / 2) {
    p.status = DistanceStatus::ProvenByCorollary;
  } else if (r == 0) {
    p.status = DistanceStatus::VerifiedExact;
  } else {
    p.status = DistanceStatus::ConjectureOnly;
  }
  return p;
}

}  // namespace coxkit
