#include "coxkit/bigint.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace coxkit {

BigInt factorial(unsigned n) {
  BigInt result = 1;
  for (unsigned i = 2; i <= n; ++i) result *= i;
  return result;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt power(const BigInt& base, unsigned exp) {
  BigInt result = 1;
  for (unsigned i = 0; i < exp; ++i) result *= base;
  return result;
}

std::uint64_t to_u64(const BigInt& v) {
  if (v < 0 || v > std::numeric_limits<std::uint64_t>::max()) {
    throw std::overflow_error("integer does not fit in 64 bits: " + v.str());
  }
  return static_cast<std::uint64_t>(v);
}

}  // namespace coxkit
