#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "coxkit/codes.hpp"
#include "coxkit/gf2.hpp"

namespace coxkit {

inline constexpr std::uint64_t kDefaultBudget = 1'000'000'000ull;

/// Candidate-evaluation budget: COXKIT_BUDGET if set, else kDefaultBudget.
std::uint64_t default_budget();

enum class DistanceStatus { ProvenByCorollary, VerifiedExact, ConjectureOnly };
std::string to_string(DistanceStatus s);

/// Auto picks full enumeration for k <= 25, the parity-check column test
/// when a codeword of weight <= 4 is known, and information sets otherwise.
enum class SearchStrategy { Auto, FullEnumeration, InformationSets };

struct DistanceOptions {
  std::uint64_t budget = default_budget();
  int jobs = 1;
  SearchStrategy strategy = SearchStrategy::Auto;
};

/// Result of an exact minimum-distance search on an arbitrary binary code.
struct SearchResult {
  bool complete = false;
  std::uint64_t best = 0;         // weight of `witness`
  std::uint64_t lower = 0;        // proven lower bound
  std::uint64_t evaluations = 0;  // candidates examined
  std::string method;             // gray-code | parity-check | brouwer-zimmermann | none
  BitVector witness;
};

/// Evaluations the automatic search would need, at best, to certify
/// distance `target` for an [n, k] code (`even`: all codewords even).
/// Lets callers skip building codes whose search is hopeless.
std::uint64_t estimated_search_cost(std::size_t n, std::size_t k, std::uint64_t target, bool even);

/// Minimum weight of a nonzero codeword of span(generators). Requires rank >= 1.
SearchResult min_distance(const BitMatrix& generators, const DistanceOptions& options = {});

struct DistanceReport {
  std::uint64_t conjectured = 0;  // min_J |<J>|
  std::uint64_t lower_bound = 0;  // 2^{m-r}
  std::optional<std::uint64_t> exact;
  DistanceStatus status = DistanceStatus::ConjectureOnly;
  std::string method;
  std::uint64_t best_known = 0;   // smallest weight found
  std::uint64_t proven_lower = 0; // best lower bound established
  std::uint64_t evaluations = 0;
  std::optional<BitVector> witness;
};

/// Exact distance of a Coxeter code where feasible, with the corollary
/// d = 2^{m-r} for r >= floor(m/2) as the fallback.
DistanceReport exact_min_distance(const LinearCode& code, const DistanceOptions& options = {});

}  // namespace coxkit
