#include "coxkit/distance.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <thread>

#include "coxkit/error.hpp"

namespace coxkit {

std::uint64_t default_budget() {
  if (const char* env = std::getenv("COXKIT_BUDGET")) {
    try {
      return static_cast<std::uint64_t>(std::stod(env));
    } catch (const std::exception&) {
      throw BadParameter(std::string("COXKIT_BUDGET is not a number: ") + env);
    }
  }
  return kDefaultBudget;
}

std::string to_string(DistanceStatus s) {
  switch (s) {
    case DistanceStatus::ProvenByCorollary:
      return "proven-by-corollary";
    case DistanceStatus::VerifiedExact:
      return "verified-exact";
    case DistanceStatus::ConjectureOnly:
      return "conjecture-only";
  }
  return "?";
}

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kSaturated - b ? kSaturated : a + b; }

std::uint64_t choose(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  long double v = 1;
  for (std::size_t i = 1; i <= k; ++i) v = v * static_cast<long double>(n - k + i) / i;
  if (v >= 1.8e19L) return kSaturated;
  return static_cast<std::uint64_t>(std::llround(v));
}

std::uint64_t round_even(std::uint64_t v, bool even) { return even && (v & 1) ? v + 1 : v; }

// Evaluations needed before the information-set bound reaches `goal`, for
// sets of the given ranks; `level` receives the last enumerated level.
std::uint64_t plan_cost(const std::vector<std::size_t>& ranks, std::size_t k, std::uint64_t goal, bool even,
                        std::size_t& level) {
  std::uint64_t cost = 0;
  for (level = 0;; ++level) {
    std::uint64_t bound = 0;
    for (auto rj : ranks) bound += level + 1 > k - rj ? level + 1 - (k - rj) : 0;
    if (round_even(bound, even) >= goal) return cost;
    if (level + 1 > k) return kSaturated;
    for (std::size_t j = 0; j < ranks.size(); ++j) cost = sat_add(cost, choose(k, level + 1));
    if (cost == kSaturated) return cost;
  }
}

std::uint64_t optimistic_cost(std::size_t n, std::size_t k, std::uint64_t goal, bool even) {
  const std::vector<std::size_t> ranks(std::max<std::size_t>(1, n / k), k);
  std::size_t level = 0;
  return plan_cost(ranks, k, goal, even, level);
}

// Row-major packed k x n matrix.
struct Rows {
  std::size_t k = 0;
  std::size_t words = 0;
  std::size_t n = 0;
  std::vector<std::uint64_t> data;
  const std::uint64_t* row(std::size_t i) const { return &data[i * words]; }
  std::uint64_t* row(std::size_t i) { return &data[i * words]; }
};

Rows to_rows(const BitMatrix& m) {
  Rows r;
  r.k = m.row_count();
  r.n = m.cols();
  r.words = (r.n + 63) / 64;
  r.data.resize(r.k * r.words);
  for (std::size_t i = 0; i < r.k; ++i) std::copy_n(m.row(i).data(), r.words, r.row(i));
  return r;
}

BitVector to_vector(const std::uint64_t* words, std::size_t n) {
  BitVector v(n);
  std::copy_n(words, v.word_count(), v.data());
  return v;
}

std::size_t weight(const std::uint64_t* w, std::size_t words) {
  std::size_t s = 0;
  for (std::size_t i = 0; i < words; ++i) s += std::popcount(w[i]);
  return s;
}

// Reduced echelon form with pivots searched in `order`; returns the pivot
// columns in the order they were found.
std::vector<std::size_t> echelon_in_order(Rows& g, const std::vector<std::size_t>& order) {
  std::vector<std::size_t> pivots;
  std::size_t pr = 0;
  for (std::size_t c : order) {
    if (pr == g.k) break;
    const std::size_t wi = c >> 6;
    const std::uint64_t bit = std::uint64_t{1} << (c & 63);
    std::size_t found = g.k;
    for (std::size_t r = pr; r < g.k; ++r) {
      if (g.row(r)[wi] & bit) {
        found = r;
        break;
      }
    }
    if (found == g.k) continue;
    if (found != pr) std::swap_ranges(g.row(pr), g.row(pr) + g.words, g.row(found));
    for (std::size_t r = 0; r < g.k; ++r) {
      if (r != pr && (g.row(r)[wi] & bit)) {
        std::uint64_t* d = g.row(r);
        const std::uint64_t* s = g.row(pr);
        for (std::size_t w = 0; w < g.words; ++w) d[w] ^= s[w];
      }
    }
    pivots.push_back(c);
    ++pr;
  }
  return pivots;
}

struct Best {
  std::uint64_t weight = kSaturated;
  std::vector<std::uint64_t> witness;
  void offer(std::uint64_t w, const std::uint64_t* vec, std::size_t words) {
    if (w < weight && w > 0) {
      weight = w;
      witness.assign(vec, vec + words);
    }
  }
};

// All 2^k - 1 nonzero codewords, consecutive ones differing in one row.
void gray_search(const Rows& g, Best& best, std::uint64_t floor_weight) {
  std::vector<std::uint64_t> acc(g.words, 0);
  const std::uint64_t total = std::uint64_t{1} << g.k;
  for (std::uint64_t i = 1; i < total; ++i) {
    const std::size_t flip = std::countr_zero(i);
    const std::uint64_t* r = g.row(flip);
    std::size_t wt = 0;
    for (std::size_t w = 0; w < g.words; ++w) {
      acc[w] ^= r[w];
      wt += std::popcount(acc[w]);
    }
    if (wt < best.weight && wt > 0) {
      best.offer(wt, acc.data(), g.words);
      if (best.weight <= floor_weight) return;
    }
  }
}

// Enumerates every combination of `level` rows of g whose first row index is
// congruent to `tid` mod `jobs`. Stops early once the shared best reaches `floor`.
class CombinationWalker {
 public:
  CombinationWalker(const Rows& g, std::size_t level, const std::atomic<std::uint64_t>& shared,
                    std::uint64_t floor)
      : g_(g), level_(level), shared_(shared), floor_(floor), partial_((level + 1) * g.words, 0) {}

  void run(std::size_t tid, std::size_t jobs, Best& best) {
    best_ = &best;
    for (std::size_t i = tid; i + level_ <= g_.k; i += jobs) {
      if (stop()) return;
      if (level_ == 1) {
        leaf(partial_.data(), i);
        continue;
      }
      std::uint64_t* next = &partial_[g_.words];
      const std::uint64_t* r = g_.row(i);
      for (std::size_t w = 0; w < g_.words; ++w) next[w] = r[w];
      descend(i + 1, 1, next);
    }
  }

 private:
  bool stop() const { return shared_.load(std::memory_order_relaxed) <= floor_ || best_->weight <= floor_; }

  void leaf(const std::uint64_t* base, std::size_t i) {
    const std::uint64_t* r = g_.row(i);
    std::size_t wt = 0;
    for (std::size_t w = 0; w < g_.words; ++w) wt += std::popcount(base[w] ^ r[w]);
    if (wt < best_->weight && wt > 0) {
      std::vector<std::uint64_t> v(g_.words);
      for (std::size_t w = 0; w < g_.words; ++w) v[w] = base[w] ^ r[w];
      best_->offer(wt, v.data(), g_.words);
    }
  }

  // `cur` holds the XOR of `depth` chosen rows; rows >= start remain.
  void descend(std::size_t start, std::size_t depth, const std::uint64_t* cur) {
    const std::size_t remaining = level_ - depth;
    if (remaining == 1) {
      for (std::size_t i = start; i < g_.k; ++i) leaf(cur, i);
      return;
    }
    std::uint64_t* next = &partial_[(depth + 1) * g_.words];
    for (std::size_t i = start; i + remaining <= g_.k; ++i) {
      if (depth == 1 && stop()) return;
      const std::uint64_t* r = g_.row(i);
      for (std::size_t w = 0; w < g_.words; ++w) next[w] = cur[w] ^ r[w];
      descend(i + 1, depth + 1, next);
    }
  }

  const Rows& g_;
  std::size_t level_;
  const std::atomic<std::uint64_t>& shared_;
  std::uint64_t floor_;
  std::vector<std::uint64_t> partial_;
  Best* best_ = nullptr;
};

void enumerate_level(const Rows& g, std::size_t level, int jobs, std::uint64_t floor, Best& best) {
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(g.k)));
  std::atomic<std::uint64_t> shared{best.weight};
  if (jobs == 1) {
    CombinationWalker walker(g, level, shared, floor);
    walker.run(0, 1, best);
    return;
  }
  std::vector<Best> local(jobs, best);
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) {
    pool.emplace_back([&, t] {
      CombinationWalker walker(g, level, shared, floor);
      walker.run(t, jobs, local[t]);
      std::uint64_t cur = shared.load();
      while (local[t].weight < cur && !shared.compare_exchange_weak(cur, local[t].weight)) {
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& l : local) {
    // ties resolved by thread order, so the weight is deterministic
    if (l.weight < best.weight) best = l;
  }
}

struct InfoSet {
  Rows g;
  std::size_t rank = 0;  // pivots inside the columns that were still free
};

// Parity-check route: weights 1..3 are excluded by column tests on H.
bool parity_route(const Rows& basis, const BitMatrix& basis_matrix, Best& best, SearchResult& out) {
  const std::size_t n = basis.n;
  const BitMatrix h = nullspace_basis(basis_matrix);
  const std::size_t rows = h.row_count();
  const std::size_t cw = std::max<std::size_t>(1, (rows + 63) / 64);
  std::vector<std::uint64_t> cols(n * cw, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    for (Elem j : h.row(i).support()) cols[j * cw + (i >> 6)] |= std::uint64_t{1} << (i & 63);
  }
  auto col = [&](std::size_t j) { return &cols[j * cw]; };
  auto unit = [&](std::initializer_list<std::size_t> idx) {
    BitVector v(n);
    for (auto j : idx) v.flip(j);
    return v;
  };
  auto finish = [&](std::uint64_t d, BitVector witness) {
    best.weight = d;
    best.witness.assign(witness.data(), witness.data() + witness.word_count());
    out.complete = true;
    out.lower = d;
  };
  for (std::size_t j = 0; j < n; ++j) {
    if (std::all_of(col(j), col(j) + cw, [](std::uint64_t w) { return w == 0; })) {
      finish(1, unit({j}));
      return true;
    }
  }
  std::vector<std::size_t> order(n);
  for (std::size_t j = 0; j < n; ++j) order[j] = j;
  auto less = [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(col(a), col(a) + cw, col(b), col(b) + cw);
  };
  std::sort(order.begin(), order.end(), less);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (std::equal(col(order[i]), col(order[i]) + cw, col(order[i + 1]))) {
      finish(2, unit({order[i], order[i + 1]}));
      return true;
    }
  }
  if (best.weight <= 3) {
    finish(best.weight, to_vector(best.witness.data(), n));
    return true;
  }
  // No three columns sum to zero?
  std::vector<std::uint64_t> sorted(n * cw);
  for (std::size_t i = 0; i < n; ++i) std::copy_n(col(order[i]), cw, &sorted[i * cw]);
  std::vector<std::uint64_t> x(cw);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t w = 0; w < cw; ++w) x[w] = col(a)[w] ^ col(b)[w];
      std::size_t lo = 0, hi = n;
      while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (std::lexicographical_compare(&sorted[mid * cw], &sorted[mid * cw] + cw, x.begin(), x.end())) {
          lo = mid + 1;
        } else {
          hi = mid;
        }
      }
      if (lo < n && std::equal(x.begin(), x.end(), &sorted[lo * cw])) {
        finish(3, unit({a, b, order[lo]}));
        return true;
      }
    }
  }
  finish(best.weight, to_vector(best.witness.data(), n));
  out.lower = 4;
  return true;
}

}  // namespace

std::uint64_t estimated_search_cost(std::size_t n, std::size_t k, std::uint64_t target, bool even) {
  if (k == 0 || target <= (even ? 2u : 1u)) return 0;
  if (k <= 25) return (std::uint64_t{1} << k) - 1;
  if (target <= 4) return static_cast<std::uint64_t>(n) * n;
  return optimistic_cost(n, k, target, even);
}

SearchResult min_distance(const BitMatrix& generators, const DistanceOptions& options) {
  SearchResult out;
  const std::size_t n = generators.cols();
  Best best;
  const std::size_t words = (n + 63) / 64;
  bool even = true;
  for (const auto& r : generators.rows()) {
    const std::size_t w = r.weight();
    if (w & 1) even = false;
    best.offer(w, r.data(), words);
  }
  const std::uint64_t trivial = even ? 2 : 1;
  auto finish = [&](bool complete, std::uint64_t lower, std::string method) {
    out.complete = complete || best.weight <= lower;
    out.best = best.weight;
    out.lower = std::min(std::max(lower, trivial), best.weight);
    if (out.complete) out.lower = best.weight;
    out.method = std::move(method);
    out.witness = to_vector(best.witness.data(), n);
    return out;
  };
  // A generator already meeting the parity bound settles it without elimination.
  if (best.weight <= trivial && options.strategy == SearchStrategy::Auto) {
    return finish(true, trivial, "trivial");
  }
  const Rref e = rank_and_rref(generators);
  const std::size_t k = e.rank;
  if (k == 0) throw BadParameter("minimum distance of the zero code is undefined");
  Rows basis = to_rows(e.rref);
  for (std::size_t i = 0; i < k; ++i) best.offer(weight(basis.row(i), words), basis.row(i), words);
  if (best.weight <= trivial && options.strategy == SearchStrategy::Auto) {
    return finish(true, trivial, "trivial");
  }

  const bool auto_mode = options.strategy == SearchStrategy::Auto;
  if (options.strategy == SearchStrategy::FullEnumeration && k > 40) {
    throw BadParameter("full enumeration requested for k = " + std::to_string(k));
  }
  if ((auto_mode && k <= 25 && (std::uint64_t{1} << k) <= options.budget) ||
      options.strategy == SearchStrategy::FullEnumeration) {
    out.evaluations = (std::uint64_t{1} << k) - 1;
    gray_search(basis, best, trivial);
    return finish(true, best.weight, "gray-code");
  }
  if (auto_mode && best.weight <= 4) {
    parity_route(basis, e.rref, best, out);
    return finish(out.complete, out.lower, "parity-check");
  }

  // Brouwer-Zimmermann. First an optimistic estimate assuming floor(n/k)
  // full information sets, so hopeless searches are skipped before any
  // elimination work.
  const std::uint64_t target = best.weight;
  if (optimistic_cost(n, k, target, even) > options.budget) {
    return finish(false, round_even(std::max<std::size_t>(1, n / k), even), "none");
  }

  std::vector<InfoSet> sets;
  {
    std::vector<char> used(n, 0);
    while (true) {
      std::vector<std::size_t> order;
      for (std::size_t c = 0; c < n; ++c) {
        if (!used[c]) order.push_back(c);
      }
      if (order.empty()) break;
      for (std::size_t c = 0; c < n; ++c) {
        if (used[c]) order.push_back(c);
      }
      InfoSet s{basis, 0};
      const auto pivots = echelon_in_order(s.g, order);
      std::size_t inside = 0;
      for (auto p : pivots) {
        if (!used[p]) ++inside;
      }
      if (inside == 0) break;
      for (auto p : pivots) used[p] = 1;
      s.rank = inside;
      sets.push_back(std::move(s));
    }
  }
  // Partial sets (rank < k) cost as much per level as full ones; keep the
  // prefix (by rank) that minimises the planned cost.
  std::stable_sort(sets.begin(), sets.end(), [](const InfoSet& a, const InfoSet& b) { return a.rank > b.rank; });
  std::size_t full = 0;
  while (full < sets.size() && sets[full].rank == k) ++full;
  std::size_t keep = full;
  std::uint64_t best_cost = kSaturated;
  for (std::size_t p = std::max<std::size_t>(full, 1); p <= sets.size(); ++p) {
    std::vector<std::size_t> ranks;
    for (std::size_t j = 0; j < p; ++j) ranks.push_back(sets[j].rank);
    std::size_t level = 0;
    const std::uint64_t c = plan_cost(ranks, k, target, even, level);
    if (c < best_cost) {
      best_cost = c;
      keep = p;
    }
  }
  sets.resize(keep);

  auto contribution = [&](std::size_t j, std::size_t level) -> std::uint64_t {
    // weight on the info set of any codeword not met among <= level rows
    const std::size_t need = k - sets[j].rank;
    return level + 1 > need ? level + 1 - need : 0;
  };
  std::uint64_t lower = 0;
  for (std::size_t j = 0; j < sets.size(); ++j) lower += contribution(j, 0);
  lower = std::max(round_even(lower, even), trivial);
  std::uint64_t spent = 0;
  for (std::size_t level = 1; level <= k; ++level) {
    for (std::size_t j = 0; j < sets.size(); ++j) {
      const std::uint64_t cost = choose(k, level);
      if (sat_add(spent, cost) > options.budget) {
        out.evaluations = spent;
        return finish(false, lower, "brouwer-zimmermann");
      }
      spent += cost;
      enumerate_level(sets[j].g, level, options.jobs, lower, best);
      if (best.weight <= lower) {
        out.evaluations = spent;
        return finish(true, lower, "brouwer-zimmermann");
      }
      std::uint64_t bound = 0;
      for (std::size_t i = 0; i < sets.size(); ++i) bound += contribution(i, i <= j ? level : level - 1);
      lower = std::max(lower, round_even(bound, even));
      if (lower >= best.weight) {
        out.evaluations = spent;
        return finish(true, best.weight, "brouwer-zimmermann");
      }
    }
  }
  out.evaluations = spent;
  return finish(true, best.weight, "brouwer-zimmermann");
}

DistanceReport exact_min_distance(const LinearCode& code, const DistanceOptions& options) {
  if (code.dimension == 0) throw BadParameter("exact distance needs k >= 1");
  DistanceReport rep;
  const int m = code.m;
  const int r = code.order;
  rep.conjectured = code.conjectured_distance > 0 ? to_u64(code.conjectured_distance) : 0;
  rep.lower_bound = r >= 0 && m - r < 64 ? std::uint64_t{1} << (m - r) : 0;
  const SearchResult s = min_distance(code.generators, options);
  rep.best_known = s.best;
  rep.proven_lower = std::max(s.lower, rep.lower_bound);
  rep.evaluations = s.evaluations;
  rep.witness = s.witness;
  if (s.complete) {
    rep.exact = s.best;
    rep.status = DistanceStatus::VerifiedExact;
    rep.method = s.method;
  } else if (r >= m / 2 && s.best == rep.lower_bound) {
    rep.exact = s.best;
    rep.status = DistanceStatus::ProvenByCorollary;
    rep.method = "corollary";
    rep.proven_lower = s.best;
  } else {
    rep.status = DistanceStatus::ConjectureOnly;
    rep.method = s.method;
  }
  return rep;
}

}  // namespace coxkit
