#include "coxkit/quantum.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <sstream>

#include "coxkit/error.hpp"

namespace coxkit {

CssCode build_css(const GroupTable& table, const CoxeterSystem& system, int q, int r) {
  const int m = system.rank();
  if (q < -1 || q > r || r > m) throw BadParameter("quantum code needs -1 <= q <= r <= m");
  CssCode css;
  css.system_name = system.name();
  css.m = m;
  css.q = q;
  css.r = r;
  css.c1 = build_code(table, system, m - q - 1);
  css.c2 = build_code(table, system, r);
  css.n = table.size();
  // C1^perp = C(q) must sit inside C2.
  const LinearCode c1_perp = build_code(table, system, q);
  if (!RowSpace(css.c2.generators).contains_all(c1_perp.generators)) {
    throw DimensionMismatch("C1^perp is not contained in C2");
  }
  if (css.c1.dimension + css.c2.dimension < css.n) throw DimensionMismatch("negative logical dimension");
  css.k = css.c1.dimension + css.c2.dimension - css.n;
  const BigInt expected = profile_of(system).range_sum(q, r);
  if (BigInt(css.k) != expected) {
    throw DimensionMismatch("k = " + std::to_string(css.k) + " but the Eulerian sum is " + expected.str());
  }
  if (q < r) css.d = std::uint64_t{1} << std::min(q + 1, m - r);
  return css;
}

CssParams css_params(const EulerianProfile& profile, int q, int r) {
  const int m = profile.rank();
  if (q < -1 || q >= r || r > m) throw BadParameter("css parameters need -1 <= q < r <= m");
  return {profile.total(), profile.range_sum(q, r), power(2, std::min(q + 1, m - r))};
}

StabilizerSupports stabilizer_generators(const GroupTable& table, int q, int r) {
  const int m = table.rank();
  if (q < -1 || q > r || r > m) throw BadParameter("stabilizers need -1 <= q <= r <= m");
  auto supports = [&](int size) {
    std::vector<BitVector> out;
    for (GenSet J : subsets_of_size(m, size)) {
      const CosetPartition p = coset_partition(table, J);
      std::vector<BitVector> rows(p.representatives.size(), BitVector(table.size()));
      for (Elem u = 0; u < table.size(); ++u) rows[p.label[u]].set(u);
      for (auto& row : rows) out.push_back(std::move(row));
    }
    return out;
  };
  return {supports(m - q), supports(r + 1)};
}

std::string export_stabilizers(const StabilizerSupports& s) {
  std::string out;
  for (const auto& v : s.x) out += "X " + v.to_string() + "\n";
  for (const auto& v : s.z) out += "Z " + v.to_string() + "\n";
  return out;
}

std::string to_string(ZkVerdict v) {
  switch (v) {
    case ZkVerdict::BreaksCodespace:
      return "breaks_codespace";
    case ZkVerdict::NontrivialLogical:
      return "nontrivial_logical";
    case ZkVerdict::LogicalIdentity:
      return "logical_identity";
  }
  return "?";
}

ZkVerdict zk_predict(int q, int r, int k_level, int coset_rank) {
  if (q < 0 || q >= r) throw BadParameter("prediction needs 0 <= q < r");
  if (k_level < 1) throw BadParameter("Z(k) needs k >= 1");
  if (coset_rank < 0) throw BadParameter("coset rank must be nonnegative");
  const int breaks_to = q + k_level * r;
  const int nontrivial_to = (k_level + 1) * r;
  if (coset_rank <= breaks_to) return ZkVerdict::BreaksCodespace;
  if (coset_rank <= nontrivial_to) return ZkVerdict::NontrivialLogical;
  return ZkVerdict::LogicalIdentity;
}

namespace {

// Basis kept in fully reduced form: no row has another row's pivot set.
class ReducedBasis {
 public:
  explicit ReducedBasis(std::size_t n) : n_(n) {}
  // Reduces v; if independent, stores it and returns true.
  bool insert(BitVector v, BitVector* reduced = nullptr) {
    v = reduce(std::move(v));
    if (reduced) *reduced = v;
    if (!v.any()) return false;
    const std::size_t p = v.first();
    for (auto& row : rows_) {
      if (row.get(p)) row ^= v;
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }
  BitVector reduce(BitVector v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (v.get(pivots_[i])) v ^= rows_[i];
    }
    return v;
  }
  const std::vector<BitVector>& rows() const { return rows_; }
  std::size_t n() const { return n_; }

 private:
  std::size_t n_;
  std::vector<BitVector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace

ZkSimulation zk_simulate(const CssCode& css, const StandardCoset& R, int k_level, const ZkOptions& options) {
  if (k_level < 1 || k_level > 30) throw BadParameter("Z(k) needs 1 <= k <= 30");
  const std::size_t n = css.n;
  const std::uint32_t modulus = std::uint32_t{1} << (k_level + 1);
  const BitVector support = BitVector::indicator(n, R.members);
  auto theta = [&](const BitVector& v) {
    return static_cast<std::uint32_t>(schur(v, support).weight() % modulus);
  };

  // Stabilizer part C1^perp, then a transversal of C2 / C1^perp taken from
  // the C2 generators in order.
  ReducedBasis basis(n);
  const Rref stabilizers = rank_and_rref(nullspace_basis(css.c1.generators));
  for (const auto& row : stabilizers.rref.rows()) basis.insert(row);
  const std::size_t stab_dim = basis.rows().size();
  std::vector<BitVector> stab_rows = basis.rows();
  std::vector<BitVector> transversal;
  const Rref c2 = rank_and_rref(css.c2.generators);
  for (const auto& row : c2.rref.rows()) {
    BitVector reduced;
    if (basis.insert(row, &reduced)) transversal.push_back(reduced);
  }
  const std::size_t logical = transversal.size();

  ZkSimulation sim;
  const bool full = stab_dim <= 20 && stab_dim + logical <= 22;
  if (full) {
    // Gray-code walk over the logical part outside, stabilizer part inside.
    std::vector<std::uint32_t> phases;
    BitVector c(n);
    const std::uint64_t outer = std::uint64_t{1} << logical;
    const std::uint64_t inner = std::uint64_t{1} << stab_dim;
    for (std::uint64_t i = 0; i < outer; ++i) {
      if (i) c ^= transversal[std::countr_zero(i)];
      const std::uint32_t base = theta(c);
      BitVector v = c;
      for (std::uint64_t j = 1; j < inner; ++j) {
        v ^= stab_rows[std::countr_zero(j)];
        ++sim.states;
        if (theta(v) != base) {
          sim.verdict = ZkVerdict::BreaksCodespace;
          std::ostringstream os;
          os << "phase " << base << " on the coset representative but " << theta(v)
             << " on another member (units of pi/2^" << k_level << ")";
          sim.evidence = os.str();
          sim.phases.clear();
          return sim;
        }
      }
      ++sim.states;
      phases.push_back(base);
    }
    const bool constant = std::all_of(phases.begin(), phases.end(), [&](std::uint32_t p) { return p == phases[0]; });
    sim.verdict = constant ? ZkVerdict::LogicalIdentity : ZkVerdict::NontrivialLogical;
    if (!constant) {
      const auto it = std::find_if(phases.begin(), phases.end(), [&](std::uint32_t p) { return p != phases[0]; });
      std::ostringstream os;
      os << "coset " << (it - phases.begin()) << " (Gray order) picks up relative phase "
         << (*it + modulus - phases[0]) % modulus << " (units of pi/2^" << k_level << ")";
      sim.evidence = os.str();
    }
    sim.phases = std::move(phases);
    return sim;
  }

  if (!options.allow_randomized) {
    throw ModeUnavailable("code too large for exhaustive Z(k) simulation and sampling is disabled");
  }
  sim.exhaustive = false;
  std::mt19937_64 rng(options.seed);
  auto random_combination = [&](const std::vector<BitVector>& rows) {
    BitVector v(n);
    for (const auto& row : rows) {
      if (rng() & 1) v ^= row;
    }
    return v;
  };
  const std::uint32_t zero_phase = theta(BitVector(n));
  bool constant = true;
  std::string evidence;
  for (std::uint64_t s = 0; s < options.samples; ++s) {
    const BitVector c = random_combination(transversal);
    const BitVector v = c ^ random_combination(stab_rows);
    sim.states += 2;
    const std::uint32_t pc = theta(c);
    if (theta(v) != pc) {
      sim.verdict = ZkVerdict::BreaksCodespace;
      sim.evidence = "sampled coset member with a different phase (sample " + std::to_string(s) + ")";
      return sim;
    }
    if (pc != zero_phase && constant) {
      constant = false;
      evidence = "sampled coset with relative phase " + std::to_string((pc + modulus - zero_phase) % modulus);
    }
  }
  sim.verdict = constant ? ZkVerdict::LogicalIdentity : ZkVerdict::NontrivialLogical;
  sim.evidence = evidence;
  return sim;
}

QmuDimension qmu_dimension(int n, int mu) {
  if (n < 2 || mu < 1) throw BadParameter("qmu dimension needs n >= 2, mu >= 1");
  QmuDimension out;
  EulerianProfile base{{1, 2 * n - 2, 1}};
  EulerianProfile p{{1}};
  for (int i = 0; i < mu; ++i) p = profile_product(p, base);
  out.dimension = p.counts[mu];
  if (n == 3) {
    BigInt s = 0;
    for (int i = 0; 2 * i <= mu; ++i) {
      s += factorial(mu) / (factorial(i) * factorial(i) * factorial(mu - 2 * i)) * power(4, mu - 2 * i);
    }
    out.closed_form = s;
  }
  out.hypercube = power(4, mu);
  const BigInt lhs = 16 * out.dimension;
  const BigInt rhs = (16 + BigInt(mu) * (mu - 1)) * out.hypercube;
  out.bound_holds = lhs >= rhs;
  out.bound_strict = lhs > rhs;
  return out;
}

}  // namespace coxkit
