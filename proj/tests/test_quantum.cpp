#include <algorithm>

#include "coxkit/codes.hpp"
#include "coxkit/coxeter_system.hpp"
#include "coxkit/error.hpp"
#include "coxkit/eulerian.hpp"
#include "coxkit/quantum.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace coxkit;

namespace {

ZkVerdict from_oracle(oracle::Verdict v) {
  switch (v) {
    case oracle::Verdict::Breaks:
      return ZkVerdict::BreaksCodespace;
    case oracle::Verdict::Nontrivial:
      return ZkVerdict::NontrivialLogical;
    case oracle::Verdict::Identity:
      break;
  }
  return ZkVerdict::LogicalIdentity;
}

// Minimum weight over span(a) \ span(b), by listing every codeword.
std::uint64_t min_weight_outside(const BitMatrix& a, const BitMatrix& b) {
  const RowSpace inner(b);
  std::uint64_t best = UINT64_MAX;
  for (const auto& v : oracle::all_codewords(a)) {
    if (!inner.contains(v)) best = std::min<std::uint64_t>(best, v.weight());
  }
  return best;
}

}  // namespace

TEST_CASE("CSS parameters of the dihedral powers") {
  const auto p1 = css_params(profile_of(family_i2(3)), 0, 1);
  CHECK(p1.n == 6);
  CHECK(p1.k == 4);
  CHECK(p1.d == 2);
  const auto p3 = css_params(profile_of(family_i2(3, 3)), 2, 3);
  CHECK(p3.n == 216);
  CHECK(p3.k == 88);
  CHECK(p3.d == 8);
  const auto p4 = css_params(profile_of(family_i2(3, 4)), 3, 4);
  CHECK(p4.n == 1296);
  CHECK(p4.k == 454);
  CHECK(p4.d == 16);
  CHECK_THROWS_AS(css_params(profile_of(family_i2(3)), 1, 1), BadParameter);
}

TEST_CASE("explicit CSS codes match the parameter formula") {
  for (const char* name : {"I2(3)", "I2(4)", "A3", "B3", "I2(3)^2", "A1^4"}) {
    const CoxeterSystem sys = parse_system(name);
    const GroupTable t = enumerate_group(sys);
    const EulerianProfile prof = profile_of(sys);
    const int m = sys.rank();
    for (int q = -1; q <= m; ++q) {
      for (int r = q; r <= m; ++r) {
        CAPTURE(name);
        CAPTURE(q);
        CAPTURE(r);
        const CssCode css = build_css(t, sys, q, r);
        CHECK(BigInt(css.k) == prof.range_sum(q, r));
        if (q == r) {
          CHECK(css.k == 0);
          CHECK_FALSE(css.d.has_value());
        } else {
          CHECK(BigInt(*css.d) == css_params(prof, q, r).d);
        }
        const StabilizerSupports s = stabilizer_generators(t, q, r);
        // X supports span C(q), Z supports span C(m-r-1), and they commute.
        CHECK(same_rowspace(BitMatrix(t.size(), s.x), build_code(t, sys, q).generators));
        CHECK(same_rowspace(BitMatrix(t.size(), s.z), build_code(t, sys, m - r - 1).generators));
        for (const auto& x : s.x) {
          for (const auto& z : s.z) CHECK_FALSE(dot(x, z));
        }
      }
    }
  }
}

TEST_CASE("quantum distance spot checks") {
  // d = min(wt(C2 \ C1^perp), wt(C1 \ C2^perp)) by listing every codeword.
  for (const char* name : {"I2(3)", "I2(4)", "I2(5)", "A1^3", "A1^4"}) {
    const CoxeterSystem sys = parse_system(name);
    const GroupTable t = enumerate_group(sys);
    const int m = sys.rank();
    for (int q = 0; q < m; ++q) {
      for (int r = q + 1; r < m; ++r) {
        CAPTURE(name);
        CAPTURE(q);
        CAPTURE(r);
        const CssCode css = build_css(t, sys, q, r);
        const BitMatrix c1_perp = build_code(t, sys, q).generators;
        const BitMatrix c2_perp = build_code(t, sys, m - r - 1).generators;
        const std::uint64_t dz = min_weight_outside(css.c2.generators, c1_perp);
        const std::uint64_t dx = min_weight_outside(css.c1.generators, c2_perp);
        CHECK(std::min(dz, dx) == *css.d);
      }
    }
  }
}

TEST_CASE("stabilizer export format") {
  const CoxeterSystem sys = family_i2(3);
  const GroupTable t = enumerate_group(sys);
  const StabilizerSupports s = stabilizer_generators(t, 0, 1);
  const std::string text = export_stabilizers(s);
  CHECK(text == "X 111111\nZ 111111\n");
}

TEST_CASE("interval rule") {
  CHECK(zk_predict(0, 1, 1, 0) == ZkVerdict::BreaksCodespace);
  CHECK(zk_predict(0, 1, 1, 1) == ZkVerdict::BreaksCodespace);
  CHECK(zk_predict(0, 1, 1, 2) == ZkVerdict::NontrivialLogical);
  CHECK(zk_predict(0, 1, 1, 3) == ZkVerdict::LogicalIdentity);
  CHECK(zk_predict(0, 1, 2, 2) == ZkVerdict::BreaksCodespace);
  CHECK(zk_predict(0, 1, 2, 3) == ZkVerdict::NontrivialLogical);
  CHECK(zk_predict(1, 2, 1, 3) == ZkVerdict::BreaksCodespace);
  CHECK(zk_predict(1, 2, 1, 4) == ZkVerdict::NontrivialLogical);
  CHECK_THROWS_AS(zk_predict(1, 1, 1, 0), BadParameter);
  CHECK(to_string(ZkVerdict::BreaksCodespace) == "breaks_codespace");
}

TEST_CASE("Z(k) simulation agrees with a dense projector computation") {
  struct Case {
    const char* name;
    int q, r;
  };
  for (const Case& c : {Case{"I2(3)", 0, 1}, Case{"I2(4)", 0, 1}, Case{"I2(5)", 0, 1}, Case{"A1^3", 0, 1},
                        Case{"A1^3", 0, 2}, Case{"A1^3", 1, 2}}) {
    const CoxeterSystem sys = parse_system(c.name);
    const GroupTable t = enumerate_group(sys);
    const CssCode css = build_css(t, sys, c.q, c.r);
    const StabilizerSupports s = stabilizer_generators(t, c.q, c.r);
    const oracle::Dense projector = oracle::css_projector(t.size(), s.x, s.z);
    for (GenSet J = 0; J < (GenSet{1} << sys.rank()); ++J) {
      const CosetPartition p = coset_partition(t, J);
      for (Elem rep : p.representatives) {
        const StandardCoset R = standard_coset(t, rep, J);
        for (int k = 1; k <= 3; ++k) {
          CAPTURE(c.name);
          CAPTURE(c.q);
          CAPTURE(c.r);
          CAPTURE(J);
          CAPTURE(rep);
          CAPTURE(k);
          const ZkSimulation sim = zk_simulate(css, R, k);
          CHECK(sim.exhaustive);
          const auto dense = oracle::dense_zk_verdict(projector, t.size(), BitVector::indicator(t.size(), R.members), k);
          CHECK(sim.verdict == from_oracle(dense));
        }
      }
    }
  }
}

TEST_CASE("randomized mode is deterministic and can be disabled") {
  const CoxeterSystem sys = family_a(4);
  const GroupTable t = enumerate_group(sys);
  const CssCode css = build_css(t, sys, 1, 2);  // C1^perp has dimension 27
  const StandardCoset R = standard_coset(t, 0, 0b0011);
  ZkOptions opt;
  opt.samples = 200;
  const ZkSimulation a = zk_simulate(css, R, 1, opt);
  const ZkSimulation b = zk_simulate(css, R, 1, opt);
  CHECK_FALSE(a.exhaustive);
  CHECK(a.verdict == b.verdict);
  CHECK(a.evidence == b.evidence);
  opt.allow_randomized = false;
  CHECK_THROWS_AS(zk_simulate(css, R, 1, opt), ModeUnavailable);
}

TEST_CASE("central dihedral dimension") {
  for (int mu = 1; mu <= 30; ++mu) {
    CAPTURE(mu);
    const QmuDimension d = qmu_dimension(3, mu);
    REQUIRE(d.closed_form.has_value());
    CHECK(d.dimension == *d.closed_form);
    CHECK(d.dimension == profile_of(family_i2(3, mu)).counts[mu]);
    CHECK(d.bound_holds);
    if (mu >= 4) CHECK(d.bound_strict);
  }
  CHECK(qmu_dimension(3, 3).dimension == 88);
  CHECK(qmu_dimension(3, 4).dimension == 454);
  CHECK_FALSE(qmu_dimension(4, 2).closed_form.has_value());
}
