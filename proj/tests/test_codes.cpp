#include <random>

#include "coxkit/codes.hpp"
#include "coxkit/coxeter_system.hpp"
#include "coxkit/error.hpp"
#include "coxkit/eulerian.hpp"
#include "coxkit/family.hpp"
#include "coxkit/gf2.hpp"
#include "coxkit/group_table.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace coxkit;

namespace {

// Point of F_2^m reached by the reduced word of each element of Z_2^m.
std::vector<std::uint32_t> hypercube_positions(const GroupTable& t) {
  std::vector<std::uint32_t> pos(t.size());
  for (Elem w = 0; w < t.size(); ++w) {
    std::uint32_t p = 0;
    for (int g : t.word(w)) p ^= 1u << g;
    pos[p] = w;
  }
  return pos;
}

const char* const kSmallSystems[] = {"A2", "A3", "B3", "A1^4", "I2(5)", "I2(3)^2", "A2xA1", "H3", "D4", "A4"};

}  // namespace

TEST_CASE("subset enumeration") {
  CHECK(subsets_of_size(4, 2) == std::vector<GenSet>{0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100});
  CHECK(subsets_of_size(3, 0) == std::vector<GenSet>{0});
  CHECK(subsets_of_size(3, 3) == std::vector<GenSet>{0b111});
  CHECK(subsets_of_size(3, 4).empty());
  CHECK(subsets_of_size(20, 10).size() == 184756);
}

TEST_CASE("hypercube codes are Reed-Muller codes") {
  for (int m = 1; m <= 6; ++m) {
    const CoxeterSystem sys = family_z2(m);
    const GroupTable t = enumerate_group(sys);
    const auto pos = hypercube_positions(t);
    for (int r = -1; r <= m; ++r) {
      CAPTURE(m);
      CAPTURE(r);
      const LinearCode code = build_code(t, sys, r);
      CHECK(same_rowspace(code.generators, oracle::reed_muller(r, m, pos)));
      if (r >= 0) CHECK(code.conjectured_distance == power(2, m - r));
    }
  }
}

TEST_CASE("dimensions follow the Eulerian partial sums") {
  for (const char* name : kSmallSystems) {
    const CoxeterSystem sys = parse_system(name);
    const GroupTable t = enumerate_group(sys);
    const EulerianProfile p = profile_by_counting(t);
    for (int r = -1; r <= sys.rank(); ++r) {
      CAPTURE(name);
      CAPTURE(r);
      const LinearCode code = build_code(t, sys, r);  // throws on mismatch
      CHECK(BigInt(code.dimension) == p.partial_sum(r));
      CHECK(code.length == t.size());
    }
  }
  const CoxeterSystem a3 = family_a(3);
  CHECK(build_code(enumerate_group(a3), a3, 1).dimension == 12);
  CHECK_THROWS_AS(build_code(enumerate_group(a3), a3, 4), BadParameter);
}

TEST_CASE("degenerate orders") {
  const CoxeterSystem sys = family_b(3);
  const GroupTable t = enumerate_group(sys);
  CHECK(build_code(t, sys, -1).dimension == 0);
  const LinearCode rep = build_code(t, sys, 0);
  CHECK(rep.dimension == 1);
  CHECK(rep.generators.row(0) == BitVector::ones(48));
  CHECK(build_code(t, sys, 3).dimension == 48);
  const LinearCode even = build_code(t, sys, 2);
  CHECK(even.dimension == 47);
  // 47-dimensional: the even-weight code
  for (const auto& row : even.generators.rows()) CHECK(row.weight() % 2 == 0);
}

TEST_CASE("nesting, duality and extension bases") {
  for (const char* name : kSmallSystems) {
    const CoxeterSystem sys = parse_system(name);
    const GroupTable t = enumerate_group(sys);
    const int m = sys.rank();
    std::vector<LinearCode> codes;
    for (int r = -1; r <= m; ++r) codes.push_back(build_code(t, sys, r));
    for (int r = -1; r <= m; ++r) {
      CAPTURE(name);
      CAPTURE(r);
      const LinearCode& c = codes[r + 1];
      if (r >= 0) CHECK(RowSpace(c.generators).contains_all(codes[r].generators));
      const LinearCode& other = codes[m - r - 1 + 1];
      const LinearCode d = dual_code(c);
      CHECK(d.order == m - r - 1);
      CHECK(same_rowspace(d.generators, other.generators));
      for (const auto& u : c.generators.rows()) {
        for (const auto& v : other.generators.rows()) CHECK_FALSE(dot(u, v));
      }
      const BitMatrix fwd = extension_basis(t, r, Direction::Forward);
      const BitMatrix rev = extension_basis(t, r, Direction::Reverse);
      CHECK(fwd.row_count() == c.dimension);
      CHECK(rank(fwd) == c.dimension);
      CHECK(same_rowspace(fwd, c.generators));
      CHECK(rev.row_count() == c.dimension);
      CHECK(same_rowspace(rev, c.generators));
    }
  }
}

TEST_CASE("codes are left ideals") {
  std::mt19937_64 rng(1);
  for (const char* name : {"A3", "B3", "I2(3)^2"}) {
    const CoxeterSystem sys = parse_system(name);
    const GroupTable t = enumerate_group(sys);
    for (int r = 0; r < sys.rank(); ++r) {
      const LinearCode c = build_code(t, sys, r);
      const RowSpace space(c.generators);
      for (Elem w = 0; w < t.size(); ++w) {
        const auto perm = t.left_multiplication(w);
        const auto& row = c.generators.row(rng() % c.generators.row_count());
        CHECK(space.contains(left_translate(perm, row)));
      }
    }
  }
}

TEST_CASE("products of codes") {
  // C(r1) * C(r2) lies in C(r1 + r2)
  for (const char* name : {"A3", "I2(3)^2", "B3"}) {
    const CoxeterSystem sys = parse_system(name);
    const GroupTable t = enumerate_group(sys);
    const int m = sys.rank();
    for (int r1 = 0; r1 <= m; ++r1) {
      for (int r2 = 0; r1 + r2 <= m; ++r2) {
        const LinearCode a = build_code(t, sys, r1), b = build_code(t, sys, r2);
        const RowSpace target(build_code(t, sys, r1 + r2).generators);
        for (const auto& u : a.generators.rows()) {
          for (const auto& v : b.generators.rows()) CHECK(target.contains(schur(u, v)));
        }
      }
    }
  }
}

TEST_CASE("restriction to maximal standard cosets") {
  for (const char* name : {"A3", "B3", "A4", "I2(3)^2", "H3"}) {
    const CoxeterSystem sys = parse_system(name);
    const GroupTable t = enumerate_group(sys);
    for (int r = 0; r <= sys.rank(); ++r) {
      CAPTURE(name);
      CAPTURE(r);
      CHECK(check_restriction(t, sys, r).empty());
    }
  }
}

TEST_CASE("brute-force minimum weights match the smallest parabolic subgroup") {
  for (const char* name : {"A2", "A3", "B3", "I2(5)", "I2(3)^2", "A2xA1", "A1^4", "I2(8)"}) {
    const CoxeterSystem sys = parse_system(name);
    const GroupTable t = enumerate_group(sys);
    for (int r = 0; r <= sys.rank(); ++r) {
      const LinearCode code = build_code(t, sys, r);
      if (code.dimension > 20) continue;  // A3 r=1 still fits
      CAPTURE(name);
      CAPTURE(r);
      const BitMatrix basis = rank_and_rref(code.generators).rref;
      CHECK(BigInt(oracle::brute_min_weight(basis)) == code.conjectured_distance);
    }
  }
}

TEST_CASE("family formulas against computed codes") {
  CHECK(T(4, 2) == 4);
  CHECK(T(7, 3) == 24);
  CHECK(T(5, 5) == 1);
  for (int m = 2; m <= 4; ++m) {
    const CoxeterSystem sys = family_a(m);
    const GroupTable t = enumerate_group(sys);
    for (int r = 0; r <= m; ++r) {
      CAPTURE(m);
      CAPTURE(r);
      const FamilyParams p = family_params({FamilyDescriptor::Kind::A, m}, r);
      const LinearCode c = build_code(t, sys, r);
      CHECK(p.length == BigInt(t.size()));
      CHECK(p.dimension == BigInt(c.dimension));
      CHECK(p.distance == c.conjectured_distance);
    }
  }
  for (int n : {3, 4, 5}) {
    for (int mu = 1; mu <= 2; ++mu) {
      const CoxeterSystem sys = family_i2(n, mu);
      const GroupTable t = enumerate_group(sys);
      for (int r = 0; r <= 2 * mu; ++r) {
        CAPTURE(n);
        CAPTURE(mu);
        CAPTURE(r);
        FamilyDescriptor f{FamilyDescriptor::Kind::I2, 1, n, mu};
        const FamilyParams p = family_params(f, r);
        const LinearCode c = build_code(t, sys, r);
        CHECK(p.dimension == BigInt(c.dimension));
        CHECK(p.distance == c.conjectured_distance);
      }
    }
  }
}
