#include <random>
#include <set>
#include <sstream>

#include "coxkit/coxeter_system.hpp"
#include "coxkit/error.hpp"
#include "coxkit/gf2.hpp"
#include "coxkit/group_table.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace coxkit;

namespace {

BitMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double density = 0.5) {
  std::bernoulli_distribution bit(density);
  BitMatrix m(cols);
  for (std::size_t i = 0; i < rows; ++i) {
    BitVector v(cols);
    for (std::size_t j = 0; j < cols; ++j) v.set(j, bit(rng));
    m.append(std::move(v));
  }
  return m;
}

// Rank by brute force: log2 of the number of distinct combinations.
std::size_t brute_rank(const BitMatrix& m) {
  std::set<BitVector> span;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m.row_count()); ++mask) {
    BitVector v(m.cols());
    for (std::size_t i = 0; i < m.row_count(); ++i) {
      if ((mask >> i) & 1) v ^= m.row(i);
    }
    span.insert(v);
  }
  std::size_t r = 0;
  while ((std::size_t{1} << r) < span.size()) ++r;
  return r;
}

}  // namespace

TEST_CASE("bit vector basics") {
  BitVector v = BitVector::from_string("0110100001");
  CHECK(v.size() == 10);
  CHECK(v.weight() == 4);
  CHECK(v.first() == 1);
  CHECK(v.support() == std::vector<Elem>{1, 2, 4, 9});
  CHECK(v.to_string() == "0110100001");
  v.flip(1);
  CHECK(v.first() == 2);
  CHECK(BitVector::ones(130).weight() == 130);
  CHECK_FALSE(BitVector(200).any());
  const BitVector a = BitVector::indicator(70, {0, 65, 69});
  const BitVector b = BitVector::indicator(70, {65, 3});
  CHECK((a ^ b).support() == std::vector<Elem>{0, 3, 69});
  CHECK(schur(a, b).support() == std::vector<Elem>{65});
  CHECK(dot(a, b));
  CHECK_FALSE(dot(a, BitVector::indicator(70, {0, 69})));
  CHECK_THROWS_AS(BitVector::from_string("01x"), BadParameter);
}

TEST_CASE("rank against brute force") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + trial % 12;
    const std::size_t cols = 1 + (trial * 7) % 90;
    const BitMatrix m = random_matrix(rng, rows, cols, trial % 3 == 0 ? 0.1 : 0.5);
    CAPTURE(trial);
    const Rref e = rank_and_rref(m);
    CHECK(e.rank == brute_rank(m));
    CHECK(rank(m) == e.rank);
    CHECK(m.rank() == e.rank);
    CHECK(same_rowspace(m, e.rref));
    // reduced echelon: each pivot column has exactly one one
    for (std::size_t i = 0; i < e.rank; ++i) {
      for (std::size_t j = 0; j < e.rank; ++j) CHECK(e.rref.row(j).get(e.pivots[i]) == (i == j));
      if (i) CHECK(e.pivots[i - 1] < e.pivots[i]);
    }
  }
}

TEST_CASE("nullspace is orthogonal and of complementary dimension") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const BitMatrix m = random_matrix(rng, 1 + trial % 15, 5 + trial * 3);
    const BitMatrix ns = nullspace_basis(m);
    CHECK(rank(ns) == ns.row_count());
    CHECK(ns.row_count() + rank(m) == m.cols());
    for (const auto& u : ns.rows()) {
      for (const auto& v : m.rows()) CHECK_FALSE(dot(u, v));
    }
  }
}

TEST_CASE("row space membership") {
  std::mt19937_64 rng(3);
  const BitMatrix m = random_matrix(rng, 6, 40);
  const RowSpace space(m);
  for (const auto& v : oracle::all_codewords(m)) CHECK(space.contains(v));
  CHECK(space.contains_all(m));
  BitVector outside(40);
  std::size_t misses = 0;
  for (std::size_t j = 0; j < 40; ++j) {
    outside = BitVector(40);
    outside.set(j);
    misses += !in_rowspace(m, outside);
  }
  CHECK(misses > 0);
  CHECK_FALSE(same_rowspace(m, BitMatrix::identity(40)));
  CHECK(same_rowspace(BitMatrix::identity(40), rank_and_rref(BitMatrix::identity(40)).rref));
}

TEST_CASE("generator matrix round trip") {
  std::mt19937_64 rng(5);
  const BitMatrix m = random_matrix(rng, 9, 77);
  std::stringstream ss;
  write_generator_matrix(ss, m);
  const BitMatrix back = read_generator_matrix(ss);
  CHECK(back.rows() == m.rows());
  std::stringstream bad("2 3\n0101\n");
  CHECK_THROWS_AS(read_generator_matrix(bad), LengthMismatch);
  std::stringstream short_input("4 3\n0101\n");
  CHECK_THROWS_AS(read_generator_matrix(short_input), BadParameter);
}

TEST_CASE("left translation is a permutation action") {
  const CoxeterSystem sys = family_b(3);
  const GroupTable t = enumerate_group(sys);
  std::mt19937_64 rng(9);
  std::bernoulli_distribution bit(0.4);
  BitVector v(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) v.set(i, bit(rng));
  for (Elem a = 0; a < t.size(); a += 5) {
    for (Elem b = 1; b < t.size(); b += 7) {
      // (ab) v = a (b v)
      const auto ab = t.left_multiplication(a)[b];
      CHECK(left_translate(t, ab, v) == left_translate(t, a, left_translate(t, b, v)));
    }
    CHECK(left_translate(t, a, v).weight() == v.weight());
  }
  CHECK(left_translate(t, 0, v) == v);
  // the delta at e is moved to the delta at a
  for (Elem a = 0; a < t.size(); ++a) {
    CHECK(left_translate(t, a, BitVector::indicator(t.size(), {0})).support() == std::vector<Elem>{a});
  }
}

TEST_CASE("convolution of indicators") {
  const GroupTable t = enumerate_group(family_a(2));
  // (f * v)(u) = sum_{a} f(a) v(a^{-1} u)
  BitVector f = BitVector::indicator(6, {0, 1});
  BitVector v = BitVector::indicator(6, {2});
  BitVector expected(6);
  expected ^= left_translate(t, 0, v);
  expected ^= left_translate(t, 1, v);
  CHECK(convolve(t, f, v) == expected);
}
