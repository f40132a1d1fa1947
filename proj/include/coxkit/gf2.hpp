#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "coxkit/group_table.hpp"

namespace coxkit {

/// Packed vector over GF(2). Padding bits past size() are always zero.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  static BitVector ones(std::size_t n);
  static BitVector indicator(std::size_t n, const std::vector<Elem>& support);
  /// Parses a string of '0'/'1' characters.
  static BitVector from_string(const std::string& bits);

  std::size_t size() const { return n_; }
  std::size_t word_count() const { return words_.size(); }
  const std::uint64_t* data() const { return words_.data(); }
  std::uint64_t* data() { return words_.data(); }

  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i, bool value = true) {
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (value) {
      words_[i >> 6] |= bit;
    } else {
      words_[i >> 6] &= ~bit;
    }
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  std::size_t weight() const;
  bool any() const;
  /// Index of the lowest set bit, or size() if zero.
  std::size_t first() const;
  std::vector<Elem> support() const;

  BitVector& operator^=(const BitVector& other);
  BitVector& operator&=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend bool operator==(const BitVector& a, const BitVector& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }
  friend bool operator<(const BitVector& a, const BitVector& b) {
    return a.n_ != b.n_ ? a.n_ < b.n_ : a.words_ < b.words_;
  }

  std::string to_string() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Inner product over GF(2).
bool dot(const BitVector& a, const BitVector& b);

/// Row-major GF(2) matrix with a lazily cached rank.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t cols) : cols_(cols) {}
  BitMatrix(std::size_t cols, std::vector<BitVector> rows);

  static BitMatrix identity(std::size_t n);

  std::size_t cols() const { return cols_; }
  std::size_t row_count() const { return rows_.size(); }
  const BitVector& row(std::size_t i) const { return rows_[i]; }
  const std::vector<BitVector>& rows() const { return rows_; }

  void append(BitVector row);

  std::size_t rank() const;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
  mutable std::optional<std::size_t> rank_;
};

struct Rref {
  std::size_t rank = 0;
  BitMatrix rref;                   // nonzero rows only, leftmost pivots
  std::vector<std::size_t> pivots;  // pivot column of each rref row
};

Rref rank_and_rref(const BitMatrix& m);
std::size_t rank(const BitMatrix& m);

/// Basis of {x : m x = 0}.
BitMatrix nullspace_basis(const BitMatrix& m);

/// Reduced echelon basis kept for repeated membership queries.
class RowSpace {
 public:
  explicit RowSpace(const BitMatrix& m);
  std::size_t dim() const { return echelon_.rank; }
  std::size_t cols() const { return echelon_.rref.cols(); }
  /// v reduced against the basis (zero iff v is in the span).
  BitVector reduce(BitVector v) const;
  bool contains(const BitVector& v) const;
  /// True if every row of m lies in this space.
  bool contains_all(const BitMatrix& m) const;
  const Rref& echelon() const { return echelon_; }

 private:
  Rref echelon_;
};

bool in_rowspace(const BitMatrix& m, const BitVector& v);
bool same_rowspace(const BitMatrix& a, const BitMatrix& b);

/// Coordinate-wise product.
BitVector schur(const BitVector& u, const BitVector& v);

/// result(u) = v(w^{-1} u), i.e. the convolution 1_w * v.
BitVector left_translate(const GroupTable& table, Elem w, const BitVector& v);
/// Same, with a precomputed left_multiplication(w) permutation.
BitVector left_translate(const std::vector<Elem>& left_mult, const BitVector& v);

/// f * v in the group algebra, as the sum of translates over supp(f).
BitVector convolve(const GroupTable& table, const BitVector& f, const BitVector& v);

/// Text format: "n k" then k lines of n characters in {0,1}.
void write_generator_matrix(std::ostream& os, const BitMatrix& m);
BitMatrix read_generator_matrix(std::istream& is);

}  // namespace coxkit
