#include "coxkit/gf2.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>

#include "coxkit/error.hpp"

namespace coxkit {

namespace {

void check_same_length(const BitVector& a, const BitVector& b) {
  if (a.size() != b.size()) {
    throw LengthMismatch("bit vectors of length " + std::to_string(a.size()) + " and " +
                         std::to_string(b.size()));
  }
}

// Dense word matrix used for elimination.
struct Dense {
  std::size_t rows = 0;
  std::size_t words = 0;
  std::vector<std::uint64_t> data;

  explicit Dense(const BitMatrix& m)
      : rows(m.row_count()), words((m.cols() + 63) / 64), data(rows * words) {
    for (std::size_t r = 0; r < rows; ++r) {
      std::copy_n(m.row(r).data(), words, &data[r * words]);
    }
  }
  std::uint64_t* row(std::size_t r) { return &data[r * words]; }
  bool bit(std::size_t r, std::size_t c) const { return (data[r * words + (c >> 6)] >> (c & 63)) & 1U; }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a != b) std::swap_ranges(row(a), row(a) + words, row(b));
  }
  void xor_into(std::size_t dst, std::size_t src, std::size_t from_word) {
    std::uint64_t* d = row(dst);
    const std::uint64_t* s = row(src);
    for (std::size_t w = from_word; w < words; ++w) d[w] ^= s[w];
  }
};

// Gauss-Jordan with leftmost pivots. When `reduce` is false only rows below
// the pivot are cleared, which is enough for the rank.
std::size_t eliminate(Dense& d, std::size_t cols, bool reduce, std::vector<std::size_t>* pivots) {
  std::size_t pr = 0;
  for (std::size_t c = 0; c < cols && pr < d.rows; ++c) {
    std::size_t found = d.rows;
    for (std::size_t r = pr; r < d.rows; ++r) {
      if (d.bit(r, c)) {
        found = r;
        break;
      }
    }
    if (found == d.rows) continue;
    d.swap_rows(pr, found);
    const std::size_t w0 = c >> 6;
    for (std::size_t r = reduce ? 0 : pr + 1; r < d.rows; ++r) {
      if (r != pr && d.bit(r, c)) d.xor_into(r, pr, w0);
    }
    if (pivots) pivots->push_back(c);
    ++pr;
  }
  return pr;
}

}  // namespace

BitVector BitVector::ones(std::size_t n) {
  BitVector v(n);
  for (std::size_t w = 0; w < v.words_.size(); ++w) v.words_[w] = ~std::uint64_t{0};
  if (n & 63) v.words_.back() = (std::uint64_t{1} << (n & 63)) - 1;
  return v;
}

BitVector BitVector::indicator(std::size_t n, const std::vector<Elem>& support) {
  BitVector v(n);
  for (Elem e : support) v.set(e);
  return v;
}

BitVector BitVector::from_string(const std::string& bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw BadParameter("bit string contains '" + std::string(1, bits[i]) + "'");
    }
  }
  return v;
}

std::size_t BitVector::weight() const {
  std::size_t total = 0;
  for (auto w : words_) total += std::popcount(w);
  return total;
}

bool BitVector::any() const {
  return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t BitVector::first() const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i]) return i * 64 + std::countr_zero(words_[i]);
  }
  return n_;
}

std::vector<Elem> BitVector::support() const {
  std::vector<Elem> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    for (std::uint64_t w = words_[i]; w; w &= w - 1) {
      out.push_back(static_cast<Elem>(i * 64 + std::countr_zero(w)));
    }
  }
  return out;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  check_same_length(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  check_same_length(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

std::string BitVector::to_string() const {
  std::string s(n_, '0');
  for (std::size_t i = 0; i < n_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

bool dot(const BitVector& a, const BitVector& b) {
  check_same_length(a, b);
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < a.word_count(); ++i) acc ^= a.data()[i] & b.data()[i];
  return std::popcount(acc) & 1;
}

BitMatrix::BitMatrix(std::size_t cols, std::vector<BitVector> rows) : cols_(cols), rows_(std::move(rows)) {
  for (const auto& r : rows_) {
    if (r.size() != cols_) throw LengthMismatch("matrix row has the wrong length");
  }
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    BitVector v(n);
    v.set(i);
    m.append(std::move(v));
  }
  return m;
}

void BitMatrix::append(BitVector row) {
  if (row.size() != cols_) throw LengthMismatch("matrix row has the wrong length");
  rows_.push_back(std::move(row));
  rank_.reset();
}

std::size_t BitMatrix::rank() const {
  if (!rank_) {
    Dense d(*this);
    rank_ = eliminate(d, cols_, false, nullptr);
  }
  return *rank_;
}

Rref rank_and_rref(const BitMatrix& m) {
  Dense d(m);
  Rref out;
  out.rank = eliminate(d, m.cols(), true, &out.pivots);
  std::vector<BitVector> rows;
  rows.reserve(out.rank);
  for (std::size_t r = 0; r < out.rank; ++r) {
    BitVector v(m.cols());
    std::copy_n(d.row(r), d.words, v.data());
    rows.push_back(std::move(v));
  }
  out.rref = BitMatrix(m.cols(), std::move(rows));
  return out;
}

std::size_t rank(const BitMatrix& m) { return m.rank(); }

BitMatrix nullspace_basis(const BitMatrix& m) {
  const Rref e = rank_and_rref(m);
  const std::size_t n = m.cols();
  std::vector<char> is_pivot(n, 0);
  for (auto p : e.pivots) is_pivot[p] = 1;
  BitMatrix out(n);
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    BitVector v(n);
    v.set(f);
    for (std::size_t i = 0; i < e.rank; ++i) {
      if (e.rref.row(i).get(f)) v.set(e.pivots[i]);
    }
    out.append(std::move(v));
  }
  return out;
}

RowSpace::RowSpace(const BitMatrix& m) : echelon_(rank_and_rref(m)) {}

BitVector RowSpace::reduce(BitVector v) const {
  if (v.size() != cols()) throw LengthMismatch("vector length does not match the row space");
  for (std::size_t i = 0; i < echelon_.rank; ++i) {
    if (v.get(echelon_.pivots[i])) v ^= echelon_.rref.row(i);
  }
  return v;
}

bool RowSpace::contains(const BitVector& v) const { return !reduce(v).any(); }

bool RowSpace::contains_all(const BitMatrix& m) const {
  return std::all_of(m.rows().begin(), m.rows().end(), [&](const BitVector& r) { return contains(r); });
}

bool in_rowspace(const BitMatrix& m, const BitVector& v) {
  if (v.size() != m.cols()) throw LengthMismatch("vector length does not match the matrix");
  return RowSpace(m).contains(v);
}

bool same_rowspace(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.cols()) return false;
  const Rref ea = rank_and_rref(a);
  const Rref eb = rank_and_rref(b);
  // The reduced echelon form is a canonical basis of the row space.
  return ea.rank == eb.rank && ea.rref.rows() == eb.rref.rows();
}

BitVector schur(const BitVector& u, const BitVector& v) {
  BitVector out = u;
  out &= v;
  return out;
}

BitVector left_translate(const std::vector<Elem>& left_mult, const BitVector& v) {
  if (v.size() != left_mult.size()) throw LengthMismatch("vector length does not match |W|");
  BitVector out(v.size());
  for (Elem u : v.support()) out.set(left_mult[u]);
  return out;
}

BitVector left_translate(const GroupTable& table, Elem w, const BitVector& v) {
  return left_translate(table.left_multiplication(w), v);
}

BitVector convolve(const GroupTable& table, const BitVector& f, const BitVector& v) {
  if (f.size() != table.size() || v.size() != table.size()) {
    throw LengthMismatch("group algebra elements must have length |W|");
  }
  BitVector acc(table.size());
  for (Elem w : f.support()) acc ^= left_translate(table, w, v);
  return acc;
}

void write_generator_matrix(std::ostream& os, const BitMatrix& m) {
  os << m.cols() << ' ' << m.row_count() << '\n';
  for (const auto& r : m.rows()) os << r.to_string() << '\n';
}

BitMatrix read_generator_matrix(std::istream& is) {
  std::size_t n = 0, k = 0;
  if (!(is >> n >> k)) throw BadParameter("generator matrix: missing 'n k' header");
  BitMatrix m(n);
  std::string line;
  for (std::size_t i = 0; i < k; ++i) {
    if (!(is >> line)) throw BadParameter("generator matrix: expected " + std::to_string(k) + " rows");
    if (line.size() != n) {
      throw LengthMismatch("generator matrix: row " + std::to_string(i + 1) + " has length " +
                           std::to_string(line.size()) + ", expected " + std::to_string(n));
    }
    m.append(BitVector::from_string(line));
  }
  return m;
}

}  // namespace coxkit
