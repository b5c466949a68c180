#pragma once

// Bit-packed linear algebra over GF(2).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lch {

/// Dense GF(2) vector packed into 64-bit words.
class BitVec {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  BitVec() = default;
  explicit BitVec(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  static BitVec unit(std::size_t size, std::size_t index) {
    BitVec v(size);
    v.set(index);
    return v;
  }

  std::size_t size() const { return size_; }

  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void flip(std::size_t i) { words_[i >> 6] ^= (std::uint64_t{1} << (i & 63)); }
  void assign(std::size_t i, bool value) { value ? set(i) : reset(i); }

  BitVec& operator^=(const BitVec& other);
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }

  bool any() const;
  bool none() const { return !any(); }
  std::size_t count() const;
  /// Index of the lowest set bit at or after `from`, or npos.
  std::size_t next(std::size_t from = 0) const;
  std::vector<std::size_t> ones() const;
  /// Inner product sum_i a_i b_i over GF(2).
  bool dot(const BitVec& other) const;

  /// Concatenation helpers used when embedding a block into a larger space.
  BitVec slice(std::size_t begin, std::size_t length) const;

  std::string to_string() const;

  bool operator==(const BitVec& other) const = default;
  std::strong_ordering operator<=>(const BitVec& other) const;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Incrementally built span of GF(2) vectors with coordinate tracking.
///
/// Vectors passed to `add` that are independent of the current span are
/// "accepted" and numbered 0, 1, ... in acceptance order. `solve` expresses a
/// vector of the span in terms of the accepted vectors. Pivots are the lowest
/// set bit of each echelon row, so results are deterministic in input order.
class LinearSpan {
 public:
  explicit LinearSpan(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return accepted_.size(); }
  const std::vector<BitVec>& accepted() const { return accepted_; }

  /// Returns true when v was independent and has been accepted.
  bool add(const BitVec& v);
  bool contains(const BitVec& v) const { return reduce(v).none(); }
  BitVec reduce(const BitVec& v) const;
  /// Coordinates of v over the accepted vectors, or nullopt if v is outside the span.
  std::optional<BitVec> solve(const BitVec& v) const;

 private:
  struct Row {
    std::size_t pivot;
    BitVec vec;
    BitVec combo;  // over accepted vectors; grows as vectors are accepted
  };
  static BitVec resized(const BitVec& v, std::size_t size);

  std::size_t dim_;
  std::vector<Row> rows_;
  std::vector<BitVec> accepted_;
};

/// Rank of a sparse GF(2) matrix. Each row is a list of column indices
/// (duplicates cancel). Uses minimum-degree pivoting to limit fill-in.
std::size_t sparse_rank(std::vector<std::vector<std::uint32_t>> rows, std::size_t num_cols);

/// Rank of a list of dense vectors.
std::size_t rank_of(const std::vector<BitVec>& vectors);

/// Inverse of a square matrix given by rows, or nullopt if singular.
std::optional<std::vector<BitVec>> invert(const std::vector<BitVec>& rows);

}  // namespace lch
