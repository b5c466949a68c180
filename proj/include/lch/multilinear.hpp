#pragma once

// Sparse multilinear maps V^{⊗k} -> W over GF(2).

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "lch/gf2.hpp"

namespace lch {

using Tuple = std::vector<std::uint32_t>;

/// Coefficient table: basis tuple (i_1, ..., i_k) -> image vector in W.
/// Zero images are never stored.
class MultilinearMap {
 public:
  MultilinearMap() = default;
  MultilinearMap(std::size_t arity, std::size_t out_dim) : arity_(arity), out_dim_(out_dim) {}

  std::size_t arity() const { return arity_; }
  std::size_t out_dim() const { return out_dim_; }
  const std::map<Tuple, BitVec>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  /// Adds v to the image of t.
  void add(const Tuple& t, const BitVec& v);
  void add(const Tuple& t, std::size_t out_index);
  BitVec at(const Tuple& t) const;

  /// Multilinear evaluation on arbitrary vectors.
  BitVec operator()(const std::vector<BitVec>& args) const;

  /// For each output coordinate c, the keys whose image has c set.
  std::vector<std::vector<const Tuple*>> output_index() const;

  bool operator==(const MultilinearMap& other) const {
    return arity_ == other.arity_ && out_dim_ == other.out_dim_ && entries_ == other.entries_;
  }

 private:
  std::size_t arity_ = 0;
  std::size_t out_dim_ = 0;
  std::map<Tuple, BitVec> entries_;
};

/// Sparse accumulator for tables keyed by tuples of mixed length.
class TupleAccumulator {
 public:
  explicit TupleAccumulator(std::size_t out_dim) : out_dim_(out_dim) {}
  void add(const Tuple& t, const BitVec& v);
  /// First nonzero entry in tuple order, if any.
  const std::pair<const Tuple, BitVec>* first_nonzero() const;
  const std::map<Tuple, BitVec>& entries() const { return entries_; }

 private:
  std::size_t out_dim_;
  std::map<Tuple, BitVec> entries_;
};

}  // namespace lch
