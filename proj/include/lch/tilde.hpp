#pragma once

// Truncated bar ("tilde") construction, order-n linearized cohomology and
// mirror/reflection checks.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lch/ainfty.hpp"

namespace lch {

/// Sparse GF(2) matrix as sorted (src << 32 | dst) pairs; pairs appearing an
/// even number of times are removed.
using EdgeList = std::vector<std::uint64_t>;

inline std::uint64_t edge(std::uint32_t src, std::uint32_t dst) { return (std::uint64_t{src} << 32) | dst; }
inline std::uint32_t edge_src(std::uint64_t e) { return static_cast<std::uint32_t>(e >> 32); }
inline std::uint32_t edge_dst(std::uint64_t e) { return static_cast<std::uint32_t>(e & 0xffffffffU); }

/// Sorts and cancels duplicate pairs.
void normalize_edges(EdgeList& edges);

/// Basis of V ⊕ V^{⊗2} ⊕ ... ⊕ V^{⊗n}: words ordered by length, then
/// lexicographically in the factor indices.
class TensorWords {
 public:
  TensorWords() = default;
  TensorWords(const GradedSpace& base, std::size_t order);

  const GradedSpace& base() const { return base_; }
  std::size_t order() const { return order_; }
  std::size_t size() const { return offsets_.back(); }
  /// First id of words of length len (1 <= len <= order + 1).
  std::uint64_t offset(std::size_t len) const { return offsets_.at(len); }
  std::size_t length(std::uint32_t id) const;
  Tuple decode(std::uint32_t id) const;
  std::uint32_t encode(const Tuple& word) const;
  int degree(std::uint32_t id) const { return degrees_[id]; }
  std::string label(std::uint32_t id) const;

 private:
  GradedSpace base_;
  std::size_t order_ = 0;
  std::vector<std::uint64_t> offsets_;  // offsets_[0] unused (= 0)
  std::vector<int> degrees_;
};

struct TildeComplex {
  TensorWords words;
  EdgeList d;  // cochain differential, degree +1
};

struct TildeOptions {
  std::size_t max_words = 4'000'000;
};

/// d^n restricted to V^{⊗a} is sum_{i+j+k=a} 1^{⊗i} ⊗ m_j ⊗ 1^{⊗k}.
TildeComplex tilde_complex(const AInftyStructure& s, std::size_t n, const TildeOptions& options = {});

/// True when the edge list composed with itself vanishes.
bool squares_to_zero(const EdgeList& d, std::size_t size);

/// Ranks of d restricted to each source degree.
std::map<int, std::size_t> ranks_by_degree(const TensorWords& words, const EdgeList& d);

/// Cohomology dimension in every degree carried by the words.
std::map<int, std::size_t> cohomology_dims(const TildeComplex& c);

/// Chain-side differential of the order-n quotient A_(n): Leibniz expansion of
/// the twisted differential on words of length <= n, longer terms dropped.
/// Returned as (source word, target word) pairs on the same word basis.
EdgeList truncated_chain_differential(const Dga& twisted, std::size_t n, const TensorWords& words);

/// Swaps the roles of source and target.
EdgeList transpose(const EdgeList& edges);

struct OrderNResult {
  std::size_t order = 0;
  std::map<int, std::size_t> dims;
  bool lemma_matches = false;  // adjoint of the chain side equals the tilde differential
  std::size_t words = 0;
  std::size_t edges = 0;
};

OrderNResult order_n_cohomology(const Dga& d, const Augmentation& e, std::size_t n,
                                const TildeOptions& options = {});

/// Chain map B̃^n V -> B̃^n W induced by an A_n morphism.
struct TildeMap {
  TensorWords source;
  TensorWords target;
  EdgeList f;  // (source word, target word)
};

TildeMap tilde_of_morphism(const AInftyMorphism& f, std::size_t n, const TildeOptions& options = {});

/// As above, after checking f is an A_n morphism src -> dst (ContractError
/// otherwise); the result is asserted to commute with both tilde differentials.
TildeMap tilde_of_morphism(const AInftyMorphism& f, const AInftyStructure& src, const AInftyStructure& dst,
                           std::size_t n, const TildeOptions& options = {});

/// Composition b ∘ a of edge lists.
EdgeList compose(const EdgeList& a, const EdgeList& b);

/// Checks f d_V = d_W f.
bool is_chain_map(const TildeMap& f, const TildeComplex& src, const TildeComplex& dst);

/// Per degree, the rank of the map induced on cohomology (source must be small).
std::map<int, std::size_t> induced_cohomology_rank(const TildeMap& f, const TildeComplex& src,
                                                   const TildeComplex& dst);

/// Long exact sequence of 0 -> V -> B̃^2 V -> V ⊗ V -> 0 with connecting map mu_2:
///   dim LCH^k(K,2) = dim LCH^k - rank(mu_2 on (H⊗H)^{k-1}) + dim (H⊗H)^k - rank(mu_2 on (H⊗H)^k).
struct SplittingRow {
  int degree = 0;
  std::size_t order_two = 0;
  std::size_t predicted = 0;
  bool ok() const { return order_two == predicted; }
};

struct SplittingReport {
  std::vector<SplittingRow> rows;
  std::string convention;
  bool ok() const;
};

SplittingReport splitting_check_n2(const Dga& d, const Augmentation& e);

struct ReflectionRow {
  std::size_t augmentation = 0;
  std::size_t order = 0;
  bool conjugation_ok = false;  // tau d_K tau = d_mirror on the order-n complexes
  std::map<int, std::size_t> knot_dims;
  std::map<int, std::size_t> mirror_dims;
  bool ok() const { return conjugation_ok && knot_dims == mirror_dims; }
};

/// For every augmentation and every order 1..n, compares the order-n complexes
/// of d and of its mirror through the reversal map tau.
std::vector<ReflectionRow> reflection_compare(const Dga& d, std::size_t n, const TildeOptions& options = {});

}  // namespace lch
