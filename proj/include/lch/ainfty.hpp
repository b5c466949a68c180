#pragma once

// A-infinity structures with degree +1 operations, morphisms, relation checks,
// the adjoint structure of a twisted DGA and minimal-model transfer.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lch/algebra.hpp"
#include "lch/augment.hpp"
#include "lch/linear.hpp"
#include "lch/multilinear.hpp"

namespace lch {

struct AInftyStructure {
  GradedSpace space;
  std::vector<MultilinearMap> m;  // m[k] for 1 <= k <= max_arity(); m[0] is unused

  std::size_t max_arity() const { return m.empty() ? 0 : m.size() - 1; }
  /// Operation of arity k, or nullptr when it is zero or beyond the stored range.
  const MultilinearMap* op(std::size_t k) const;
  /// m_1 as a degree +1 differential.
  GradedMap differential() const;
};

AInftyStructure zero_structure(const GradedSpace& space, std::size_t max_arity);

/// Dual of the twisted differential: m_k(p_{i_1}, ..., p_{i_k}) contains p_q
/// exactly when q_{i_1} ... q_{i_k} is a term of d^eps q.
AInftyStructure adjoint_structure(const Dga& d, const Augmentation& e);

/// Adjoint of an arbitrary DGA without constant terms (no augmentation step).
AInftyStructure adjoint_of_twisted(const Dga& twisted);

/// m^mir_k(x_1, ..., x_k) = m_k(x_k, ..., x_1).
AInftyStructure mirror_structure(const AInftyStructure& s);

/// Structure expressed in a new basis; basis[u] is the new basis vector u
/// written in the old coordinates. Each basis vector must be homogeneous.
AInftyStructure transform_structure(const AInftyStructure& s, const std::vector<BitVec>& basis);

/// Homology of (V, m_1) with retract data.
Homology homology_of(const AInftyStructure& s);

struct AInftyMorphism {
  GradedSpace source;
  GradedSpace target;
  std::vector<MultilinearMap> f;  // f[n] : source^{⊗n} -> target, f[0] unused

  std::size_t max_arity() const { return f.empty() ? 0 : f.size() - 1; }
  const MultilinearMap* component(std::size_t n) const;
};

/// Morphism with f_1 given by images of source basis vectors and f_n = 0 for n > 1.
AInftyMorphism linear_morphism(const GradedSpace& source, const GradedSpace& target,
                               const std::vector<BitVec>& images);

struct RelationReport {
  bool ok = true;
  std::size_t arity = 0;
  Tuple tuple;
  std::string message;
  explicit operator bool() const { return ok; }
};

/// Every stored entry of m_k has output degree sum + 1.
RelationReport check_degrees(const AInftyStructure& s);

/// The A_n relations sum m_{i+1+k}(1^i ⊗ m_j ⊗ 1^k) = 0 for 1 <= l <= up_to,
/// evaluated on every basis tuple (absent operations are zero).
RelationReport check_an_relations(const AInftyStructure& s, std::size_t up_to);

/// The morphism equation up to arity up_to:
///   sum f_{i+1+k}(1^i ⊗ m_j ⊗ 1^k) = sum n_r(f_{i_1} ⊗ ... ⊗ f_{i_r}).
RelationReport check_ainfty_morphism(const AInftyMorphism& f, const AInftyStructure& src,
                                     const AInftyStructure& dst, std::size_t up_to);

/// [x] ∪ [y] = p(m_2(i(x), i(y))) for class vectors x, y.
BitVec cup_product(const Homology& h, const AInftyStructure& s, const BitVec& x, const BitVec& y);

/// Rooted planar tree; a node without children is a leaf.
struct PlanarTree {
  std::vector<PlanarTree> children;

  bool is_leaf() const { return children.empty(); }
  std::size_t leaves() const;
  /// Child counts in depth-first preorder (0 for leaves).
  std::vector<std::size_t> signature() const;
  std::string format() const;
};

/// All planar trees with k leaves whose internal vertices have at least two
/// children, ordered by signature.
std::vector<PlanarTree> enumerate_trees(std::size_t k);

/// g_T(args): m at every internal vertex, h on every internal edge.
BitVec evaluate_tree(const PlanarTree& t, const AInftyStructure& s, const Homology& h,
                     const std::vector<BitVec>& args);

struct MinimalModel {
  AInftyStructure mu;  // on homology classes; mu_1 = 0
  AInftyMorphism i;    // i_1 = inclusion of representatives, i_k = h g_k i^{⊗k}
};

/// Homotopy transfer of s to the homology of m_1 through the retract data h,
/// for arities up to `up_to`.
MinimalModel transfer_minimal_model(const Homology& h, const AInftyStructure& s, std::size_t up_to);

}  // namespace lch
