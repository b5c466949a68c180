#pragma once

// Search for the cup-product duality certificate: kappa in LCH_1, c in LCH^1
// with <c, kappa> = 1 and a complement of span(c) on which
// ([a], [b]) -> <[a] ∪ [b], kappa> is symmetric and non-degenerate.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lch/ainfty.hpp"

namespace lch {

struct DualityCertificate {
  BitVec kappa;                    // chain homology class of degree 1
  BitVec c;                        // cohomology class of degree 1
  std::vector<BitVec> complement;  // basis of the complement, as class vectors
  std::vector<BitVec> gram;        // gram[a].get(b) = <complement[a] ∪ complement[b], kappa>
  /// Index pairs (a, b), a <= b, when the Gram matrix is a symmetric permutation matrix.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

struct DualityReport {
  std::optional<DualityCertificate> certificate;
  std::size_t candidates = 0;  // (kappa, c, complement) triples examined
  std::string reason;          // why no certificate was found
};

struct DualityOptions {
  std::size_t max_complements = 64;  // complements tried per (kappa, c)
};

/// <cochain class, chain class> computed on representatives.
bool pairing(const Homology& cochain, const BitVec& c, const Homology& chain, const BitVec& kappa);

DualityReport duality_search(const Homology& chain, const Homology& cochain, const AInftyStructure& s,
                             const DualityOptions& options = {});

/// dim LCH^1 = dim LCH_{-1} + 1 and dim LCH^k = dim LCH_{-k} for k != ±1.
std::optional<std::string> duality_dimension_violation(const Homology& chain, const Homology& cochain);

}  // namespace lch
