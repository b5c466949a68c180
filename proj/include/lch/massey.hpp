#pragma once

// Massey products of all orders on the cohomology of an A-infinity algebra.

#include <cstddef>
#include <string>
#include <vector>

#include "lch/ainfty.hpp"

namespace lch {

struct MasseyResult {
  enum class Status { Defined, Undefined };

  Status status = Status::Undefined;
  int degree = 0;                    // degree of the bracket
  BitVec representative;             // class, reduced modulo the indeterminacy
  std::vector<BitVec> indeterminacy; // basis of the indeterminacy subspace
  std::vector<BitVec> values;        // distinct classes reached (higher orders)
  BitVec witness;                    // obstruction class when undefined
  std::string reason;
  bool truncated = false;
  std::size_t systems = 0;           // defining systems evaluated

  bool defined() const { return status == Status::Defined; }
  /// Defined and the coset does not contain zero.
  bool nonzero() const { return defined() && representative.any(); }
};

/// Reduces v modulo span(basis) to a canonical coset representative.
BitVec reduce_modulo(const BitVec& v, const std::vector<BitVec>& basis);

/// {x, y, z} for class vectors x, y, z (homogeneous).
MasseyResult massey_triple(const Homology& h, const AInftyStructure& s, const BitVec& x, const BitVec& y,
                           const BitVec& z);

/// Triple product computed from arbitrary cocycle representatives a, b, c,
/// solving for the bounding cochains instead of using h.
MasseyResult massey_triple_cochains(const Homology& h, const AInftyStructure& s, const BitVec& a,
                                    const BitVec& b, const BitVec& c);

struct MasseyOptions {
  std::size_t max_systems = std::size_t{1} << 20;
};

/// {x_1, ..., x_n} over all defining systems b_lm = h(S_lm) + i(eta_lm),
/// b_mm = i(x_m). The value set is reported as representative + span of differences.
MasseyResult massey_higher(const Homology& h, const AInftyStructure& s, const std::vector<BitVec>& classes,
                           const MasseyOptions& options = {});

/// Sum over k >= 2 and splittings l <= i_1 < ... < i_{k-1} < m of
/// m_k(b_{l,i_1}, ..., b_{i_{k-1}+1,m}); b is indexed as b[l][m], 0-based.
BitVec massey_sum(const AInftyStructure& s, const std::vector<std::vector<BitVec>>& b, std::size_t l,
                  std::size_t m);

}  // namespace lch
