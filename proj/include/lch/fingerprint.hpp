#pragma once

// Basis-independent summaries of the linearized A-infinity data, and the
// knot-versus-mirror comparison built on them.

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lch/massey.hpp"

namespace lch {

struct MasseyFlags {
  bool defined = false;  // some choice of nonzero classes has a defined bracket
  bool nonzero = false;  // some defined bracket is nonzero modulo indeterminacy
  auto operator<=>(const MasseyFlags&) const = default;
};

struct AugmentationFingerprint {
  std::map<int, std::size_t> dims;
  std::map<std::pair<int, int>, std::size_t> cup_ranks;  // rank of mu_2 on H^r ⊗ H^s, nonzero only
  std::map<std::vector<int>, MasseyFlags> massey;        // degree tuple -> flags, defined only
  std::map<std::size_t, std::map<int, std::size_t>> order_n;
  bool truncated = false;  // some enumeration hit a cap

  auto operator<=>(const AugmentationFingerprint&) const = default;
};

struct FingerprintOptions {
  std::size_t massey_order = 3;        // brackets of orders 3..massey_order
  std::size_t order_n_cap = 2;         // order-n dims for 1 <= n <= cap
  std::size_t max_class_vectors = 15;  // nonzero vectors tried per degree
  MasseyOptions massey;
  std::size_t threads = 1;
};

/// Fingerprint of the structure s (m_1 = linearized codifferential).
AugmentationFingerprint fingerprint_structure(const AInftyStructure& s, const FingerprintOptions& options);

/// Multiset of augmentation fingerprints, sorted.
struct Fingerprint {
  std::vector<AugmentationFingerprint> augmentations;
  bool operator==(const Fingerprint&) const = default;
};

Fingerprint fingerprint_dga(const Dga& d, const FingerprintOptions& options);

struct MirrorVerdict {
  bool distinguished = false;
  std::string invariant;  // "dims", "cup", "massey", "order-n", or empty
  std::string witness;
  Fingerprint knot;
  Fingerprint mirror;
};

/// Compares fingerprints of two DGAs; the first is reported as the knot.
MirrorVerdict compare_fingerprints(const Fingerprint& knot, const Fingerprint& mirror);

MirrorVerdict compare_mirror(const Dga& d, const FingerprintOptions& options);

}  // namespace lch
