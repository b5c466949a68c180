#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lch/algebra.hpp"

namespace lch {

/// A GF(2) value for each generator, indexed by GenId.
struct Augmentation {
  std::vector<std::uint8_t> values;

  bool operator()(GenId g) const { return values.at(g) != 0; }
  auto operator<=>(const Augmentation&) const = default;
};

/// epsilon applied to a polynomial (multiplicative on words, eps(1) = 1).
bool evaluate(const Poly& p, const Augmentation& e);

/// Name of the first generator violating gradedness or eps(d q) = 0, if any.
std::optional<std::string> augmentation_violation(const Dga& d, const Augmentation& e);

/// All graded augmentations in lexicographic order of their value vectors.
std::vector<Augmentation> enumerate_augmentations(const Dga& d);

/// Substitutes q -> q + eps(q) in every differential without checking eps.
/// The result is the twisted DGA when eps is an augmentation.
Dga conjugate_by_shift(const Dga& d, const Augmentation& e);

/// Twisted DGA with differential phi^eps d (phi^eps)^{-1}; its constant part is zero.
Dga twist(const Dga& d, const Augmentation& e);

/// Augmentation of apply_elementary_iso(d, iso) corresponding to e: e composed with phi.
Augmentation transport(const Dga& d, const Augmentation& e, const ElementaryIso& iso);

/// Extends e by zero over generators appended to the DGA (e.g. by stabilization).
Augmentation extend_by_zero(const Augmentation& e, std::size_t num_generators);

std::string format_augmentation(const Dga& d, const Augmentation& e);

}  // namespace lch
