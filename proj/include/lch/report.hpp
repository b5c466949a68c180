#pragma once

// Report documents for every CLI command, rendered as indented text or JSON.
// Key order is fixed by construction, so output is byte-stable.

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"
#include "lch/duality.hpp"
#include "lch/fingerprint.hpp"
#include "lch/tilde.hpp"

namespace lch {

using Document = nlohmann::ordered_json;

enum class Format { Text, Structured };

std::string render(const Document& doc, Format format);

/// "[b2] + [b1+b3]": classes by representative, or "0".
std::string format_class(const Homology& h, const BitVec& v);

/// Parses a '+'-separated sum of generator names into a vector over the generators.
BitVec parse_cochain(const Dga& d, const std::string& spec);

Document validate_document(const Dga& d, const std::vector<std::string>& warnings);
Document augmentations_document(const Dga& d);
Document linhom_document(const Dga& d, std::size_t aug);
Document ring_document(const Dga& d, std::size_t aug);
/// Each entry of `classes` is a cocycle given by parse_cochain syntax.
Document massey_document(const Dga& d, std::size_t aug, const std::vector<std::string>& classes,
                         const MasseyOptions& options);
Document minimal_document(const Dga& d, std::size_t aug, std::size_t arity);
Document ordern_document(const Dga& d, std::size_t aug, std::size_t n);
Document duality_document(const Dga& d, std::size_t aug);
Document compare_document(const MirrorVerdict& verdict);
Document full_report(const Dga& d, const FingerprintOptions& options);

/// Augmentation by enumeration index; throws ContractError when out of range.
Augmentation select_augmentation(const Dga& d, std::size_t index);

}  // namespace lch
