#pragma once

// Free unital tensor algebra over GF(2) and differential graded algebras on it.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace lch {

using GenId = std::uint32_t;

/// A word in the generators; the empty word is the unit.
using Word = std::vector<GenId>;

/// Canonical term order: shorter words first, then lexicographic in generator index.
struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Element of Z_modulus, or of Z when modulus is 0.
class Grading {
 public:
  Grading() = default;
  explicit Grading(int value, int modulus = 0);

  int value() const { return value_; }
  int modulus() const { return modulus_; }

  Grading operator+(Grading other) const;
  Grading operator-() const { return Grading(-value_, modulus_); }
  Grading operator-(Grading other) const { return *this + (-other); }
  bool operator==(const Grading&) const = default;

  /// Canonical representative of v in this grading group.
  static int reduce(int v, int modulus);

 private:
  int value_ = 0;
  int modulus_ = 0;
};

/// Noncommutative polynomial over GF(2): a set of words.
class Poly {
 public:
  Poly() = default;

  /// Builds a polynomial from a list of words; repeated words cancel in pairs.
  /// If `cancelled` is given, it receives the number of words that vanished.
  static Poly from_terms(std::vector<Word> terms, std::size_t* cancelled = nullptr);
  static Poly one() { return from_terms({Word{}}); }
  static Poly generator(GenId g) { return from_terms({Word{g}}); }

  const std::vector<Word>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool contains(const Word& w) const;
  std::size_t max_length() const;

  Poly& operator+=(const Poly& other);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  bool operator==(const Poly& other) const = default;

 private:
  std::vector<Word> terms_;
};

/// Terms of word length exactly k (the k-th component of a differential).
Poly component(const Poly& p, std::size_t k);

/// Reverses the letters of every term.
Poly reversed(const Poly& p);

/// Algebra homomorphism determined by generator images: q_i -> images[i].
Poly substitute(const Poly& p, const std::vector<Poly>& images);

struct Generator {
  std::string name;
  int degree = 0;  // reduced modulo the DGA modulus
  bool operator==(const Generator&) const = default;
};

/// A semi-free DGA over GF(2) on finitely many generators.
///
/// Construction checks only that names are unique and that every generator
/// has a differential entry; homological validity is checked by validate_dga.
class Dga {
 public:
  Dga() = default;
  Dga(int modulus, std::vector<Generator> generators, std::vector<Poly> differential);

  int modulus() const { return modulus_; }
  std::size_t size() const { return generators_.size(); }
  const std::vector<Generator>& generators() const { return generators_; }
  const Generator& generator(GenId g) const { return generators_.at(g); }
  const std::string& name(GenId g) const { return generators_.at(g).name; }
  Grading grading(GenId g) const { return Grading(generators_.at(g).degree, modulus_); }
  int degree(GenId g) const { return generators_.at(g).degree; }
  int degree(const Word& w) const;
  int reduce(int v) const { return Grading::reduce(v, modulus_); }

  const std::vector<Poly>& differential() const { return differential_; }
  const Poly& d(GenId g) const { return differential_.at(g); }
  /// Leibniz extension: d(vw) = d(v)w + v d(w), d(1) = 0.
  Poly d(const Poly& p) const;
  Poly d(const Word& w) const;

  std::optional<GenId> find(std::string_view name) const;
  GenId id(std::string_view name) const;  // throws ContractError

  /// True when every letter of p names a declared generator.
  bool in_range(const Poly& p) const;

  std::string format(const Word& w) const;
  std::string format(const Poly& p) const;

  bool operator==(const Dga& other) const {
    return modulus_ == other.modulus_ && generators_ == other.generators_ &&
           differential_ == other.differential_;
  }

 private:
  int modulus_ = 0;
  std::vector<Generator> generators_;
  std::vector<Poly> differential_;
  std::unordered_map<std::string, GenId> index_;
};

struct Violation {
  enum class Kind { Structural, Inhomogeneous, SquareNonzero };
  Kind kind;
  GenId generator;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> structural;
  std::vector<Violation> violations;
  bool valid() const { return structural.empty() && violations.empty(); }
};

ValidationReport validate_dga(const Dga& d);

/// Differential of the Legendrian mirror: every word reversed.
Dga mirror_dga(const Dga& d);

/// Degree-i stabilization: adds e1 (degree i) and e2 (degree i-1) with d e1 = e2.
Dga stabilize(const Dga& d, Grading degree, const std::pair<std::string, std::string>& names);

/// q_target -> q_target + shift, identity on other generators.
struct ElementaryIso {
  GenId target = 0;
  Poly shift;
};

/// Pushforward differential phi d phi^{-1} under an elementary isomorphism.
Dga apply_elementary_iso(const Dga& d, const ElementaryIso& iso);

/// Image of p under the elementary isomorphism (phi is its own inverse).
Poly apply_iso(const Poly& p, const ElementaryIso& iso, std::size_t num_generators);

}  // namespace lch
