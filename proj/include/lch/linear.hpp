#pragma once

// Graded GF(2) vector spaces, linearized complexes and homology with retract data.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lch/algebra.hpp"
#include "lch/augment.hpp"
#include "lch/gf2.hpp"

namespace lch {

/// Finite graded vector space with a labelled basis.
struct GradedSpace {
  int modulus = 0;
  std::vector<std::string> labels;
  std::vector<int> degrees;

  std::size_t size() const { return labels.size(); }
  int reduce(int v) const { return Grading::reduce(v, modulus); }
  std::vector<std::size_t> basis_of_degree(int k) const;
  /// Distinct degrees carried by the basis, ascending.
  std::vector<int> degree_set() const;
  /// Degree of a homogeneous nonzero vector, or nullopt if inhomogeneous or zero.
  std::optional<int> degree_of(const BitVec& v) const;
  std::string format(const BitVec& v) const;

  bool operator==(const GradedSpace&) const = default;
};

/// Degree-homogeneous endomorphism given by the images of basis vectors.
struct GradedMap {
  GradedSpace space;
  int shift = 0;
  std::vector<BitVec> images;

  BitVec apply(const BitVec& v) const;
  GradedMap transpose(int new_shift) const;
  bool squares_to_zero() const;
};

/// Space of the generators of d (labels = names, degrees = gradings).
GradedSpace generator_space(const Dga& d);

struct LinearizedComplexes {
  GradedMap chain;    // component 1 of the twisted differential, degree -1
  GradedMap cochain;  // its adjoint on the dual basis, degree +1
};

LinearizedComplexes linearized_complexes(const Dga& d, const Augmentation& e);

/// Homology of a differential with explicit representatives and a strong
/// deformation retract (i, p, h):
///   p i = id,  id + i p = dh + hd,  h h = 0,  h i = 0,  p h = 0.
///
/// Each degree is split as B + R + D where B is the image of the differential,
/// R the chosen representatives and D a set of basis vectors mapped
/// isomorphically onto B; h inverts that isomorphism and kills B and R.
class Homology {
 public:
  explicit Homology(GradedMap differential);

  const GradedMap& differential() const { return d_; }
  const GradedSpace& space() const { return d_.space; }
  /// Homology basis: one entry per class, degrees ascending, labels from representatives.
  const GradedSpace& classes() const { return classes_; }
  std::size_t dim() const { return reps_.size(); }
  std::size_t dim(int degree) const;
  /// Dimension in every degree of the underlying space (zeros included).
  std::map<int, std::size_t> dims() const;
  std::vector<std::size_t> classes_of_degree(int degree) const { return classes_.basis_of_degree(degree); }

  const BitVec& rep(std::size_t c) const { return reps_.at(c); }
  BitVec i(const BitVec& x) const;
  BitVec p(const BitVec& v) const;
  BitVec h(const BitVec& v) const;

  bool is_cycle(const BitVec& v) const { return d_.apply(v).none(); }
  bool is_boundary(const BitVec& v) const;

 private:
  GradedMap d_;
  GradedSpace classes_;
  std::vector<BitVec> reps_;
  std::vector<BitVec> p_images_;  // p(e_j), over classes
  std::vector<BitVec> h_images_;  // h(e_j), over the space
  LinearSpan boundaries_;
};

/// First violated retract identity, if any.
std::optional<std::string> check_retract(const Homology& h);

}  // namespace lch
