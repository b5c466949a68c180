#pragma once

// Parametrized knot families whose DGAs are given by explicit tables:
// "cupex" (k, l, m), detected by cup products, and "masseyex" (k, l, m, n),
// detected by Massey triple products.

#include <string>
#include <vector>

#include "lch/algebra.hpp"

namespace lch {

struct FamilyResult {
  Dga dga;
  std::vector<std::string> warnings;  // grading collisions that weaken the mirror argument
};

FamilyResult cupex(int k, int l, int m);
FamilyResult masseyex(int k, int l, int m, int n);

/// Dispatches on the family name; params must have the family's arity.
FamilyResult generate_family(const std::string& name, const std::vector<int>& params);

}  // namespace lch
