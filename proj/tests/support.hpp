#pragma once

// Shared fixtures and random generators for the test suites.

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "lch/families.hpp"
#include "lch/io.hpp"
#include "lch/linear.hpp"

namespace lch::test {

inline Dga trefoil() {
  return parse_dga(R"(modulus 0
gen a1 1
gen a2 1
gen b1 0
gen b2 0
gen b3 0
d a1 = 1 + b1 + b3 + b1 b2 b3
d a2 = 1 + b1 + b3 + b3 b2 b1
)")
      .dga;
}

inline Dga cupex137() { return cupex(1, 3, 7).dga; }
inline Dga masseyex14920() { return masseyex(1, 4, 9, 20).dga; }

struct Named {
  std::string name;
  Dga dga;
};

inline std::vector<Named> bundled() {
  return {{"trefoil", trefoil()}, {"cupex(1,3,7)", cupex137()}, {"masseyex(1,4,9,20)", masseyex14920()}};
}

inline Augmentation by_support(const Dga& d, const std::vector<std::string>& names) {
  Augmentation e{std::vector<std::uint8_t>(d.size(), 0)};
  for (const auto& n : names) e.values[d.id(n)] = 1;
  return e;
}

/// Vector over the generators with the named coordinates set.
inline BitVec cochain(const Dga& d, const std::vector<std::string>& names) {
  BitVec v(d.size());
  for (const auto& n : names) v.flip(d.id(n));
  return v;
}

/// Class vector of the cocycle with the given support.
inline BitVec class_of(const Homology& h, const Dga& d, const std::vector<std::string>& names) {
  return h.p(cochain(d, names));
}

inline std::map<int, std::size_t> nonzero_dims(const std::map<int, std::size_t>& dims) {
  std::map<int, std::size_t> out;
  for (const auto& [k, n] : dims)
    if (n) out[k] = n;
  return out;
}

inline std::map<int, std::size_t> linearized_dims(const Dga& d, const Augmentation& e) {
  return nonzero_dims(Homology(linearized_complexes(d, e).cochain).dims());
}

/// Random homogeneous polynomial of the given degree in the generators other
/// than `skip`, with words of length at most max_len. Sampling keeps it cheap
/// on large DGAs.
inline Poly random_homogeneous(const Dga& d, GenId skip, int degree, std::size_t max_len, std::mt19937& rng,
                               std::size_t samples = 200) {
  std::vector<Word> terms;
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<GenId> letter(0, static_cast<GenId>(d.size() - 1));
  std::bernoulli_distribution keep(0.3);
  for (std::size_t s = 0; s < samples && terms.size() < 4; ++s) {
    Word w(len(rng));
    bool ok = true;
    for (auto& g : w) {
      g = letter(rng);
      ok &= g != skip;
    }
    if (ok && d.degree(w) == d.reduce(degree) && keep(rng)) terms.push_back(std::move(w));
  }
  return Poly::from_terms(std::move(terms));
}

inline ElementaryIso random_iso(const Dga& d, std::mt19937& rng, std::size_t max_len = 3) {
  std::uniform_int_distribution<GenId> pick(0, static_cast<GenId>(d.size() - 1));
  const GenId j = pick(rng);
  return {j, random_homogeneous(d, j, d.degree(j), max_len, rng)};
}

inline std::size_t term_count(const Dga& d) {
  std::size_t n = 0;
  for (const auto& p : d.differential()) n += p.terms().size();
  return n;
}

/// Valid DGA with at most max_gens generators: a zero-differential seed pushed
/// through random stabilizations and elementary isomorphisms. Isomorphisms that
/// would push the differential past max_terms terms are skipped.
inline Dga random_dga(std::mt19937& rng, std::size_t max_gens = 8, std::size_t max_terms = 120) {
  std::uniform_int_distribution<int> degree(-1, 2);
  std::uniform_int_distribution<std::size_t> seed_size(1, 4);
  const std::size_t seed = seed_size(rng);
  std::vector<Generator> gens;
  for (std::size_t i = 0; i < seed; ++i) gens.push_back({"g" + std::to_string(i), degree(rng)});
  Dga d(0, gens, std::vector<Poly>(seed));
  std::bernoulli_distribution coin(0.5);
  int fresh = 0;
  for (int step = 0; step < 12; ++step) {
    if (d.size() + 2 <= max_gens && coin(rng)) {
      const std::string e1 = "e" + std::to_string(fresh++);
      const std::string e2 = "e" + std::to_string(fresh++);
      d = stabilize(d, Grading(degree(rng)), {e1, e2});
    } else {
      Dga next = apply_elementary_iso(d, random_iso(d, rng, 2));
      if (term_count(next) <= max_terms) d = std::move(next);
    }
  }
  return d;
}

}  // namespace lch::test
