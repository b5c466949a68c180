#include "lch/duality.hpp"

#include <bit>

#include "lch/errors.hpp"

namespace lch {

bool pairing(const Homology& cochain, const BitVec& c, const Homology& chain, const BitVec& kappa) {
  return cochain.i(c).dot(chain.i(kappa));
}

namespace {

BitVec from_mask(std::size_t dim, const std::vector<std::size_t>& coords, std::size_t mask) {
  BitVec v(dim);
  for (std::size_t k = 0; k < coords.size(); ++k)
    if (mask & (std::size_t{1} << k)) v.set(coords[k]);
  return v;
}

bool parity(std::size_t x) { return std::popcount(x) & 1; }

}  // namespace

DualityReport duality_search(const Homology& chain, const Homology& cochain, const AInftyStructure& s,
                             const DualityOptions& options) {
  DualityReport report;
  if (chain.space().size() != cochain.space().size())
    throw ContractError("chain and cochain complexes have different sizes");
  const GradedSpace& H = cochain.classes();
  const std::size_t dim = H.size();
  const int one = H.reduce(1);
  const auto k1 = chain.classes_of_degree(one);
  const auto c1 = cochain.classes_of_degree(one);
  if (k1.empty()) {
    report.reason = "LCH_1 is zero: no candidate for kappa";
    return report;
  }
  if (c1.empty()) {
    report.reason = "LCH^1 is zero: no candidate for c";
    return report;
  }
  if (k1.size() > 20 || c1.size() > 20) throw ContractError("degree-one homology too large for exhaustive search");

  for (std::size_t kmask = 1; kmask < (std::size_t{1} << k1.size()); ++kmask) {
    const BitVec kappa = from_mask(chain.dim(), k1, kmask);
    // Functional <., kappa> on the degree-one classes, as a mask over c1.
    std::size_t kappa_phi = 0;
    for (std::size_t j = 0; j < c1.size(); ++j)
      if (pairing(cochain, BitVec::unit(dim, c1[j]), chain, kappa)) kappa_phi |= std::size_t{1} << j;

    for (std::size_t cmask = 1; cmask < (std::size_t{1} << c1.size()); ++cmask) {
      if (!parity(cmask & kappa_phi)) continue;
      const BitVec c = from_mask(dim, c1, cmask);

      // Complements of span(c) in LCH^1 are kernels of functionals phi with phi(c) = 1.
      std::vector<std::size_t> functionals{kappa_phi};
      for (std::size_t phi = 1; phi < (std::size_t{1} << c1.size()) && functionals.size() < options.max_complements;
           ++phi)
        if (phi != kappa_phi && parity(phi & cmask)) functionals.push_back(phi);

      for (std::size_t phi : functionals) {
        ++report.candidates;
        std::size_t pivot = 0;
        while (!(phi & (std::size_t{1} << pivot))) ++pivot;
        std::vector<BitVec> kernel;
        for (std::size_t j = 0; j < c1.size(); ++j) {
          if (j == pivot) continue;
          BitVec v = BitVec::unit(dim, c1[j]);
          if (phi & (std::size_t{1} << j)) v.set(c1[pivot]);
          kernel.push_back(std::move(v));
        }
        std::vector<BitVec> complement;
        bool inserted = false;
        for (std::size_t cls = 0; cls < dim; ++cls) {
          if (H.degrees[cls] == one) {
            if (!inserted) complement.insert(complement.end(), kernel.begin(), kernel.end());
            inserted = true;
            continue;
          }
          complement.push_back(BitVec::unit(dim, cls));
        }

        const std::size_t m = complement.size();
        std::vector<BitVec> gram(m, BitVec(m));
        for (std::size_t a = 0; a < m; ++a)
          for (std::size_t b = 0; b < m; ++b)
            if (pairing(cochain, cup_product(cochain, s, complement[a], complement[b]), chain, kappa)) gram[a].set(b);
        bool symmetric = true;
        for (std::size_t a = 0; a < m && symmetric; ++a)
          for (std::size_t b = 0; b < m && symmetric; ++b) symmetric = gram[a].get(b) == gram[b].get(a);
        if (!symmetric || !invert(gram)) continue;

        DualityCertificate cert{kappa, c, complement, gram, {}};
        bool permutation = true;
        for (std::size_t a = 0; a < m; ++a) permutation &= gram[a].count() == 1;
        if (permutation)
          for (std::size_t a = 0; a < m; ++a) {
            std::size_t b = gram[a].next(0);
            if (a <= b) cert.pairs.emplace_back(a, b);
          }
        report.certificate = std::move(cert);
        return report;
      }
    }
  }
  report.reason = "no (kappa, c, complement) gives a symmetric non-degenerate pairing";
  return report;
}

std::optional<std::string> duality_dimension_violation(const Homology& chain, const Homology& cochain) {
  const GradedSpace& sp = cochain.space();
  std::vector<int> degrees = sp.degree_set();
  for (int k : sp.degree_set()) degrees.push_back(sp.reduce(-k));
  degrees.push_back(sp.reduce(1));
  degrees.push_back(sp.reduce(-1));
  for (int k : degrees) {
    const std::size_t up = cochain.dim(k);
    const std::size_t down = chain.dim(sp.reduce(-k));
    std::size_t expected = down;
    if (k == sp.reduce(1) && k != sp.reduce(-1)) expected = down + 1;
    if (k == sp.reduce(-1) && k != sp.reduce(1)) {
      if (down == 0) return "dim LCH_1 = 0";
      expected = down - 1;
    }
    if (up != expected)
      return "dim LCH^" + std::to_string(k) + " = " + std::to_string(up) + " but dim LCH_" +
             std::to_string(sp.reduce(-k)) + " = " + std::to_string(down);
  }
  return std::nullopt;
}

}  // namespace lch
