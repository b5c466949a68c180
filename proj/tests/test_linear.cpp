#include <set>

#include "doctest.h"
#include "lch/ainfty.hpp"
#include "lch/duality.hpp"
#include "lch/errors.hpp"
#include "lch/report.hpp"
#include "support.hpp"

using namespace lch;
using namespace lch::test;

namespace {

// Dense rank over GF(2) with bool rows, no shared code with the library.
std::size_t dense_rank(std::vector<std::vector<bool>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !rows[pivot][c]) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank && rows[r][c])
        for (std::size_t j = 0; j < cols; ++j) rows[r][j] = rows[r][j] != rows[rank][j];
    ++rank;
  }
  return rank;
}

std::map<int, std::size_t> oracle_dims(const GradedMap& m) {
  const auto& sp = m.space;
  std::map<int, std::size_t> rank_from;
  for (int k : sp.degree_set()) {
    std::vector<std::vector<bool>> rows;
    for (auto j : sp.basis_of_degree(k)) {
      std::vector<bool> row(sp.size());
      for (auto i : m.images[j].ones()) row[i] = true;
      rows.push_back(row);
    }
    rank_from[k] = dense_rank(rows);
  }
  std::map<int, std::size_t> out;
  for (int k : sp.degree_set()) {
    const int before = sp.reduce(k - m.shift);
    const std::size_t incoming = rank_from.count(before) ? rank_from[before] : 0;
    const std::size_t n = sp.basis_of_degree(k).size() - rank_from[k] - incoming;
    if (n) out[k] = n;
  }
  return out;
}

std::set<std::string> pair_labels(const Homology& h, const DualityCertificate& c) {
  std::set<std::string> out;
  for (const auto& [a, b] : c.pairs) {
    std::string x = format_class(h, c.complement[a]), y = format_class(h, c.complement[b]);
    if (y < x) std::swap(x, y);
    out.insert(x + "-" + y);
  }
  return out;
}

}  // namespace

TEST_CASE("trefoil linearized complexes for eps(b3) = 1") {
  const Dga d = trefoil();
  const auto lc = linearized_complexes(d, by_support(d, {"b3"}));
  CHECK(lc.chain.images[d.id("a1")] == cochain(d, {"b1", "b3"}));
  CHECK(lc.chain.images[d.id("a2")] == cochain(d, {"b1", "b3"}));
  CHECK(lc.cochain.images[d.id("b1")] == cochain(d, {"a1", "a2"}));
  CHECK(lc.cochain.images[d.id("b3")] == cochain(d, {"a1", "a2"}));
  CHECK(lc.cochain.images[d.id("b2")].none());
  CHECK(lc.chain.squares_to_zero());
  CHECK(lc.cochain.squares_to_zero());
}

TEST_CASE("trefoil cohomology: LCH^1 = <[a1]>, LCH^0 = <[b2], [b1+b3]>") {
  const Dga d = trefoil();
  const Homology h(linearized_complexes(d, by_support(d, {"b3"})).cochain);
  CHECK(h.dim(1) == 1);
  CHECK(h.dim(0) == 2);
  CHECK(h.dim() == 3);
  CHECK(h.classes().labels == std::vector<std::string>{"b2", "b1+b3", "a1"});
  CHECK(h.p(cochain(d, {"a2"})) == h.p(cochain(d, {"a1"})));
  CHECK_FALSE(check_retract(h));
}

TEST_CASE("zero differential: homology is everything and h vanishes") {
  GradedSpace sp{0, {"u", "v", "w"}, {0, 1, 1}};
  const Homology h(GradedMap{sp, 1, std::vector<BitVec>(3, BitVec(3))});
  CHECK(h.dim() == 3);
  for (std::size_t j = 0; j < 3; ++j) CHECK(h.h(BitVec::unit(3, j)).none());
  CHECK_FALSE(check_retract(h));
}

TEST_CASE("homology rejects a differential that does not square to zero") {
  GradedSpace sp{0, {"u", "v", "w"}, {0, 1, 2}};
  std::vector<BitVec> images{BitVec::unit(3, 1), BitVec::unit(3, 2), BitVec(3)};
  CHECK_THROWS_AS(Homology(GradedMap{sp, 1, images}), ContractError);
}

TEST_CASE("cupex(1,3,7): leg duals map to adjacent cusps and cusp duals share one class") {
  const Dga d = cupex137();
  const auto e = enumerate_augmentations(d).at(0);
  const auto lc = linearized_complexes(d, e);
  for (GenId g = 0; g < d.size(); ++g) {
    const char c = d.name(g)[0];
    if (c != 'x' && c != 'y' && c != 'z') continue;
    const BitVec img = lc.cochain.images[g];
    CHECK(img.count() == 2);
    for (auto j : img.ones()) CHECK(d.name(static_cast<GenId>(j))[0] == 't');
  }
  const Homology h(lc.cochain);
  CHECK(h.dim() == 7);
  const BitVec t = h.p(cochain(d, {"t0"}));
  CHECK(t.any());
  for (GenId g = 0; g < d.size(); ++g)
    if (d.name(g)[0] == 't') CHECK(h.p(BitVec::unit(d.size(), g)) == t);
  for (const char* name : {"a1", "a2", "b1", "b2", "c1", "c2"}) CHECK(h.p(cochain(d, {name})).count() == 1);
}

TEST_CASE("property: retract identities and chain/cochain dimension agreement") {
  std::mt19937 rng(29);
  std::vector<std::pair<Dga, Augmentation>> cases;
  for (const auto& [name, d] : bundled())
    for (const auto& e : enumerate_augmentations(d)) cases.emplace_back(d, e);
  for (int trial = 0; trial < 60; ++trial) {
    const Dga d = random_dga(rng);
    for (const auto& e : enumerate_augmentations(d)) cases.emplace_back(d, e);
  }
  for (const auto& [d, e] : cases) {
    const auto lc = linearized_complexes(d, e);
    const Homology chain(lc.chain), cochain(lc.cochain);
    CHECK_FALSE(check_retract(chain));
    CHECK_FALSE(check_retract(cochain));
    CHECK(nonzero_dims(chain.dims()) == nonzero_dims(cochain.dims()));
    CHECK(nonzero_dims(cochain.dims()) == oracle_dims(lc.cochain));
    CHECK(nonzero_dims(chain.dims()) == oracle_dims(lc.chain));
  }
}

TEST_CASE("retract data works with a periodic grading") {
  // Z/2-graded complex u -> v -> w -> 0 with u, w even.
  GradedSpace sp{2, {"u", "v", "w", "z"}, {0, 1, 0, 1}};
  std::vector<BitVec> images{BitVec::unit(4, 1), BitVec(4), BitVec::unit(4, 1), BitVec(4)};
  const Homology h(GradedMap{sp, 1, images});
  CHECK(h.dim() == 2);
  CHECK_FALSE(check_retract(h));
}

TEST_CASE("stabilization leaves linearized homology unchanged") {
  for (const auto& [name, d] : bundled())
    for (int k : {-1, 0, 1, 2}) {
      const Dga s = stabilize(d, Grading(k), {"st1", "st2"});
      for (const auto& e : enumerate_augmentations(d))
        CHECK(linearized_dims(s, extend_by_zero(e, s.size())) == linearized_dims(d, e));
    }
}

TEST_CASE("property: linearized homology is invariant under elementary isomorphisms") {
  std::mt19937 rng(31);
  for (const auto& [name, d] : bundled()) {
    const auto augs = enumerate_augmentations(d);
    for (int trial = 0; trial < 50; ++trial) {
      const ElementaryIso iso = random_iso(d, rng);
      const Dga image = apply_elementary_iso(d, iso);
      for (const auto& e : augs) CHECK(linearized_dims(image, transport(d, e, iso)) == linearized_dims(d, e));
    }
  }
}

TEST_CASE("duality certificate on the trefoil") {
  const Dga d = trefoil();
  const Augmentation e = by_support(d, {"b3"});
  const AInftyStructure s = adjoint_structure(d, e);
  const Homology chain(linearized_complexes(d, e).chain);
  const Homology cochain = homology_of(s);
  const DualityReport r = duality_search(chain, cochain, s);
  REQUIRE(r.certificate);
  CHECK(format_class(chain, r.certificate->kappa) == "[a1+a2]");
  CHECK(format_class(cochain, r.certificate->c) == "[a1]");
  REQUIRE(r.certificate->gram.size() == 2);
  CHECK(r.certificate->gram[0].to_string() == "01");
  CHECK(r.certificate->gram[1].to_string() == "10");
  CHECK(pairing(cochain, r.certificate->c, chain, r.certificate->kappa));
  CHECK_FALSE(duality_dimension_violation(chain, cochain));
}

TEST_CASE("duality certificate on cupex(1,3,7) pairs a, b and c") {
  const Dga d = cupex137();
  const auto e = enumerate_augmentations(d).at(0);
  const AInftyStructure s = adjoint_structure(d, e);
  const Homology chain(linearized_complexes(d, e).chain);
  const Homology cochain = homology_of(s);
  const DualityReport r = duality_search(chain, cochain, s);
  REQUIRE(r.certificate);
  CHECK(pair_labels(cochain, *r.certificate) == std::set<std::string>{"[a1]-[a2]", "[b1]-[b2]", "[c1]-[c2]"});
  CHECK_FALSE(duality_dimension_violation(chain, cochain));
}

TEST_CASE("duality search reports failure without degree-one cohomology") {
  GradedSpace sp{0, {"u", "v"}, {0, 2}};
  const GradedMap zero{sp, 1, std::vector<BitVec>(2, BitVec(2))};
  const Homology h(zero);
  const AInftyStructure s = zero_structure(sp, 2);
  const DualityReport r = duality_search(Homology(zero.transpose(-1)), h, s);
  CHECK_FALSE(r.certificate);
  CHECK_FALSE(r.reason.empty());
}

TEST_CASE("duality dimension relations hold on every bundled augmentation") {
  for (const auto& [name, d] : bundled())
    for (const auto& e : enumerate_augmentations(d)) {
      const auto lc = linearized_complexes(d, e);
      INFO(name);
      CHECK_FALSE(duality_dimension_violation(Homology(lc.chain), Homology(lc.cochain)));
    }
}
