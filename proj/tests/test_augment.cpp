#include "doctest.h"
#include "lch/augment.hpp"
#include "lch/errors.hpp"
#include "support.hpp"

using namespace lch;
using namespace lch::test;

namespace {

// Exhaustive oracle over all assignments of the degree-zero generators.
std::vector<Augmentation> brute_force(const Dga& d) {
  std::vector<GenId> zero;
  for (GenId g = 0; g < d.size(); ++g)
    if (d.degree(g) == 0) zero.push_back(g);
  std::vector<Augmentation> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << zero.size()); ++mask) {
    Augmentation e{std::vector<std::uint8_t>(d.size(), 0)};
    for (std::size_t k = 0; k < zero.size(); ++k) e.values[zero[k]] = (mask >> k) & 1;
    bool ok = true;
    for (GenId q = 0; q < d.size() && ok; ++q) {
      bool sum = false;
      for (const auto& w : d.d(q).terms()) {
        bool prod = true;
        for (GenId g : w) prod &= e.values[g] != 0;
        sum ^= prod;
      }
      ok = !sum;
    }
    if (ok) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("trefoil has five augmentations in lexicographic order") {
  const Dga d = trefoil();
  const auto augs = enumerate_augmentations(d);
  CHECK(augs.size() == 5);
  CHECK(augs == brute_force(d));
  CHECK(std::is_sorted(augs.begin(), augs.end()));
  CHECK(augs[0] == by_support(d, {"b3"}));
}

TEST_CASE("no augmentation when a constant cannot be cancelled") {
  Dga d(0, {{"a", 1}, {"b", 2}}, {Poly::one(), Poly{}});
  CHECK(enumerate_augmentations(d).empty());
}

TEST_CASE("cupex(1,3,7) has a unique augmentation sending every leg generator to 1") {
  const Dga d = cupex137();
  const auto augs = enumerate_augmentations(d);
  REQUIRE(augs.size() == 1);
  for (GenId g = 0; g < d.size(); ++g) {
    const char c = d.name(g)[0];
    const bool leg = (c == 'x' || c == 'y' || c == 'z');
    CHECK(augs[0](g) == leg);
  }
}

TEST_CASE("masseyex(1,4,9,20) has a unique augmentation") {
  CHECK(enumerate_augmentations(masseyex14920()).size() == 1);
}

TEST_CASE("twisted trefoil differential for eps(b3) = 1") {
  const Dga d = trefoil();
  const Dga t = twist(d, by_support(d, {"b3"}));
  CHECK(t.format(t.d(t.id("a1"))) == "b1 + b3 + b1 b2 + b1 b2 b3");
  CHECK(t.format(t.d(t.id("a2"))) == "b1 + b3 + b2 b1 + b3 b2 b1");
  CHECK(conjugate_by_shift(t, by_support(d, {"b3"})) == d);
}

TEST_CASE("twisting by the zero augmentation is the identity") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Dga d = random_dga(rng);
    const Augmentation zero{std::vector<std::uint8_t>(d.size(), 0)};
    if (!augmentation_violation(d, zero)) CHECK(twist(d, zero) == d);
  }
}

TEST_CASE("twist rejects non-augmentations and names the generator") {
  const Dga d = trefoil();
  try {
    twist(d, by_support(d, {"b1", "b3"}));
    FAIL("expected a contract error");
  } catch (const ContractError& e) {
    CHECK(std::string(e.what()).find("a1") != std::string::npos);
  }
  CHECK(augmentation_violation(d, by_support(d, {"a1"})) == "a1");
}

TEST_CASE("property: search agrees with brute force and twisting is sound") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 80; ++trial) {
    const Dga d = random_dga(rng);
    INFO("trial " << trial);
    const auto augs = enumerate_augmentations(d);
    CHECK(augs == brute_force(d));
    CHECK(enumerate_augmentations(mirror_dga(d)).size() == augs.size());
    for (const auto& e : augs) {
      CHECK_FALSE(augmentation_violation(d, e));
      const Dga t = twist(d, e);
      CHECK(validate_dga(t).valid());
      for (GenId g = 0; g < t.size(); ++g) CHECK(component(t.d(g), 0).is_zero());
      CHECK(conjugate_by_shift(t, e) == d);
    }
  }
}

TEST_CASE("bundled DGAs: twisted differentials have no constant term") {
  for (const auto& [name, d] : bundled())
    for (const auto& e : enumerate_augmentations(d)) {
      const Dga t = twist(d, e);
      for (GenId g = 0; g < t.size(); ++g) CHECK(component(t.d(g), 0).is_zero());
      CHECK(validate_dga(t).valid());
    }
}

TEST_CASE("transported augmentations are augmentations of the image") {
  std::mt19937 rng(23);
  for (const auto& [name, d] : bundled()) {
    const auto augs = enumerate_augmentations(d);
    for (int trial = 0; trial < 10; ++trial) {
      const ElementaryIso iso = random_iso(d, rng);
      const Dga image = apply_elementary_iso(d, iso);
      for (const auto& e : augs) CHECK_FALSE(augmentation_violation(image, transport(d, e, iso)));
      CHECK(enumerate_augmentations(image).size() == augs.size());
    }
  }
}
