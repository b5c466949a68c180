#include "doctest.h"
#include "lch/errors.hpp"
#include "support.hpp"

using namespace lch;
using namespace lch::test;

namespace {

// Independent d^2 oracle: expand d on a word letter by letter with a multiset
// of words, then keep words of odd multiplicity.
std::map<Word, int> expand_d(const Dga& d, const std::map<Word, int>& in) {
  std::map<Word, int> out;
  for (const auto& [w, c] : in) {
    if (c % 2 == 0) continue;
    for (std::size_t i = 0; i < w.size(); ++i)
      for (const auto& t : d.d(w[i]).terms()) {
        Word x(w.begin(), w.begin() + i);
        x.insert(x.end(), t.begin(), t.end());
        x.insert(x.end(), w.begin() + i + 1, w.end());
        ++out[x];
      }
  }
  return out;
}

bool d_squared_zero_oracle(const Dga& d) {
  for (GenId q = 0; q < d.size(); ++q) {
    std::map<Word, int> start;
    for (const auto& t : d.d(q).terms()) start[t] = 1;
    for (const auto& [w, c] : expand_d(d, start))
      if (c % 2) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("poly construction cancels repeated words in pairs") {
  const Word w{1, 2};
  for (int n = 1; n <= 4; ++n) {
    std::vector<Word> terms(2 * n, w);
    terms.push_back({3});
    std::size_t cancelled = 0;
    const Poly p = Poly::from_terms(terms, &cancelled);
    CHECK_FALSE(p.contains(w));
    CHECK(p.contains({3}));
    CHECK(cancelled == 2 * static_cast<std::size_t>(n));
  }
  CHECK(Poly::from_terms({{2}, {1, 1}, {}, {0}}).terms() == std::vector<Word>{{}, {0}, {2}, {1, 1}});
}

TEST_CASE("grading arithmetic is modular when the modulus is positive") {
  CHECK(Grading(-1, 4).value() == 3);
  CHECK((Grading(3, 4) + Grading(2, 4)).value() == 1);
  CHECK((-Grading(1, 4)).value() == 3);
  CHECK((Grading(-5) + Grading(2)).value() == -3);
}

TEST_CASE("trefoil validates and its components match the table") {
  const Dga d = trefoil();
  CHECK(validate_dga(d).valid());
  CHECK(d_squared_zero_oracle(d));
  const Poly da1 = d.d(d.id("a1"));
  CHECK(d.format(component(da1, 1)) == "b1 + b3");
  CHECK(component(da1, 0) == Poly::one());
  CHECK(component(da1, 5).is_zero());
}

TEST_CASE("zero differential is valid") {
  Dga d(0, {{"x", 0}, {"y", 3}}, {Poly{}, Poly{}});
  CHECK(validate_dga(d).valid());
}

TEST_CASE("validation reports inhomogeneous terms and nonzero squares") {
  // d a = b has the wrong degree.
  Dga wrong(0, {{"a", 1}, {"b", 1}}, {Poly::generator(1), Poly{}});
  auto r = validate_dga(wrong);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].kind == Violation::Kind::Inhomogeneous);

  // d a = b, d b = c: d^2 a = c.
  Dga square(0, {{"a", 2}, {"b", 1}, {"c", 0}}, {Poly::generator(1), Poly::generator(2), Poly{}});
  r = validate_dga(square);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].kind == Violation::Kind::SquareNonzero);
  CHECK_FALSE(d_squared_zero_oracle(square));

  Dga bad(0, {{"a", 1}}, {Poly::generator(7)});
  r = validate_dga(bad);
  CHECK(r.structural.size() == 1);
  CHECK(r.violations.empty());
}

TEST_CASE("mirror reverses every word and is an involution") {
  const Dga d = trefoil();
  const Dga m = mirror_dga(d);
  CHECK(m.d(m.id("a1")).contains({d.id("b3"), d.id("b2"), d.id("b1")}));
  CHECK(mirror_dga(m) == d);
  CHECK(validate_dga(m).valid());
  Dga zero(0, {{"x", 0}}, {Poly{}});
  CHECK(mirror_dga(zero) == zero);
}

TEST_CASE("stabilization adds a cancelling pair") {
  const Dga s = stabilize(trefoil(), Grading(2), {"e1", "e2"});
  CHECK(s.size() == 7);
  CHECK(s.degree(s.id("e1")) == 2);
  CHECK(s.degree(s.id("e2")) == 1);
  CHECK(s.d(s.id("e1")) == Poly::generator(s.id("e2")));
  CHECK(validate_dga(s).valid());
  CHECK_THROWS_AS(stabilize(trefoil(), Grading(0), {"a1", "e2"}), ContractError);
}

TEST_CASE("elementary isomorphism b1 -> b1 + b3 on the trefoil") {
  const Dga d = trefoil();
  const GenId b1 = d.id("b1"), b2 = d.id("b2"), b3 = d.id("b3");
  const ElementaryIso iso{b1, Poly::generator(b3)};
  const Dga e = apply_elementary_iso(d, iso);
  const Poly da1 = e.d(e.id("a1"));
  // phi(1 + b1 + b3 + b1 b2 b3) = 1 + b1 + b1 b2 b3 + b3 b2 b3.
  CHECK(da1 == Poly::from_terms({{}, {b1}, {b1, b2, b3}, {b3, b2, b3}}));
  CHECK(validate_dga(e).valid());
  CHECK(apply_elementary_iso(e, iso) == d);
  CHECK(apply_elementary_iso(d, {b1, Poly{}}) == d);
  CHECK_THROWS_AS(apply_elementary_iso(d, {b1, Poly::generator(b1)}), ContractError);
  CHECK_THROWS_AS(apply_elementary_iso(d, {b1, Poly::generator(d.id("a1"))}), ContractError);
}

TEST_CASE("property: random elementary isomorphisms preserve validity of bundled DGAs") {
  std::mt19937 rng(11);
  for (const auto& [name, d] : bundled()) {
    for (int trial = 0; trial < 20; ++trial) {
      const ElementaryIso iso = random_iso(d, rng);
      const Dga e = apply_elementary_iso(d, iso);
      INFO(name << " trial " << trial);
      CHECK(validate_dga(e).valid());
      CHECK(apply_elementary_iso(e, iso) == d);
    }
  }
}

TEST_CASE("property: random DGAs are valid and d lowers degree by one") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const Dga d = random_dga(rng);
    INFO("trial " << trial);
    REQUIRE(validate_dga(d).valid());
    CHECK(d_squared_zero_oracle(d));
    CHECK(validate_dga(mirror_dga(d)).valid());
    CHECK(validate_dga(stabilize(d, Grading(1), {"s1", "s2"})).valid());
    for (GenId a = 0; a < d.size(); ++a)
      for (GenId b = 0; b < d.size(); ++b) {
        const Word w{a, b};
        const Poly dw = d.d(w);
        for (const auto& t : dw.terms()) CHECK(d.degree(t) == d.degree(w) - 1);
      }
  }
}
