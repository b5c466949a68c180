#include <functional>
#include <set>

#include "doctest.h"
#include "lch/massey.hpp"
#include "support.hpp"

using namespace lch;
using namespace lch::test;

namespace {

// All cochains of the given degree, as vectors over the space.
std::vector<BitVec> all_cochains(const GradedSpace& sp, int degree) {
  const auto basis = sp.basis_of_degree(degree);
  REQUIRE(basis.size() <= 12);
  std::vector<BitVec> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << basis.size()); ++mask) {
    BitVec v(sp.size());
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (mask & (std::size_t{1} << k)) v.set(basis[k]);
    out.push_back(v);
  }
  return out;
}

// Sum over splittings of [l, m] into at least two consecutive blocks of
// m_k(b_block_1, ..., b_block_k).
BitVec block_sum(const AInftyStructure& s, const std::vector<std::vector<BitVec>>& b, std::size_t l,
                 std::size_t m) {
  BitVec total(s.space.size());
  std::vector<BitVec> parts;
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == m + 1) {
      if (parts.size() >= 2 && s.op(parts.size())) total ^= (*s.op(parts.size()))(parts);
      return;
    }
    for (std::size_t end = pos; end <= m; ++end) {
      if (pos == l && end == m) continue;
      parts.push_back(b[pos][end]);
      rec(end + 1);
      parts.pop_back();
    }
  };
  rec(l);
  return total;
}

// Exhaustive defining systems: b_ll ranges over every representative of x_l,
// every other b_lm over every cochain with d b_lm = S_lm.
std::set<BitVec> massey_oracle(const Homology& h, const AInftyStructure& s, const std::vector<BitVec>& x) {
  const std::size_t n = x.size();
  const GradedMap d = s.differential();
  std::vector<int> deg;
  for (const auto& c : x) deg.push_back(*h.classes().degree_of(c));
  std::vector<std::vector<BitVec>> b(n, std::vector<BitVec>(n));
  std::vector<std::pair<std::size_t, std::size_t>> order;
  for (std::size_t len = 0; len + 1 < n; ++len)
    for (std::size_t l = 0; l + len < n; ++l) order.emplace_back(l, l + len);
  std::set<BitVec> values;
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == order.size()) {
      values.insert(h.p(block_sum(s, b, 0, n - 1)));
      return;
    }
    auto [l, m] = order[idx];
    int sum = 0;
    for (std::size_t k = l; k <= m; ++k) sum += deg[k];
    const BitVec target = l == m ? BitVec(s.space.size()) : block_sum(s, b, l, m);
    for (const auto& u : all_cochains(s.space, sum)) {
      if (d.apply(u) != target) continue;
      if (l == m && h.p(u) != x[l]) continue;
      b[l][m] = u;
      rec(idx + 1);
    }
  };
  rec(0);
  return values;
}

struct Setup {
  Dga d;
  AInftyStructure s;
  Homology h;
  explicit Setup(const Dga& dga, const Augmentation& e)
      : d(dga), s(adjoint_structure(dga, e)), h(homology_of(s)) {}
  BitVec cls(std::initializer_list<const char*> names) {
    BitVec v(d.size());
    for (const char* n : names) v.flip(d.id(n));
    return h.p(v);
  }
};

Setup masseyex_setup() {
  const Dga d = masseyex14920();
  return Setup(d, enumerate_augmentations(d).at(0));
}

void each_class_triple(const Homology& h, const std::function<void(const BitVec&, const BitVec&, const BitVec&)>& f) {
  const std::size_t n = h.dim();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) f(BitVec::unit(n, x), BitVec::unit(n, y), BitVec::unit(n, z));
}

}  // namespace

TEST_CASE("trefoil: every defined Massey triple product vanishes") {
  const Dga d = trefoil();
  std::size_t defined = 0;
  for (const auto& e : enumerate_augmentations(d)) {
    Setup st(d, e);
    CHECK(st.s.op(3) != nullptr);
    each_class_triple(st.h, [&](const BitVec& x, const BitVec& y, const BitVec& z) {
      const MasseyResult r = massey_triple(st.h, st.s, x, y, z);
      if (!r.defined()) return;
      ++defined;
      CHECK_FALSE(r.nonzero());
    });
  }
  CHECK(defined > 0);
}

TEST_CASE("trefoil: {b, c, b} is undefined with witness a") {
  const Dga d = trefoil();
  Setup st(d, by_support(d, {"b3"}));
  const MasseyResult r = massey_triple(st.h, st.s, st.cls({"b2"}), st.cls({"b1", "b3"}), st.cls({"b2"}));
  CHECK_FALSE(r.defined());
  CHECK(r.witness == st.cls({"a1"}));
}

TEST_CASE("a zero middle class gives a defined zero bracket") {
  Setup st = masseyex_setup();
  const MasseyResult r = massey_triple(st.h, st.s, st.cls({"c0"}), BitVec(st.h.dim()), st.cls({"b2"}));
  CHECK(r.defined());
  CHECK_FALSE(r.nonzero());
}

TEST_CASE("masseyex(1,4,9,20): the two Massey products of the family") {
  Setup st = masseyex_setup();
  MasseyResult r = massey_triple(st.h, st.s, st.cls({"c0"}), st.cls({"c1"}), st.cls({"b2"}));
  REQUIRE(r.defined());
  CHECK(r.nonzero());
  CHECK(r.representative == st.cls({"a2"}));
  CHECK(r.degree == 4);

  r = massey_triple(st.h, st.s, st.cls({"a1"}), st.cls({"c0"}), st.cls({"c1"}));
  REQUIRE(r.defined());
  CHECK(r.nonzero());
  CHECK(r.representative == st.cls({"b1"}));

  r = massey_higher(st.h, st.s, {st.cls({"c0"}), st.cls({"c1"}), st.cls({"b2"})});
  REQUIRE(r.defined());
  CHECK(r.representative == st.cls({"a2"}));
}

TEST_CASE("masseyex mirror: no nonzero bracket in the two degree triples") {
  const Dga d = mirror_dga(masseyex14920());
  Setup st(d, enumerate_augmentations(d).at(0));
  for (const auto& degrees : {std::vector<int>{-6, -11, 20}, std::vector<int>{-4, -6, -11}}) {
    for (auto x : st.h.classes_of_degree(degrees[0]))
      for (auto y : st.h.classes_of_degree(degrees[1]))
        for (auto z : st.h.classes_of_degree(degrees[2])) {
          const std::size_t n = st.h.dim();
          const MasseyResult r =
              massey_triple(st.h, st.s, BitVec::unit(n, x), BitVec::unit(n, y), BitVec::unit(n, z));
          CHECK_FALSE(r.nonzero());
        }
  }
}

TEST_CASE("property: order-3 recursion agrees with the triple product") {
  std::mt19937 rng(53);
  std::vector<std::pair<Dga, Augmentation>> cases;
  for (const auto& [name, d] : bundled())
    for (const auto& e : enumerate_augmentations(d)) cases.emplace_back(d, e);
  for (int trial = 0; trial < 30; ++trial) {
    const Dga d = random_dga(rng);
    for (const auto& e : enumerate_augmentations(d)) cases.emplace_back(d, e);
  }
  for (const auto& [d, e] : cases) {
    Setup st(d, e);
    each_class_triple(st.h, [&](const BitVec& x, const BitVec& y, const BitVec& z) {
      const MasseyResult t = massey_triple(st.h, st.s, x, y, z);
      const MasseyResult r = massey_higher(st.h, st.s, {x, y, z});
      CHECK(t.defined() == r.defined());
      if (!t.defined() || !r.defined()) return;
      CHECK(t.representative == r.representative);
      CHECK(rank_of(t.indeterminacy) == rank_of(r.indeterminacy));
      for (const auto& v : r.values) CHECK(reduce_modulo(v, t.indeterminacy) == t.representative);
    });
  }
}

TEST_CASE("property: Massey triples do not depend on cocycle representatives") {
  Setup st = masseyex_setup();
  const GradedMap d = st.s.differential();
  std::mt19937 rng(59);
  each_class_triple(st.h, [&](const BitVec& x, const BitVec& y, const BitVec& z) {
    const MasseyResult base = massey_triple(st.h, st.s, x, y, z);
    std::vector<BitVec> reps;
    for (const auto* c : {&x, &y, &z}) {
      BitVec a = st.h.i(*c);
      const int deg = *st.h.classes().degree_of(*c);
      for (auto j : st.s.space.basis_of_degree(deg - 1))
        if (rng() & 1) a ^= d.images[j];
      reps.push_back(a);
    }
    const MasseyResult other = massey_triple_cochains(st.h, st.s, reps[0], reps[1], reps[2]);
    CHECK(base.defined() == other.defined());
    if (base.defined()) CHECK(base.representative == other.representative);
  });
}

TEST_CASE("mu_3 of the minimal model agrees with every defined Massey triple") {
  for (const auto& [name, d] : bundled())
    for (const auto& e : enumerate_augmentations(d)) {
      Setup st(d, e);
      const MinimalModel mm = transfer_minimal_model(st.h, st.s, 3);
      std::size_t defined = 0;
      each_class_triple(st.h, [&](const BitVec& x, const BitVec& y, const BitVec& z) {
        const MasseyResult r = massey_triple(st.h, st.s, x, y, z);
        if (!r.defined()) return;
        ++defined;
        const Tuple t{static_cast<std::uint32_t>(x.next()), static_cast<std::uint32_t>(y.next()),
                      static_cast<std::uint32_t>(z.next())};
        CHECK(reduce_modulo(mm.mu.m[3].at(t), r.indeterminacy) == r.representative);
      });
      INFO(name);
      CHECK(defined > 0);
    }
}

TEST_CASE("order-4 bracket <b, b, b, b> on the trefoil against exhaustive defining systems") {
  const Dga d = trefoil();
  Setup st(d, by_support(d, {"b3"}));
  const BitVec b = st.cls({"b2"});
  const MasseyResult r = massey_higher(st.h, st.s, {b, b, b, b});
  const std::set<BitVec> oracle = massey_oracle(st.h, st.s, {b, b, b, b});
  REQUIRE(r.defined());
  CHECK(std::set<BitVec>(r.values.begin(), r.values.end()) == oracle);
  // Frozen oracle answer: the bracket is {0, [a1]}.
  CHECK(oracle == std::set<BitVec>{BitVec(st.h.dim()), st.cls({"a1"})});
  CHECK_FALSE(r.nonzero());
}

TEST_CASE("property: higher brackets agree with exhaustive defining systems") {
  const Dga d = trefoil();
  std::size_t compared = 0;
  for (const auto& e : enumerate_augmentations(d)) {
    Setup st(d, e);
    const auto zero = st.h.classes_of_degree(0);
    const std::size_t n = st.h.dim();
    for (std::size_t order = 3; order <= 4; ++order) {
      std::vector<std::size_t> pick(order, 0);
      while (true) {
        std::vector<BitVec> x;
        for (auto p : pick) x.push_back(BitVec::unit(n, zero[p]));
        const MasseyResult r = massey_higher(st.h, st.s, x);
        const std::set<BitVec> oracle = massey_oracle(st.h, st.s, x);
        CHECK(r.defined() == !oracle.empty());
        if (r.defined()) CHECK(std::set<BitVec>(r.values.begin(), r.values.end()) == oracle);
        ++compared;
        std::size_t a = order;
        bool done = true;
        while (a > 0) {
          --a;
          if (++pick[a] < zero.size()) {
            done = false;
            break;
          }
          pick[a] = 0;
        }
        if (done) break;
      }
    }
  }
  CHECK(compared > 50);
}

TEST_CASE("higher brackets flag truncation at the system cap") {
  const Dga d = trefoil();
  Setup st(d, by_support(d, {"b3"}));
  const BitVec b = st.cls({"b2"});
  MasseyOptions opt;
  opt.max_systems = 3;
  const MasseyResult r = massey_higher(st.h, st.s, {b, b, b, b}, opt);
  CHECK(r.truncated);
  CHECK(r.systems == 3);
}
