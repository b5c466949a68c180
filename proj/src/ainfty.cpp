#include "lch/ainfty.hpp"

#include <algorithm>
#include <sstream>

#include "lch/errors.hpp"

namespace lch {

namespace {

std::string format_tuple(const GradedSpace& space, const Tuple& t) {
  std::string out = "(";
  for (std::size_t s = 0; s < t.size(); ++s) {
    if (s) out += ", ";
    out += t[s] < space.size() ? space.labels[t[s]] : "?";
  }
  return out + ")";
}

Tuple splice(const Tuple& outer, std::size_t pos, const Tuple& inner) {
  Tuple key;
  key.reserve(outer.size() + inner.size() - 1);
  key.insert(key.end(), outer.begin(), outer.begin() + static_cast<std::ptrdiff_t>(pos));
  key.insert(key.end(), inner.begin(), inner.end());
  key.insert(key.end(), outer.begin() + static_cast<std::ptrdiff_t>(pos) + 1, outer.end());
  return key;
}

using OutputIndex = std::vector<std::vector<const Tuple*>>;

// Adds sum over (T, i, U) of outer(T with slot i fed by inner(U)) for all
// outer entries of arity r and inner entries of arity l - r + 1.
void compose_into(TupleAccumulator& acc, const MultilinearMap& outer, const OutputIndex& inner_index) {
  for (const auto& [key, out] : outer.entries())
    for (std::size_t i = 0; i < key.size(); ++i)
      for (const Tuple* u : inner_index[key[i]]) acc.add(splice(key, i, *u), out);
}

}  // namespace

const MultilinearMap* AInftyStructure::op(std::size_t k) const {
  if (k == 0 || k >= m.size() || m[k].empty()) return nullptr;
  return &m[k];
}

GradedMap AInftyStructure::differential() const {
  const std::size_t n = space.size();
  GradedMap d{space, +1, std::vector<BitVec>(n, BitVec(n))};
  if (const auto* m1 = op(1))
    for (const auto& [key, img] : m1->entries()) d.images[key[0]] = img;
  return d;
}

AInftyStructure zero_structure(const GradedSpace& space, std::size_t max_arity) {
  AInftyStructure s{space, {}};
  for (std::size_t k = 0; k <= max_arity; ++k) s.m.emplace_back(k, space.size());
  return s;
}

AInftyStructure adjoint_of_twisted(const Dga& twisted) {
  const GradedSpace space = generator_space(twisted);
  std::size_t arity = 0;
  for (const auto& p : twisted.differential()) {
    if (!component(p, 0).is_zero()) throw ContractError("differential has a constant term");
    arity = std::max(arity, p.max_length());
  }
  AInftyStructure s = zero_structure(space, arity);
  for (GenId q = 0; q < twisted.size(); ++q)
    for (const auto& w : twisted.d(q).terms()) s.m[w.size()].add(Tuple(w.begin(), w.end()), q);
  return s;
}

AInftyStructure adjoint_structure(const Dga& d, const Augmentation& e) {
  AInftyStructure s = adjoint_of_twisted(twist(d, e));
  if (auto r = check_degrees(s); !r) throw InternalError("adjoint structure: " + r.message);
  if (auto r = check_an_relations(s, s.max_arity()); !r) throw InternalError("adjoint structure: " + r.message);
  return s;
}

AInftyStructure mirror_structure(const AInftyStructure& s) {
  AInftyStructure out = zero_structure(s.space, s.max_arity());
  for (std::size_t k = 1; k <= s.max_arity(); ++k)
    for (const auto& [key, img] : s.m[k].entries()) out.m[k].add(Tuple(key.rbegin(), key.rend()), img);
  return out;
}

AInftyStructure transform_structure(const AInftyStructure& s, const std::vector<BitVec>& basis) {
  const std::size_t n = s.space.size();
  if (basis.size() != n) throw ContractError("basis change has the wrong size");
  GradedSpace space;
  space.modulus = s.space.modulus;
  LinearSpan span(n);
  std::vector<std::vector<std::uint32_t>> users(n);  // old index -> new vectors containing it
  for (std::uint32_t u = 0; u < n; ++u) {
    auto deg = s.space.degree_of(basis[u]);
    if (!deg) throw ContractError("basis change vectors must be homogeneous and nonzero");
    if (!span.add(basis[u])) throw ContractError("basis change is not invertible");
    space.labels.push_back(s.space.format(basis[u]));
    space.degrees.push_back(*deg);
    for (auto t : basis[u].ones()) users[t].push_back(u);
  }
  auto coords = [&](const BitVec& v) { return *span.solve(v); };

  AInftyStructure out = zero_structure(space, s.max_arity());
  for (std::size_t k = 1; k <= s.max_arity(); ++k) {
    for (const auto& [key, img] : s.m[k].entries()) {
      const BitVec image = coords(img);
      std::vector<std::size_t> pos(k, 0);
      bool empty = false;
      for (auto t : key) empty |= users[t].empty();
      if (empty) continue;
      Tuple t(k);
      while (true) {
        for (std::size_t a = 0; a < k; ++a) t[a] = users[key[a]][pos[a]];
        out.m[k].add(t, image);
        std::size_t a = k;
        bool done = true;
        while (a > 0) {
          --a;
          if (++pos[a] < users[key[a]].size()) {
            done = false;
            break;
          }
          pos[a] = 0;
        }
        if (done) break;
      }
    }
  }
  return out;
}

Homology homology_of(const AInftyStructure& s) { return Homology(s.differential()); }

const MultilinearMap* AInftyMorphism::component(std::size_t n) const {
  if (n == 0 || n >= f.size() || f[n].empty()) return nullptr;
  return &f[n];
}

AInftyMorphism linear_morphism(const GradedSpace& source, const GradedSpace& target,
                               const std::vector<BitVec>& images) {
  if (images.size() != source.size()) throw ContractError("linear morphism needs one image per basis vector");
  AInftyMorphism f{source, target, {MultilinearMap(0, target.size()), MultilinearMap(1, target.size())}};
  for (std::uint32_t j = 0; j < images.size(); ++j) f.f[1].add(Tuple{j}, images[j]);
  return f;
}

RelationReport check_degrees(const AInftyStructure& s) {
  for (std::size_t k = 1; k <= s.max_arity(); ++k) {
    for (const auto& [key, img] : s.m[k].entries()) {
      int sum = 1;
      for (auto t : key) sum += s.space.degrees.at(t);
      auto deg = s.space.degree_of(img);
      if (!deg || *deg != s.space.reduce(sum)) {
        std::ostringstream msg;
        msg << "m_" << k << format_tuple(s.space, key) << " = " << s.space.format(img)
            << " is not of degree " << s.space.reduce(sum);
        return {false, k, key, msg.str()};
      }
    }
  }
  return {};
}

RelationReport check_an_relations(const AInftyStructure& s, std::size_t up_to) {
  const std::size_t L = s.max_arity();
  std::vector<OutputIndex> index(L + 1);
  for (std::size_t j = 1; j <= L; ++j) index[j] = s.m[j].output_index();

  for (std::size_t l = 1; l <= up_to; ++l) {
    TupleAccumulator acc(s.space.size());
    for (std::size_t r = 1; r <= std::min(l, L); ++r) {
      const std::size_t j = l - r + 1;
      if (j > L) continue;
      compose_into(acc, s.m[r], index[j]);
    }
    if (const auto* bad = acc.first_nonzero()) {
      std::ostringstream msg;
      msg << "A_" << l << " relation fails on " << format_tuple(s.space, bad->first) << ": sum = "
          << s.space.format(bad->second);
      return {false, l, bad->first, msg.str()};
    }
  }
  return {};
}

namespace {

// Adds n_r(f_{a_1}(..) ⊗ ... ⊗ f_{a_r}(..)) for all splits of total length n.
void rhs_into(TupleAccumulator& acc, const MultilinearMap& outer, std::size_t n,
              const std::vector<OutputIndex>& f_index) {
  const std::size_t F = f_index.size() - 1;
  for (const auto& [key, out] : outer.entries()) {
    const std::size_t r = key.size();
    if (r > n) continue;
    Tuple built;
    // Depth-first over the slots of key.
    auto rec = [&](auto&& self, std::size_t slot, std::size_t used) -> void {
      if (slot == r) {
        if (used == n) acc.add(built, out);
        return;
      }
      const std::size_t remaining_slots = r - slot - 1;
      for (std::size_t a = 1; a <= F && used + a + remaining_slots <= n; ++a) {
        for (const Tuple* u : f_index[a][key[slot]]) {
          const std::size_t mark = built.size();
          built.insert(built.end(), u->begin(), u->end());
          self(self, slot + 1, used + a);
          built.resize(mark);
        }
      }
    };
    rec(rec, 0, 0);
  }
}

}  // namespace

RelationReport check_ainfty_morphism(const AInftyMorphism& f, const AInftyStructure& src,
                                     const AInftyStructure& dst, std::size_t up_to) {
  if (!(f.source == src.space) || !(f.target == dst.space))
    throw ContractError("morphism spaces do not match the structures");
  for (std::size_t n = 1; n <= f.max_arity(); ++n) {
    for (const auto& [key, img] : f.f[n].entries()) {
      int sum = 0;
      for (auto t : key) sum += src.space.degrees.at(t);
      auto deg = dst.space.degree_of(img);
      if (!deg || *deg != dst.space.reduce(sum)) {
        std::ostringstream msg;
        msg << "f_" << n << format_tuple(src.space, key) << " is not of degree 0";
        return {false, n, key, msg.str()};
      }
    }
  }

  const std::size_t Ls = src.max_arity();
  const std::size_t F = f.max_arity();
  std::vector<OutputIndex> src_index(Ls + 1), f_index(F + 1);
  for (std::size_t j = 1; j <= Ls; ++j) src_index[j] = src.m[j].output_index();
  for (std::size_t a = 1; a <= F; ++a) f_index[a] = f.f[a].output_index();

  for (std::size_t n = 1; n <= up_to; ++n) {
    TupleAccumulator acc(dst.space.size());
    for (std::size_t r = 1; r <= std::min(n, F); ++r) {
      const std::size_t j = n - r + 1;
      if (j > Ls) continue;
      compose_into(acc, f.f[r], src_index[j]);
    }
    for (std::size_t r = 1; r <= std::min(n, dst.max_arity()); ++r) rhs_into(acc, dst.m[r], n, f_index);
    if (const auto* bad = acc.first_nonzero()) {
      std::ostringstream msg;
      msg << "morphism equation fails at arity " << n << " on " << format_tuple(src.space, bad->first)
          << ": difference = " << dst.space.format(bad->second);
      return {false, n, bad->first, msg.str()};
    }
  }
  return {};
}

BitVec cup_product(const Homology& h, const AInftyStructure& s, const BitVec& x, const BitVec& y) {
  const auto* m2 = s.op(2);
  if (!m2) return BitVec(h.dim());
  return h.p((*m2)({h.i(x), h.i(y)}));
}

}  // namespace lch
