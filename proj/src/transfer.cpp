#include <algorithm>

#include "lch/ainfty.hpp"
#include "lch/errors.hpp"

namespace lch {

std::size_t PlanarTree::leaves() const {
  if (is_leaf()) return 1;
  std::size_t n = 0;
  for (const auto& c : children) n += c.leaves();
  return n;
}

std::vector<std::size_t> PlanarTree::signature() const {
  std::vector<std::size_t> sig{children.size()};
  for (const auto& c : children) {
    auto sub = c.signature();
    sig.insert(sig.end(), sub.begin(), sub.end());
  }
  return sig;
}

std::string PlanarTree::format() const {
  if (is_leaf()) return "*";
  std::string out = "m" + std::to_string(children.size()) + "(";
  for (std::size_t i = 0; i < children.size(); ++i) {
    if (i) out += ",";
    out += children[i].is_leaf() ? "*" : "h" + children[i].format();
  }
  return out + ")";
}

namespace {

// Trees with k leaves; a single leaf is allowed when allow_leaf is set.
std::vector<PlanarTree> trees_with(std::size_t k, bool allow_leaf) {
  std::vector<PlanarTree> out;
  if (k == 1) {
    if (allow_leaf) out.push_back(PlanarTree{});
    return out;
  }
  // Root with r >= 2 children whose leaf counts form a composition of k.
  std::vector<std::size_t> parts;
  auto compose = [&](auto&& self, std::size_t left) -> void {
    if (left == 0) {
      if (parts.size() < 2) return;
      std::vector<PlanarTree> partial{PlanarTree{}};
      for (auto p : parts) {
        auto subs = trees_with(p, true);
        std::vector<PlanarTree> next;
        for (const auto& pre : partial)
          for (const auto& s : subs) {
            PlanarTree t = pre;
            t.children.push_back(s);
            next.push_back(std::move(t));
          }
        partial = std::move(next);
      }
      out.insert(out.end(), partial.begin(), partial.end());
      return;
    }
    for (std::size_t p = 1; p <= left; ++p) {
      if (p == k) continue;
      parts.push_back(p);
      self(self, left - p);
      parts.pop_back();
    }
  };
  compose(compose, k);
  return out;
}

BitVec eval(const PlanarTree& t, const AInftyStructure& s, const Homology& h, const std::vector<BitVec>& args,
            std::size_t& next) {
  if (t.is_leaf()) return args.at(next++);
  std::vector<BitVec> inputs;
  inputs.reserve(t.children.size());
  for (const auto& c : t.children) {
    BitVec v = eval(c, s, h, args, next);
    inputs.push_back(c.is_leaf() ? std::move(v) : h.h(v));
  }
  const auto* m = s.op(t.children.size());
  if (!m) return BitVec(s.space.size());
  return (*m)(inputs);
}

}  // namespace

std::vector<PlanarTree> enumerate_trees(std::size_t k) {
  if (k < 2) throw ContractError("planar trees need at least two leaves");
  auto trees = trees_with(k, false);
  std::sort(trees.begin(), trees.end(),
            [](const PlanarTree& a, const PlanarTree& b) { return a.signature() < b.signature(); });
  return trees;
}

BitVec evaluate_tree(const PlanarTree& t, const AInftyStructure& s, const Homology& h,
                     const std::vector<BitVec>& args) {
  if (args.size() != t.leaves()) throw ContractError("tree evaluation needs one argument per leaf");
  std::size_t next = 0;
  return eval(t, s, h, args, next);
}

MinimalModel transfer_minimal_model(const Homology& h, const AInftyStructure& s, std::size_t up_to) {
  if (!(h.space() == s.space)) throw ContractError("retract data lives on a different space");
  if (h.differential().images != s.differential().images)
    throw ContractError("retract data is for a different differential");
  if (auto bad = check_retract(h)) throw ContractError("retract identities violated: " + *bad);

  const GradedSpace& H = h.classes();
  const std::size_t dim = H.size();
  MinimalModel out{zero_structure(H, up_to), {H, s.space, {}}};
  for (std::size_t k = 0; k <= up_to; ++k) out.i.f.emplace_back(k, s.space.size());
  for (std::uint32_t c = 0; c < dim; ++c) out.i.f.at(1).add(Tuple{c}, h.rep(c));

  for (std::size_t k = 2; k <= up_to; ++k) {
    const auto trees = enumerate_trees(k);
    Tuple t(k, 0);
    if (dim == 0) break;
    while (true) {
      int sum = 1;
      for (auto c : t) sum += H.degrees[c];
      if (!s.space.basis_of_degree(sum).empty()) {
        std::vector<BitVec> args;
        args.reserve(k);
        for (auto c : t) args.push_back(h.rep(c));
        BitVec g(s.space.size());
        for (const auto& tree : trees) g ^= evaluate_tree(tree, s, h, args);
        out.mu.m[k].add(t, h.p(g));
        out.i.f[k].add(t, h.h(g));
      }
      std::size_t a = k;
      bool done = true;
      while (a > 0) {
        --a;
        if (++t[a] < dim) {
          done = false;
          break;
        }
        t[a] = 0;
      }
      if (done) break;
    }
  }

  if (up_to >= 2) {
    for (std::uint32_t x = 0; x < dim; ++x)
      for (std::uint32_t y = 0; y < dim; ++y)
        if (out.mu.m[2].at({x, y}) != cup_product(h, s, BitVec::unit(dim, x), BitVec::unit(dim, y)))
          throw InternalError("transferred mu_2 differs from the cup product");
  }
  if (auto r = check_ainfty_morphism(out.i, out.mu, s, up_to); !r)
    throw InternalError("transferred inclusion is not an A-infinity morphism: " + r.message);
  return out;
}

}  // namespace lch
