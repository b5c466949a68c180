#include "lch/linear.hpp"

#include <algorithm>
#include <set>

#include "lch/errors.hpp"

namespace lch {

std::vector<std::size_t> GradedSpace::basis_of_degree(int k) const {
  std::vector<std::size_t> out;
  const int r = reduce(k);
  for (std::size_t j = 0; j < size(); ++j)
    if (degrees[j] == r) out.push_back(j);
  return out;
}

std::vector<int> GradedSpace::degree_set() const {
  std::set<int> s(degrees.begin(), degrees.end());
  return {s.begin(), s.end()};
}

std::optional<int> GradedSpace::degree_of(const BitVec& v) const {
  std::optional<int> deg;
  for (auto j : v.ones()) {
    if (deg && *deg != degrees[j]) return std::nullopt;
    deg = degrees[j];
  }
  return deg;
}

std::string GradedSpace::format(const BitVec& v) const {
  std::string out;
  for (auto j : v.ones()) {
    if (!out.empty()) out += '+';
    out += labels[j];
  }
  return out.empty() ? "0" : out;
}

BitVec GradedMap::apply(const BitVec& v) const {
  BitVec out(space.size());
  for (auto j : v.ones()) out ^= images[j];
  return out;
}

GradedMap GradedMap::transpose(int new_shift) const {
  GradedMap t{space, new_shift, std::vector<BitVec>(space.size(), BitVec(space.size()))};
  for (std::size_t j = 0; j < space.size(); ++j)
    for (auto i : images[j].ones()) t.images[i].set(j);
  return t;
}

bool GradedMap::squares_to_zero() const {
  for (const auto& img : images)
    if (apply(img).any()) return false;
  return true;
}

GradedSpace generator_space(const Dga& d) {
  GradedSpace s;
  s.modulus = d.modulus();
  for (const auto& g : d.generators()) {
    s.labels.push_back(g.name);
    s.degrees.push_back(g.degree);
  }
  return s;
}

LinearizedComplexes linearized_complexes(const Dga& d, const Augmentation& e) {
  const Dga tw = twist(d, e);
  GradedSpace space = generator_space(d);
  GradedMap chain{space, -1, {}};
  for (GenId q = 0; q < d.size(); ++q) {
    BitVec img(d.size());
    const Poly linear = component(tw.d(q), 1);
    for (const auto& w : linear.terms()) img.set(w.front());
    chain.images.push_back(std::move(img));
  }
  GradedMap cochain = chain.transpose(+1);
  if (!chain.squares_to_zero() || !cochain.squares_to_zero())
    throw InternalError("linearized differential does not square to zero");
  return {std::move(chain), std::move(cochain)};
}

Homology::Homology(GradedMap differential) : d_(std::move(differential)), boundaries_(d_.space.size()) {
  const GradedSpace& sp = d_.space;
  const std::size_t n = sp.size();
  if (d_.images.size() != n) throw ContractError("differential has the wrong number of images");
  for (std::size_t j = 0; j < n; ++j) {
    if (d_.images[j].size() != n) throw ContractError("differential image has the wrong size");
    if (d_.images[j].any() && sp.degree_of(d_.images[j]) != sp.reduce(sp.degrees[j] + d_.shift))
      throw ContractError("differential is not homogeneous of degree " + std::to_string(d_.shift));
  }
  if (!d_.squares_to_zero()) throw ContractError("differential does not square to zero");

  const auto degrees = sp.degree_set();
  std::map<int, std::vector<std::size_t>> complement;  // D by degree
  std::map<int, std::vector<BitVec>> bounds;           // B by degree, aligned with preimages
  std::map<int, std::vector<std::size_t>> preimage;    // D index whose image is the B vector
  std::map<int, std::vector<BitVec>> cycles;

  for (int k : degrees) {
    LinearSpan span(n);
    std::vector<std::size_t> accepted;
    const int target = sp.reduce(k + d_.shift);
    for (auto j : sp.basis_of_degree(k)) {
      if (span.add(d_.images[j])) {
        accepted.push_back(j);
        bounds[target].push_back(d_.images[j]);
        preimage[target].push_back(j);
      } else {
        auto combo = span.solve(d_.images[j]);
        BitVec z = BitVec::unit(n, j);
        for (auto a : combo->ones()) z.set(accepted[a]);
        cycles[k].push_back(std::move(z));
      }
    }
    complement[k] = std::move(accepted);
  }

  for (int k : degrees) {
    LinearSpan span(n);
    for (const auto& b : bounds[k]) {
      span.add(b);
      boundaries_.add(b);
    }
    std::vector<BitVec> reps;
    for (const auto& z : cycles[k])
      if (span.add(z)) reps.push_back(z);
    for (auto& r : reps) {
      classes_.labels.push_back(sp.format(r));
      classes_.degrees.push_back(k);
      reps_.push_back(std::move(r));
    }
  }
  classes_.modulus = sp.modulus;

  p_images_.assign(n, BitVec(reps_.size()));
  h_images_.assign(n, BitVec(n));
  for (int k : degrees) {
    const auto& b = bounds[k];
    const auto& pre = preimage[k];
    const auto cls = classes_.basis_of_degree(k);
    const auto& dk = complement[k];
    LinearSpan basis(n);
    for (const auto& v : b) basis.add(v);
    for (auto c : cls) basis.add(reps_[c]);
    for (auto j : dk) basis.add(BitVec::unit(n, j));
    const auto here = sp.basis_of_degree(k);
    if (basis.rank() != here.size()) throw InternalError("retract splitting is not a basis");
    for (auto j : here) {
      auto coords = basis.solve(BitVec::unit(n, j));
      for (auto a : coords->ones()) {
        if (a < b.size()) {
          h_images_[j].set(pre[a]);
        } else if (a < b.size() + cls.size()) {
          p_images_[j].set(cls[a - b.size()]);
        }
      }
    }
  }
}

std::size_t Homology::dim(int degree) const { return classes_.basis_of_degree(degree).size(); }

std::map<int, std::size_t> Homology::dims() const {
  std::map<int, std::size_t> out;
  for (int k : d_.space.degree_set()) out[k] = dim(k);
  return out;
}

BitVec Homology::i(const BitVec& x) const {
  BitVec out(d_.space.size());
  for (auto c : x.ones()) out ^= reps_[c];
  return out;
}

BitVec Homology::p(const BitVec& v) const {
  BitVec out(reps_.size());
  for (auto j : v.ones()) out ^= p_images_[j];
  return out;
}

BitVec Homology::h(const BitVec& v) const {
  BitVec out(d_.space.size());
  for (auto j : v.ones()) out ^= h_images_[j];
  return out;
}

bool Homology::is_boundary(const BitVec& v) const { return boundaries_.contains(v); }

std::optional<std::string> check_retract(const Homology& hd) {
  const std::size_t n = hd.space().size();
  const auto& d = hd.differential();
  for (std::size_t c = 0; c < hd.dim(); ++c) {
    BitVec x = BitVec::unit(hd.dim(), c);
    if (hd.p(hd.i(x)) != x) return "p i != id on class " + hd.classes().labels[c];
    if (hd.h(hd.i(x)).any()) return "h i != 0 on class " + hd.classes().labels[c];
    if (!hd.is_cycle(hd.rep(c))) return "representative of " + hd.classes().labels[c] + " is not a cycle";
  }
  for (std::size_t j = 0; j < n; ++j) {
    BitVec e = BitVec::unit(n, j);
    BitVec lhs = e ^ hd.i(hd.p(e));
    BitVec rhs = d.apply(hd.h(e)) ^ hd.h(d.apply(e));
    if (lhs != rhs) return "id + i p != d h + h d on " + hd.space().labels[j];
    if (hd.h(hd.h(e)).any()) return "h h != 0 on " + hd.space().labels[j];
    if (hd.p(hd.h(e)).any()) return "p h != 0 on " + hd.space().labels[j];
    if (hd.h(e).any() && hd.space().degree_of(hd.h(e)) != hd.space().reduce(hd.space().degrees[j] - d.shift))
      return "h has the wrong degree on " + hd.space().labels[j];
  }
  return std::nullopt;
}

}  // namespace lch
