#include "lch/augment.hpp"

#include <algorithm>

#include "lch/errors.hpp"

namespace lch {

bool evaluate(const Poly& p, const Augmentation& e) {
  bool acc = false;
  for (const auto& w : p.terms()) {
    bool term = true;
    for (GenId g : w)
      if (!e(g)) {
        term = false;
        break;
      }
    acc ^= term;
  }
  return acc;
}

std::optional<std::string> augmentation_violation(const Dga& d, const Augmentation& e) {
  if (e.values.size() != d.size()) return std::string("<size mismatch>");
  for (GenId g = 0; g < d.size(); ++g)
    if (e(g) && d.degree(g) != 0) return d.name(g);
  for (GenId g = 0; g < d.size(); ++g)
    if (evaluate(d.d(g), e)) return d.name(g);
  return std::nullopt;
}

namespace {

// eps(d q) = 0 as a constraint on the degree-0 variables. Terms containing a
// generator of nonzero degree vanish identically and are dropped.
struct Constraint {
  std::vector<std::vector<std::uint32_t>> terms;  // variable indices, sorted and deduplicated
  std::vector<std::uint32_t> vars;
};

class Search {
 public:
  Search(std::size_t num_vars, std::vector<Constraint> constraints)
      : value_(num_vars, kUnset), constraints_(std::move(constraints)), watch_(num_vars) {
    for (std::uint32_t c = 0; c < constraints_.size(); ++c)
      for (auto v : constraints_[c].vars) watch_[v].push_back(c);
  }

  std::vector<std::vector<std::uint8_t>> run() {
    // Constraints with no variables are constants.
    for (const auto& c : constraints_)
      if (c.vars.empty() && status(c) == 1) return {};
    if (!propagate_all()) return {};
    dfs();
    std::sort(results_.begin(), results_.end());
    return results_;
  }

 private:
  static constexpr std::int8_t kUnset = -1;

  // 0: satisfied, 1: violated, -1: undetermined.
  int status(const Constraint& c) const {
    bool parity = false;
    for (const auto& t : c.terms) {
      bool one = true;
      for (auto v : t) {
        if (value_[v] == 0) {
          one = false;
          break;
        }
        if (value_[v] == kUnset) return -1;
      }
      parity ^= one;
    }
    return parity ? 1 : 0;
  }

  // Evaluates a constraint assuming var `x` takes value `b`; -1 when still undetermined.
  int status_with(const Constraint& c, std::uint32_t x, std::int8_t b) {
    value_[x] = b;
    int s = status(c);
    value_[x] = kUnset;
    return s;
  }

  std::vector<std::uint32_t> unset_vars(const Constraint& c) const {
    std::vector<std::uint32_t> out;
    for (auto v : c.vars)
      if (value_[v] == kUnset) out.push_back(v);
    return out;
  }

  // Forces single-unknown constraints until a fixpoint; records assignments on the trail.
  bool propagate(std::vector<std::uint32_t> queue) {
    while (!queue.empty()) {
      std::uint32_t c = queue.back();
      queue.pop_back();
      const auto& con = constraints_[c];
      auto open = unset_vars(con);
      if (open.empty()) {
        if (status(con) == 1) return false;
        continue;
      }
      if (open.size() != 1) {
        // Terms might already be decided by a zero variable.
        if (status(con) == 1) return false;
        continue;
      }
      std::uint32_t x = open.front();
      int s0 = status_with(con, x, 0);
      int s1 = status_with(con, x, 1);
      if (s0 == 1 && s1 == 1) return false;
      if (s0 == 1 || s1 == 1) {
        value_[x] = s0 == 1 ? 1 : 0;
        trail_.push_back(x);
        for (auto other : watch_[x]) queue.push_back(other);
      }
    }
    return true;
  }

  bool propagate_all() {
    std::vector<std::uint32_t> all(constraints_.size());
    for (std::uint32_t c = 0; c < all.size(); ++c) all[c] = c;
    return propagate(std::move(all));
  }

  void dfs() {
    auto next = std::find(value_.begin(), value_.end(), kUnset);
    if (next == value_.end()) {
      std::vector<std::uint8_t> out(value_.begin(), value_.end());
      results_.push_back(std::move(out));
      return;
    }
    const auto x = static_cast<std::uint32_t>(next - value_.begin());
    for (std::int8_t b : {std::int8_t{0}, std::int8_t{1}}) {
      const std::size_t mark = trail_.size();
      value_[x] = b;
      trail_.push_back(x);
      if (propagate(watch_[x])) dfs();
      while (trail_.size() > mark) {
        value_[trail_.back()] = kUnset;
        trail_.pop_back();
      }
    }
  }

  std::vector<std::int8_t> value_;
  std::vector<Constraint> constraints_;
  std::vector<std::vector<std::uint32_t>> watch_;
  std::vector<std::uint32_t> trail_;
  std::vector<std::vector<std::uint8_t>> results_;
};

}  // namespace

std::vector<Augmentation> enumerate_augmentations(const Dga& d) {
  std::vector<GenId> zero_gens;
  std::vector<std::int64_t> var_of(d.size(), -1);
  for (GenId g = 0; g < d.size(); ++g)
    if (d.degree(g) == 0) {
      var_of[g] = static_cast<std::int64_t>(zero_gens.size());
      zero_gens.push_back(g);
    }

  std::vector<Constraint> constraints;
  for (GenId q = 0; q < d.size(); ++q) {
    Constraint c;
    for (const auto& w : d.d(q).terms()) {
      std::vector<std::uint32_t> t;
      bool vanishes = false;
      for (GenId g : w) {
        if (var_of[g] < 0) {
          vanishes = true;
          break;
        }
        t.push_back(static_cast<std::uint32_t>(var_of[g]));
      }
      if (vanishes) continue;
      std::sort(t.begin(), t.end());
      t.erase(std::unique(t.begin(), t.end()), t.end());
      c.vars.insert(c.vars.end(), t.begin(), t.end());
      c.terms.push_back(std::move(t));
    }
    if (c.terms.empty()) continue;
    std::sort(c.vars.begin(), c.vars.end());
    c.vars.erase(std::unique(c.vars.begin(), c.vars.end()), c.vars.end());
    constraints.push_back(std::move(c));
  }

  Search search(zero_gens.size(), std::move(constraints));
  std::vector<Augmentation> out;
  for (const auto& vals : search.run()) {
    Augmentation e;
    e.values.assign(d.size(), 0);
    for (std::size_t v = 0; v < vals.size(); ++v) e.values[zero_gens[v]] = vals[v];
    if (augmentation_violation(d, e)) throw InternalError("augmentation search produced an invalid assignment");
    out.push_back(std::move(e));
  }
  return out;
}

Dga conjugate_by_shift(const Dga& d, const Augmentation& e) {
  if (e.values.size() != d.size()) throw ContractError("augmentation size does not match the DGA");
  std::vector<Poly> images;
  images.reserve(d.size());
  for (GenId g = 0; g < d.size(); ++g) {
    Poly img = Poly::generator(g);
    if (e(g)) img += Poly::one();
    images.push_back(std::move(img));
  }
  std::vector<Poly> diff;
  diff.reserve(d.size());
  for (GenId g = 0; g < d.size(); ++g) diff.push_back(substitute(d.d(g), images));
  return Dga(d.modulus(), d.generators(), std::move(diff));
}

Dga twist(const Dga& d, const Augmentation& e) {
  if (auto bad = augmentation_violation(d, e)) throw ContractError("not an augmentation: fails at generator " + *bad);
  Dga out = conjugate_by_shift(d, e);
  for (GenId g = 0; g < out.size(); ++g)
    if (!component(out.d(g), 0).is_zero())
      throw InternalError("twisted differential of " + d.name(g) + " has a constant term");
  return out;
}

Augmentation transport(const Dga& d, const Augmentation& e, const ElementaryIso& iso) {
  Augmentation out;
  out.values.resize(d.size());
  for (GenId g = 0; g < d.size(); ++g)
    out.values[g] = evaluate(apply_iso(Poly::generator(g), iso, d.size()), e) ? 1 : 0;
  return out;
}

Augmentation extend_by_zero(const Augmentation& e, std::size_t num_generators) {
  Augmentation out = e;
  out.values.resize(num_generators, 0);
  return out;
}

std::string format_augmentation(const Dga& d, const Augmentation& e) {
  std::string out;
  for (GenId g = 0; g < d.size(); ++g) {
    if (!e(g)) continue;
    if (!out.empty()) out += ' ';
    out += d.name(g);
  }
  return out.empty() ? "0" : out;
}

}  // namespace lch
