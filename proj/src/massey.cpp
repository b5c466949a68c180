#include "lch/massey.hpp"

#include <set>

#include "lch/errors.hpp"

namespace lch {

BitVec reduce_modulo(const BitVec& v, const std::vector<BitVec>& basis) {
  LinearSpan span(v.size());
  for (const auto& b : basis) span.add(b);
  return span.reduce(v);
}

namespace {

BitVec m2(const AInftyStructure& s, const BitVec& a, const BitVec& b) {
  const auto* op = s.op(2);
  return op ? (*op)({a, b}) : BitVec(s.space.size());
}

BitVec m3(const AInftyStructure& s, const BitVec& a, const BitVec& b, const BitVec& c) {
  const auto* op = s.op(3);
  return op ? (*op)({a, b, c}) : BitVec(s.space.size());
}

// Span of mu_2(x, H^dy) + mu_2(H^dx, z); a missing degree means "all classes".
std::vector<BitVec> triple_indeterminacy(const Homology& h, const AInftyStructure& s, const BitVec& x,
                                         const BitVec& z, std::optional<int> right_degree,
                                         std::optional<int> left_degree) {
  const std::size_t dim = h.dim();
  LinearSpan span(dim);
  for (std::size_t c = 0; c < dim; ++c) {
    const int deg = h.classes().degrees[c];
    const BitVec e = BitVec::unit(dim, c);
    if (!right_degree || deg == *right_degree) span.add(cup_product(h, s, x, e));
    if (!left_degree || deg == *left_degree) span.add(cup_product(h, s, e, z));
  }
  return span.accepted();
}

std::optional<int> sum_degree(const GradedSpace& H, std::initializer_list<const BitVec*> vs) {
  int sum = 0;
  for (const auto* v : vs) {
    auto d = H.degree_of(*v);
    if (!d) return std::nullopt;
    sum += *d;
  }
  return H.reduce(sum);
}

MasseyResult finish_triple(const Homology& h, const AInftyStructure& s, const BitVec& x, const BitVec& y,
                           const BitVec& z, const BitVec& value_cochain) {
  if (!h.is_cycle(value_cochain)) throw InternalError("Massey triple cochain is not a cocycle");
  MasseyResult r;
  r.status = MasseyResult::Status::Defined;
  r.systems = 1;
  auto total = sum_degree(h.classes(), {&x, &y, &z});
  r.degree = total ? h.classes().reduce(*total + 1) : 0;
  r.indeterminacy = triple_indeterminacy(h, s, x, z, sum_degree(h.classes(), {&y, &z}),
                                         sum_degree(h.classes(), {&x, &y}));
  const BitVec cls = h.p(value_cochain);
  r.representative = reduce_modulo(cls, r.indeterminacy);
  r.values = {cls};
  return r;
}

std::optional<MasseyResult> triple_obstruction(const Homology& h, const AInftyStructure& s, const BitVec& x,
                                               const BitVec& y, const BitVec& z) {
  MasseyResult r;
  r.representative = BitVec(h.dim());
  BitVec xy = cup_product(h, s, x, y);
  if (xy.any()) {
    r.witness = xy;
    r.reason = "first product is nonzero: " + h.classes().format(xy);
    return r;
  }
  BitVec yz = cup_product(h, s, y, z);
  if (yz.any()) {
    r.witness = yz;
    r.reason = "second product is nonzero: " + h.classes().format(yz);
    return r;
  }
  return std::nullopt;
}

}  // namespace

MasseyResult massey_triple(const Homology& h, const AInftyStructure& s, const BitVec& x, const BitVec& y,
                           const BitVec& z) {
  for (const auto* v : {&x, &y, &z})
    if (v->size() != h.dim()) throw ContractError("class vector has the wrong dimension");
  if (auto bad = triple_obstruction(h, s, x, y, z)) return *bad;
  const BitVec a = h.i(x), b = h.i(y), c = h.i(z);
  const BitVec xt = h.h(m2(s, a, b));
  const BitVec yt = h.h(m2(s, b, c));
  return finish_triple(h, s, x, y, z, m3(s, a, b, c) ^ m2(s, a, yt) ^ m2(s, xt, c));
}

MasseyResult massey_triple_cochains(const Homology& h, const AInftyStructure& s, const BitVec& a,
                                    const BitVec& b, const BitVec& c) {
  for (const auto* v : {&a, &b, &c})
    if (!h.is_cycle(*v)) throw ContractError("Massey inputs must be cocycles");
  const BitVec x = h.p(a), y = h.p(b), z = h.p(c);
  if (auto bad = triple_obstruction(h, s, x, y, z)) return *bad;

  // Solve d u = w using the images of basis vectors directly.
  const auto& d = h.differential();
  const std::size_t n = h.space().size();
  LinearSpan span(n);
  std::vector<std::size_t> used;
  for (std::size_t j = 0; j < n; ++j)
    if (span.add(d.images[j])) used.push_back(j);
  auto preimage = [&](const BitVec& w) {
    auto combo = span.solve(w);
    if (!combo) throw InternalError("Massey defining cochain has no preimage");
    BitVec u(n);
    for (auto k : combo->ones()) u.set(used[k]);
    return u;
  };
  const BitVec xt = preimage(m2(s, a, b));
  const BitVec yt = preimage(m2(s, b, c));
  return finish_triple(h, s, x, y, z, m3(s, a, b, c) ^ m2(s, a, yt) ^ m2(s, xt, c));
}

BitVec massey_sum(const AInftyStructure& s, const std::vector<std::vector<BitVec>>& b, std::size_t l,
                  std::size_t m) {
  BitVec out(s.space.size());
  const std::size_t gaps = m - l;
  // Each nonempty subset of the gaps cuts [l, m] into k >= 2 consecutive blocks.
  for (std::size_t mask = 1; mask < (std::size_t{1} << gaps); ++mask) {
    std::vector<BitVec> args;
    std::size_t start = l;
    for (std::size_t g = 0; g < gaps; ++g) {
      if (mask & (std::size_t{1} << g)) {
        args.push_back(b[start][l + g]);
        start = l + g + 1;
      }
    }
    args.push_back(b[start][m]);
    if (const auto* op = s.op(args.size())) out ^= (*op)(args);
  }
  return out;
}

namespace {

class HigherSearch {
 public:
  HigherSearch(const Homology& h, const AInftyStructure& s, const std::vector<BitVec>& classes,
               std::vector<int> degrees, const MasseyOptions& opt)
      : h_(h), s_(s), n_(classes.size()), degrees_(std::move(degrees)), opt_(opt) {
    b_.assign(n_, std::vector<BitVec>(n_, BitVec(s.space.size())));
    for (std::size_t m = 0; m < n_; ++m) b_[m][m] = h.i(classes[m]);
    for (std::size_t len = 1; len + 1 < n_; ++len)
      for (std::size_t l = 0; l + len < n_; ++l) pairs_.emplace_back(l, l + len);
  }

  void run(MasseyResult& out) {
    dfs(0);
    out.systems = systems_;
    out.truncated = truncated_;
    if (values_.empty()) {
      out.status = MasseyResult::Status::Undefined;
      out.representative = BitVec(h_.dim());
      if (obstruction_) {
        out.witness = obstruction_->second;
        out.reason = "no defining system: sub-bracket " + obstruction_->first + " is obstructed by " +
                     h_.classes().format(obstruction_->second);
      } else {
        out.reason = "no defining system within the enumeration bound";
      }
      return;
    }
    out.status = MasseyResult::Status::Defined;
    out.values.assign(values_.begin(), values_.end());
    LinearSpan diffs(h_.dim());
    for (const auto& v : out.values) diffs.add(v ^ out.values.front());
    out.indeterminacy = diffs.accepted();
    out.representative = diffs.reduce(out.values.front());
  }

 private:
  int degree(std::size_t l, std::size_t m) const {
    int sum = 0;
    for (std::size_t k = l; k <= m; ++k) sum += degrees_[k];
    return s_.space.reduce(sum);
  }

  void dfs(std::size_t idx) {
    if (truncated_) return;
    if (idx == pairs_.size()) {
      if (systems_ >= opt_.max_systems) {
        truncated_ = true;
        return;
      }
      ++systems_;
      BitVec v = massey_sum(s_, b_, 0, n_ - 1);
      if (!h_.is_cycle(v)) throw InternalError("Massey bracket cochain is not a cocycle");
      values_.insert(h_.p(v));
      return;
    }
    auto [l, m] = pairs_[idx];
    const BitVec S = massey_sum(s_, b_, l, m);
    if (!h_.is_cycle(S)) throw InternalError("Massey defining cochain sum is not a cocycle");
    const BitVec cls = h_.p(S);
    if (cls.any()) {
      if (!obstruction_) obstruction_.emplace("(" + std::to_string(l + 1) + "," + std::to_string(m + 1) + ")", cls);
      return;
    }
    const BitVec base = h_.h(S);
    const auto free = h_.classes_of_degree(degree(l, m));
    const std::size_t choices = std::size_t{1} << free.size();
    for (std::size_t mask = 0; mask < choices && !truncated_; ++mask) {
      BitVec eta(h_.dim());
      for (std::size_t k = 0; k < free.size(); ++k)
        if (mask & (std::size_t{1} << k)) eta.set(free[k]);
      b_[l][m] = base ^ h_.i(eta);
      dfs(idx + 1);
    }
  }

  const Homology& h_;
  const AInftyStructure& s_;
  std::size_t n_;
  std::vector<int> degrees_;
  const MasseyOptions& opt_;
  std::vector<std::vector<BitVec>> b_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
  std::set<BitVec> values_;
  std::optional<std::pair<std::string, BitVec>> obstruction_;
  std::size_t systems_ = 0;
  bool truncated_ = false;
};

}  // namespace

MasseyResult massey_higher(const Homology& h, const AInftyStructure& s, const std::vector<BitVec>& classes,
                           const MasseyOptions& options) {
  if (classes.size() < 3) throw ContractError("Massey products need at least three classes");
  std::vector<int> degrees;
  int total = 1;
  for (const auto& c : classes) {
    if (c.size() != h.dim()) throw ContractError("class vector has the wrong dimension");
    auto d = h.classes().degree_of(c);
    if (!d) throw ContractError("Massey inputs must be nonzero homogeneous classes");
    degrees.push_back(*d);
    total += *d;
  }
  MasseyResult out;
  out.degree = h.classes().reduce(total);
  HigherSearch search(h, s, classes, std::move(degrees), options);
  search.run(out);
  return out;
}

}  // namespace lch
