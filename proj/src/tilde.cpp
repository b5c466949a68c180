#include "lch/tilde.hpp"

#include <algorithm>

#include "lch/errors.hpp"

namespace lch {

void normalize_edges(EdgeList& edges) {
  std::sort(edges.begin(), edges.end());
  std::size_t out = 0;
  for (std::size_t i = 0; i < edges.size();) {
    std::size_t j = i;
    while (j < edges.size() && edges[j] == edges[i]) ++j;
    if ((j - i) & 1) edges[out++] = edges[i];
    i = j;
  }
  edges.resize(out);
}

TensorWords::TensorWords(const GradedSpace& base, std::size_t order) : base_(base), order_(order) {
  if (order == 0) throw ContractError("tensor order must be positive");
  const std::uint64_t N = base.size();
  offsets_.assign(order + 2, 0);
  std::uint64_t block = 1;
  for (std::size_t len = 1; len <= order; ++len) {
    block *= N;
    if (block > (std::uint64_t{1} << 31) || offsets_[len] + block > (std::uint64_t{1} << 31))
      throw ContractError("tensor word basis is too large");
    offsets_[len + 1] = offsets_[len] + block;
  }
  degrees_.resize(size());
  for (std::uint64_t j = 0; j < N; ++j) degrees_[j] = base.degrees[j];
  for (std::size_t len = 2; len <= order; ++len) {
    const std::uint64_t prev = offsets_[len - 1];
    const std::uint64_t count = offsets_[len + 1] - offsets_[len];
    for (std::uint64_t idx = 0; idx < count; ++idx)
      degrees_[offsets_[len] + idx] = base.reduce(degrees_[prev + idx / N] + base.degrees[idx % N]);
  }
}

std::size_t TensorWords::length(std::uint32_t id) const {
  for (std::size_t len = 1; len <= order_; ++len)
    if (id < offsets_[len + 1]) return len;
  throw ContractError("tensor word id out of range");
}

Tuple TensorWords::decode(std::uint32_t id) const {
  const std::size_t len = length(id);
  const std::uint64_t N = base_.size();
  std::uint64_t idx = id - offsets_[len];
  Tuple w(len);
  for (std::size_t k = len; k-- > 0;) {
    w[k] = static_cast<std::uint32_t>(idx % N);
    idx /= N;
  }
  return w;
}

std::uint32_t TensorWords::encode(const Tuple& word) const {
  if (word.empty() || word.size() > order_) throw ContractError("tensor word length out of range");
  std::uint64_t idx = 0;
  for (auto c : word) idx = idx * base_.size() + c;
  return static_cast<std::uint32_t>(offsets_[word.size()] + idx);
}

std::string TensorWords::label(std::uint32_t id) const {
  std::string out;
  for (auto c : decode(id)) {
    if (!out.empty()) out += "|";
    out += base_.labels[c];
  }
  return out;
}

namespace {

std::uint64_t power(std::uint64_t base, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= base;
  return r;
}

// Row ranges of an edge list sorted by source.
struct Rows {
  explicit Rows(const EdgeList& edges, std::size_t size) : start(size + 1, 0) {
    for (auto e : edges) ++start[edge_src(e) + 1];
    for (std::size_t i = 0; i < size; ++i) start[i + 1] += start[i];
    dst.reserve(edges.size());
    for (auto e : edges) dst.push_back(edge_dst(e));
  }
  std::vector<std::uint64_t> start;
  std::vector<std::uint32_t> dst;
};

}  // namespace

TildeComplex tilde_complex(const AInftyStructure& s, std::size_t n, const TildeOptions& options) {
  TildeComplex c{TensorWords(s.space, n), {}};
  if (c.words.size() > options.max_words) throw ContractError("order-n complex exceeds the configured word limit");
  const std::uint64_t N = s.space.size();
  for (std::size_t j = 1; j <= std::min(n, s.max_arity()); ++j) {
    for (const auto& [key, out] : s.m[j].entries()) {
      std::uint64_t u = 0;
      for (auto t : key) u = u * N + t;
      const auto outs = out.ones();
      for (std::size_t a = j; a <= n; ++a) {
        for (std::size_t i = 0; i + j <= a; ++i) {
          const std::size_t k = a - j - i;
          const std::uint64_t P = power(N, i), S = power(N, k), Nj = power(N, j);
          for (std::uint64_t p = 0; p < P; ++p)
            for (std::uint64_t q = 0; q < S; ++q) {
              const auto src = static_cast<std::uint32_t>(c.words.offset(a) + (p * Nj + u) * S + q);
              for (auto o : outs) {
                const auto dst = static_cast<std::uint32_t>(c.words.offset(a - j + 1) + (p * N + o) * S + q);
                c.d.push_back(edge(src, dst));
              }
            }
        }
      }
    }
  }
  normalize_edges(c.d);
  for (auto e : c.d)
    if (c.words.degree(edge_dst(e)) != s.space.reduce(c.words.degree(edge_src(e)) + 1))
      throw InternalError("tilde differential is not of degree +1");
  if (!squares_to_zero(c.d, c.words.size())) throw InternalError("tilde differential does not square to zero");
  return c;
}

bool squares_to_zero(const EdgeList& d, std::size_t size) {
  Rows rows(d, size);
  std::vector<std::uint32_t> acc;
  for (std::size_t u = 0; u < size; ++u) {
    acc.clear();
    for (auto i = rows.start[u]; i < rows.start[u + 1]; ++i) {
      const auto v = rows.dst[i];
      for (auto k = rows.start[v]; k < rows.start[v + 1]; ++k) acc.push_back(rows.dst[k]);
    }
    if (acc.empty()) continue;
    std::sort(acc.begin(), acc.end());
    for (std::size_t i = 0; i < acc.size();) {
      std::size_t j = i;
      while (j < acc.size() && acc[j] == acc[i]) ++j;
      if ((j - i) & 1) return false;
      i = j;
    }
  }
  return true;
}

std::map<int, std::size_t> ranks_by_degree(const TensorWords& words, const EdgeList& d) {
  const std::size_t size = words.size();
  std::map<int, std::uint32_t> count;
  std::vector<std::uint32_t> local(size);
  for (std::uint32_t id = 0; id < size; ++id) local[id] = count[words.degree(id)]++;

  std::map<int, std::vector<std::vector<std::uint32_t>>> rows;
  std::map<int, std::size_t> cols;
  for (std::size_t i = 0; i < d.size();) {
    const auto src = edge_src(d[i]);
    std::vector<std::uint32_t> row;
    int target = 0;
    for (; i < d.size() && edge_src(d[i]) == src; ++i) {
      row.push_back(local[edge_dst(d[i])]);
      target = words.degree(edge_dst(d[i]));
    }
    rows[words.degree(src)].push_back(std::move(row));
    cols[words.degree(src)] = count[target];
  }
  std::map<int, std::size_t> out;
  for (auto& [deg, r] : rows) out[deg] = sparse_rank(std::move(r), cols[deg]);
  return out;
}

std::map<int, std::size_t> cohomology_dims(const TildeComplex& c) {
  const auto ranks = ranks_by_degree(c.words, c.d);
  std::map<int, std::size_t> size;
  for (std::uint32_t id = 0; id < c.words.size(); ++id) ++size[c.words.degree(id)];
  const GradedSpace& base = c.words.base();
  std::map<int, std::size_t> out;
  for (auto [k, dim] : size) {
    std::size_t r_out = ranks.count(k) ? ranks.at(k) : 0;
    const int prev = base.reduce(k - 1);
    std::size_t r_in = ranks.count(prev) ? ranks.at(prev) : 0;
    out[k] = dim - r_out - r_in;
  }
  return out;
}

EdgeList truncated_chain_differential(const Dga& twisted, std::size_t n, const TensorWords& words) {
  EdgeList edges;
  for (std::uint32_t id = 0; id < words.size(); ++id) {
    const Tuple w = words.decode(id);
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
      for (const auto& t : twisted.d(w[pos]).terms()) {
        if (t.empty()) throw ContractError("twisted differential has a constant term");
        if (w.size() - 1 + t.size() > n) continue;
        Tuple out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
        out.insert(out.end(), t.begin(), t.end());
        out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(pos) + 1, w.end());
        edges.push_back(edge(id, words.encode(out)));
      }
    }
  }
  normalize_edges(edges);
  return edges;
}

EdgeList transpose(const EdgeList& edges) {
  EdgeList out;
  out.reserve(edges.size());
  for (auto e : edges) out.push_back(edge(edge_dst(e), edge_src(e)));
  normalize_edges(out);
  return out;
}

OrderNResult order_n_cohomology(const Dga& d, const Augmentation& e, std::size_t n, const TildeOptions& options) {
  const Dga tw = twist(d, e);
  const AInftyStructure s = adjoint_structure(d, e);
  const TildeComplex c = tilde_complex(s, n, options);
  OrderNResult r;
  r.order = n;
  r.words = c.words.size();
  r.edges = c.d.size();
  r.lemma_matches = transpose(truncated_chain_differential(tw, n, c.words)) == c.d;
  r.dims = cohomology_dims(c);
  return r;
}

TildeMap tilde_of_morphism(const AInftyMorphism& f, std::size_t n, const TildeOptions& options) {
  TildeMap out{TensorWords(f.source, n), TensorWords(f.target, n), {}};
  if (out.source.size() > options.max_words || out.target.size() > options.max_words)
    throw ContractError("order-n complex exceeds the configured word limit");
  for (std::uint32_t id = 0; id < out.source.size(); ++id) {
    const Tuple w = out.source.decode(id);
    const std::size_t a = w.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << (a - 1)); ++mask) {
      // Blocks end after position g whenever bit g of mask is set.
      std::vector<std::vector<std::size_t>> supports;
      std::size_t start = 0;
      bool zero = false;
      for (std::size_t g = 0; g < a && !zero; ++g) {
        if (g + 1 == a || (mask & (std::size_t{1} << g))) {
          const std::size_t len = g + 1 - start;
          const auto* fl = f.component(len);
          BitVec img = fl ? fl->at(Tuple(w.begin() + static_cast<std::ptrdiff_t>(start),
                                         w.begin() + static_cast<std::ptrdiff_t>(g + 1)))
                          : BitVec(f.target.size());
          if (img.none()) zero = true;
          supports.push_back(img.ones());
          start = g + 1;
        }
      }
      if (zero) continue;
      std::vector<std::size_t> pos(supports.size(), 0);
      Tuple t(supports.size());
      while (true) {
        for (std::size_t b = 0; b < supports.size(); ++b) t[b] = static_cast<std::uint32_t>(supports[b][pos[b]]);
        out.f.push_back(edge(id, out.target.encode(t)));
        std::size_t b = supports.size();
        bool done = true;
        while (b > 0) {
          --b;
          if (++pos[b] < supports[b].size()) {
            done = false;
            break;
          }
          pos[b] = 0;
        }
        if (done) break;
      }
    }
  }
  normalize_edges(out.f);
  return out;
}

TildeMap tilde_of_morphism(const AInftyMorphism& f, const AInftyStructure& src, const AInftyStructure& dst,
                           std::size_t n, const TildeOptions& options) {
  const RelationReport r = check_ainfty_morphism(f, src, dst, n);
  if (!r) throw ContractError("not an A_" + std::to_string(n) + " morphism: " + r.message);
  TildeMap out = tilde_of_morphism(f, n, options);
  if (!is_chain_map(out, tilde_complex(src, n, options), tilde_complex(dst, n, options)))
    throw InternalError("induced tilde map does not commute with the differentials");
  return out;
}

EdgeList compose(const EdgeList& a, const EdgeList& b) {
  std::uint32_t max_mid = 0;
  for (auto e : a) max_mid = std::max(max_mid, edge_dst(e));
  for (auto e : b) max_mid = std::max(max_mid, edge_src(e));
  Rows rows(b, std::size_t{max_mid} + 1);
  EdgeList out;
  for (auto e : a) {
    const auto v = edge_dst(e);
    for (auto k = rows.start[v]; k < rows.start[v + 1]; ++k) out.push_back(edge(edge_src(e), rows.dst[k]));
  }
  normalize_edges(out);
  return out;
}

bool is_chain_map(const TildeMap& f, const TildeComplex& src, const TildeComplex& dst) {
  return compose(src.d, f.f) == compose(f.f, dst.d);
}

std::map<int, std::size_t> induced_cohomology_rank(const TildeMap& f, const TildeComplex& src,
                                                   const TildeComplex& dst) {
  const std::size_t n = src.words.size();
  if (n > 20000) throw ContractError("source complex too large for explicit cohomology");
  GradedSpace space;
  space.modulus = src.words.base().modulus;
  for (std::uint32_t id = 0; id < n; ++id) {
    space.labels.push_back(src.words.label(id));
    space.degrees.push_back(src.words.degree(id));
  }
  GradedMap d{space, +1, std::vector<BitVec>(n, BitVec(n))};
  for (auto e : src.d) d.images[edge_src(e)].set(edge_dst(e));
  const Homology h(std::move(d));

  Rows frows(f.f, n);
  const TensorWords& tw = dst.words;
  std::map<int, std::uint32_t> count;
  std::vector<std::uint32_t> local(tw.size());
  for (std::uint32_t id = 0; id < tw.size(); ++id) local[id] = count[tw.degree(id)]++;
  std::map<int, std::vector<std::vector<std::uint32_t>>> boundary_rows;
  for (std::size_t i = 0; i < dst.d.size();) {
    const auto s = edge_src(dst.d[i]);
    std::vector<std::uint32_t> row;
    int target = 0;
    for (; i < dst.d.size() && edge_src(dst.d[i]) == s; ++i) {
      row.push_back(local[edge_dst(dst.d[i])]);
      target = tw.degree(edge_dst(dst.d[i]));
    }
    boundary_rows[target].push_back(std::move(row));
  }

  std::map<int, std::size_t> out;
  for (int k : space.degree_set()) {
    const auto cls = h.classes_of_degree(k);
    out[k] = 0;
    if (cls.empty()) continue;
    const std::size_t cols = count.count(k) ? count[k] : 0;
    auto rows = boundary_rows[k];
    const std::size_t base_rank = sparse_rank(rows, cols);
    for (auto c : cls) {
      std::vector<std::uint32_t> row;
      for (auto j : h.rep(c).ones())
        for (auto i = frows.start[j]; i < frows.start[j + 1]; ++i) {
          const auto t = frows.dst[i];
          if (tw.degree(t) != k) throw InternalError("induced map is not degree preserving");
          row.push_back(local[t]);
        }
      rows.push_back(std::move(row));
    }
    out[k] = sparse_rank(std::move(rows), cols) - base_rank;
  }
  return out;
}

bool SplittingReport::ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const SplittingRow& r) { return r.ok(); });
}

SplittingReport splitting_check_n2(const Dga& d, const Augmentation& e) {
  const AInftyStructure s = adjoint_structure(d, e);
  const Homology h = homology_of(s);
  const OrderNResult two = order_n_cohomology(d, e, 2);
  const GradedSpace& H = h.classes();

  std::map<int, std::vector<BitVec>> products;  // by total degree |x| + |y|
  std::map<int, std::size_t> tensor_dim;
  for (std::size_t x = 0; x < H.size(); ++x)
    for (std::size_t y = 0; y < H.size(); ++y) {
      const int k = H.reduce(H.degrees[x] + H.degrees[y]);
      ++tensor_dim[k];
      products[k].push_back(cup_product(h, s, BitVec::unit(H.size(), x), BitVec::unit(H.size(), y)));
    }
  auto rank_at = [&](int k) -> std::size_t {
    auto it = products.find(H.reduce(k));
    return it == products.end() ? 0 : rank_of(it->second);
  };

  SplittingReport report;
  report.convention =
      "dim LCH^k(K,2) = dim LCH^k - rank mu2|(H(x)H)^(k-1) + dim (H(x)H)^k - rank mu2|(H(x)H)^k";
  for (auto [k, dim2] : two.dims) {
    SplittingRow row;
    row.degree = k;
    row.order_two = dim2;
    const std::size_t hk = h.dim(k);
    const std::size_t tk = tensor_dim.count(k) ? tensor_dim[k] : 0;
    row.predicted = hk - rank_at(k - 1) + tk - rank_at(k);
    report.rows.push_back(row);
  }
  return report;
}

std::vector<ReflectionRow> reflection_compare(const Dga& d, std::size_t n, const TildeOptions& options) {
  const Dga mirror = mirror_dga(d);
  std::vector<ReflectionRow> out;
  const auto augs = enumerate_augmentations(d);
  for (std::size_t a = 0; a < augs.size(); ++a) {
    const AInftyStructure sk = adjoint_structure(d, augs[a]);
    const AInftyStructure sm = adjoint_structure(mirror, augs[a]);
    for (std::size_t order = 1; order <= n; ++order) {
      const TildeComplex ck = tilde_complex(sk, order, options);
      const TildeComplex cm = tilde_complex(sm, order, options);
      std::vector<std::uint32_t> tau(ck.words.size());
      for (std::uint32_t id = 0; id < tau.size(); ++id) {
        Tuple w = ck.words.decode(id);
        std::reverse(w.begin(), w.end());
        tau[id] = ck.words.encode(w);
      }
      EdgeList conj;
      conj.reserve(ck.d.size());
      for (auto e : ck.d) conj.push_back(edge(tau[edge_src(e)], tau[edge_dst(e)]));
      normalize_edges(conj);
      ReflectionRow row;
      row.augmentation = a;
      row.order = order;
      row.conjugation_ok = conj == cm.d;
      row.knot_dims = cohomology_dims(ck);
      row.mirror_dims = cohomology_dims(cm);
      out.push_back(std::move(row));
    }
  }
  return out;
}

}  // namespace lch
