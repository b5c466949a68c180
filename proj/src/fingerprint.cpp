#include "lch/fingerprint.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <optional>
#include <set>
#include <thread>

#include "lch/tilde.hpp"

namespace lch {

namespace {

// Nonzero vectors in the span of the given classes, capped.
std::vector<BitVec> nonzero_vectors(std::size_t dim, const std::vector<std::size_t>& classes, std::size_t cap) {
  std::vector<BitVec> out;
  const std::size_t bits = std::min<std::size_t>(classes.size(), 20);
  for (std::size_t mask = 1; mask < (std::size_t{1} << bits) && out.size() < cap; ++mask) {
    BitVec v(dim);
    for (std::size_t k = 0; k < bits; ++k)
      if (mask & (std::size_t{1} << k)) v.set(classes[k]);
    out.push_back(std::move(v));
  }
  return out;
}

bool capped(const std::vector<std::size_t>& classes, std::size_t cap) {
  return classes.size() >= 20 || (std::size_t{1} << classes.size()) - 1 > cap;
}

void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& body) {
  threads = std::max<std::size_t>(1, std::min(threads, count));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mutex;
  for (std::size_t t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

AugmentationFingerprint fingerprint_structure(const AInftyStructure& s, const FingerprintOptions& options) {
  AugmentationFingerprint fp;
  const Homology h = homology_of(s);
  const GradedSpace& H = h.classes();
  fp.dims = h.dims();
  const std::vector<int> degrees = H.degree_set();

  for (int r : degrees)
    for (int t : degrees) {
      std::vector<BitVec> products;
      for (auto x : h.classes_of_degree(r))
        for (auto y : h.classes_of_degree(t))
          products.push_back(cup_product(h, s, BitVec::unit(H.size(), x), BitVec::unit(H.size(), y)));
      if (std::size_t rank = rank_of(products); rank > 0) fp.cup_ranks[{r, t}] = rank;
    }

  std::map<int, std::vector<BitVec>> vectors;
  for (int r : degrees) {
    const auto cls = h.classes_of_degree(r);
    vectors[r] = nonzero_vectors(H.size(), cls, options.max_class_vectors);
    if (options.massey_order >= 3 && capped(cls, options.max_class_vectors)) fp.truncated = true;
  }

  for (std::size_t order = 3; order <= options.massey_order; ++order) {
    std::vector<std::size_t> pick(order, 0);
    if (degrees.empty()) break;
    while (true) {
      std::vector<int> tuple;
      for (auto p : pick) tuple.push_back(degrees[p]);
      MasseyFlags flags;
      // Every choice of nonzero classes in these degrees.
      std::vector<std::size_t> which(order, 0);
      while (true) {
        std::vector<BitVec> args;
        for (std::size_t a = 0; a < order; ++a) args.push_back(vectors[tuple[a]][which[a]]);
        MasseyResult r = order == 3 ? massey_triple(h, s, args[0], args[1], args[2])
                                    : massey_higher(h, s, args, options.massey);
        flags.defined |= r.defined();
        flags.nonzero |= r.nonzero();
        fp.truncated |= r.truncated;
        std::size_t a = order;
        bool done = true;
        while (a > 0) {
          --a;
          if (++which[a] < vectors[tuple[a]].size()) {
            done = false;
            break;
          }
          which[a] = 0;
        }
        if (done) break;
      }
      if (flags.defined) fp.massey[tuple] = flags;

      std::size_t a = order;
      bool done = true;
      while (a > 0) {
        --a;
        if (++pick[a] < degrees.size()) {
          done = false;
          break;
        }
        pick[a] = 0;
      }
      if (done) break;
    }
  }

  for (std::size_t n = 1; n <= options.order_n_cap; ++n) fp.order_n[n] = cohomology_dims(tilde_complex(s, n));
  return fp;
}

Fingerprint fingerprint_dga(const Dga& d, const FingerprintOptions& options) {
  const auto augs = enumerate_augmentations(d);
  Fingerprint fp;
  fp.augmentations.resize(augs.size());
  parallel_for(augs.size(), options.threads, [&](std::size_t a) {
    fp.augmentations[a] = fingerprint_structure(adjoint_structure(d, augs[a]), options);
  });
  std::sort(fp.augmentations.begin(), fp.augmentations.end());
  return fp;
}

namespace {

template <typename Key, typename Value>
std::vector<Value> column(const Fingerprint& f, std::map<Key, Value> AugmentationFingerprint::*field,
                          const Key& key) {
  std::vector<Value> out;
  for (const auto& a : f.augmentations) {
    auto it = (a.*field).find(key);
    out.push_back(it == (a.*field).end() ? Value{} : it->second);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

std::string format_degrees(const std::vector<int>& d) {
  std::string out = "(";
  for (std::size_t i = 0; i < d.size(); ++i) out += (i ? ", " : "") + std::to_string(d[i]);
  return out + ")";
}

std::string describe(const std::vector<MasseyFlags>& flags) {
  std::string out;
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (i) out += ",";
    out += !flags[i].defined ? "undefined" : flags[i].nonzero ? "nonzero" : "zero";
  }
  return out;
}

}  // namespace

MirrorVerdict compare_fingerprints(const Fingerprint& knot, const Fingerprint& mirror) {
  MirrorVerdict v{false, "", "", knot, mirror};
  if (knot == mirror) {
    v.witness = "all fingerprint fields agree";
    return v;
  }
  v.distinguished = true;
  if (knot.augmentations.size() != mirror.augmentations.size()) {
    v.invariant = "augmentations";
    v.witness = "augmentation counts " + std::to_string(knot.augmentations.size()) + " and " +
                std::to_string(mirror.augmentations.size());
    return v;
  }

  std::vector<std::map<int, std::size_t>> kd, md;
  for (const auto& a : knot.augmentations) kd.push_back(a.dims);
  for (const auto& a : mirror.augmentations) md.push_back(a.dims);
  std::sort(kd.begin(), kd.end());
  std::sort(md.begin(), md.end());
  if (kd != md) {
    v.invariant = "dims";
    v.witness = "graded dimensions of linearized cohomology differ";
    return v;
  }

  std::set<std::pair<int, int>> bideg;
  for (const auto* f : {&knot, &mirror})
    for (const auto& a : f->augmentations)
      for (const auto& [k, r] : a.cup_ranks) bideg.insert(k);
  std::optional<std::pair<int, int>> fallback;
  for (const auto& b : bideg) {
    auto kc = column(knot, &AugmentationFingerprint::cup_ranks, b);
    auto mc = column(mirror, &AugmentationFingerprint::cup_ranks, b);
    if (kc == mc) continue;
    const bool knot_only = std::any_of(kc.begin(), kc.end(), [](auto r) { return r > 0; }) &&
                           std::all_of(mc.begin(), mc.end(), [](auto r) { return r == 0; });
    if (knot_only || !fallback) {
      v.invariant = "cup";
      v.witness = "mu_2 rank in bidegree (" + std::to_string(b.first) + ", " + std::to_string(b.second) +
                  "): knot " + join(kc) + ", mirror " + join(mc);
      if (knot_only) return v;
      fallback = b;
    }
  }
  if (fallback) return v;

  std::set<std::vector<int>> tuples;
  for (const auto* f : {&knot, &mirror})
    for (const auto& a : f->augmentations)
      for (const auto& [k, r] : a.massey) tuples.insert(k);
  bool have_fallback = false;
  for (const auto& t : tuples) {
    auto kc = column(knot, &AugmentationFingerprint::massey, t);
    auto mc = column(mirror, &AugmentationFingerprint::massey, t);
    if (kc == mc) continue;
    const bool knot_only = std::any_of(kc.begin(), kc.end(), [](auto f) { return f.nonzero; }) &&
                           std::none_of(mc.begin(), mc.end(), [](auto f) { return f.nonzero; });
    if (knot_only || !have_fallback) {
      v.invariant = "massey";
      v.witness = "Massey bracket in degrees " + format_degrees(t) + ": knot " + describe(kc) + ", mirror " +
                  describe(mc);
      if (knot_only) return v;
      have_fallback = true;
    }
  }
  if (have_fallback) return v;

  v.invariant = "order-n";
  v.witness = "order-n linearized cohomology dimensions differ";
  return v;
}

MirrorVerdict compare_mirror(const Dga& d, const FingerprintOptions& options) {
  return compare_fingerprints(fingerprint_dga(d, options), fingerprint_dga(mirror_dga(d), options));
}

}  // namespace lch
