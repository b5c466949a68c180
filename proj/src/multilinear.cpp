#include "lch/multilinear.hpp"

#include "lch/errors.hpp"

namespace lch {

void MultilinearMap::add(const Tuple& t, const BitVec& v) {
  if (t.size() != arity_) throw ContractError("tuple length does not match map arity");
  if (v.size() != out_dim_) throw ContractError("image has the wrong dimension");
  if (v.none()) return;
  auto [it, inserted] = entries_.try_emplace(t, v);
  if (inserted) return;
  it->second ^= v;
  if (it->second.none()) entries_.erase(it);
}

void MultilinearMap::add(const Tuple& t, std::size_t out_index) { add(t, BitVec::unit(out_dim_, out_index)); }

BitVec MultilinearMap::at(const Tuple& t) const {
  auto it = entries_.find(t);
  return it == entries_.end() ? BitVec(out_dim_) : it->second;
}

BitVec MultilinearMap::operator()(const std::vector<BitVec>& args) const {
  if (args.size() != arity_) throw ContractError("wrong number of arguments to multilinear map");
  BitVec out(out_dim_);
  if (entries_.empty()) return out;

  // Expand the argument supports when that is cheaper than scanning the table.
  std::vector<std::vector<std::size_t>> supports;
  supports.reserve(arity_);
  double expand = 1.0;
  for (const auto& a : args) {
    supports.push_back(a.ones());
    expand *= static_cast<double>(supports.back().size());
    if (expand == 0.0) return out;
  }
  if (expand <= static_cast<double>(entries_.size())) {
    Tuple t(arity_);
    std::vector<std::size_t> pos(arity_, 0);
    while (true) {
      for (std::size_t s = 0; s < arity_; ++s) t[s] = static_cast<std::uint32_t>(supports[s][pos[s]]);
      if (auto it = entries_.find(t); it != entries_.end()) out ^= it->second;
      std::size_t s = arity_;
      while (s > 0) {
        --s;
        if (++pos[s] < supports[s].size()) break;
        pos[s] = 0;
        if (s == 0) return out;
      }
      if (arity_ == 0) return out;
    }
  }
  for (const auto& [key, img] : entries_) {
    bool hit = true;
    for (std::size_t s = 0; s < arity_ && hit; ++s) hit = args[s].get(key[s]);
    if (hit) out ^= img;
  }
  return out;
}

std::vector<std::vector<const Tuple*>> MultilinearMap::output_index() const {
  std::vector<std::vector<const Tuple*>> index(out_dim_);
  for (const auto& [key, img] : entries_)
    for (auto c : img.ones()) index[c].push_back(&key);
  return index;
}

void TupleAccumulator::add(const Tuple& t, const BitVec& v) {
  if (v.size() != out_dim_) throw ContractError("image has the wrong dimension");
  if (v.none()) return;
  auto [it, inserted] = entries_.try_emplace(t, v);
  if (!inserted) it->second ^= v;
}

const std::pair<const Tuple, BitVec>* TupleAccumulator::first_nonzero() const {
  for (const auto& entry : entries_)
    if (entry.second.any()) return &entry;
  return nullptr;
}

}  // namespace lch
