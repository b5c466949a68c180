#include "lch/gf2.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <utility>

namespace lch {

BitVec& BitVec::operator^=(const BitVec& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

bool BitVec::any() const {
  return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t BitVec::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t BitVec::next(std::size_t from) const {
  if (from >= size_) return npos;
  std::size_t wi = from >> 6;
  std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (w != 0) {
      std::size_t idx = (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
      return idx < size_ ? idx : npos;
    }
    if (++wi >= words_.size()) return npos;
    w = words_[wi];
  }
}

std::vector<std::size_t> BitVec::ones() const {
  std::vector<std::size_t> out;
  for (std::size_t i = next(0); i != npos; i = next(i + 1)) out.push_back(i);
  return out;
}

bool BitVec::dot(const BitVec& other) const {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
  return std::popcount(acc) & 1;
}

BitVec BitVec::slice(std::size_t begin, std::size_t length) const {
  BitVec out(length);
  for (std::size_t i = next(begin); i != npos && i < begin + length; i = next(i + 1)) out.set(i - begin);
  return out;
}

std::string BitVec::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

std::strong_ordering BitVec::operator<=>(const BitVec& other) const {
  if (auto c = size_ <=> other.size_; c != 0) return c;
  // Compare as bit strings starting at index 0.
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t a = words_[i], b = other.words_[i];
    if (a == b) continue;
    std::uint64_t diff = a ^ b;
    std::uint64_t low = diff & (~diff + 1);
    return (a & low) ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

BitVec LinearSpan::resized(const BitVec& v, std::size_t size) {
  BitVec out(size);
  for (auto i : v.ones()) out.set(i);
  return out;
}

BitVec LinearSpan::reduce(const BitVec& v) const {
  BitVec r = v;
  for (const auto& row : rows_)
    if (r.get(row.pivot)) r ^= row.vec;
  return r;
}

bool LinearSpan::add(const BitVec& v) {
  const std::size_t n = accepted_.size() + 1;
  BitVec r = v;
  BitVec combo(n);
  for (const auto& row : rows_) {
    if (r.get(row.pivot)) {
      r ^= row.vec;
      for (auto i : row.combo.ones()) combo.flip(i);
    }
  }
  std::size_t pivot = r.next(0);
  if (pivot == BitVec::npos) return false;
  combo.set(n - 1);
  accepted_.push_back(v);
  // Keep earlier rows free of the new pivot so that reduction in insertion
  // order stays correct.
  for (auto& row : rows_) {
    row.combo = resized(row.combo, n);
    if (row.vec.get(pivot)) {
      row.vec ^= r;
      row.combo ^= combo;
    }
  }
  rows_.push_back(Row{pivot, std::move(r), std::move(combo)});
  return true;
}

std::optional<BitVec> LinearSpan::solve(const BitVec& v) const {
  BitVec r = v;
  BitVec combo(accepted_.size());
  for (const auto& row : rows_) {
    if (r.get(row.pivot)) {
      r ^= row.vec;
      for (auto i : row.combo.ones()) combo.flip(i);
    }
  }
  if (r.any()) return std::nullopt;
  return combo;
}

std::size_t rank_of(const std::vector<BitVec>& vectors) {
  if (vectors.empty()) return 0;
  LinearSpan span(vectors.front().size());
  for (const auto& v : vectors) span.add(v);
  return span.rank();
}

std::optional<std::vector<BitVec>> invert(const std::vector<BitVec>& rows) {
  const std::size_t n = rows.size();
  std::vector<BitVec> a = rows;
  std::vector<BitVec> inv;
  inv.reserve(n);
  for (std::size_t i = 0; i < n; ++i) inv.push_back(BitVec::unit(n, i));
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = n;
    for (std::size_t r = col; r < n; ++r)
      if (a[r].get(col)) {
        piv = r;
        break;
      }
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r != col && a[r].get(col)) {
        a[r] ^= a[col];
        inv[r] ^= inv[col];
      }
    }
  }
  return inv;
}

namespace {

void normalize(std::vector<std::uint32_t>& row) {
  std::sort(row.begin(), row.end());
  std::vector<std::uint32_t> out;
  out.reserve(row.size());
  for (std::size_t i = 0; i < row.size();) {
    std::size_t j = i;
    while (j < row.size() && row[j] == row[i]) ++j;
    if ((j - i) & 1) out.push_back(row[i]);
    i = j;
  }
  row = std::move(out);
}

}  // namespace

std::size_t sparse_rank(std::vector<std::vector<std::uint32_t>> rows, std::size_t num_cols) {
  for (auto& r : rows) normalize(r);

  std::vector<std::uint32_t> col_count(num_cols, 0);
  std::vector<std::vector<std::uint32_t>> col_rows(num_cols);
  for (std::uint32_t r = 0; r < rows.size(); ++r)
    for (auto c : rows[r]) {
      ++col_count[c];
      col_rows[c].push_back(r);
    }

  using Entry = std::pair<std::uint32_t, std::uint32_t>;  // (count, column)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  for (std::uint32_t c = 0; c < num_cols; ++c)
    if (col_count[c] > 0) queue.emplace(col_count[c], c);

  std::vector<char> alive(rows.size(), 1);
  auto contains = [&](std::uint32_t r, std::uint32_t c) {
    return alive[r] && std::binary_search(rows[r].begin(), rows[r].end(), c);
  };

  std::size_t rank = 0;
  std::vector<std::uint32_t> merged;
  while (!queue.empty()) {
    auto [count, col] = queue.top();
    queue.pop();
    if (count != col_count[col] || count == 0) continue;

    // Gather live rows holding this column; drop stale references.
    auto& holders = col_rows[col];
    std::vector<std::uint32_t> live;
    for (auto r : holders)
      if (contains(r, col)) live.push_back(r);
    std::sort(live.begin(), live.end());
    live.erase(std::unique(live.begin(), live.end()), live.end());
    holders.clear();
    if (live.empty()) continue;

    std::uint32_t pivot = live.front();
    for (auto r : live)
      if (rows[r].size() < rows[pivot].size()) pivot = r;
    ++rank;

    const std::vector<std::uint32_t> prow = rows[pivot];
    for (auto r : live) {
      if (r == pivot) continue;
      merged.clear();
      std::set_symmetric_difference(rows[r].begin(), rows[r].end(), prow.begin(), prow.end(),
                                    std::back_inserter(merged));
      // Update counts for columns entering or leaving row r.
      auto a = rows[r].begin(), ae = rows[r].end();
      auto b = prow.begin(), be = prow.end();
      while (a != ae || b != be) {
        if (b == be || (a != ae && *a < *b)) {
          ++a;
        } else if (a == ae || *b < *a) {
          ++col_count[*b];
          col_rows[*b].push_back(r);
          queue.emplace(col_count[*b], *b);
          ++b;
        } else {
          --col_count[*a];
          if (*a != col) queue.emplace(col_count[*a], *a);
          ++a;
          ++b;
        }
      }
      rows[r].swap(merged);
    }
    for (auto c : prow) {
      --col_count[c];
      if (c != col && col_count[c] > 0) queue.emplace(col_count[c], c);
    }
    alive[pivot] = 0;
    rows[pivot].clear();
  }
  return rank;
}

}  // namespace lch
