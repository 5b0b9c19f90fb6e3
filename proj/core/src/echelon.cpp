#include "torichodge/echelon.hpp"

#include <algorithm>
#include <unordered_map>

namespace th {

SparseVec sparse_axpy(const SparseVec& x, const Rat& a, const SparseVec& y) {
  SparseVec out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, a * y[j].second);
      ++j;
    } else {
      Rat v = x[i].second + a * y[j].second;
      if (v != 0) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec sparse_scale(const SparseVec& x, const Rat& a) {
  if (a == 0) return {};
  SparseVec out = x;
  for (auto& e : out) e.second *= a;
  return out;
}

SparseVec sparse_from_dense(const RatVec& v) {
  SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out.emplace_back(static_cast<std::uint32_t>(i), v[i]);
  return out;
}

RatVec sparse_to_dense(const SparseVec& v, std::size_t n) {
  RatVec out(n);
  for (const auto& [c, x] : v) out[c] = x;
  return out;
}

SparseVec Echelon::reduce(const SparseVec& v) const {
  std::vector<std::pair<std::size_t, Rat>> unused;
  return reduce(v, unused);
}

SparseVec Echelon::reduce(const SparseVec& v,
                          std::vector<std::pair<std::size_t, Rat>>& used) const {
  used.clear();
  SparseVec cur = v;
  std::size_t pos = 0;
  while (pos < cur.size()) {
    int r = pivot_row_[cur[pos].first];
    if (r < 0) {
      ++pos;
      continue;
    }
    Rat coef = cur[pos].second;
    used.emplace_back(static_cast<std::size_t>(r), coef);
    // Entries before pos are untouched: stored rows start at their pivot.
    SparseVec tail(cur.begin() + pos, cur.end());
    SparseVec red = sparse_axpy(tail, -coef, rows_[r]);
    cur.resize(pos);
    cur.insert(cur.end(), red.begin(), red.end());
  }
  return cur;
}

bool Echelon::insert(const SparseVec& v) {
  SparseVec r = reduce(v);
  if (r.empty()) return false;
  Rat inv = 1 / r.front().second;
  for (auto& e : r) e.second *= inv;
  pivot_row_[r.front().first] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(r));
  return true;
}

std::vector<std::size_t> Echelon::non_pivots() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < pivot_row_.size(); ++c)
    if (pivot_row_[c] < 0) out.push_back(c);
  return out;
}

std::optional<std::size_t> SpanBasis::insert(const SparseVec& v) {
  std::vector<std::pair<std::size_t, Rat>> used;
  SparseVec r = ech_.reduce(v, used);
  if (r.empty()) return std::nullopt;
  std::size_t idx = count_++;
  for (auto& c : combo_) c.resize(count_);
  RatVec combo(count_);
  combo[idx] = 1;
  for (const auto& [row, coef] : used)
    for (std::size_t j = 0; j < combo_[row].size(); ++j) combo[j] -= coef * combo_[row][j];
  Rat inv = 1 / r.front().second;
  for (auto& x : combo) x *= inv;
  ech_.insert(r);
  combo_.push_back(std::move(combo));
  return idx;
}

std::optional<RatVec> SpanBasis::coords(const SparseVec& v) const {
  std::vector<std::pair<std::size_t, Rat>> used;
  SparseVec r = ech_.reduce(v, used);
  if (!r.empty()) return std::nullopt;
  RatVec out(count_);
  for (const auto& [row, coef] : used)
    for (std::size_t j = 0; j < combo_[row].size(); ++j) out[j] += coef * combo_[row][j];
  return out;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<unsigned __int128>(a) * b % p;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce_mod(const Rat& q, std::uint64_t p, bool& bad) {
  Int den = q.get_den();
  Int num = q.get_num();
  Int pp(static_cast<unsigned long>(p));
  Int dm = den % pp;
  if (dm == 0) {
    bad = true;
    return 0;
  }
  Int nm = num % pp;
  if (nm < 0) nm += pp;
  std::uint64_t n = nm.get_ui(), d = dm.get_ui();
  return mulmod(n, powmod(d, p - 2, p), p);
}

}  // namespace

std::size_t modular_rank(const std::vector<SparseVec>& rows, std::size_t ncols, std::uint64_t p,
                         bool* bad_prime) {
  bool bad = false;
  std::vector<int> pivot_row(ncols, -1);
  std::vector<std::vector<std::pair<std::uint32_t, std::uint64_t>>> stored;
  for (const auto& row : rows) {
    std::vector<std::pair<std::uint32_t, std::uint64_t>> cur;
    for (const auto& [c, q] : row) {
      std::uint64_t v = reduce_mod(q, p, bad);
      if (v) cur.emplace_back(c, v);
    }
    std::size_t pos = 0;
    while (pos < cur.size()) {
      int r = pivot_row[cur[pos].first];
      if (r < 0) {
        ++pos;
        continue;
      }
      std::uint64_t coef = cur[pos].second;
      const auto& pr = stored[r];
      std::vector<std::pair<std::uint32_t, std::uint64_t>> merged(cur.begin(), cur.begin() + pos);
      std::size_t i = pos, j = 0;
      while (i < cur.size() || j < pr.size()) {
        if (j == pr.size() || (i < cur.size() && cur[i].first < pr[j].first)) {
          merged.push_back(cur[i++]);
        } else {
          std::uint64_t sub = mulmod(coef, pr[j].second, p);
          if (i < cur.size() && cur[i].first == pr[j].first) {
            std::uint64_t v = (cur[i].second + p - sub) % p;
            if (v) merged.emplace_back(cur[i].first, v);
            ++i;
          } else {
            merged.emplace_back(pr[j].first, (p - sub) % p);
          }
          ++j;
        }
      }
      cur.swap(merged);
    }
    if (cur.empty()) continue;
    std::uint64_t inv = powmod(cur.front().second, p - 2, p);
    for (auto& e : cur) e.second = mulmod(e.second, inv, p);
    pivot_row[cur.front().first] = static_cast<int>(stored.size());
    stored.push_back(std::move(cur));
  }
  if (bad_prime) *bad_prime = bad;
  return stored.size();
}

}  // namespace th
