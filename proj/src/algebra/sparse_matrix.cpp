#include "kanenobu/algebra/sparse_matrix.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>


namespace kanenobu {

void SparseMatrixQ::add(std::size_t row, std::size_t col, const Rational& value) {
  if (row >= n_rows_ || col >= n_cols_) throw std::out_of_range("matrix index out of range");
  if (value == 0) return;
  if (rows_.size() < n_rows_) rows_.resize(n_rows_);
  auto& r = rows_[row];
  auto it = std::lower_bound(r.begin(), r.end(), col, [](const auto& e, std::size_t c) { return e.first < c; });
  if (it != r.end() && it->first == col) {
    it->second += value;
    if (it->second == 0) r.erase(it);
  } else {
    r.insert(it, {col, value});
  }
}

Rational SparseMatrixQ::at(std::size_t row, std::size_t col) const {
  if (row >= n_rows_ || col >= n_cols_) throw std::out_of_range("matrix index out of range");
  if (row >= rows_.size()) return 0;
  const auto& r = rows_[row];
  auto it = std::lower_bound(r.begin(), r.end(), col, [](const auto& e, std::size_t c) { return e.first < c; });
  return (it != r.end() && it->first == col) ? it->second : Rational(0);
}

std::vector<SparseMatrixQ::Entry> SparseMatrixQ::entries() const {
  std::vector<Entry> out;
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (const auto& [c, v] : rows_[i]) out.push_back({i, c, v});
  return out;
}

std::size_t SparseMatrixQ::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

SparseMatrixQ SparseMatrixQ::transposed() const {
  SparseMatrixQ t(n_cols_, n_rows_);
  for (const auto& e : entries()) t.add(e.col, e.row, e.value);
  return t;
}

SparseMatrixQ SparseMatrixQ::operator*(const SparseMatrixQ& other) const {
  if (n_cols_ != other.n_rows_) throw std::invalid_argument("matrix shape mismatch");
  SparseMatrixQ out(n_rows_, other.n_cols_);
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (const auto& [k, v] : rows_[i]) {
      if (k >= other.rows_.size()) continue;
      for (const auto& [j, w] : other.rows_[k]) out.add(i, j, v * w);
    }
  return out;
}

namespace {

struct Overflow {};

template <class T>
using Row = std::vector<std::pair<std::uint32_t, T>>;

inline std::int64_t checked(std::int64_t v) {
  if (v == std::numeric_limits<std::int64_t>::min()) throw Overflow{};
  return v;
}
inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return checked(r);
}
inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return checked(r);
}
inline std::int64_t abs_of(std::int64_t a) { return a < 0 ? -a : a; }
inline std::int64_t gcd_of(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

inline Integer mul(const Integer& a, const Integer& b) { return a * b; }
inline Integer sub(const Integer& a, const Integer& b) { return a - b; }
inline Integer abs_of(const Integer& a) { return abs(a); }
inline Integer gcd_of(const Integer& a, const Integer& b) { return gcd(a, b); }

template <class T>
bool is_unit(const T& v) {
  return v == 1 || v == -1;
}

template <class T>
const T* find_in(const Row<T>& r, std::uint32_t col) {
  auto it = std::lower_bound(r.begin(), r.end(), col, [](const auto& e, std::uint32_t c) { return e.first < c; });
  return (it != r.end() && it->first == col) ? &it->second : nullptr;
}

// Markowitz-style elimination on one connected block; rows sorted by column.
template <class T>
std::size_t eliminate(std::vector<Row<T>> rows, std::size_t ncols) {
  const std::size_t nr = rows.size();
  std::vector<std::vector<std::uint32_t>> col_rows(ncols);
  std::vector<std::uint32_t> col_count(ncols, 0);
  for (std::uint32_t r = 0; r < nr; ++r)
    for (const auto& [c, v] : rows[r]) {
      col_rows[c].push_back(r);
      ++col_count[c];
    }
  std::vector<char> row_alive(nr, 1), col_done(ncols, 0);
  std::vector<std::vector<std::uint32_t>> buckets(nr + 1);
  for (std::uint32_t c = 0; c < ncols; ++c)
    if (col_count[c] > 0) buckets[col_count[c]].push_back(c);
  std::size_t cur = 1, rnk = 0;
  auto push = [&](std::uint32_t c) {
    if (col_done[c] || col_count[c] == 0) return;
    buckets[col_count[c]].push_back(c);
    cur = std::min<std::size_t>(cur, col_count[c]);
  };

  std::vector<std::uint32_t> stamp(nr, 0), live;
  std::uint32_t epoch = 0;
  Row<T> merged;
  while (true) {
    std::int64_t col = -1;
    while (cur <= nr) {
      auto& b = buckets[cur];
      if (b.empty()) {
        ++cur;
        continue;
      }
      std::uint32_t c = b.back();
      b.pop_back();
      if (col_done[c] || col_count[c] != cur) continue;
      col = c;
      break;
    }
    if (col < 0) break;
    const auto pc = static_cast<std::uint32_t>(col);

    ++epoch;
    live.clear();
    for (std::uint32_t r : col_rows[pc]) {
      if (!row_alive[r] || stamp[r] == epoch || !find_in(rows[r], pc)) continue;
      stamp[r] = epoch;
      live.push_back(r);
    }
    col_rows[pc].clear();
    if (live.empty()) {
      col_done[pc] = 1;
      continue;
    }
    std::sort(live.begin(), live.end());
    std::uint32_t piv = live[0];
    for (std::uint32_t r : live) {
      bool ur = is_unit(*find_in(rows[r], pc)), up = is_unit(*find_in(rows[piv], pc));
      if (ur != up ? ur : rows[r].size() < rows[piv].size()) piv = r;
    }
    const Row<T>& prow = rows[piv];
    const T pv = *find_in(prow, pc);
    const bool unit = is_unit(pv);

    for (std::uint32_t r : live) {
      if (r == piv) continue;
      Row<T>& row = rows[r];
      const T rv = *find_in(row, pc);
      // unit pivot: row - rv*pv*prow ; otherwise pv*row - rv*prow
      const T f = unit ? mul(rv, pv) : rv;
      merged.clear();
      std::size_t i = 0, j = 0;
      while (i < row.size() || j < prow.size()) {
        if (j == prow.size() || (i < row.size() && row[i].first < prow[j].first)) {
          merged.emplace_back(row[i].first, unit ? row[i].second : mul(pv, row[i].second));
          ++i;
        } else if (i == row.size() || prow[j].first < row[i].first) {
          std::uint32_t c = prow[j].first;
          merged.emplace_back(c, sub(T(0), mul(f, prow[j].second)));
          col_rows[c].push_back(r);
          ++col_count[c];
          push(c);
          ++j;
        } else {
          std::uint32_t c = row[i].first;
          T v = sub(unit ? row[i].second : mul(pv, row[i].second), mul(f, prow[j].second));
          if (v == 0) {
            --col_count[c];
            push(c);
          } else {
            merged.emplace_back(c, std::move(v));
          }
          ++i;
          ++j;
        }
      }
      if (!unit && !merged.empty()) {
        T g = 0;
        for (const auto& e : merged) {
          g = gcd_of(g, abs_of(e.second));
          if (g == 1) break;
        }
        if (g > 1)
          for (auto& e : merged) e.second /= g;
      }
      row.swap(merged);
    }
    row_alive[piv] = 0;
    for (const auto& [c, v] : prow) {
      --col_count[c];
      push(c);
    }
    col_done[pc] = 1;
    rows[piv].clear();
    ++rnk;
  }
  return rnk;
}

Row<Integer> widen(const Row<std::int64_t>& r) {
  Row<Integer> w;
  w.reserve(r.size());
  for (const auto& [c, v] : r) w.emplace_back(c, Integer(v));
  return w;
}

bool narrow(const Row<Integer>& r, Row<std::int64_t>& out) {
  static const Integer lo = std::numeric_limits<std::int64_t>::min() / 4;
  static const Integer hi = std::numeric_limits<std::int64_t>::max() / 4;
  out.clear();
  for (const auto& [c, v] : r) {
    if (v < lo || v > hi) return false;
    out.emplace_back(c, static_cast<std::int64_t>(v));
  }
  return true;
}

std::size_t eliminate_block(std::vector<Row<std::int64_t>> rows, std::size_t ncols) {
  try {
    return eliminate<std::int64_t>(rows, ncols);
  } catch (const Overflow&) {
    std::vector<Row<Integer>> wide;
    wide.reserve(rows.size());
    for (const auto& r : rows) wide.push_back(widen(r));
    return eliminate<Integer>(std::move(wide), ncols);
  }
}

std::size_t eliminate_block(std::vector<Row<Integer>> rows, std::size_t ncols) {
  std::vector<Row<std::int64_t>> small(rows.size());
  bool fits = true;
  for (std::size_t i = 0; i < rows.size() && fits; ++i) fits = narrow(rows[i], small[i]);
  if (fits) return eliminate_block(std::move(small), ncols);
  return eliminate<Integer>(std::move(rows), ncols);
}

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Splits rows into connected blocks and eliminates each block.
template <class T>
std::size_t rank_rows(std::vector<Row<T>> rows, std::size_t ncols) {
  for (auto& r : rows) {
    std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    Row<T> merged;
    for (auto& e : r) {
      if (!merged.empty() && merged.back().first == e.first)
        merged.back().second = merged.back().second + e.second;
      else
        merged.push_back(std::move(e));
    }
    std::erase_if(merged, [](const auto& e) { return e.second == 0; });
    r.swap(merged);
  }
  UnionFind uf(ncols);
  for (const auto& r : rows)
    for (std::size_t k = 1; k < r.size(); ++k) uf.unite(r[0].first, r[k].first);

  std::vector<std::int64_t> block_of(ncols, -1);
  std::vector<std::vector<std::uint32_t>> block_cols;
  for (std::uint32_t c = 0; c < ncols; ++c) {
    std::uint32_t root = uf.find(c);
    if (block_of[root] < 0) {
      block_of[root] = static_cast<std::int64_t>(block_cols.size());
      block_cols.emplace_back();
    }
    block_of[c] = block_of[root];
    block_cols[static_cast<std::size_t>(block_of[c])].push_back(c);
  }
  std::vector<std::uint32_t> local(ncols);
  for (const auto& cols : block_cols)
    for (std::uint32_t k = 0; k < cols.size(); ++k) local[cols[k]] = k;
  std::vector<std::vector<Row<T>>> blocks(block_cols.size());
  for (auto& r : rows) {
    if (r.empty()) continue;
    auto b = static_cast<std::size_t>(block_of[r[0].first]);
    for (auto& e : r) e.first = local[e.first];
    blocks[b].push_back(std::move(r));
  }
  std::size_t total = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) continue;
    if (blocks[b].size() == 1) {
      ++total;
      continue;
    }
    total += eliminate_block(std::move(blocks[b]), block_cols[b].size());
  }
  return total;
}

}  // namespace

std::size_t rank(const SparseRowsZ& m) {
  std::vector<Row<std::int64_t>> rows(m.rows.size());
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    for (const auto& [c, v] : m.rows[i]) {
      if (c >= m.n_cols) throw std::out_of_range("column index out of range");
      if (v != 0) rows[i].emplace_back(c, v);
    }
  }
  return rank_rows(std::move(rows), m.n_cols);
}

std::size_t rank(const SparseMatrixQ& m) {
  std::vector<Row<Integer>> rows(m.n_rows());
  std::vector<std::vector<std::pair<std::size_t, Rational>>> by_row(m.n_rows());
  for (auto& e : m.entries()) by_row[e.row].emplace_back(e.col, e.value);
  for (std::size_t i = 0; i < by_row.size(); ++i) {
    Integer l = 1;
    for (const auto& [c, v] : by_row[i]) {
      const Integer d = denominator(v);
      l = l / gcd(l, d) * d;
    }
    for (const auto& [c, v] : by_row[i])
      rows[i].emplace_back(static_cast<std::uint32_t>(c), numerator(v) * (l / denominator(v)));
  }
  return rank_rows(std::move(rows), m.n_cols());
}

std::size_t rank_dense(const SparseMatrixQ& m) {
  std::vector<std::vector<Rational>> a(m.n_rows(), std::vector<Rational>(m.n_cols()));
  for (const auto& e : m.entries()) a[e.row][e.col] = e.value;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.n_cols() && r < m.n_rows(); ++c) {
    std::size_t p = r;
    while (p < m.n_rows() && a[p][c] == 0) ++p;
    if (p == m.n_rows()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < m.n_rows(); ++i) {
      if (a[i][c] == 0) continue;
      Rational f = a[i][c] / a[r][c];
      for (std::size_t k = c; k < m.n_cols(); ++k) a[i][k] -= f * a[r][k];
    }
    ++r;
  }
  return r;
}

}  // namespace kanenobu
