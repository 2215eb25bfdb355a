#include "braidkit/linmap.hpp"

#include <algorithm>
#include <stdexcept>

namespace braidkit {

namespace {

bool by_row_col(const Entry& a, const Entry& b) {
  return a.row != b.row ? a.row < b.row : a.col < b.col;
}

bool by_col_row(const Entry& a, const Entry& b) {
  return a.col != b.col ? a.col < b.col : a.row < b.row;
}

}  // namespace

LinMap LinMap::zero(uint32_t codomain_dim, uint32_t domain_dim, Field f) {
  return LinMap(codomain_dim, domain_dim, f);
}

LinMap LinMap::identity(uint32_t n, Field f) {
  LinMap m(n, n, f);
  m.entries_.reserve(n);
  for (uint32_t i = 0; i < n; ++i) m.entries_.push_back({i, i, scalar_one(f)});
  return m;
}

LinMap LinMap::from_entries(uint32_t codomain_dim, uint32_t domain_dim,
                            std::vector<Entry> entries, Field f) {
  LinMap m(codomain_dim, domain_dim, f);
  std::sort(entries.begin(), entries.end(), by_row_col);
  for (auto& e : entries) {
    if (e.row >= codomain_dim || e.col >= domain_dim)
      throw std::out_of_range("entry index out of range");
    if (!(e.val.field() == f))
      throw std::invalid_argument("entry field differs from map field");
    if (!m.entries_.empty() && m.entries_.back().row == e.row &&
        m.entries_.back().col == e.col) {
      m.entries_.back().val += e.val;
    } else {
      m.entries_.push_back(std::move(e));
    }
  }
  std::erase_if(m.entries_, [](const Entry& e) { return e.val.is_zero(); });
  return m;
}

Scalar LinMap::at(uint32_t row, uint32_t col) const {
  Entry probe{row, col, Scalar()};
  auto it = std::lower_bound(entries_.begin(), entries_.end(), probe, by_row_col);
  if (it != entries_.end() && it->row == row && it->col == col) return it->val;
  return scalar_zero(field_);
}

bool LinMap::is_identity() const {
  if (rows_ != cols_ || entries_.size() != rows_) return false;
  for (uint32_t i = 0; i < rows_; ++i) {
    const Entry& e = entries_[i];
    if (e.row != i || e.col != i || !e.val.is_one()) return false;
  }
  return true;
}

LinMap LinMap::scaled(const Scalar& c) const {
  if (c.is_zero()) return LinMap(rows_, cols_, field_);
  LinMap m(rows_, cols_, field_);
  m.entries_.reserve(entries_.size());
  for (const auto& e : entries_) {
    Scalar v = e.val * c;
    if (!v.is_zero()) m.entries_.push_back({e.row, e.col, v});
  }
  return m;
}

LinMap operator+(const LinMap& a, const LinMap& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("incompatible shapes");
  if (!(a.field_ == b.field_)) throw std::invalid_argument("field mismatch");
  LinMap m(a.rows_, a.cols_, a.field_);
  m.entries_.reserve(a.entries_.size() + b.entries_.size());
  size_t i = 0, j = 0;
  while (i < a.entries_.size() || j < b.entries_.size()) {
    if (j == b.entries_.size() ||
        (i < a.entries_.size() && by_row_col(a.entries_[i], b.entries_[j]))) {
      m.entries_.push_back(a.entries_[i++]);
    } else if (i == a.entries_.size() || by_row_col(b.entries_[j], a.entries_[i])) {
      m.entries_.push_back(b.entries_[j++]);
    } else {
      Scalar v = a.entries_[i].val + b.entries_[j].val;
      if (!v.is_zero()) m.entries_.push_back({a.entries_[i].row, a.entries_[i].col, v});
      ++i;
      ++j;
    }
  }
  return m;
}

LinMap operator-(const LinMap& a, const LinMap& b) { return a + (-b); }

LinMap LinMap::operator-() const {
  LinMap m(rows_, cols_, field_);
  m.entries_.reserve(entries_.size());
  for (const auto& e : entries_) m.entries_.push_back({e.row, e.col, -e.val});
  return m;
}

bool operator==(const LinMap& a, const LinMap& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || !(a.field_ == b.field_))
    return false;
  if (a.entries_.size() != b.entries_.size()) return false;
  for (size_t i = 0; i < a.entries_.size(); ++i) {
    const Entry &x = a.entries_[i], &y = b.entries_[i];
    if (x.row != y.row || x.col != y.col || x.val != y.val) return false;
  }
  return true;
}

const std::vector<Entry>& LinMap::col_sorted() const {
  if (!by_col_) {
    auto v = std::make_shared<std::vector<Entry>>(entries_);
    std::sort(v->begin(), v->end(), by_col_row);
    by_col_ = std::move(v);
  }
  return *by_col_;
}

LinMap compose(const LinMap& f, const LinMap& g) {
  if (f.cols() != g.rows()) throw std::invalid_argument("incompatible shapes");
  if (!(f.field() == g.field())) throw std::invalid_argument("field mismatch");
  // Column k of f.g is  sum_r g[r,k] * (column r of f).
  const auto& fc = f.col_sorted();
  std::vector<size_t> fstart(f.cols() + 1, 0);
  {
    size_t i = 0;
    for (uint32_t c = 0; c <= f.cols(); ++c) {
      while (i < fc.size() && fc[i].col < c) ++i;
      fstart[c] = i;
    }
  }
  const auto& gc = g.col_sorted();
  std::vector<Entry> out;
  std::vector<Scalar> acc(f.rows(), scalar_zero(f.field()));
  std::vector<uint32_t> touched;
  size_t i = 0;
  while (i < gc.size()) {
    uint32_t k = gc[i].col;
    touched.clear();
    for (; i < gc.size() && gc[i].col == k; ++i) {
      uint32_t r = gc[i].row;
      for (size_t t = fstart[r]; t < fstart[r + 1]; ++t) {
        if (acc[fc[t].row].is_zero()) touched.push_back(fc[t].row);
        acc[fc[t].row] += fc[t].val * gc[i].val;
      }
    }
    std::sort(touched.begin(), touched.end());
    for (uint32_t r : touched) {
      if (!acc[r].is_zero()) out.push_back({r, k, acc[r]});
      acc[r] = scalar_zero(f.field());
    }
  }
  // Entries were produced column by column; from_entries restores row order.
  return LinMap::from_entries(f.rows(), g.cols(), std::move(out), f.field());
}

LinMap kron(const LinMap& f, const LinMap& g) {
  if (!(f.field() == g.field())) throw std::invalid_argument("field mismatch");
  std::vector<Entry> out;
  out.reserve(f.nnz() * g.nnz());
  for (const auto& a : f.entries())
    for (const auto& b : g.entries())
      out.push_back({a.row * g.rows() + b.row, a.col * g.cols() + b.col,
                     a.val * b.val});
  return LinMap::from_entries(f.rows() * g.rows(), f.cols() * g.cols(),
                              std::move(out), f.field());
}

LinMap transpose(const LinMap& f) {
  std::vector<Entry> out;
  out.reserve(f.nnz());
  for (const auto& e : f.entries()) out.push_back({e.col, e.row, e.val});
  return LinMap::from_entries(f.cols(), f.rows(), std::move(out), f.field());
}

namespace {

// Sparse rows for Gaussian elimination, each sorted by column.
using Row = std::vector<std::pair<uint32_t, Scalar>>;

std::vector<Row> rows_of(const LinMap& f, bool augment) {
  std::vector<Row> rows(f.rows());
  for (const auto& e : f.entries()) rows[e.row].push_back({e.col, e.val});
  if (augment)
    for (uint32_t r = 0; r < f.rows(); ++r)
      rows[r].push_back({f.cols() + r, scalar_one(f.field())});
  return rows;
}

Scalar coeff_at(const Row& row, uint32_t col, Field f) {
  auto it = std::lower_bound(
      row.begin(), row.end(), col,
      [](const std::pair<uint32_t, Scalar>& e, uint32_t c) { return e.first < c; });
  if (it != row.end() && it->first == col) return it->second;
  return scalar_zero(f);
}

// row -= c * pivot  (sorted merge); entries at columns < limit only exist in
// already-eliminated positions so no special casing is needed.
Row row_axpy(const Row& row, const Scalar& c, const Row& pivot) {
  Row out;
  out.reserve(row.size() + pivot.size());
  size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      Scalar v = -(c * pivot[j].second);
      if (!v.is_zero()) out.push_back({pivot[j].first, v});
      ++j;
    } else {
      Scalar v = row[i].second - c * pivot[j].second;
      if (!v.is_zero()) out.push_back({row[i].first, v});
      ++i;
      ++j;
    }
  }
  return out;
}

// Reduce `rows` in place over the first `ncols` columns. Returns the list of
// (pivot column, row index) in elimination order. Rows become normalized
// (pivot coefficient 1) and fully reduced when `jordan` is set.
std::vector<std::pair<uint32_t, uint32_t>> eliminate(std::vector<Row>& rows,
                                                     uint32_t ncols, Field f,
                                                     bool jordan) {
  std::vector<std::pair<uint32_t, uint32_t>> pivots;
  std::vector<bool> done(rows.size(), false);
  while (true) {
    // Pick the shortest remaining row whose leading column is unused.
    uint32_t best = rows.size();
    for (uint32_t r = 0; r < rows.size(); ++r) {
      if (done[r] || rows[r].empty() || rows[r].front().first >= ncols) continue;
      if (best == rows.size() || rows[r].size() < rows[best].size()) best = r;
    }
    if (best == rows.size()) break;
    uint32_t pc = rows[best].front().first;
    Scalar pv = rows[best].front().second;
    if (!pv.is_one()) {
      Scalar inv = pv.inv();
      for (auto& e : rows[best]) e.second = e.second * inv;
    }
    for (uint32_t r = 0; r < rows.size(); ++r) {
      if (r == best || rows[r].empty()) continue;
      if (!jordan && done[r]) continue;
      Scalar c = coeff_at(rows[r], pc, f);
      if (!c.is_zero()) rows[r] = row_axpy(rows[r], c, rows[best]);
    }
    done[best] = true;
    pivots.push_back({pc, best});
  }
  return pivots;
}

}  // namespace

uint32_t rank(const LinMap& f) {
  auto rows = rows_of(f, false);
  return (uint32_t)eliminate(rows, f.cols(), f.field(), false).size();
}

uint32_t kernel_dim(const LinMap& f) { return f.cols() - rank(f); }

std::optional<LinMap> try_inverse(const LinMap& f) {
  if (f.rows() != f.cols()) return std::nullopt;
  uint32_t n = f.rows();
  auto rows = rows_of(f, true);
  auto pivots = eliminate(rows, n, f.field(), true);
  if (pivots.size() != n) return std::nullopt;
  std::vector<Entry> out;
  for (auto [pc, r] : pivots)
    for (const auto& e : rows[r])
      if (e.first >= n) out.push_back({pc, e.first - n, e.second});
  return LinMap::from_entries(n, n, std::move(out), f.field());
}

std::optional<std::vector<Scalar>> solve_linear(const LinMap& A,
                                                const std::vector<Scalar>& b) {
  if (b.size() != A.rows()) throw std::invalid_argument("incompatible shapes");
  uint32_t n = A.cols();
  auto rows = rows_of(A, false);
  for (uint32_t r = 0; r < A.rows(); ++r)
    if (!b[r].is_zero()) rows[r].push_back({n, b[r]});
  auto pivots = eliminate(rows, n, A.field(), true);
  std::vector<bool> done(rows.size(), false);
  for (auto [pc, r] : pivots) done[r] = true;
  for (uint32_t r = 0; r < rows.size(); ++r)
    if (!done[r] && !rows[r].empty()) return std::nullopt;  // 0 = nonzero row
  std::vector<Scalar> x(n, scalar_zero(A.field()));
  for (auto [pc, r] : pivots) x[pc] = coeff_at(rows[r], n, A.field());
  return x;
}

uint64_t word_dim(const std::vector<uint32_t>& dims) {
  uint64_t d = 1;
  for (uint32_t x : dims) d *= x;
  return d;
}

std::vector<uint32_t> unrank_index(uint64_t idx, const std::vector<uint32_t>& dims) {
  std::vector<uint32_t> mi(dims.size(), 0);
  for (size_t k = dims.size(); k-- > 0;) {
    mi[k] = (uint32_t)(idx % dims[k]);
    idx /= dims[k];
  }
  return mi;
}

uint64_t rank_index(const std::vector<uint32_t>& mi, const std::vector<uint32_t>& dims) {
  uint64_t idx = 0;
  for (size_t k = 0; k < dims.size(); ++k) idx = idx * dims[k] + mi[k];
  return idx;
}

SparseVec column_of(const LinMap& f, uint32_t col) {
  const auto& cs = f.col_sorted();
  SparseVec v;
  auto it = std::lower_bound(cs.begin(), cs.end(), col,
                             [](const Entry& e, uint32_t c) { return e.col < c; });
  for (; it != cs.end() && it->col == col; ++it) v.push_back({it->row, it->val});
  return v;
}

void axpy(const Scalar& c, const SparseVec& x, SparseVec& y) {
  if (c.is_zero()) return;
  SparseVec out;
  out.reserve(x.size() + y.size());
  size_t i = 0, j = 0;
  while (i < y.size() || j < x.size()) {
    if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
      out.push_back(y[i++]);
    } else if (i == y.size() || x[j].first < y[i].first) {
      Scalar v = c * x[j].second;
      if (!v.is_zero()) out.push_back({x[j].first, v});
      ++j;
    } else {
      Scalar v = y[i].second + c * x[j].second;
      if (!v.is_zero()) out.push_back({y[i].first, v});
      ++i;
      ++j;
    }
  }
  y = std::move(out);
}

}  // namespace braidkit
