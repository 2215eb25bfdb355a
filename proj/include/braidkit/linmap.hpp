#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "braidkit/scalar.hpp"

namespace braidkit {

// One nonzero coefficient of a sparse matrix.
struct Entry {
  uint32_t row = 0, col = 0;
  Scalar val;
};

// A linear map between based spaces, stored as sorted sparse triplets.
// rows() is the codomain dimension, cols() the domain dimension. Entries are
// kept sorted by (row, col) with no duplicates and no explicit zeros, so
// equality of maps is equality of the triplet lists.
class LinMap {
 public:
  LinMap() = default;
  LinMap(uint32_t codomain_dim, uint32_t domain_dim, Field f = Field{})
      : rows_(codomain_dim), cols_(domain_dim), field_(f) {}

  static LinMap zero(uint32_t codomain_dim, uint32_t domain_dim,
                     Field f = Field{});
  static LinMap identity(uint32_t n, Field f = Field{});
  static LinMap from_entries(uint32_t codomain_dim, uint32_t domain_dim,
                             std::vector<Entry> entries, Field f = Field{});

  uint32_t rows() const { return rows_; }
  uint32_t cols() const { return cols_; }
  Field field() const { return field_; }
  const std::vector<Entry>& entries() const { return entries_; }
  size_t nnz() const { return entries_.size(); }

  Scalar at(uint32_t row, uint32_t col) const;
  bool is_zero() const { return entries_.empty(); }
  bool is_identity() const;

  LinMap scaled(const Scalar& c) const;
  friend LinMap operator+(const LinMap& a, const LinMap& b);
  friend LinMap operator-(const LinMap& a, const LinMap& b);
  LinMap operator-() const;
  friend bool operator==(const LinMap& a, const LinMap& b);
  friend bool operator!=(const LinMap& a, const LinMap& b) { return !(a == b); }

  // Column access: the entry range [col_begin(c), col_end(c)) of the
  // column-sorted view. Built lazily; invalidated by nothing (maps are
  // immutable once built).
  const std::vector<Entry>& col_sorted() const;

 private:
  uint32_t rows_ = 0, cols_ = 0;
  Field field_;
  std::vector<Entry> entries_;
  mutable std::shared_ptr<const std::vector<Entry>> by_col_;
};

LinMap compose(const LinMap& f, const LinMap& g);  // f . g
LinMap kron(const LinMap& f, const LinMap& g);     // row-major, left factor slow
LinMap transpose(const LinMap& f);

uint32_t rank(const LinMap& f);
uint32_t kernel_dim(const LinMap& f);
std::optional<LinMap> try_inverse(const LinMap& f);

// One exact solution of A x = b (free unknowns set to 0), or absent if the
// system is inconsistent. b.size() must equal A.rows().
std::optional<std::vector<Scalar>> solve_linear(const LinMap& A,
                                                const std::vector<Scalar>& b);

// Row-major multi-index helpers (leftmost factor is the slowest index).
uint64_t word_dim(const std::vector<uint32_t>& dims);
std::vector<uint32_t> unrank_index(uint64_t idx, const std::vector<uint32_t>& dims);
uint64_t rank_index(const std::vector<uint32_t>& mi, const std::vector<uint32_t>& dims);

// A sparse column vector, used where whole matrices would be wasteful.
using SparseVec = std::vector<std::pair<uint32_t, Scalar>>;  // sorted by index

SparseVec column_of(const LinMap& f, uint32_t col);
// y += c * x
void axpy(const Scalar& c, const SparseVec& x, SparseVec& y);

}  // namespace braidkit
