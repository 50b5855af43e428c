#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "extremal/scalar.hpp"

namespace extremal {

// Sorted by key, no stored zeros.
struct SparseVec {
  std::vector<std::pair<std::int64_t, Scalar>> terms;

  bool empty() const { return terms.empty(); }
  std::size_t size() const { return terms.size(); }
  // Zero if absent.
  const Scalar* find(std::int64_t key) const;
  friend bool operator==(const SparseVec&, const SparseVec&) = default;
};

// Build from unsorted terms; merges duplicate keys and drops zeros.
SparseVec make_sparse(std::vector<std::pair<std::int64_t, Scalar>> terms);
// a += c * b
void axpy(SparseVec& a, const Scalar& c, const SparseVec& b);
SparseVec scaled(const SparseVec& v, const Scalar& c);

// Incremental semi-echelon basis over sparse rows. Over Q rows are kept as
// primitive integer vectors (fraction-free updates); over GF(p) pivots are 1.
class SparseEchelon {
 public:
  explicit SparseEchelon(Field f) : field_(f) {}

  // True if v is independent of the rows so far.
  bool insert(SparseVec v);
  // Normal form: no pivot keys remain.
  SparseVec reduce(SparseVec v) const;

  int rank() const { return static_cast<int>(rows_.size()); }
  bool is_pivot(std::int64_t key) const { return pivot_row_.count(key) != 0; }
  const Field& field() const { return field_; }

 private:
  SparseVec eliminate_fraction_free(SparseVec v) const;
  void normalize(SparseVec& v) const;

  Field field_;
  std::vector<SparseVec> rows_;
  std::vector<std::int64_t> pivots_;
  std::unordered_map<std::int64_t, std::size_t> pivot_row_;
};

}  // namespace extremal
