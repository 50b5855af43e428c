#pragma once

#include <optional>
#include <string>
#include <vector>

#include "extremal/scalar.hpp"

namespace extremal {

using Vec = std::vector<Scalar>;

Vec zero_vec(const Field& f, int n);
Vec unit_vec(const Field& f, int n, int i);
bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator-(const Vec& a);
Vec operator*(const Scalar& c, const Vec& v);
// a += c * b
void axpy(Vec& a, const Scalar& c, const Vec& b);
Scalar dot(const Vec& a, const Vec& b);
// Index of the first nonzero entry, or -1.
int leading_index(const Vec& v);
std::string to_string(const Vec& v);

class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, int rows, int cols);

  static Matrix identity(const Field& f, int n);
  static Matrix from_rows(const Field& f, int cols, const std::vector<Vec>& rows);
  static Matrix from_cols(const Field& f, int rows, const std::vector<Vec>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return field_; }

  Scalar& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Scalar& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  Vec row(int i) const;
  Vec col(int j) const;
  void set_col(int j, const Vec& v);

  Matrix operator*(const Matrix& o) const;
  Vec operator*(const Vec& v) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  friend Matrix operator*(const Scalar& c, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b);

  Matrix transpose() const;
  bool is_zero() const;
  bool is_identity() const;
  Scalar trace() const;

  int rank() const;
  // Basis of {x : A x = 0}.
  std::vector<Vec> kernel() const;
  std::optional<Matrix> inverse() const;
  // Some x with A x = b.
  std::optional<Vec> solve(const Vec& b) const;
  Scalar determinant() const;

 private:
  Field field_;
  int rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

// Subspace of k^n held as a reduced row echelon basis; equal subspaces have equal bases.
class Subspace {
 public:
  Subspace() = default;
  Subspace(Field f, int ambient) : field_(f), ambient_(ambient) {}

  static Subspace span(const Field& f, int ambient, const std::vector<Vec>& vs);
  static Subspace whole(const Field& f, int ambient);

  // True if the dimension grew.
  bool insert(Vec v);
  // Remainder after clearing all pivot positions.
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const;
  // Coefficients with respect to basis(), if v lies in the subspace.
  std::optional<Vec> coordinates(const Vec& v) const;

  int dim() const { return static_cast<int>(basis_.size()); }
  int ambient() const { return ambient_; }
  const Field& field() const { return field_; }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }
  // Coordinates not occupied by pivots; their unit vectors span a complement.
  std::vector<int> free_indices() const;

  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  bool subset_of(const Subspace& o) const;
  // Orthogonal complement for the standard dot product: {x : b . x = 0 for b in basis}.
  Subspace annihilator() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  Field field_;
  int ambient_ = 0;
  std::vector<Vec> basis_;
  std::vector<int> pivots_;
};

}  // namespace extremal
