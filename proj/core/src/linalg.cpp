#include "extremal/linalg.hpp"

#include <algorithm>

namespace extremal {

Vec zero_vec(const Field& f, int n) { return Vec(static_cast<std::size_t>(n), f.zero()); }

Vec unit_vec(const Field& f, int n, int i) {
  Vec v = zero_vec(f, n);
  v[static_cast<std::size_t>(i)] = f.one();
  return v;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec operator-(const Vec& a) {
  Vec r = a;
  for (auto& x : r) x = -x;
  return r;
}

Vec operator*(const Scalar& c, const Vec& v) {
  Vec r = v;
  for (auto& x : r) x *= c;
  return r;
}

void axpy(Vec& a, const Scalar& c, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) a[i].add_mul(c, b[i]);
}

Scalar dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  if (a.empty()) return Scalar();
  Scalar s = a[0].field().zero();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s.add_mul(a[i], b[i]);
  return s;
}

int leading_index(const Vec& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) return static_cast<int>(i);
  return -1;
}

std::string to_string(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].to_string();
  }
  return s + ")";
}

Matrix::Matrix(Field f, int rows, int cols)
    : field_(f), rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, f.zero()) {}

Matrix Matrix::identity(const Field& f, int n) {
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

Matrix Matrix::from_rows(const Field& f, int cols, const std::vector<Vec>& rows) {
  Matrix m(f, static_cast<int>(rows.size()), cols);
  for (int i = 0; i < m.rows_; ++i) {
    if (static_cast<int>(rows[i].size()) != cols) throw DimensionMismatch("row length");
    for (int j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_cols(const Field& f, int rows, const std::vector<Vec>& cols) {
  Matrix m(f, rows, static_cast<int>(cols.size()));
  for (int j = 0; j < m.cols_; ++j) m.set_col(j, cols[j]);
  return m;
}

Vec Matrix::row(int i) const {
  return Vec(a_.begin() + static_cast<std::ptrdiff_t>(i) * cols_,
             a_.begin() + static_cast<std::ptrdiff_t>(i + 1) * cols_);
}

Vec Matrix::col(int j) const {
  Vec v;
  v.reserve(rows_);
  for (int i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

void Matrix::set_col(int j, const Vec& v) {
  if (static_cast<int>(v.size()) != rows_) throw DimensionMismatch("column length");
  for (int i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("matrix product");
  Matrix r(field_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Scalar& b = o(k, j);
        if (!b.is_zero()) r(i, j).add_mul(a, b);
      }
    }
  return r;
}

Vec Matrix::operator*(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw DimensionMismatch("matrix-vector product");
  Vec r = zero_vec(field_, rows_);
  for (int j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (int i = 0; i < rows_; ++i) {
      const Scalar& a = (*this)(i, j);
      if (!a.is_zero()) r[i].add_mul(a, v[j]);
    }
  }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum");
  Matrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference");
  Matrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

Matrix operator*(const Scalar& c, const Matrix& m) {
  Matrix r = m;
  for (auto& x : r.a_) x *= c;
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

Matrix Matrix::transpose() const {
  Matrix r(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? field_.one() : field_.zero())) return false;
  return true;
}

Scalar Matrix::trace() const {
  Scalar t = field_.zero();
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<int> rref(Matrix& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int best = -1;
    std::size_t best_size = 0;
    for (int i = r; i < m.rows(); ++i) {
      if (m(i, c).is_zero()) continue;
      std::size_t sz = m(i, c).size_hint();
      if (best < 0 || sz < best_size) {
        best = i;
        best_size = sz;
      }
    }
    if (best < 0) continue;
    if (best != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(best, j));
    Scalar inv = m(r, c).inverse();
    for (int j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar f = m(i, c);
      for (int j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j).sub_mul(f, m(r, j));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int Matrix::rank() const {
  Matrix m = *this;
  return static_cast<int>(rref(m).size());
}

std::vector<Vec> Matrix::kernel() const {
  Matrix m = *this;
  std::vector<int> piv = rref(m);
  std::vector<bool> is_piv(cols_, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<Vec> out;
  for (int fc = 0; fc < cols_; ++fc) {
    if (is_piv[fc]) continue;
    Vec v = zero_vec(field_, cols_);
    v[fc] = field_.one();
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m(static_cast<int>(r), fc);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  int n = rows_;
  Matrix aug(field_, n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
    aug(i, n + i) = field_.one();
  }
  std::vector<int> piv = rref(aug);
  if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1) return std::nullopt;
  Matrix inv(field_, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::optional<Vec> Matrix::solve(const Vec& b) const {
  if (static_cast<int>(b.size()) != rows_) throw DimensionMismatch("right-hand side");
  Matrix aug(field_, rows_, cols_ + 1);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
    aug(i, cols_) = b[i];
  }
  std::vector<int> piv = rref(aug);
  if (!piv.empty() && piv.back() == cols_) return std::nullopt;
  Vec x = zero_vec(field_, cols_);
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(static_cast<int>(r), cols_);
  return x;
}

Scalar Matrix::determinant() const {
  if (rows_ != cols_) throw DimensionMismatch("determinant of non-square matrix");
  Matrix m = *this;
  Scalar det = field_.one();
  for (int c = 0; c < cols_; ++c) {
    int p = -1;
    for (int i = c; i < rows_; ++i)
      if (!m(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) return field_.zero();
    if (p != c) {
      for (int j = 0; j < cols_; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    Scalar inv = m(c, c).inverse();
    for (int i = c + 1; i < rows_; ++i) {
      if (m(i, c).is_zero()) continue;
      Scalar f = m(i, c) * inv;
      for (int j = c; j < cols_; ++j) m(i, j).sub_mul(f, m(c, j));
    }
  }
  return det;
}

Subspace Subspace::span(const Field& f, int ambient, const std::vector<Vec>& vs) {
  Subspace s(f, ambient);
  for (const auto& v : vs) s.insert(v);
  return s;
}

Subspace Subspace::whole(const Field& f, int ambient) {
  Subspace s(f, ambient);
  for (int i = 0; i < ambient; ++i) {
    s.basis_.push_back(unit_vec(f, ambient, i));
    s.pivots_.push_back(i);
  }
  return s;
}

Vec Subspace::reduce(Vec v) const {
  if (static_cast<int>(v.size()) != ambient_) throw DimensionMismatch("subspace ambient dimension");
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    const Scalar c = v[pivots_[r]];
    if (!c.is_zero()) {
      const Vec& b = basis_[r];
      for (int j = pivots_[r]; j < ambient_; ++j)
        if (!b[j].is_zero()) v[j].sub_mul(c, b[j]);
    }
  }
  return v;
}

bool Subspace::insert(Vec v) {
  v = reduce(std::move(v));
  int p = leading_index(v);
  if (p < 0) return false;
  Scalar inv = v[p].inverse();
  for (int j = p; j < ambient_; ++j) v[j] *= inv;
  for (auto& b : basis_) {
    const Scalar c = b[p];
    if (c.is_zero()) continue;
    for (int j = p; j < ambient_; ++j)
      if (!v[j].is_zero()) b[j].sub_mul(c, v[j]);
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, p);
  basis_.insert(basis_.begin() + pos, std::move(v));
  return true;
}

bool Subspace::contains(const Vec& v) const { return is_zero(reduce(v)); }

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (!contains(v)) return std::nullopt;
  Vec c;
  c.reserve(basis_.size());
  for (int p : pivots_) c.push_back(v[p]);
  return c;
}

std::vector<int> Subspace::free_indices() const {
  std::vector<int> out;
  std::size_t k = 0;
  for (int i = 0; i < ambient_; ++i) {
    if (k < pivots_.size() && pivots_[k] == i)
      ++k;
    else
      out.push_back(i);
  }
  return out;
}

Subspace Subspace::sum(const Subspace& o) const {
  Subspace s = *this;
  for (const auto& v : o.basis_) s.insert(v);
  return s;
}

Subspace Subspace::intersect(const Subspace& o) const {
  // Solve a.x = b.y over the stacked bases.
  int da = dim(), db = o.dim();
  if (da == 0 || db == 0) return Subspace(field_, ambient_);
  Matrix m(field_, ambient_, da + db);
  for (int j = 0; j < da; ++j)
    for (int i = 0; i < ambient_; ++i) m(i, j) = basis_[j][i];
  for (int j = 0; j < db; ++j)
    for (int i = 0; i < ambient_; ++i) m(i, da + j) = o.basis_[j][i];
  Subspace s(field_, ambient_);
  for (const auto& k : m.kernel()) {
    Vec v = zero_vec(field_, ambient_);
    for (int j = 0; j < da; ++j) axpy(v, k[j], basis_[j]);
    s.insert(std::move(v));
  }
  return s;
}

bool Subspace::subset_of(const Subspace& o) const {
  return std::all_of(basis_.begin(), basis_.end(), [&](const Vec& v) { return o.contains(v); });
}

Subspace Subspace::annihilator() const {
  if (basis_.empty()) return whole(field_, ambient_);
  return span(field_, ambient_, Matrix::from_rows(field_, ambient_, basis_).kernel());
}

}  // namespace extremal
