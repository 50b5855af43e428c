#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "extremal/linalg.hpp"
#include "extremal/report.hpp"
#include "extremal/sparse.hpp"

namespace extremal {

struct StructureConstant {
  int i, j, k;
  Scalar value;
};

// Finite-dimensional Lie algebra given by a labeled basis and structure constants.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  // Entries (i,j,k,c) mean [b_i,b_j] has coefficient c at b_k. A pair given in
  // only one order is completed antisymmetrically. Validates on construction.
  LieAlgebra(Field f, std::vector<std::string> labels, const std::vector<StructureConstant>& constants,
             bool validate = true);

  int dim() const { return n_; }
  const Field& field() const { return field_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
  int index_of(std::string_view label) const;

  // [b_i,b_j] with keys as basis indices.
  const SparseVec& product(int i, int j) const {
    return table_[static_cast<std::size_t>(i) * n_ + j];
  }
  Vec bracket(const Vec& a, const Vec& b) const;
  Vec basis_vector(int i) const { return unit_vec(field_, n_, i); }
  Vec zero() const { return zero_vec(field_, n_); }
  Matrix ad(const Vec& x) const;
  // Nonzero constants with i < j.
  std::vector<StructureConstant> constants() const;

  // Throws AntisymmetryViolation / JacobiViolation.
  void validate() const;

  // Grading data: a weight label per basis vector, where each basis vector is a
  // common eigenvector of ad for some inner torus. Ideals are then sums of
  // their weight components. Empty when unknown.
  const std::vector<std::string>& weights() const { return weights_; }
  void set_weights(std::vector<std::string> w) { weights_ = std::move(w); }

  // L/I on the basis vectors b_k with k in ideal.free_indices(); those indices are returned.
  LieAlgebra quotient(const Subspace& ideal, std::vector<int>* kept = nullptr) const;
  // Structure constants of a subalgebra in the basis of S.
  LieAlgebra restrict_to(const Subspace& subalgebra) const;

  std::string to_json() const;
  static LieAlgebra from_json(std::string_view json);

 private:
  Field field_;
  int n_ = 0;
  std::vector<std::string> labels_;
  std::vector<SparseVec> table_;
  std::vector<std::string> weights_;
};

LieAlgebra algebra_from_constants(const Field& f, std::vector<std::string> labels,
                                  const std::vector<StructureConstant>& constants);
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);
// Columns of phi are images of the basis of `from`; checks invertibility and brackets.
bool is_isomorphism(const LieAlgebra& from, const LieAlgebra& to, const Matrix& phi);
bool is_homomorphism(const LieAlgebra& from, const LieAlgebra& to, const Matrix& phi);

// f_x as its values on the basis when [x,[x,L]] lies in kx; none otherwise.
std::optional<Vec> is_extremal(const LieAlgebra& L, const Vec& x);
bool is_sandwich(const LieAlgebra& L, const Vec& x);

struct BilinearForm {
  enum class Kind { ExtremalF, Killing };
  Kind kind;
  Matrix gram;
  Scalar operator()(const Vec& a, const Vec& b) const { return dot(a, gram * b); }
};

bool is_symmetric(const Matrix& gram);
// f([x,y],z) = f(x,[y,z]) on all basis triples.
bool is_associative(const LieAlgebra& L, const Matrix& gram);

// Throws NotExtremal(i), NotSpanning, WellDefinednessFailure.
BilinearForm extremal_form(const LieAlgebra& L, const std::vector<Vec>& spanning_set);
BilinearForm killing_form(const LieAlgebra& L);
Subspace radical_of_form(const BilinearForm& B);

Subspace bracket_subspaces(const LieAlgebra& L, const Subspace& a, const Subspace& b);
Subspace center(const LieAlgebra& L);
Subspace centralizer(const LieAlgebra& L, const Subspace& s);
Subspace subalgebra_generated(const LieAlgebra& L, const std::vector<Vec>& gens);
Subspace ideal_generated(const LieAlgebra& L, const std::vector<Vec>& gens);
bool is_ideal(const LieAlgebra& L, const Subspace& s);
bool is_subalgebra(const LieAlgebra& L, const Subspace& s);
// Terms until the series stabilises; the first term is s itself.
std::vector<Subspace> derived_series(const LieAlgebra& L, const Subspace& s);
std::vector<Subspace> lower_central_series(const LieAlgebra& L);
bool is_solvable(const LieAlgebra& L, const Subspace& s);
bool is_nilpotent(const LieAlgebra& L, const Subspace& s);

struct RadicalResult {
  Subspace space;
  bool certified = true;
  std::string method;
};

RadicalResult solvable_radical(const LieAlgebra& L);
RadicalResult nilradical(const LieAlgebra& L, const RadicalResult& solvable);

struct StructuralSubspaces {
  Subspace center;
  std::vector<Subspace> derived_series;
  std::vector<Subspace> lower_central_series;
  RadicalResult solvable_radical;
  RadicalResult nilradical;
};

StructuralSubspaces structural_subspaces(const LieAlgebra& L);

// phi = ad_x ad_y after scaling y to f(x,y) = -2, or the nilpotent case when f(x,y) = 0.
Report phi_spectrum_check(const LieAlgebra& L, const Vec& x, const Vec& y);
// Throws NotASandwich(i).
Report sandwich_span_check(const LieAlgebra& L, const std::vector<Vec>& witnesses, const BilinearForm& f);
// Throws PreconditionNotMet.
Report fourth_power_check(const LieAlgebra& L, const BilinearForm& f, const Vec& x, const Vec& y);
// Throws NotADirectSum.
Report direct_sum_orthogonality_check(const LieAlgebra& L, const Subspace& l1, const Subspace& l2,
                                      const BilinearForm& f, const std::vector<Vec>& extremals);

}  // namespace extremal
