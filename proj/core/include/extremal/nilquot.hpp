#pragma once

#include <map>
#include <string>
#include <vector>

#include "extremal/freelie.hpp"
#include "extremal/liealg.hpp"
#include "extremal/report.hpp"
#include "extremal/sparse.hpp"

namespace extremal::nilquot {

using freelie::MultiDegree;
using freelie::Word;

// A basis element is a right-nested monomial [x_g, tail] with tail an earlier basis element.
struct BasisMonomial {
  int degree = 1;
  MultiDegree multidegree;
  int generator = 1;
  int parent = -1;
  Word word;
};

struct Component {
  int degree = 0;
  MultiDegree multidegree;
  int candidates = 0;
  int relation_rank = 0;
  std::vector<int> basis;
};

enum class Presentation {
  Sandwich,  // relations [x_i,[x_i,u]] = 0
  Free,      // no relations; truncated at max_degree
};

struct QuotientOptions {
  Presentation presentation = Presentation::Sandwich;
  Field field = Field::rationals();
  // Safety cap for the sandwich presentation, truncation degree for the free one.
  int max_degree = 16;
};

// Graded Lie algebra generated in degree 1, built degree by degree.
class GradedLieQuotient {
 public:
  int rank() const { return r_; }
  const Field& field() const { return field_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  int max_degree() const { return max_degree_; }
  bool truncated() const { return truncated_; }

  const std::vector<BasisMonomial>& basis() const { return basis_; }
  const std::vector<Component>& components() const { return components_; }
  // Entry d-1 holds the dimension of the degree-d component.
  std::vector<int> dims_by_degree() const;
  std::map<MultiDegree, int> multidegree_dims() const;

  const SparseVec& product(int u, int v) const { return prod_[u][v]; }
  Vec bracket(const Vec& a, const Vec& b) const;
  Vec generator(int i) const;
  // Right-nested monomial [w1,[w2,...,w_s]].
  Vec monomial(const Word& w) const;
  std::string label(int i) const;
  LieAlgebra to_lie_algebra() const;

  // Jacobi with a generator in front (enough for an algebra generated in degree 1),
  // antisymmetry, and the defining relations.
  Report certify() const;

  // {"r", "dims_by_degree", "total", "multidegree_dims": [{"degree", "dim"}]}
  std::string to_json() const;

 private:
  friend class Builder;
  int r_ = 0;
  Field field_;
  Presentation presentation_ = Presentation::Sandwich;
  int max_degree_ = 0;
  bool truncated_ = false;
  std::vector<BasisMonomial> basis_;
  std::vector<Component> components_;
  std::vector<std::vector<SparseVec>> prod_;
};

GradedLieQuotient graded_quotient(int r, const QuotientOptions& opts = {});
// L_r: the universal algebra on r sandwich generators.
GradedLieQuotient sandwich_algebra(int r, const Field& f = Field::rationals());
// Same dimensions by elimination inside the free Lie algebra (Lyndon basis); small r only.
std::vector<int> sandwich_dims_via_free_algebra(int r, int cap = 16);

struct AssocDims {
  int r = 0;
  std::vector<int> dims_by_length;
  int total = 0;
  // Lengths 1.. read the same backwards.
  bool palindromic() const;
};

// R_r from the components of L_{r+1} with last generator degree one.
AssocDims assoc_dims_via_embedding(int r, const Field& f = Field::rationals());
AssocDims assoc_dims_from(const GradedLieQuotient& l_next);
// R_r directly as a quotient of the free associative algebra; small r only.
AssocDims assoc_dims_direct(int r);

// Components of L_r with last generator absent reproduce L_{r-1}.
Report check_subalgebra_embedding(const GradedLieQuotient& lr, const GradedLieQuotient& lprev);
Report check_subalgebra_embedding(int r);

// The 28 right-nested monomials spanning L_4 (letters x,y,z,u = 1..4).
std::vector<Word> four_generator_spanning_monomials();
Report spanning_set_check_4gen(const GradedLieQuotient& l4);
Report spanning_set_check_4gen();

}  // namespace extremal::nilquot
