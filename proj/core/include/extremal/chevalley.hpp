#pragma once

#include <optional>
#include <string>
#include <vector>

#include "extremal/liealg.hpp"
#include "extremal/linalg.hpp"
#include "extremal/report.hpp"
#include "extremal/rootdata.hpp"

namespace extremal {

// Basis: x_a for the roots in RootSystem order, then h_1..h_n.
class ChevalleyAlgebra {
 public:
  ChevalleyAlgebra(char type, int rank, const Field& f);
  // From previously computed constants over Q (for instance a cache), reduced into f and revalidated.
  // Throws PreconditionNotMet if the table does not belong to (type, rank).
  ChevalleyAlgebra(char type, int rank, const Field& f, const LieAlgebra& over_q);

  const LieAlgebra& algebra() const { return L_; }
  const RootSystem& root_system() const { return N_.root_system(); }
  const ChevalleyConstants& constants() const { return N_; }
  const Field& field() const { return L_.field(); }
  int dim() const { return L_.dim(); }
  std::string name() const { return root_system().name(); }

  int root_index(const Root& r) const;
  Vec x(const Root& r) const { return L_.basis_vector(root_index(r)); }
  Vec x(const std::string& root) const { return x(root_system().parse_root(root)); }
  // Classical types: root given in eps coordinates.
  Vec x_eps(const std::vector<int>& eps) const { return x(root_system().from_epsilon(eps)); }
  Vec h(int i) const;
  // h_a = [x_a, x_{-a}].
  Vec h(const Root& r) const;

 private:
  ChevalleyConstants N_;
  LieAlgebra L_;
};

struct Automorphism {
  Matrix matrix;
  Vec operator()(const Vec& v) const { return matrix * v; }
};

// exp(s ad_x) y for ad-nilpotent x; the series must stop below the characteristic.
// Throws PreconditionNotMet otherwise.
Vec exp_apply(const LieAlgebra& L, const Vec& x, const Scalar& s, const Vec& y);
// 1 + s ad_x + (s^2/2) ad_x^2 for extremal x. Throws NotExtremal(0).
Automorphism exp_automorphism(const LieAlgebra& L, const Vec& x, const Scalar& s, bool check_brackets = true);

// Long root elements plus images exp(x_a,1)x_c (a, c long) until the span is everything.
std::vector<Vec> extremal_spanning_set(const ChevalleyAlgebra& g);
// f(phi a, phi b) = f(a, b) on all basis pairs.
bool preserves_form(const Matrix& phi, const Matrix& gram);

Report long_root_extremality_check(const ChevalleyAlgebra& g);
// type 'B' (B_2) or 'G' (G_2).
Report short_root_decomposition_check(char type, const Field& f);
Report simple_plus_lowest_generation_check(const ChevalleyAlgebra& g);

// exp(x_{exps[0]}) ... exp(x_{exps[k-1]}) x_target; plain root element when exps is empty.
struct RootImage {
  std::vector<Root> exps;
  Root target;
  std::string describe() const;
};

struct MingenResult {
  std::vector<Vec> generators;
  std::vector<RootImage> recipe;
  // Exp parameters used, +1 each unless a sign variant was needed.
  std::vector<int> signs;
  bool variant_used = false;
};

// t of the table: A_n n+1, B_n n+1 (n>=3), C_n 2n, D_n n, E 5, F_4 5, G_2 4.
int minimal_generator_count(char type, int rank);
// Recipe without evaluation.
std::vector<RootImage> mingen_recipe(const RootSystem& rs);
// Evaluates the recipe; on generation failure searches exp sign variants. Throws UnsupportedType.
MingenResult mingen_generators(const ChevalleyAlgebra& g);

struct GenerationResult {
  bool ok = false;
  int achieved = 0;
  int dim = 0;
};
GenerationResult generated_dimension(const LieAlgebra& L, const std::vector<Vec>& gens);
// Throws NotExtremal(i) for a non-extremal generator.
Report verify_generation(const LieAlgebra& L, const std::vector<Vec>& gens);

struct NaturalRepresentation {
  int N = 0;
  int m = 0;
  int bound = 0;
  // Matrix Lie algebra spanned in gl_N, for checking dimension and extremality.
  LieAlgebra image;
  Matrix long_root_matrix;
  bool long_root_extremal = false;
};
// Classical types only; throws UnsupportedType.
NaturalRepresentation natural_representation(char type, int rank, const Field& f);

// 5 from dim >= 29, 4 from dim >= 9, 3 from dim >= 4, then 2, 1, 0.
int dimension_lower_bound(const LieAlgebra& L);

struct MingenRow {
  std::string type;
  int rank = 0;
  long long characteristic = 0;
  int t_claimed = 0;
  int lower_bound = 0;
  int natural_bound = 0;
  int dimension_bound = 0;
  bool generation_ok = false;
  bool all_extremal = false;
  int dim = 0;
  int achieved = 0;
  bool variant_used = false;
  bool pass() const {
    return generation_ok && all_extremal && lower_bound == t_claimed && achieved == dim;
  }
  std::string to_json() const;
};
MingenRow mingen_row(char type, int rank, const Field& f);
MingenRow mingen_row(const ChevalleyAlgebra& g);

}  // namespace extremal
