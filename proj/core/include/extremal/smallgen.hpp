#pragma once

#include <optional>
#include <string>
#include <vector>

#include "extremal/liealg.hpp"
#include "extremal/report.hpp"

namespace extremal::smallgen {

// Generators are numbered 0 (x), 1 (y), 2 (z).
struct TriangleParams {
  Scalar xy, xz, yz;  // edge parameters f(x,y), f(x,z), f(y,z)
  Scalar central;     // f(x,[y,z])

  static TriangleParams make(const Field& f, long long xy, long long xz, long long yz, long long central);
  Scalar edge(int a, int b) const;
  void set_edge(int a, int b, const Scalar& v);
  int nonzero_edges() const;
  std::string to_string() const;
  friend bool operator==(const TriangleParams&, const TriangleParams&) = default;
};

// Two extremal generators.
enum class TwoGenCase { Abelian, Heisenberg, Sl2 };
struct TwoGenResult {
  TwoGenCase kind;
  LieAlgebra algebra;
  Vec x, y;
};
TwoGenResult two_gen_classify(const Scalar& f_xy, bool bracket_nonzero);

// Parameters of (x, y, exp(x,s) z).
TriangleParams exp_transform_params(const TriangleParams& p, const Scalar& s);
// Parameters of (exp(base,s) target) with the third generator kept; base != target.
TriangleParams exp_transform_params(const TriangleParams& p, int base, int target, const Scalar& s);
// Throws CentralNotZero.
TriangleParams scale_params(const TriangleParams& p, const Scalar& alpha, const Scalar& beta, const Scalar& gamma);
// Renames generators: new generator i is old generator perm[i].
TriangleParams permute_params(const TriangleParams& p, const std::vector<int>& perm);

struct NormalizationStep {
  enum class Kind { ExpTransform, Scale, Permute };
  Kind kind = Kind::ExpTransform;
  int base = 0, target = 0;
  Scalar s;
  Scalar alpha, beta, gamma;
  std::vector<int> perm;
  std::string to_string() const;
};

struct NormalizationTrace {
  TriangleParams start;
  std::vector<NormalizationStep> steps;
  TriangleParams final;
  // A square root outside the field would be needed for the scaling step.
  bool extension_required = false;
  int edge_case = 0;
};

NormalizationTrace normalize(const TriangleParams& p);
TriangleParams replay(const TriangleParams& p, const std::vector<NormalizationStep>& steps);

// Basis x, y, z, [x,y], [x,z], [y,z], [x,[y,z]], [y,[x,z]].
struct ThreeGenAlgebra {
  TriangleParams params;
  LieAlgebra algebra;
  // Rule that closed each unordered pair of basis monomials.
  std::vector<std::string> rewrite_log;
};

// Throws CentralNotZero, RewriteIncomplete, JacobiViolation.
ThreeGenAlgebra build_M(const TriangleParams& p);

// Generators and their exp images, enough to span M when it is spanned by extremal elements.
std::vector<Vec> extremal_spanning(const ThreeGenAlgebra& M);

// sl3 spanned by the example matrices x, y, z and their brackets, in the same monomial basis.
struct Sl3Example {
  LieAlgebra algebra;
  std::vector<std::vector<long long>> x, y, z;
};
Sl3Example sl3_example(const Field& f);

// Per-case structural claims; also checks extremality and f-values of the generators.
Report verify_3gen_structure(const ThreeGenAlgebra& M);

}  // namespace extremal::smallgen
