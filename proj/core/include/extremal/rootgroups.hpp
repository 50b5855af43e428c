#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "extremal/chevalley.hpp"
#include "extremal/liealg.hpp"
#include "extremal/report.hpp"

namespace extremal::rootgroups {

// exp(base, parameter) as an exact matrix.
struct RootGroupElement {
  Vec base;
  Scalar parameter;
  Matrix matrix;
};
RootGroupElement root_group_element(const LieAlgebra& L, const Vec& y, const Scalar& t);

// All of GF(p) for p <= 11; otherwise 0 and the fixed rational sample {1,-1,2,-2,1/2,3}.
std::vector<Scalar> sample_parameters(const Field& f);

enum class PairKind {
  Commuting,   // [x,y] = 0
  Nilpotent,   // f(x,y) = 0, [x,y] != 0
  RankOne,     // f(x,y) != 0
};
std::string to_string(PairKind k);
PairKind classify_pair(const LieAlgebra& L, const Vec& x, const Vec& y);

// Throws NotExtremal(0) or NotExtremal(1).
Report verify_abstract_root_properties(const LieAlgebra& L, const Vec& x, const Vec& y,
                                       const std::vector<Scalar>& params);
// Conditions for a commuting pair whose line consists of extremal elements, and the product identity
// when they hold. Throws PreconditionNotMet.
Report strongcomm_check(const LieAlgebra& L, const Vec& x, const Vec& y, const std::vector<Scalar>& params);
// Points x + c y (c in params) and y. The report fails at the first non-extremal point.
// Throws PreconditionNotMet if the inputs are not commuting extremal points or third is off the line.
Report projective_line_check(const LieAlgebra& L, const Vec& x, const Vec& y, const std::optional<Vec>& third,
                             const std::vector<Scalar>& params);
Report form_preservation_check(const LieAlgebra& L, const Matrix& gram, const std::vector<Vec>& elements,
                               const std::vector<Scalar>& params);
// Random search for extremal x1, x2, x3 with x1, x2 a commuting pair on an extremal line,
// [x2,x3] = 0 and f(x1,x3) != 0. Passes when none is found.
Report nonexistence_probe(const ChevalleyAlgebra& g, const Matrix& gram, std::uint64_t seed, int trials);

// Long root pairs of each geometric kind in g; absent kinds are skipped.
struct RootPair {
  std::string kind;  // "opposite", "sum-root", "difference-root", "orthogonal"
  Root a, b;
};
std::vector<RootPair> long_root_pairs(const RootSystem& rs);

Report rootgroups_suite(char type, int rank, const Field& f, std::uint64_t seed = 1);
Report rootgroups_suite(const ChevalleyAlgebra& g, std::uint64_t seed = 1);

}  // namespace extremal::rootgroups
