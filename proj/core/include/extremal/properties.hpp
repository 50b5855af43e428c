#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "extremal/liealg.hpp"
#include "extremal/report.hpp"

namespace extremal::properties {

// Q: from {1,-1,2,-2,1/2,3}; GF(p): uniform nonzero residue. Deterministic for a given engine state.
Scalar random_scalar(const Field& f, std::mt19937_64& rng, bool nonzero = true);

// Random extremal elements: a seed pushed through a few exp(seed', s) automorphisms.
class ExtremalSampler {
 public:
  // Seeds must be extremal.
  ExtremalSampler(const LieAlgebra& L, std::vector<Vec> seeds, std::uint64_t seed, int depth = 2);
  Vec next();
  // Applies the same random automorphism to every element.
  std::vector<Vec> transport(const std::vector<Vec>& vs);
  std::mt19937_64& engine() { return rng_; }

 private:
  const LieAlgebra* L_;
  std::vector<Vec> seeds_;
  std::mt19937_64 rng_;
  int depth_;
};

// For extremal x, y with f(x,y) = 0 and [x,y] != 0: [x,y] extremal and
// f_[x,y](z) = (f_x([y,z]) - f_y([x,z]))/2 on the basis. Throws PreconditionNotMet.
Report bracket_extremal_check(const LieAlgebra& L, const Vec& x, const Vec& y);
// For a sandwich s and extremal x: [s,x] is a sandwich. Throws PreconditionNotMet.
Report sandwich_bracket_check(const LieAlgebra& L, const Vec& s, const Vec& x);

// Random qualifying pairs drawn from the sampler; at least one pair must qualify.
Report bracket_extremal_property(const LieAlgebra& L, const std::vector<Vec>& seeds, std::uint64_t seed, int trials);
Report sandwich_bracket_property(const LieAlgebra& L, const std::vector<Vec>& sandwiches,
                                 const std::vector<Vec>& extremal_seeds, std::uint64_t seed, int trials);
// Every exp(x,s) for sampled extremal x preserves the Gram matrix.
Report exp_form_property(const LieAlgebra& L, const Matrix& gram, const std::vector<Vec>& seeds, std::uint64_t seed,
                         int trials);

}  // namespace extremal::properties
