#include "extremal/properties.hpp"

#include "extremal/chevalley.hpp"

namespace extremal::properties {

Scalar random_scalar(const Field& f, std::mt19937_64& rng, bool nonzero) {
  if (f.is_rational()) {
    static const int num[] = {1, -1, 2, -2, 1, 3};
    static const int den[] = {1, 1, 1, 1, 2, 1};
    std::size_t i = rng() % 6;
    return f.from_ratio(num[i], den[i]);
  }
  std::int64_t p = f.characteristic();
  std::int64_t r = nonzero ? 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(p - 1))
                           : static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(p));
  return f.from_int(r);
}

ExtremalSampler::ExtremalSampler(const LieAlgebra& L, std::vector<Vec> seeds, std::uint64_t seed, int depth)
    : L_(&L), seeds_(std::move(seeds)), rng_(seed), depth_(depth) {
  if (seeds_.empty()) throw PreconditionNotMet("sampler needs seeds");
}

Vec ExtremalSampler::next() {
  Vec v = seeds_[rng_() % seeds_.size()];
  for (int d = 0; d < depth_; ++d) {
    const Vec& a = seeds_[rng_() % seeds_.size()];
    v = exp_apply(*L_, a, random_scalar(L_->field(), rng_), v);
  }
  return v;
}

std::vector<Vec> ExtremalSampler::transport(const std::vector<Vec>& vs) {
  std::vector<Vec> out = vs;
  for (int d = 0; d < depth_; ++d) {
    const Vec& a = seeds_[rng_() % seeds_.size()];
    Scalar s = random_scalar(L_->field(), rng_);
    for (auto& v : out) v = exp_apply(*L_, a, s, v);
  }
  return out;
}

namespace {

bool qualifies(const LieAlgebra& L, const Vec& x, const Vec& y) {
  auto fx = is_extremal(L, x);
  return fx && is_extremal(L, y) && dot(*fx, y).is_zero() && !is_zero(L.bracket(x, y));
}

}  // namespace

Report bracket_extremal_check(const LieAlgebra& L, const Vec& x, const Vec& y) {
  auto fx = is_extremal(L, x);
  auto fy = is_extremal(L, y);
  if (!fx || !fy) throw PreconditionNotMet("x and y must be extremal");
  Vec c = L.bracket(x, y);
  if (!dot(*fx, y).is_zero() || is_zero(c)) throw PreconditionNotMet("need f(x,y) = 0 and [x,y] != 0");
  Report rep;
  rep.name = "bracket of a nilpotent pair";
  auto fc = is_extremal(L, c);
  rep.expect_true("[x,y] extremal", fc.has_value());
  if (!fc) return rep;
  Scalar half = L.field().from_ratio(1, 2);
  bool ok = true;
  for (int k = 0; k < L.dim(); ++k) {
    Vec z = L.basis_vector(k);
    Scalar want = half * (dot(*fx, L.bracket(y, z)) - dot(*fy, L.bracket(x, z)));
    if ((*fc)[k] != want) ok = false;
  }
  rep.expect_true("f_[x,y] = (f_x([y,.]) - f_y([x,.]))/2", ok);
  return rep;
}

Report sandwich_bracket_check(const LieAlgebra& L, const Vec& s, const Vec& x) {
  if (!is_sandwich(L, s)) throw PreconditionNotMet("s must be a sandwich");
  if (!is_extremal(L, x)) throw PreconditionNotMet("x must be extremal");
  if (is_zero(L.bracket(s, x))) throw PreconditionNotMet("need [s,x] != 0");
  Report rep;
  rep.name = "sandwich bracket";
  rep.expect_true("[s,x] sandwich", is_sandwich(L, L.bracket(s, x)));
  return rep;
}

Report bracket_extremal_property(const LieAlgebra& L, const std::vector<Vec>& seeds, std::uint64_t seed, int trials) {
  ExtremalSampler sampler(L, seeds, seed);
  Report rep;
  rep.name = "bracket extremal property";
  // Qualifying seed pairs moved by random automorphisms, then unstructured random pairs.
  std::vector<std::pair<Vec, Vec>> base;
  for (std::size_t i = 0; i < seeds.size(); ++i)
    for (std::size_t j = 0; j < seeds.size(); ++j)
      if (i != j && qualifies(L, seeds[i], seeds[j])) base.emplace_back(seeds[i], seeds[j]);
  int checked = 0, failed = 0;
  for (int t = 0; t < trials; ++t) {
    Vec x, y;
    if (!base.empty() && t % 2 == 0) {
      const auto& pr = base[sampler.engine()() % base.size()];
      auto moved = sampler.transport({pr.first, pr.second});
      x = moved[0];
      y = moved[1];
    } else {
      x = sampler.next();
      y = sampler.next();
    }
    if (!qualifies(L, x, y)) continue;
    ++checked;
    if (!bracket_extremal_check(L, x, y).pass()) ++failed;
  }
  rep.add("bracket: qualifying pairs checked", "> 0", std::to_string(checked), checked > 0);
  rep.expect_eq("bracket: failures", 0, failed);
  return rep;
}

Report sandwich_bracket_property(const LieAlgebra& L, const std::vector<Vec>& sandwiches,
                                 const std::vector<Vec>& extremal_seeds, std::uint64_t seed, int trials) {
  ExtremalSampler sampler(L, extremal_seeds, seed);
  Report rep;
  rep.name = "sandwich bracket property";
  int checked = 0, failed = 0;
  for (int t = 0; t < trials && !sandwiches.empty(); ++t) {
    const Vec& s0 = sandwiches[sampler.engine()() % sandwiches.size()];
    auto moved = sampler.transport({s0});
    Vec x = sampler.next();
    if (!is_sandwich(L, moved[0])) {
      ++failed;
      continue;
    }
    if (is_zero(L.bracket(moved[0], x))) continue;
    ++checked;
    if (!sandwich_bracket_check(L, moved[0], x).pass()) ++failed;
  }
  rep.add("sandwich: pairs checked", "> 0", std::to_string(checked), checked > 0);
  rep.expect_eq("sandwich: failures", 0, failed);
  return rep;
}

Report exp_form_property(const LieAlgebra& L, const Matrix& gram, const std::vector<Vec>& seeds, std::uint64_t seed,
                         int trials) {
  ExtremalSampler sampler(L, seeds, seed);
  Report rep;
  rep.name = "exp preserves the form";
  int failed = 0;
  for (int t = 0; t < trials; ++t) {
    Vec x = sampler.next();
    Scalar s = random_scalar(L.field(), sampler.engine());
    auto phi = exp_automorphism(L, x, s, false);
    if (!preserves_form(phi.matrix, gram)) ++failed;
  }
  rep.expect_eq("exp form: failures", 0, failed);
  return rep;
}

}  // namespace extremal::properties
