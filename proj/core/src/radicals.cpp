#include <algorithm>
#include <deque>
#include <map>
#include <optional>

#include "extremal/liealg.hpp"

namespace extremal {

namespace {

constexpr std::int64_t kPointBudget = 4000;

// Lift a subspace of L/R (coordinates on `kept`) back to L and add R.
Subspace lift(const Subspace& r, const Subspace& a, const std::vector<int>& kept, int n) {
  Subspace out = r;
  for (const auto& v : a.basis()) {
    Vec w = zero_vec(r.field(), n);
    for (std::size_t m = 0; m < kept.size(); ++m) w[kept[m]] = v[m];
    out.insert(std::move(w));
  }
  return out;
}

// Projective points of span(basis) over a finite field: first nonzero coefficient 1.
std::vector<Vec> projective_points(const Field& f, const std::vector<Vec>& basis) {
  std::vector<Vec> out;
  const int k = static_cast<int>(basis.size());
  if (k == 0) return out;
  const std::int64_t p = f.characteristic();
  for (int lead = 0; lead < k; ++lead) {
    int free = k - lead - 1;
    std::int64_t count = 1;
    for (int i = 0; i < free; ++i) count *= p;
    for (std::int64_t code = 0; code < count; ++code) {
      Vec v = basis[lead];
      std::int64_t c = code;
      for (int i = lead + 1; i < k; ++i) {
        axpy(v, f.from_int(c % p), basis[i]);
        c /= p;
      }
      out.push_back(std::move(v));
    }
  }
  return out;
}

struct SolvableSearch {
  std::optional<Subspace> ideal;
  bool certified = true;
  std::string method;
};

// A nonzero solvable ideal of q, or a certified (or flagged) claim that none exists.
SolvableSearch find_solvable_ideal(const LieAlgebra& q) {
  const Field& f = q.field();
  Subspace z = center(q);
  if (z.dim() > 0) return {z, true, "center"};
  Subspace k = radical_of_form(killing_form(q));
  // Every abelian ideal lies in the radical of the Killing form.
  if (k.dim() == 0) return {std::nullopt, true, "nondegenerate Killing form"};
  if (is_solvable(q, k)) return {k, true, "Killing radical"};
  if (f.is_rational()) return {std::nullopt, false, "Killing radical not solvable in characteristic 0"};
  // Minimal ideals are generated by weight vectors of the Killing radical.
  std::map<std::string, std::vector<int>> classes;
  if (q.weights().empty()) {
    for (int i = 0; i < q.dim(); ++i) classes[""].push_back(i);
  } else {
    for (int i = 0; i < q.dim(); ++i) classes[q.weights()[i]].push_back(i);
  }
  std::vector<int> class_of(static_cast<std::size_t>(q.dim()));
  {
    int c = 0;
    for (const auto& [w, idx] : classes) {
      for (int i : idx) class_of[static_cast<std::size_t>(i)] = c;
      ++c;
    }
  }
  // An abelian class W with [b_i, W] inside the class of b_i for every i: a nonzero ideal
  // inside W would be central, so with zero center one such class can be skipped.
  auto skippable = [&](const std::vector<int>& idx) {
    for (int j : idx)
      for (int i = 0; i < q.dim(); ++i) {
        for (const auto& [k, c] : q.product(i, j).terms) {
          if (class_of[static_cast<std::size_t>(k)] != class_of[static_cast<std::size_t>(i)]) return false;
          if (class_of[static_cast<std::size_t>(i)] == class_of[static_cast<std::size_t>(j)]) return false;
        }
      }
    return true;
  };
  bool exhaustive = true;
  bool skipped = false;
  for (const auto& [w, idx] : classes) {
    if (!skipped && classes.size() > 1 && skippable(idx)) {
      skipped = true;
      continue;
    }
    Subspace ws(f, q.dim());
    for (int i : idx) ws.insert(q.basis_vector(i));
    Subspace cand = ws.intersect(k);
    if (cand.dim() == 0) continue;
    std::vector<Vec> pts;
    std::int64_t count = 1;
    for (int i = 0; i < cand.dim() && count <= kPointBudget; ++i) count *= f.characteristic();
    if (count <= kPointBudget) {
      pts = projective_points(f, cand.basis());
    } else {
      pts = cand.basis();
      exhaustive = false;
    }
    for (const auto& v : pts) {
      Subspace id = ideal_generated(q, {v});
      if (is_solvable(q, id)) return {id, true, "weight-vector ideal search"};
    }
  }
  return {std::nullopt, exhaustive,
          exhaustive ? "ideal search over weight vectors of the Killing radical"
                     : "partial ideal search (weight space too large)"};
}

}  // namespace

RadicalResult solvable_radical(const LieAlgebra& L) {
  const Field& f = L.field();
  Subspace r(f, L.dim());
  RadicalResult res{r, true, ""};
  std::vector<std::string> steps;
  while (r.dim() < L.dim()) {
    std::vector<int> kept;
    LieAlgebra q = L.quotient(r, &kept);
    SolvableSearch s = find_solvable_ideal(q);
    steps.push_back(s.method);
    if (!s.ideal) {
      res.certified = s.certified;
      break;
    }
    r = lift(r, *s.ideal, kept, L.dim());
  }
  res.space = r;
  for (std::size_t i = 0; i < steps.size(); ++i) res.method += (i ? "; " : "") + steps[i];
  return res;
}

namespace {

// Associative algebra generated by ad(L) and the identity, as a list of matrices.
std::vector<Matrix> multiplication_algebra(const LieAlgebra& L) {
  const int n = L.dim();
  const Field& f = L.field();
  std::vector<Matrix> gens;
  for (int i = 0; i < n; ++i) gens.push_back(L.ad(L.basis_vector(i)));
  auto flat = [&](const Matrix& m) {
    Vec v;
    v.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) v.push_back(m(i, j));
    return v;
  };
  Subspace span(f, n * n);
  std::vector<Matrix> basis;
  std::deque<Matrix> queue;
  Matrix id = Matrix::identity(f, n);
  span.insert(flat(id));
  basis.push_back(id);
  queue.push_back(id);
  while (!queue.empty()) {
    Matrix m = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      Matrix p = g * m;
      if (span.insert(flat(p))) {
        basis.push_back(p);
        queue.push_back(std::move(p));
      }
    }
  }
  return basis;
}

}  // namespace

RadicalResult nilradical(const LieAlgebra& L, const RadicalResult& solv) {
  const Field& f = L.field();
  const Subspace& r = solv.space;
  if (r.dim() == 0) return {r, solv.certified, "solvable radical is zero"};
  if (is_nilpotent(L, r)) return {r, solv.certified, "solvable radical is nilpotent"};
  // Elements whose ad lies in the Jacobson radical of the multiplication algebra
  // have ad_x e of trace zero for all e; in characteristic 0 this is exact.
  std::vector<Matrix> e = multiplication_algebra(L);
  std::vector<Vec> rows;
  for (const auto& m : e) {
    Vec row = L.zero();
    for (int i = 0; i < L.dim(); ++i) row[i] = (L.ad(L.basis_vector(i)) * m).trace();
    rows.push_back(std::move(row));
  }
  Subspace d = Subspace::span(f, L.dim(), Matrix::from_rows(f, L.dim(), rows).kernel()).intersect(r);
  if (f.is_rational()) return {d, solv.certified, "trace form of the multiplication algebra"};
  if (is_ideal(L, d) && is_nilpotent(L, d))
    return {d, solv.certified, "trace-form upper bound is a nilpotent ideal"};
  // Fall back to the largest nilpotent ideal among known candidates.
  std::vector<Subspace> cands;
  for (const auto& t : derived_series(L, r)) cands.push_back(t);
  cands.push_back(bracket_subspaces(L, Subspace::whole(f, L.dim()), r));
  cands.push_back(center(L));
  Subspace best(f, L.dim());
  for (const auto& c : cands)
    if (is_ideal(L, c) && is_nilpotent(L, c) && c.dim() > best.dim()) best = c;
  return {best, false, "largest nilpotent ideal among series terms (lower bound)"};
}

StructuralSubspaces structural_subspaces(const LieAlgebra& L) {
  StructuralSubspaces s;
  s.center = center(L);
  s.derived_series = derived_series(L, Subspace::whole(L.field(), L.dim()));
  s.lower_central_series = lower_central_series(L);
  s.solvable_radical = solvable_radical(L);
  s.nilradical = nilradical(L, s.solvable_radical);
  return s;
}

namespace {

int generalized_kernel_dim(const Matrix& m, const Scalar& lambda) {
  const int n = m.rows();
  Matrix a = m - lambda * Matrix::identity(m.field(), n);
  Matrix p = a;
  for (int e = 1; e < n; e *= 2) p = p * p;
  return n - p.rank();
}

}  // namespace

Report phi_spectrum_check(const LieAlgebra& L, const Vec& x, const Vec& y) {
  Report rep{"phi_spectrum", {}};
  const Field& f = L.field();
  auto fx = is_extremal(L, x);
  if (!fx) throw PreconditionNotMet("x is not extremal");
  Scalar fxy = dot(*fx, y);
  const int n = L.dim();
  Matrix adx = L.ad(x);
  if (fxy.is_zero()) {
    Matrix phi = adx * L.ad(y);
    rep.expect_eq("all eigenvalues zero (dim generalized 0-eigenspace)", n, generalized_kernel_dim(phi, f.zero()));
    rep.expect_eq("kappa(x,y)", f.zero().to_string(), phi.trace().to_string());
    return rep;
  }
  Vec ys = (f.from_int(-2) / fxy) * y;
  Matrix phi = adx * L.ad(ys);
  int s = adx.rank();
  // phi^2 + (1/2) f(x,y) phi maps into kx + k[x,y]; here f(x,y) = -2.
  Matrix q = phi * phi - phi;
  Subspace target = Subspace::span(f, n, {x, L.bracket(x, ys)});
  bool into = true;
  for (int j = 0; j < n && into; ++j) into = target.contains(q.col(j));
  rep.expect_true("phi^2 + f(x,y)/2 phi maps into kx + k[x,y]", into);
  int m2 = generalized_kernel_dim(phi, f.from_int(2));
  int m1 = generalized_kernel_dim(phi, f.one());
  int m0 = generalized_kernel_dim(phi, f.zero());
  std::string tag = " (s=" + std::to_string(s) + ")";
  rep.expect_eq("multiplicity of eigenvalue 2", 2, m2);
  rep.expect_eq("multiplicity of eigenvalue 1" + tag, s - 2, m1);
  rep.expect_eq("multiplicity of eigenvalue 0" + tag, n - s, m0);
  rep.expect_eq("kappa(x,y) = s + 2", f.from_int(s + 2).to_string(), phi.trace().to_string());
  return rep;
}

Report sandwich_span_check(const LieAlgebra& L, const std::vector<Vec>& witnesses, const BilinearForm& form) {
  Report rep{"sandwich_span", {}};
  for (std::size_t i = 0; i < witnesses.size(); ++i)
    if (!is_sandwich(L, witnesses[i])) throw NotASandwich(static_cast<int>(i));
  const Field& f = L.field();
  Subspace span = Subspace::span(f, L.dim(), witnesses);
  Subspace san = ideal_generated(L, witnesses);
  rep.expect_true("witness span is an ideal", span == san);
  StructuralSubspaces st = structural_subspaces(L);
  Subspace radf = radical_of_form(form);
  Subspace radk = radical_of_form(killing_form(L));
  const Subspace& nil = st.nilradical.space;
  const Subspace& rad = st.solvable_radical.space;
  struct Link {
    const char* name;
    const Subspace* a;
    const Subspace* b;
  };
  Link links[] = {{"SanRad <= NilRad", &san, &nil},
                  {"NilRad <= Rad(L)", &nil, &rad},
                  {"Rad(L) <= Rad(f)", &rad, &radf},
                  {"Rad(f) <= Rad(kappa)", &radf, &radk}};
  for (const auto& l : links) {
    bool inc = l.a->subset_of(*l.b);
    std::string dims = std::to_string(l.a->dim()) + " <= " + std::to_string(l.b->dim());
    rep.add(l.name, "inclusion", dims + (inc ? (l.a->dim() < l.b->dim() ? " (strict)" : " (equal)") : " (fails)"),
            inc);
  }
  rep.add("radicals certified", "true",
          std::string(st.solvable_radical.certified && st.nilradical.certified ? "true" : "false") + " [" +
              st.solvable_radical.method + " | " + st.nilradical.method + "]",
          st.solvable_radical.certified && st.nilradical.certified);
  return rep;
}

Report fourth_power_check(const LieAlgebra& L, const BilinearForm& form, const Vec& x, const Vec& y) {
  Report rep{"fourth_power", {}};
  if (is_zero(x) || !is_extremal(L, x)) throw PreconditionNotMet("x must be extremal");
  Subspace radf = radical_of_form(form);
  if (radf.contains(x)) throw PreconditionNotMet("x must lie outside Rad(f)");
  if (!radf.contains(y)) throw PreconditionNotMet("y must lie in Rad(f)");
  Matrix a = L.ad(L.bracket(x, y));
  Matrix a4 = a * a * a * a;
  rep.expect_true("ad_[x,y]^4 = 0", a4.is_zero());
  return rep;
}

Report direct_sum_orthogonality_check(const LieAlgebra& L, const Subspace& l1, const Subspace& l2,
                                      const BilinearForm& form, const std::vector<Vec>& extremals) {
  Report rep{"direct_sum_orthogonality", {}};
  const Field& f = L.field();
  if (l1.dim() == 0 || l2.dim() == 0 || !is_ideal(L, l1) || !is_ideal(L, l2) || l1.intersect(l2).dim() != 0 ||
      l1.dim() + l2.dim() != L.dim())
    throw NotADirectSum("subspaces do not form a decomposition into two nonzero ideals");
  bool orth = true;
  for (const auto& a : l1.basis())
    for (const auto& b : l2.basis())
      if (!form(a, b).is_zero()) orth = false;
  rep.expect_true("f(L1,L2) = 0", orth);
  // Projection along the decomposition: solve v = a + b.
  Matrix m(f, L.dim(), L.dim());
  int c = 0;
  for (const auto& v : l1.basis()) m.set_col(c++, v);
  for (const auto& v : l2.basis()) m.set_col(c++, v);
  Matrix inv = *m.inverse();
  Subspace p1(f, L.dim()), p2(f, L.dim());
  for (const auto& e : extremals) {
    Vec co = inv * e;
    Vec a = L.zero(), b = L.zero();
    for (int i = 0; i < l1.dim(); ++i) axpy(a, co[i], l1.basis()[i]);
    for (int i = 0; i < l2.dim(); ++i) axpy(b, co[l1.dim() + i], l2.basis()[i]);
    p1.insert(a);
    p2.insert(b);
  }
  rep.expect_eq("L1 spanned by projections of extremal elements", l1.dim(), p1.dim());
  rep.expect_eq("L2 spanned by projections of extremal elements", l2.dim(), p2.dim());
  return rep;
}

}  // namespace extremal
