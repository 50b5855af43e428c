#include "extremal/suites.hpp"

#include "extremal/chevalley.hpp"
#include "extremal/nilquot.hpp"

namespace extremal::suites {

namespace {

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

// Sandwich witnesses closed under brackets with the given extremal elements.
std::vector<Vec> sandwich_closure(const LieAlgebra& L, std::vector<Vec> sandwiches, const std::vector<Vec>& extremals) {
  Subspace span = Subspace::span(L.field(), L.dim(), sandwiches);
  for (std::size_t i = 0; i < sandwiches.size(); ++i)
    for (const auto& x : extremals) {
      Vec c = L.bracket(sandwiches[i], x);
      if (!is_zero(c) && span.insert(c)) sandwiches.push_back(c);
    }
  return sandwiches;
}

bool symmetric_and_associative(const LieAlgebra& L, const BilinearForm& f) {
  return is_symmetric(f.gram) && is_associative(L, f.gram);
}

}  // namespace

Report tables(const std::string& which, int max_r) {
  Report rep;
  rep.name = "tables " + which;
  if (which == "lr") {
    static const int expected[] = {1, 3, 8, 28, 537};
    if (max_r < 1 || max_r > 5) throw PreconditionNotMet("lr table covers r = 1..5");
    for (int r = 1; r <= max_r; ++r) {
      auto l = nilquot::sandwich_algebra(r);
      rep.expect_eq("dim L_" + std::to_string(r), expected[r - 1], l.dim());
      rep.expect_true("L_" + std::to_string(r) + " certified", l.certify().pass());
    }
  } else if (which == "rr") {
    static const int expected[] = {2, 5, 19, 193};
    if (max_r < 1 || max_r > 4) throw PreconditionNotMet("rr table covers r = 1..4");
    for (int r = 1; r <= max_r; ++r)
      rep.expect_eq("dim R_" + std::to_string(r), expected[r - 1], nilquot::assoc_dims_via_embedding(r).total);
  } else if (which == "rr-lengths") {
    std::vector<int> expected;
    if (max_r == 3) expected = {1, 3, 6, 6, 3};
    else if (max_r == 4) expected = {1, 4, 12, 24, 36, 40, 36, 24, 12, 4};
    else throw PreconditionNotMet("length profiles are tabulated for r = 3 and 4");
    auto a = nilquot::assoc_dims_via_embedding(max_r);
    rep.expect_eq("R_" + std::to_string(max_r) + " dims by length", join(expected), join(a.dims_by_length));
    rep.add("palindromic from length 1", "-", a.palindromic() ? "true" : "false", true);
  } else {
    throw PreconditionNotMet("unknown table: " + which);
  }
  return rep;
}

Report mingen(char type, int rank, const Field& f) { return mingen(ChevalleyAlgebra(type, rank, f)); }

Report mingen(const ChevalleyAlgebra& g) {
  const Field& f = g.field();
  MingenRow row = mingen_row(g);
  Report rep;
  rep.name = "mingen " + row.type + std::to_string(row.rank) + " over " + f.name();
  rep.expect_eq("generators extremal", true, row.all_extremal);
  rep.expect_eq("generated dimension", row.dim, row.achieved);
  rep.expect_eq("lower bound = t", row.t_claimed, row.lower_bound);
  rep.add("natural representation bound", "-", std::to_string(row.natural_bound), true);
  rep.add("dimension bound", "-", std::to_string(row.dimension_bound), true);
  rep.add("sign variant used", "-", row.variant_used ? "true" : "false", true);
  return rep;
}

Report radicals(char type, int rank, const Field& f) { return radicals(ChevalleyAlgebra(type, rank, f)); }

Report radicals(const ChevalleyAlgebra& g) {
  const Field& f = g.field();
  const char type = g.root_system().type();
  const LieAlgebra& L = g.algebra();
  const RootSystem& rs = g.root_system();
  Report rep;
  rep.name = "radicals " + g.name() + " over " + f.name();
  auto spanning = extremal_spanning_set(g);
  auto form = extremal_form(L, spanning);
  auto kappa = killing_form(L);
  rep.expect_true("f symmetric and associative", symmetric_and_associative(L, form));
  Subspace radf = radical_of_form(form), radk = radical_of_form(kappa);
  auto rad = solvable_radical(L);
  rep.expect_true("Rad(f) <= Rad(kappa)", radf.subset_of(radk));
  rep.expect_true("Rad(L) <= Rad(f)", rad.space.subset_of(radf));
  if (f.is_rational()) rep.expect_true("Rad(f) = Rad(kappa)", radf == radk);
  if (f.characteristic() != 3) rep.expect_true("Rad(f) = Rad(L)", radf == rad.space);
  rep.add("dims Rad(L), Rad(f), Rad(kappa)", "-",
          std::to_string(rad.space.dim()) + ", " + std::to_string(radf.dim()) + ", " + std::to_string(radk.dim()),
          true);

  std::vector<Vec> sandwiches, root_elems;
  for (const auto& r : rs.roots()) {
    Vec x = g.x(r);
    if (is_sandwich(L, x)) sandwiches.push_back(x);
    if (is_extremal(L, x)) root_elems.push_back(x);
  }
  rep.merge(sandwich_span_check(L, sandwich_closure(L, sandwiches, root_elems), form), "chain: ");

  // Rad(f) = 0 exactly when L has no center or solvable radical and is the direct sum of its
  // minimal ideals generated by basis vectors, each perfect.
  std::vector<Subspace> minimal;
  for (int i = 0; i < L.dim(); ++i) {
    Subspace I = ideal_generated(L, {L.basis_vector(i)});
    bool redundant = false;
    for (auto& m : minimal) {
      if (m.subset_of(I)) redundant = true;
      else if (I.subset_of(m)) m = I, redundant = true;
    }
    if (!redundant) minimal.push_back(I);
  }
  Subspace sum(f, L.dim());
  int total = 0;
  bool perfect = true;
  for (const auto& m : minimal) {
    sum = sum.sum(m);
    total += m.dim();
    perfect = perfect && bracket_subspaces(L, m, m) == m;
  }
  bool direct_simple = perfect && sum.dim() == L.dim() && total == L.dim() && center(L).dim() == 0 &&
                       rad.space.dim() == 0;
  rep.expect_eq("Rad(f) = 0 iff direct sum of simple ideals", radf.dim() == 0, direct_simple);

  if (type == 'G' && f.characteristic() == 3) {
    rep.expect_eq("G2/GF(3): dim Rad(L)", 0, rad.space.dim());
    rep.expect_eq("G2/GF(3): dim Rad(f)", 7, radf.dim());
    std::vector<Vec> shorts;
    for (const auto& r : rs.roots())
      if (!rs.is_long(r)) shorts.push_back(g.x(r));
    rep.expect_true("G2/GF(3): Rad(f) generated by short root elements", ideal_generated(L, shorts) == radf);
    rep.merge(fourth_power_check(L, form, g.x(rs.highest_root()), shorts.front()), "G2/GF(3) (highest, short): ");
    rep.merge(fourth_power_check(L, form, g.x(rs.simple_roots()[1]), shorts.back()), "G2/GF(3) (simple long, short): ");
  }
  return rep;
}

Report killing_examples() {
  Report rep;
  rep.name = "Killing form examples";
  for (long long ch : {0LL, 3LL}) {
    Field F = Field::of_characteristic(ch);
    ChevalleyAlgebra sl3('A', 2, F);
    auto k = killing_form(sl3.algebra());
    Vec xa = sl3.x("10"), xma = sl3.x("-10");
    if (ch == 0) rep.expect_eq("sl3/Q kappa(x_a,x_-a)", std::string("6"), k(xa, xma).to_string());
    else rep.expect_true("sl3/GF(3) kappa = 0", k.gram.is_zero());
  }
  Field Q = Field::rationals();
  for (auto [type, rank] : {std::pair{'A', 1}, std::pair{'A', 2}}) {
    ChevalleyAlgebra g(type, rank, Q);
    const auto& rs = g.root_system();
    const Root& a = rs.highest_root();
    for (const auto& b : rs.roots()) {
      if (!rs.is_long(b) || b == a) continue;
      rep.merge(phi_spectrum_check(g.algebra(), g.x(a), g.x(b)),
                g.name() + " " + RootSystem::root_string(a) + "," + RootSystem::root_string(b) + ": ");
    }
  }
  return rep;
}

Report threegen(const smallgen::TriangleParams& p) {
  using namespace smallgen;
  Report rep;
  rep.name = "threegen " + p.to_string();
  auto tr = normalize(p);
  rep.expect_true("trace replays", replay(p, tr.steps) == tr.final);
  std::string steps;
  for (const auto& s : tr.steps) steps += (steps.empty() ? "" : " ") + s.to_string();
  rep.add("normalization", "-", steps.empty() ? "(none)" : steps, true);
  rep.add("case", "-", std::to_string(tr.edge_case), true);
  if (tr.extension_required) {
    rep.add("normalized in the base field", "true", "extension required", false);
    return rep;
  }
  auto M = build_M(tr.final);
  rep.expect_eq("rewrite pairs closed", 28, static_cast<int>(M.rewrite_log.size()));
  rep.merge(verify_3gen_structure(M));
  if (tr.edge_case == 2) {
    const LieAlgebra& L = M.algebra;
    auto form = extremal_form(L, extremal_spanning(M));
    Subspace radf = radical_of_form(form);
    std::vector<Vec> sandwiches;
    for (int i = 0; i < L.dim(); ++i)
      if (is_sandwich(L, L.basis_vector(i))) sandwiches.push_back(L.basis_vector(i));
    auto chain = sandwich_span_check(L, sandwich_closure(L, sandwiches, extremal_spanning(M)), form);
    rep.merge(chain, "chain: ");
    Subspace rad = solvable_radical(L).space;
    Subspace san = ideal_generated(L, sandwiches);
    rep.expect_true("SanRad witnesses strictly inside Rad(L)", san.subset_of(rad) && san.dim() < rad.dim());
    Vec x = L.basis_vector(0);
    auto rb = radf.basis();
    for (std::size_t i = 0; i < rb.size(); ++i)
      rep.merge(fourth_power_check(L, form, x, rb[i]), "case 2 (x, Rad(f)[" + std::to_string(i) + "]): ");
  }
  return rep;
}

Report extremal_check(char type, int rank, const Field& f) { return extremal_check(ChevalleyAlgebra(type, rank, f)); }

Report extremal_check(const ChevalleyAlgebra& g) {
  const Field& f = g.field();
  const char type = g.root_system().type();
  const int rank = g.root_system().rank();
  Report rep;
  rep.name = "extremal check " + g.name() + " over " + f.name();
  rep.merge(long_root_extremality_check(g));
  if (rank == 2 && (type == 'B' || type == 'G')) rep.merge(short_root_decomposition_check(type, f));
  auto form = extremal_form(g.algebra(), extremal_spanning_set(g));
  rep.expect_true("f symmetric", is_symmetric(form.gram));
  rep.expect_true("f associative on all basis triples", is_associative(g.algebra(), form.gram));
  return rep;
}

Report sl3_example_check(const Field& f) {
  auto ex = smallgen::sl3_example(f);
  const LieAlgebra& L = ex.algebra;
  Report rep;
  rep.name = "sl3 example over " + f.name();
  std::vector<Vec> gens = {L.basis_vector(0), L.basis_vector(1), L.basis_vector(2)};
  rep.expect_eq("generated dimension", 8, subalgebra_generated(L, gens).dim());
  smallgen::ThreeGenAlgebra A{smallgen::TriangleParams{f.zero(), f.zero(), f.zero(), f.zero()}, L, {}};
  auto form = extremal_form(L, smallgen::extremal_spanning(A));
  rep.expect_eq("f(x,y)", f.from_int(-2).to_string(), form(gens[0], gens[1]).to_string());
  rep.expect_eq("f(x,z)", f.from_int(-2).to_string(), form(gens[0], gens[2]).to_string());
  rep.expect_eq("f(y,z)", f.from_int(-2).to_string(), form(gens[1], gens[2]).to_string());
  rep.expect_eq("f(x,[y,z])", f.zero().to_string(), form(gens[0], L.basis_vector(5)).to_string());
  rep.expect_true("f symmetric and associative", symmetric_and_associative(L, form));
  return rep;
}

}  // namespace extremal::suites
