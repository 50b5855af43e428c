#include "extremal/chevalley.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include <json.hpp>

#include "extremal/errors.hpp"

namespace extremal {

namespace {

Root neg(const Root& r) {
  Root out(r);
  for (int& c : out) c = -c;
  return out;
}

std::vector<std::string> torus_weights(const RootSystem& rs, const Field& f) {
  const long long p = f.characteristic();
  std::vector<std::string> w;
  auto fmt = [&](std::vector<int> v) {
    std::string s = "w";
    for (int c : v) {
      long long x = c;
      if (p) x = ((x % p) + p) % p;
      s += ":" + std::to_string(x);
    }
    return s;
  };
  for (const auto& r : rs.roots()) {
    std::vector<int> v;
    for (const auto& a : rs.simple_roots()) v.push_back(rs.pairing(r, a));
    w.push_back(fmt(v));
  }
  for (int i = 0; i < rs.rank(); ++i) w.push_back(fmt(std::vector<int>(rs.rank(), 0)));
  return w;
}

LieAlgebra build(const ChevalleyConstants& N, const Field& f) {
  const auto& rs = N.root_system();
  const auto& R = rs.roots();
  const int m = static_cast<int>(R.size());
  const int n = rs.rank();
  std::vector<std::string> labels;
  for (const auto& r : R) labels.push_back("x_" + RootSystem::root_string(r));
  for (int i = 1; i <= n; ++i) labels.push_back("h_" + std::to_string(i));

  std::vector<StructureConstant> sc;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      Root s(R[a]);
      for (int i = 0; i < n; ++i) s[i] += R[b][i];
      if (std::all_of(s.begin(), s.end(), [](int c) { return c == 0; })) {
        auto co = rs.coroot(R[a]);
        for (int i = 0; i < n; ++i)
          if (co[i]) sc.push_back({a, b, m + i, f.from_int(co[i])});
        continue;
      }
      int k = rs.index_of(s);
      if (k >= 0) sc.push_back({a, b, k, f.from_int(N.N(a, b))});
    }
  const auto simple = rs.simple_roots();
  for (int b = 0; b < m; ++b)
    for (int i = 0; i < n; ++i) {
      int c = rs.pairing(R[b], simple[i]);
      if (c) sc.push_back({b, m + i, b, f.from_int(-c)});
    }
  LieAlgebra L(f, std::move(labels), sc, true);
  L.set_weights(torus_weights(rs, f));
  return L;
}

}  // namespace

ChevalleyAlgebra::ChevalleyAlgebra(char type, int rank, const Field& f)
    : N_(RootSystem(type, rank)), L_(build(N_, f)) {}

ChevalleyAlgebra::ChevalleyAlgebra(char type, int rank, const Field& f, const LieAlgebra& over_q)
    : N_(RootSystem(type, rank)) {
  const auto& rs = N_.root_system();
  const int m = static_cast<int>(rs.roots().size());
  if (!over_q.field().is_rational() || over_q.dim() != m + rank)
    throw PreconditionNotMet("stored table does not match " + rs.name());
  for (int i = 0; i < m; ++i)
    if (over_q.label(i) != "x_" + RootSystem::root_string(rs.roots()[i]))
      throw PreconditionNotMet("stored table does not match " + rs.name());
  std::vector<StructureConstant> sc;
  for (const auto& c : over_q.constants()) sc.push_back({c.i, c.j, c.k, f.from_mpq(c.value.rational())});
  L_ = LieAlgebra(f, over_q.labels(), sc, true);
  L_.set_weights(torus_weights(rs, f));
}

int ChevalleyAlgebra::root_index(const Root& r) const {
  int i = root_system().index_of(r);
  if (i < 0) throw PreconditionNotMet("not a root of " + name());
  return i;
}

Vec ChevalleyAlgebra::h(int i) const {
  if (i < 1 || i > root_system().rank()) throw PreconditionNotMet("Cartan index out of range");
  return L_.basis_vector(static_cast<int>(root_system().roots().size()) + i - 1);
}

Vec ChevalleyAlgebra::h(const Root& r) const { return L_.bracket(x(r), x(neg(r))); }

Vec exp_apply(const LieAlgebra& L, const Vec& x, const Scalar& s, const Vec& y) {
  const Field& f = L.field();
  Vec out = y;
  Vec term = y;
  for (int k = 1;; ++k) {
    term = L.bracket(x, term);
    if (is_zero(term)) return out;
    if (f.characteristic() && k >= f.characteristic())
      throw PreconditionNotMet("exp series does not stop below the characteristic");
    if (k > L.dim()) throw PreconditionNotMet("exp of a non-nilpotent element");
    term = (s / f.from_int(k)) * term;
    out = out + term;
  }
}

Automorphism exp_automorphism(const LieAlgebra& L, const Vec& x, const Scalar& s, bool check_brackets) {
  if (is_zero(x) || !is_extremal(L, x)) throw NotExtremal(0);
  const Field& f = L.field();
  Matrix ad = L.ad(x);
  Matrix ad2 = ad * ad;
  Matrix m = Matrix::identity(f, L.dim()) + s * ad + ((s * s) / f.from_int(2)) * ad2;
  if (check_brackets && !is_homomorphism(L, L, m))
    throw WellDefinednessFailure("exp(x,s) does not preserve brackets");
  return {std::move(m)};
}

std::vector<Vec> extremal_spanning_set(const ChevalleyAlgebra& g) {
  const auto& rs = g.root_system();
  const auto& L = g.algebra();
  std::vector<Vec> out;
  Subspace span(g.field(), g.dim());
  std::vector<Root> longs;
  for (const auto& r : rs.roots()) {
    if (rs.is_long(r)) longs.push_back(r);
    // Short root elements count when the characteristic makes them extremal.
    if (rs.is_long(r) || is_extremal(L, g.x(r))) {
      out.push_back(g.x(r));
      span.insert(out.back());
    }
  }
  // Root group elements x_a(1) act integrally on the Chevalley basis; compute them over Q and reduce.
  std::optional<ChevalleyAlgebra> lift;
  if (g.field().is_finite()) lift.emplace(rs.type(), rs.rank(), Field::rationals());
  for (const auto& a : rs.roots()) {
    if (span.dim() == g.dim()) break;
    for (const auto& c : longs) {
      if (span.dim() == g.dim()) break;
      Vec y;
      if (lift) {
        Vec yq = exp_apply(lift->algebra(), lift->x(a), lift->field().one(), lift->x(c));
        for (const auto& v : yq) y.push_back(g.field().from_mpq(v.rational()));
      } else {
        y = exp_apply(L, g.x(a), g.field().one(), g.x(c));
      }
      if (span.insert(y)) out.push_back(std::move(y));
    }
  }
  return out;
}

bool preserves_form(const Matrix& phi, const Matrix& gram) { return phi.transpose() * gram * phi == gram; }

Report long_root_extremality_check(const ChevalleyAlgebra& g) {
  Report rep;
  rep.name = "long root extremality " + g.name() + " over " + g.field().name();
  const auto& rs = g.root_system();
  int nl = 0, nl_ok = 0, ns = 0, ns_ok = 0;
  for (const auto& r : rs.roots()) {
    bool ext = is_extremal(g.algebra(), g.x(r)).has_value();
    if (rs.is_long(r)) {
      ++nl;
      nl_ok += ext;
    } else {
      ++ns;
      ns_ok += !ext;
    }
  }
  rep.add("long root elements extremal", std::to_string(nl), std::to_string(nl_ok), nl == nl_ok);
  if (ns) rep.add("short root elements not extremal", std::to_string(ns), std::to_string(ns_ok), ns == ns_ok);
  return rep;
}

namespace {

// Long root elements in the wide sense: conjugates of x_a (a long) under root group elements.
Report long_roots_generate(const ChevalleyAlgebra& g) {
  Report rep;
  std::vector<Vec> basis_longs;
  for (const auto& r : g.root_system().roots())
    if (g.root_system().is_long(r)) basis_longs.push_back(g.x(r));
  int d0 = subalgebra_generated(g.algebra(), basis_longs).dim();
  rep.add("long basis root elements generate", "-", std::to_string(d0), true);
  auto gens = extremal_spanning_set(g);
  bool all_extremal = true;
  for (const auto& v : gens) all_extremal = all_extremal && is_extremal(g.algebra(), v).has_value();
  rep.expect_true("conjugates of long root elements extremal", all_extremal);
  int d = subalgebra_generated(g.algebra(), gens).dim();
  rep.add("long root elements generate", std::to_string(g.dim()), std::to_string(d), d == g.dim());
  return rep;
}

}  // namespace

Report short_root_decomposition_check(char type, const Field& f) {
  Report rep;
  if (type == 'B') {
    ChevalleyAlgebra g('B', 2, f);
    rep.name = "short root decomposition B2 over " + f.name();
    const auto& L = g.algebra();
    const auto& rs = g.root_system();
    Root e1 = rs.from_epsilon({1, 0}), tgt = rs.from_epsilon({-1, 1});
    Root e2 = rs.from_epsilon({0, 1}), e12 = rs.from_epsilon({1, 1});
    Vec y = exp_apply(L, g.x(e1), f.one(), g.x(tgt));
    Scalar ct = y[g.root_index(tgt)], cs = y[g.root_index(e2)], cl = y[g.root_index(e12)];
    Vec rest = y - ct * g.x(tgt) - cs * g.x(e2) - cl * g.x(e12);
    rep.expect_true("image is extremal", is_extremal(L, y).has_value());
    rep.expect_eq("x_{-(e1-e2)} coefficient", f.one(), ct);
    rep.add("x_{e2} coefficient nonzero (displayed -1)", "nonzero", cs.to_string(), !cs.is_zero());
    rep.add("x_{e1+e2} coefficient nonzero (displayed 1)", "nonzero", cl.to_string(), !cl.is_zero());
    rep.expect_true("image within span of the three root elements", is_zero(rest));
    rep.expect_true("x_{e1+e2} long and extremal", rs.is_long(e12) && is_extremal(L, g.x(e12)).has_value());
    rep.expect_true("x_{-(e1-e2)} long and extremal", rs.is_long(tgt) && is_extremal(L, g.x(tgt)).has_value());
    rep.merge(long_roots_generate(g));
    return rep;
  }
  if (type == 'G') {
    ChevalleyAlgebra g('G', 2, f);
    rep.name = "short root decomposition G2 over " + f.name();
    const auto& L = g.algebra();
    Root a{1, 0}, b{0, 1}, s{2, 1};
    Vec yp = exp_apply(L, g.x(a), f.one(), g.x(b));
    Vec ym = exp_apply(L, g.x(a), f.from_int(-1), g.x(b));
    Vec sum = yp + ym;
    Scalar cb = sum[g.root_index(b)], cs = sum[g.root_index(s)];
    rep.expect_true("exp(x_a,1)x_b extremal", is_extremal(L, yp).has_value());
    rep.expect_true("exp(x_a,-1)x_b extremal", is_extremal(L, ym).has_value());
    rep.expect_eq("x_b coefficient", f.from_int(2), cb);
    rep.add("x_{2a+b} coefficient nonzero (displayed -2)", "nonzero", cs.to_string(), !cs.is_zero());
    rep.expect_true("sum within span{x_b, x_{2a+b}}", is_zero(sum - cb * g.x(b) - cs * g.x(s)));
    rep.merge(long_roots_generate(g));
    return rep;
  }
  throw UnsupportedType("short root decomposition is defined for B2 and G2");
}

Report simple_plus_lowest_generation_check(const ChevalleyAlgebra& g) {
  Report rep;
  rep.name = "simple plus lowest generation " + g.name();
  std::vector<Vec> gens;
  for (const auto& r : g.root_system().simple_roots()) gens.push_back(g.x(r));
  gens.push_back(g.x(neg(g.root_system().highest_root())));
  int d = subalgebra_generated(g.algebra(), gens).dim();
  rep.add("generated dimension", std::to_string(g.dim()), std::to_string(d), d == g.dim());
  return rep;
}

std::string RootImage::describe() const {
  std::string s;
  for (const auto& e : exps) s += "exp(x_" + RootSystem::root_string(e) + ") ";
  return s + "x_" + RootSystem::root_string(target);
}

int minimal_generator_count(char type, int rank) {
  switch (type) {
    case 'A': return rank + 1;
    case 'B': return rank == 2 ? 4 : rank + 1;
    case 'C': return 2 * rank;
    case 'D': return rank;
    case 'E':
    case 'F': return 5;
    case 'G': return 4;
  }
  throw UnsupportedType(std::string("unknown type ") + type);
}

namespace {

using Eps = std::vector<int>;

struct EpsImage {
  std::vector<Eps> exps;
  Eps target;
};

struct EpsBuilder {
  int size, off;
  Eps e(int i) const {
    Eps v(size, 0);
    v[off + i - 1] = 1;
    return v;
  }
};

Eps operator+(Eps a, const Eps& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}
Eps operator-(Eps a, const Eps& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}
Eps operator-(Eps a) {
  for (int& c : a) c = -c;
  return a;
}
Eps operator*(int k, Eps a) {
  for (int& c : a) c *= k;
  return a;
}

void a2_block(const EpsBuilder& B, std::vector<EpsImage>& out) {
  out.push_back({{}, B.e(1) - B.e(2)});
  out.push_back({{}, B.e(2) - B.e(3)});
  out.push_back({{}, -(B.e(1) - B.e(3))});
}

std::vector<EpsImage> classical_recipe(char type, int n, int off, int size) {
  EpsBuilder B{size, off};
  std::vector<EpsImage> out;
  switch (type) {
    case 'C':
      if (n == 1) {
        out.push_back({{}, 2 * B.e(1)});
        out.push_back({{}, -2 * B.e(1)});
        return out;
      }
      out = classical_recipe('C', n - 1, off + 1, size);
      out.push_back({{-(B.e(1) + B.e(2))}, 2 * B.e(1)});
      out.push_back({{B.e(1) + B.e(2)}, -2 * B.e(1)});
      return out;
    case 'D':
      if (n == 4) {
        a2_block(B, out);
        out.push_back({{B.e(1) + B.e(4), -(B.e(3) - B.e(4)), -(B.e(1) + B.e(3))}, B.e(3) - B.e(4)});
        return out;
      }
      out = classical_recipe('D', n - 1, off + 1, size);
      out.push_back({{-(B.e(1) - B.e(2))}, B.e(1) - B.e(2)});
      return out;
    case 'B':
      if (n == 3) {
        a2_block(B, out);
        out.push_back({{-(B.e(1) + B.e(2)), B.e(1)}, -(B.e(1) - B.e(2))});
        return out;
      }
      out = classical_recipe('D', n, off, size);
      out.push_back({{B.e(2)}, B.e(1) - B.e(2)});
      return out;
  }
  throw UnsupportedType("no classical recipe");
}

std::vector<RootImage> from_eps(const RootSystem& rs, const std::vector<EpsImage>& in) {
  std::vector<RootImage> out;
  for (const auto& im : in) {
    RootImage r;
    for (const auto& e : im.exps) r.exps.push_back(rs.from_epsilon(e));
    r.target = rs.from_epsilon(im.target);
    out.push_back(std::move(r));
  }
  return out;
}

// Linear map on simple-root coordinates: columns are images of the simple roots.
Root embed(const Root& r, const std::vector<Root>& images) {
  Root out(images[0].size(), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += r[i] * images[i][j];
  return out;
}

std::vector<RootImage> embed_recipe(const std::vector<RootImage>& in, const std::vector<Root>& images) {
  std::vector<RootImage> out;
  for (const auto& im : in) {
    RootImage r;
    for (const auto& e : im.exps) r.exps.push_back(embed(e, images));
    r.target = embed(im.target, images);
    out.push_back(std::move(r));
  }
  return out;
}

RootImage parsed(const RootSystem& rs, const std::vector<std::string>& exps, const std::string& target) {
  RootImage r;
  for (const auto& e : exps) r.exps.push_back(rs.parse_root(e));
  r.target = rs.parse_root(target);
  return r;
}

std::vector<RootImage> d4_recipe() {
  RootSystem d4('D', 4);
  return from_eps(d4, classical_recipe('D', 4, 0, 4));
}

}  // namespace

std::vector<RootImage> mingen_recipe(const RootSystem& rs) {
  const int n = rs.rank();
  switch (rs.type()) {
    case 'A': {
      std::vector<RootImage> out;
      for (const auto& r : rs.simple_roots()) out.push_back({{}, r});
      out.push_back({{}, neg(rs.highest_root())});
      return out;
    }
    case 'B':
      if (n == 2) {
        // B2 through the C2 recipe with the two simple roots swapped.
        RootSystem c2('C', 2);
        auto rec = from_eps(c2, classical_recipe('C', 2, 0, 2));
        return embed_recipe(rec, {{0, 1}, {1, 0}});
      }
      return from_eps(rs, classical_recipe('B', n, 0, n));
    case 'C':
    case 'D': return from_eps(rs, classical_recipe(rs.type(), n, 0, n));
    case 'E': {
      auto out = embed_recipe(d4_recipe(), {rs.parse_root(std::string("00100000").substr(0, n)),
                                            rs.parse_root(std::string("00010000").substr(0, n)),
                                            rs.parse_root(std::string("00001000").substr(0, n)),
                                            rs.parse_root(std::string("01000000").substr(0, n))});
      if (n == 6)
        out.push_back(parsed(rs, {"-101100", "001111", "-111221"}, "100000"));
      else if (n == 7)
        out.push_back(parsed(rs, {"0111111", "-1010000", "-1112110", "0011110", "-1112211"}, "1000000"));
      else
        out.push_back(parsed(rs, {"01111110", "-11121110", "01122111", "-10111111", "12343321", "-23354321"},
                             "10000000"));
      return out;
    }
    case 'F': {
      auto out = embed_recipe(
          d4_recipe(), {rs.parse_root("0100"), rs.parse_root("1000"), rs.parse_root("0120"), rs.parse_root("0122")});
      out.push_back(parsed(rs, {"-1231", "0001"}, "0120"));
      return out;
    }
    case 'G': {
      std::vector<RootImage> out{{{}, rs.parse_root("01")}, {{}, rs.parse_root("31")}, {{}, rs.parse_root("-32")}};
      out.push_back(parsed(rs, {"-21"}, "32"));
      return out;
    }
  }
  throw UnsupportedType("no recipe for " + rs.name());
}

namespace {

std::vector<Vec> evaluate(const ChevalleyAlgebra& g, const std::vector<RootImage>& rec, const std::vector<int>& signs) {
  const Field& f = g.field();
  std::vector<Vec> out;
  std::size_t k = 0;
  for (const auto& im : rec) {
    Vec v = g.x(im.target);
    std::vector<int> local(signs.begin() + static_cast<long>(k), signs.begin() + static_cast<long>(k + im.exps.size()));
    k += im.exps.size();
    for (int j = static_cast<int>(im.exps.size()) - 1; j >= 0; --j)
      v = exp_apply(g.algebra(), g.x(im.exps[j]), f.from_int(local[j]), v);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

MingenResult mingen_generators(const ChevalleyAlgebra& g) {
  MingenResult res;
  res.recipe = mingen_recipe(g.root_system());
  std::size_t nexp = 0;
  for (const auto& im : res.recipe) nexp += im.exps.size();
  res.signs.assign(nexp, 1);
  res.generators = evaluate(g, res.recipe, res.signs);
  if (generated_dimension(g.algebra(), res.generators).ok) return res;
  if (nexp > 12) return res;
  // Sign variants of the exp parameters, fewest flips first.
  std::vector<unsigned> masks;
  for (unsigned m = 1; m < (1u << nexp); ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) { return std::popcount(a) < std::popcount(b); });
  for (unsigned m : masks) {
    std::vector<int> signs(nexp);
    for (std::size_t i = 0; i < nexp; ++i) signs[i] = (m >> i) & 1u ? -1 : 1;
    auto gens = evaluate(g, res.recipe, signs);
    if (generated_dimension(g.algebra(), gens).ok) {
      res.generators = std::move(gens);
      res.signs = std::move(signs);
      res.variant_used = true;
      return res;
    }
  }
  return res;
}

GenerationResult generated_dimension(const LieAlgebra& L, const std::vector<Vec>& gens) {
  GenerationResult r;
  r.dim = L.dim();
  r.achieved = subalgebra_generated(L, gens).dim();
  r.ok = r.achieved == r.dim;
  return r;
}

Report verify_generation(const LieAlgebra& L, const std::vector<Vec>& gens) {
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (is_zero(gens[i]) || !is_extremal(L, gens[i])) throw NotExtremal(static_cast<int>(i));
  auto r = generated_dimension(L, gens);
  Report rep;
  rep.name = "generation by " + std::to_string(gens.size()) + " extremal elements";
  rep.add("generated dimension", std::to_string(r.dim), std::to_string(r.achieved), r.ok);
  return rep;
}

namespace {

Vec flatten(const Matrix& m) {
  Vec v;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

Matrix unflatten(const Field& f, int N, const Vec& v) {
  Matrix m(f, N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) m(i, j) = v[static_cast<std::size_t>(i) * N + j];
  return m;
}

}  // namespace

NaturalRepresentation natural_representation(char type, int rank, const Field& f) {
  RootSystem rs(type, rank);
  const int n = rank;
  NaturalRepresentation out;
  Matrix J;
  switch (type) {
    case 'A': out.N = n + 1; break;
    case 'B':
      out.N = 2 * n + 1;
      J = Matrix(f, out.N, out.N);
      J(0, 0) = f.one();
      for (int i = 1; i <= n; ++i) J(i, n + i) = J(n + i, i) = f.one();
      break;
    case 'C':
      out.N = 2 * n;
      J = Matrix(f, out.N, out.N);
      for (int i = 0; i < n; ++i) {
        J(i, n + i) = f.one();
        J(n + i, i) = f.from_int(-1);
      }
      break;
    case 'D':
      out.N = 2 * n;
      J = Matrix(f, out.N, out.N);
      for (int i = 0; i < n; ++i) J(i, n + i) = J(n + i, i) = f.one();
      break;
    default: throw UnsupportedType("natural representation is for classical types");
  }
  const int N = out.N, NN = N * N;
  // Linear conditions on the entries of X.
  std::vector<Vec> rows;
  if (type == 'A') {
    Vec t = zero_vec(f, NN);
    for (int i = 0; i < N; ++i) t[static_cast<std::size_t>(i) * N + i] = f.one();
    rows.push_back(t);
  } else {
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b) {
        // (X^T J + J X)_{ab} = sum_k X_{ka} J_{kb} + J_{ak} X_{kb}
        Vec r = zero_vec(f, NN);
        for (int k = 0; k < N; ++k) {
          r[static_cast<std::size_t>(k) * N + a] += J(k, b);
          r[static_cast<std::size_t>(k) * N + b] += J(a, k);
        }
        rows.push_back(r);
      }
  }
  auto ker = Matrix::from_rows(f, NN, rows).kernel();
  Subspace space = Subspace::span(f, NN, ker);
  const auto& basis = space.basis();
  const int d = space.dim();
  std::vector<Matrix> mats;
  for (const auto& v : basis) mats.push_back(unflatten(f, N, v));
  std::vector<std::string> labels;
  std::vector<StructureConstant> sc;
  for (int i = 0; i < d; ++i) labels.push_back("m" + std::to_string(i));
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      Matrix c = mats[i] * mats[j] - mats[j] * mats[i];
      auto co = space.coordinates(flatten(c));
      if (!co) throw WellDefinednessFailure("matrix algebra not closed under commutators");
      for (int k = 0; k < d; ++k)
        if (!(*co)[k].is_zero()) sc.push_back({i, j, k, (*co)[k]});
    }
  out.image = LieAlgebra(f, labels, sc, false);

  Matrix X(f, N, N);
  switch (type) {
    case 'A': X(0, N - 1) = f.one(); break;
    case 'C': X(0, n) = f.one(); break;
    case 'D':
      X(0, n + 1) = f.one();
      X(1, n) = f.from_int(-1);
      break;
    case 'B':
      X(1, n + 2) = f.one();
      X(2, n + 1) = f.from_int(-1);
      break;
  }
  out.long_root_matrix = X;
  out.m = X.rank();
  auto co = space.coordinates(flatten(X));
  out.long_root_extremal = co && is_extremal(out.image, *co).has_value();
  out.bound = (N + out.m - 1) / out.m;
  return out;
}

int dimension_lower_bound(const LieAlgebra& L) {
  const int d = L.dim();
  if (d >= 29) return 5;
  if (d >= 9) return 4;
  if (d >= 4) return 3;
  if (d >= 2) return 2;
  return d;
}

std::string MingenRow::to_json() const {
  nlohmann::json j{{"type", type},
                   {"rank", rank},
                   {"char", characteristic},
                   {"t_claimed", t_claimed},
                   {"lower_bound", lower_bound},
                   {"natural_bound", natural_bound},
                   {"dimension_bound", dimension_bound},
                   {"generation_ok", generation_ok},
                   {"all_extremal", all_extremal},
                   {"dim", dim},
                   {"achieved", achieved},
                   {"sign_variant", variant_used},
                   {"pass", pass()}};
  return j.dump();
}

MingenRow mingen_row(char type, int rank, const Field& f) { return mingen_row(ChevalleyAlgebra(type, rank, f)); }

MingenRow mingen_row(const ChevalleyAlgebra& g) {
  const char type = g.root_system().type();
  const int rank = g.root_system().rank();
  const Field& f = g.field();
  MingenRow row;
  row.type = std::string(1, type);
  row.rank = rank;
  row.characteristic = f.characteristic();
  row.t_claimed = minimal_generator_count(type, rank);
  row.dim = g.dim();
  auto res = mingen_generators(g);
  row.variant_used = res.variant_used;
  row.all_extremal = static_cast<int>(res.generators.size()) == row.t_claimed;
  for (const auto& v : res.generators)
    if (is_zero(v) || !is_extremal(g.algebra(), v)) row.all_extremal = false;
  auto gen = generated_dimension(g.algebra(), res.generators);
  row.generation_ok = gen.ok;
  row.achieved = gen.achieved;
  row.dimension_bound = dimension_lower_bound(g.algebra());
  row.lower_bound = row.dimension_bound;
  if (type == 'A' || type == 'B' || type == 'C' || type == 'D') {
    auto nat = natural_representation(type, rank, f);
    row.natural_bound = nat.bound;
    if (nat.long_root_extremal) row.lower_bound = std::max(row.lower_bound, nat.bound);
  }
  return row;
}

}  // namespace extremal
