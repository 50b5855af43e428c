#include "extremal/liealg.hpp"

#include <algorithm>
#include <deque>
#include <json.hpp>

namespace extremal {

namespace {

// Dense accumulator that remembers touched coordinates.
struct Accumulator {
  explicit Accumulator(const Field& f, int n) : v(zero_vec(f, n)), mark(static_cast<std::size_t>(n), 0) {}
  void add(int k, const Scalar& c) {
    if (!mark[k]) {
      mark[k] = 1;
      touched.push_back(k);
    }
    v[k] += c;
  }
  void add_mul(int k, const Scalar& a, const Scalar& b) {
    if (!mark[k]) {
      mark[k] = 1;
      touched.push_back(k);
    }
    v[k].add_mul(a, b);
  }
  bool all_zero() const {
    for (int k : touched)
      if (!v[k].is_zero()) return false;
    return true;
  }
  void clear(const Field& f) {
    for (int k : touched) {
      v[k] = f.zero();
      mark[k] = 0;
    }
    touched.clear();
  }
  Vec v;
  std::vector<char> mark;
  std::vector<int> touched;
};

std::vector<int> support(const Vec& v) {
  std::vector<int> s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.push_back(static_cast<int>(i));
  return s;
}

}  // namespace

LieAlgebra::LieAlgebra(Field f, std::vector<std::string> labels, const std::vector<StructureConstant>& constants,
                       bool validate)
    : field_(f), n_(static_cast<int>(labels.size())), labels_(std::move(labels)) {
  const auto n = static_cast<std::size_t>(n_);
  std::vector<std::vector<std::pair<std::int64_t, Scalar>>> raw(n * n);
  std::vector<char> given(n * n, 0);
  for (const auto& c : constants) {
    if (c.i < 0 || c.j < 0 || c.k < 0 || c.i >= n_ || c.j >= n_ || c.k >= n_)
      throw DimensionMismatch("structure constant index out of range");
    if (c.value.characteristic() != f.characteristic()) throw FieldMismatch("structure constant field");
    raw[c.i * n + c.j].emplace_back(c.k, c.value);
    given[c.i * n + c.j] = 1;
  }
  table_.resize(n * n);
  for (std::size_t a = 0; a < n * n; ++a) table_[a] = make_sparse(std::move(raw[a]));
  for (int i = 0; i < n_; ++i)
    if (!table_[i * n + i].empty()) throw AntisymmetryViolation(i, i);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      auto& ij = table_[i * n + j];
      auto& ji = table_[j * n + i];
      bool gi = given[i * n + j], gj = given[j * n + i];
      if (gi && gj) {
        if (ij != scaled(ji, f.from_int(-1))) throw AntisymmetryViolation(i, j);
      } else if (gi) {
        ji = scaled(ij, f.from_int(-1));
      } else if (gj) {
        ij = scaled(ji, f.from_int(-1));
      }
    }
  if (validate) this->validate();
}

int LieAlgebra::index_of(std::string_view label) const {
  for (int i = 0; i < n_; ++i)
    if (labels_[i] == label) return i;
  return -1;
}

Vec LieAlgebra::bracket(const Vec& a, const Vec& b) const {
  if (static_cast<int>(a.size()) != n_ || static_cast<int>(b.size()) != n_)
    throw DimensionMismatch("bracket operand size");
  Vec r = zero();
  std::vector<int> sa = support(a), sb = support(b);
  Scalar t;
  for (int i : sa)
    for (int j : sb) {
      const SparseVec& p = product(i, j);
      if (p.empty()) continue;
      t = a[i] * b[j];
      for (const auto& [k, c] : p.terms) r[k].add_mul(t, c);
    }
  return r;
}

Matrix LieAlgebra::ad(const Vec& x) const {
  Matrix m(field_, n_, n_);
  std::vector<int> sx = support(x);
  for (int j = 0; j < n_; ++j)
    for (int i : sx)
      for (const auto& [k, c] : product(i, j).terms) m(static_cast<int>(k), j).add_mul(x[i], c);
  return m;
}

std::vector<StructureConstant> LieAlgebra::constants() const {
  std::vector<StructureConstant> out;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      for (const auto& [k, c] : product(i, j).terms) out.push_back({i, j, static_cast<int>(k), c});
  return out;
}

void LieAlgebra::validate() const {
  for (int i = 0; i < n_; ++i) {
    if (!product(i, i).empty()) throw AntisymmetryViolation(i, i);
    for (int j = i + 1; j < n_; ++j)
      if (product(i, j) != scaled(product(j, i), field_.from_int(-1))) throw AntisymmetryViolation(i, j);
  }
  Accumulator acc(field_, n_);
  auto add_term = [&](int a, const SparseVec& v) {
    for (const auto& [l, c] : v.terms)
      for (const auto& [k, d] : product(a, static_cast<int>(l)).terms) acc.add_mul(static_cast<int>(k), c, d);
  };
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      for (int k = j + 1; k < n_; ++k) {
        add_term(i, product(j, k));
        add_term(j, product(k, i));
        add_term(k, product(i, j));
        bool ok = acc.all_zero();
        acc.clear(field_);
        if (!ok) throw JacobiViolation(i, j, k);
      }
}

LieAlgebra LieAlgebra::quotient(const Subspace& ideal, std::vector<int>* kept_out) const {
  std::vector<int> kept = ideal.free_indices();
  std::vector<int> pos(static_cast<std::size_t>(n_), -1);
  for (std::size_t m = 0; m < kept.size(); ++m) pos[kept[m]] = static_cast<int>(m);
  std::vector<std::string> labels;
  for (int k : kept) labels.push_back(labels_[k]);
  std::vector<StructureConstant> cs;
  for (std::size_t a = 0; a < kept.size(); ++a)
    for (std::size_t b = a + 1; b < kept.size(); ++b) {
      const SparseVec& p = product(kept[a], kept[b]);
      if (p.empty()) continue;
      Vec v = zero();
      for (const auto& [k, c] : p.terms) v[k] = c;
      v = ideal.reduce(std::move(v));
      for (int k = 0; k < n_; ++k)
        if (!v[k].is_zero()) cs.push_back({static_cast<int>(a), static_cast<int>(b), pos[k], v[k]});
    }
  LieAlgebra q(field_, std::move(labels), cs, false);
  if (!weights_.empty()) {
    std::vector<std::string> w;
    for (int k : kept) w.push_back(weights_[k]);
    q.weights_ = std::move(w);
  }
  if (kept_out) *kept_out = kept;
  return q;
}

LieAlgebra LieAlgebra::restrict_to(const Subspace& s) const {
  std::vector<std::string> labels;
  for (int a = 0; a < s.dim(); ++a) labels.push_back("s" + std::to_string(a + 1));
  std::vector<StructureConstant> cs;
  for (int a = 0; a < s.dim(); ++a)
    for (int b = a + 1; b < s.dim(); ++b) {
      auto c = s.coordinates(bracket(s.basis()[a], s.basis()[b]));
      if (!c) throw PreconditionNotMet("subspace is not a subalgebra");
      for (int k = 0; k < s.dim(); ++k)
        if (!(*c)[k].is_zero()) cs.push_back({a, b, k, (*c)[k]});
    }
  return LieAlgebra(field_, std::move(labels), cs, false);
}

std::string LieAlgebra::to_json() const {
  nlohmann::ordered_json j;
  j["field"] = field_.name();
  j["labels"] = labels_;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : constants()) arr.push_back({c.i, c.j, c.k, c.value.to_string()});
  j["constants"] = arr;
  if (!weights_.empty()) j["weights"] = weights_;
  return j.dump();
}

LieAlgebra LieAlgebra::from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
  if (!j.contains("field") || !j.contains("labels") || !j.contains("constants"))
    throw ParseError("algebra JSON needs field, labels and constants");
  std::string fname = j["field"].get<std::string>();
  Field f;
  if (fname == "Q") {
    f = Field::rationals();
  } else if (fname.rfind("GF(", 0) == 0 && fname.back() == ')') {
    f = Field::prime(std::stoll(fname.substr(3, fname.size() - 4)));
  } else {
    throw ParseError("unknown field '" + fname + "'");
  }
  std::vector<StructureConstant> cs;
  for (const auto& e : j["constants"])
    cs.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>(), f.parse(e[3].get<std::string>())});
  LieAlgebra L(f, j["labels"].get<std::vector<std::string>>(), cs);
  if (j.contains("weights")) L.set_weights(j["weights"].get<std::vector<std::string>>());
  return L;
}

LieAlgebra algebra_from_constants(const Field& f, std::vector<std::string> labels,
                                  const std::vector<StructureConstant>& constants) {
  return LieAlgebra(f, std::move(labels), constants, true);
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  if (a.field() != b.field()) throw FieldMismatch("direct sum of algebras over different fields");
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back(l + "_1");
  for (const auto& l : b.labels()) labels.push_back(l + "_2");
  std::vector<StructureConstant> cs = a.constants();
  for (auto c : b.constants()) cs.push_back({c.i + a.dim(), c.j + a.dim(), c.k + a.dim(), c.value});
  return LieAlgebra(a.field(), std::move(labels), cs);
}

bool is_homomorphism(const LieAlgebra& from, const LieAlgebra& to, const Matrix& phi) {
  if (phi.rows() != to.dim() || phi.cols() != from.dim()) return false;
  std::vector<Vec> img;
  for (int j = 0; j < from.dim(); ++j) img.push_back(phi.col(j));
  for (int i = 0; i < from.dim(); ++i)
    for (int j = i + 1; j < from.dim(); ++j) {
      Vec lhs = to.zero();
      for (const auto& [k, c] : from.product(i, j).terms) axpy(lhs, c, img[k]);
      if (lhs != to.bracket(img[i], img[j])) return false;
    }
  return true;
}

bool is_isomorphism(const LieAlgebra& from, const LieAlgebra& to, const Matrix& phi) {
  return from.dim() == to.dim() && phi.rank() == from.dim() && is_homomorphism(from, to, phi);
}

namespace {

// Columns of ad_x applied twice, skipping zero entries.
std::vector<Vec> ad_squared_columns(const LieAlgebra& L, const Vec& x) {
  std::vector<Vec> cols;
  cols.reserve(L.dim());
  for (int j = 0; j < L.dim(); ++j) cols.push_back(L.bracket(x, L.basis_vector(j)));
  std::vector<Vec> out;
  out.reserve(L.dim());
  for (int j = 0; j < L.dim(); ++j) {
    Vec w = L.zero();
    for (int l = 0; l < L.dim(); ++l)
      if (!cols[j][l].is_zero()) axpy(w, cols[j][l], cols[l]);
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace

std::optional<Vec> is_extremal(const LieAlgebra& L, const Vec& x) {
  if (is_zero(x)) throw ZeroElement("extremality of the zero element");
  int p = leading_index(x);
  Scalar inv = x[p].inverse();
  Vec fx = L.zero();
  std::vector<Vec> sq = ad_squared_columns(L, x);
  for (int j = 0; j < L.dim(); ++j) {
    const Vec& w = sq[j];
    Scalar c = w[p] * inv;
    for (int k = 0; k < L.dim(); ++k)
      if (w[k] != c * x[k]) return std::nullopt;
    fx[j] = c;
  }
  return fx;
}

bool is_sandwich(const LieAlgebra& L, const Vec& x) {
  if (is_zero(x)) return false;
  for (const auto& w : ad_squared_columns(L, x))
    if (!is_zero(w)) return false;
  return true;
}

bool is_symmetric(const Matrix& g) { return g == g.transpose(); }

bool is_associative(const LieAlgebra& L, const Matrix& g) {
  // f([x,y],z) = f(x,[y,z]) for all x,z  <=>  ad_y^T G + G ad_y = 0.
  const int n = L.dim();
  Matrix s(L.field(), n, n);
  for (int m = 0; m < n; ++m) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s(i, j) = L.field().zero();
    for (int j = 0; j < n; ++j)
      for (const auto& [l, c] : L.product(m, j).terms)
        for (int i = 0; i < n; ++i) {
          if (!g(i, static_cast<int>(l)).is_zero()) s(i, j).add_mul(c, g(i, static_cast<int>(l)));
          if (!g(static_cast<int>(l), i).is_zero()) s(j, i).add_mul(c, g(static_cast<int>(l), i));
        }
    if (!s.is_zero()) return false;
  }
  return true;
}

BilinearForm extremal_form(const LieAlgebra& L, const std::vector<Vec>& spanning) {
  const int n = L.dim();
  std::vector<Vec> functionals;
  for (std::size_t i = 0; i < spanning.size(); ++i) {
    if (is_zero(spanning[i])) throw NotExtremal(static_cast<int>(i));
    auto fx = is_extremal(L, spanning[i]);
    if (!fx) throw NotExtremal(static_cast<int>(i));
    functionals.push_back(std::move(*fx));
  }
  Subspace s(L.field(), n);
  std::vector<int> chosen;
  for (std::size_t i = 0; i < spanning.size() && s.dim() < n; ++i)
    if (s.insert(spanning[i])) chosen.push_back(static_cast<int>(i));
  if (s.dim() < n) throw NotSpanning("extremal set spans " + std::to_string(s.dim()) + " of " + std::to_string(n));
  Matrix P(L.field(), n, n), F(L.field(), n, n);
  for (int c = 0; c < n; ++c) {
    P.set_col(c, spanning[chosen[c]]);
    F.set_col(c, functionals[chosen[c]]);
  }
  Matrix G = F * *P.inverse();
  for (std::size_t i = 0; i < spanning.size(); ++i)
    if (G * spanning[i] != functionals[i])
      throw WellDefinednessFailure("extremal form disagrees with f_x for element " + std::to_string(i));
  if (!is_symmetric(G)) throw WellDefinednessFailure("extremal form is not symmetric");
  if (!is_associative(L, G)) throw WellDefinednessFailure("extremal form is not associative");
  return {BilinearForm::Kind::ExtremalF, std::move(G)};
}

BilinearForm killing_form(const LieAlgebra& L) {
  const int n = L.dim();
  Matrix K(L.field(), n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      // tr(ad_i ad_j) = sum_{l,k} c_{il}^k c_{jk}^l
      Scalar t = L.field().zero();
      for (int l = 0; l < n; ++l)
        for (const auto& [k, c] : L.product(i, l).terms)
          if (const Scalar* d = L.product(j, static_cast<int>(k)).find(l)) t.add_mul(c, *d);
      K(i, j) = t;
      K(j, i) = t;
    }
  return {BilinearForm::Kind::Killing, std::move(K)};
}

Subspace radical_of_form(const BilinearForm& B) {
  return Subspace::span(B.gram.field(), B.gram.rows(), B.gram.kernel());
}

Subspace bracket_subspaces(const LieAlgebra& L, const Subspace& a, const Subspace& b) {
  Subspace s(L.field(), L.dim());
  for (const auto& u : a.basis())
    for (const auto& v : b.basis()) {
      s.insert(L.bracket(u, v));
      if (s.dim() == L.dim()) return s;
    }
  return s;
}

namespace {

// Common kernel of the maps v -> [m, v] for m in ms.
Subspace common_kernel(const LieAlgebra& L, const std::vector<Vec>& ms) {
  const int n = L.dim();
  Subspace rows(L.field(), n);
  for (const auto& m : ms) {
    Matrix adm = L.ad(m);
    for (int k = 0; k < n && rows.dim() < n; ++k) {
      Vec r = adm.row(k);
      if (!is_zero(r)) rows.insert(std::move(r));
    }
    if (rows.dim() == n) break;
  }
  return rows.annihilator();
}

}  // namespace

Subspace center(const LieAlgebra& L) {
  std::vector<Vec> ms;
  for (int i = 0; i < L.dim(); ++i) ms.push_back(L.basis_vector(i));
  return common_kernel(L, ms);
}

Subspace centralizer(const LieAlgebra& L, const Subspace& s) { return common_kernel(L, s.basis()); }

namespace {

Subspace closure(const LieAlgebra& L, const std::vector<Vec>& seeds, const std::vector<Vec>& actors) {
  Subspace w(L.field(), L.dim());
  std::deque<Vec> queue;
  for (const auto& g : seeds) {
    Vec r = w.reduce(g);
    if (!is_zero(r)) {
      w.insert(r);
      queue.push_back(std::move(r));
    }
  }
  while (!queue.empty() && w.dim() < L.dim()) {
    Vec v = std::move(queue.front());
    queue.pop_front();
    for (const auto& a : actors) {
      Vec r = w.reduce(L.bracket(a, v));
      if (is_zero(r)) continue;
      w.insert(r);
      queue.push_back(std::move(r));
      if (w.dim() == L.dim()) break;
    }
  }
  return w;
}

}  // namespace

Subspace subalgebra_generated(const LieAlgebra& L, const std::vector<Vec>& gens) { return closure(L, gens, gens); }

Subspace ideal_generated(const LieAlgebra& L, const std::vector<Vec>& gens) {
  std::vector<Vec> basis;
  for (int i = 0; i < L.dim(); ++i) basis.push_back(L.basis_vector(i));
  return closure(L, gens, basis);
}

bool is_ideal(const LieAlgebra& L, const Subspace& s) {
  for (const auto& v : s.basis())
    for (int i = 0; i < L.dim(); ++i)
      if (!s.contains(L.bracket(L.basis_vector(i), v))) return false;
  return true;
}

bool is_subalgebra(const LieAlgebra& L, const Subspace& s) {
  for (std::size_t a = 0; a < s.basis().size(); ++a)
    for (std::size_t b = a + 1; b < s.basis().size(); ++b)
      if (!s.contains(L.bracket(s.basis()[a], s.basis()[b]))) return false;
  return true;
}

std::vector<Subspace> derived_series(const LieAlgebra& L, const Subspace& s) {
  std::vector<Subspace> out{s};
  while (true) {
    Subspace next = bracket_subspaces(L, out.back(), out.back());
    if (next == out.back()) break;
    out.push_back(std::move(next));
    if (out.back().dim() == 0) break;
  }
  return out;
}

std::vector<Subspace> lower_central_series(const LieAlgebra& L) {
  Subspace whole = Subspace::whole(L.field(), L.dim());
  std::vector<Subspace> out{whole};
  while (true) {
    Subspace next = bracket_subspaces(L, whole, out.back());
    if (next == out.back()) break;
    out.push_back(std::move(next));
    if (out.back().dim() == 0) break;
  }
  return out;
}

bool is_solvable(const LieAlgebra& L, const Subspace& s) { return derived_series(L, s).back().dim() == 0; }

bool is_nilpotent(const LieAlgebra& L, const Subspace& s) {
  Subspace c = s;
  while (c.dim() > 0) {
    Subspace next = bracket_subspaces(L, s, c);
    if (next == c) return false;
    c = std::move(next);
  }
  return true;
}

}  // namespace extremal
