#include "extremal/nilquot.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

#include "extremal/errors.hpp"

namespace extremal::nilquot {

namespace {

MultiDegree add_letter(MultiDegree md, int k) {
  ++md[k - 1];
  return md;
}

MultiDegree sum_md(const MultiDegree& a, const MultiDegree& b) {
  MultiDegree out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

int total(const MultiDegree& md) { return std::accumulate(md.begin(), md.end(), 0); }

}  // namespace

class Builder {
 public:
  Builder(int r, const QuotientOptions& opts) {
    if (r < 1) throw InvalidRank("rank must be at least 1");
    q_.r_ = r;
    q_.field_ = opts.field;
    q_.presentation_ = opts.presentation;
    q_.max_degree_ = 0;
    cap_ = opts.max_degree;
  }

  GradedLieQuotient run() {
    const int r = q_.r_;
    for (int k = 1; k <= r; ++k) {
      BasisMonomial b;
      b.degree = 1;
      b.multidegree = MultiDegree(r, 0);
      b.multidegree[k - 1] = 1;
      b.generator = k;
      b.word = {k};
      q_.basis_.push_back(b);
      q_.components_.push_back({1, b.multidegree, 1, 0, {k - 1}});
    }
    by_degree_.push_back({});
    by_degree_.push_back({});
    for (int k = 0; k < r; ++k) by_degree_[1].push_back(k);
    grow();
    q_.max_degree_ = 1;

    for (int d = 2;; ++d) {
      if (d > cap_) {
        if (q_.presentation_ == Presentation::Free) {
          q_.truncated_ = true;
          break;
        }
        throw DegreeCapExceeded("no vanishing component up to degree " + std::to_string(cap_));
      }
      if (!step(d)) break;
      q_.max_degree_ = d;
    }
    return std::move(q_);
  }

 private:
  struct Comp {
    std::vector<std::int64_t> symbols;
    SparseEchelon ech;
    explicit Comp(const Field& f) : ech(f) {}
  };
  struct Pending {
    int u, v;
    MultiDegree md;
    SparseVec t;
  };

  std::int64_t sym(int k, int c) const { return static_cast<std::int64_t>(c) * q_.r_ + (k - 1); }

  void grow() {
    const std::size_t n = q_.basis_.size();
    for (auto& row : q_.prod_) row.resize(n);
    q_.prod_.resize(n, std::vector<SparseVec>(n));
  }

  // [u, w] with u a basis index and w sparse in basis keys.
  SparseVec bracket_basis(int u, const SparseVec& w) const {
    SparseVec out;
    for (const auto& [c, a] : w.terms) axpy(out, a, q_.prod_[u][c]);
    return out;
  }

  SparseVec symbols_of(int k, const SparseVec& w) const {
    SparseVec out;
    out.terms.reserve(w.size());
    for (const auto& [c, a] : w.terms) out.terms.emplace_back(sym(k, static_cast<int>(c)), a);
    std::sort(out.terms.begin(), out.terms.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
  }

  // [u, w] written in the symbols x_k (x) c of the current degree.
  SparseVec T(int u, const SparseVec& w) const {
    const auto& b = q_.basis_[u];
    if (b.parent < 0) return symbols_of(b.generator, w);
    SparseVec out = symbols_of(b.generator, bracket_basis(b.parent, w));
    SparseVec inner = bracket_basis(b.generator - 1, w);
    axpy(out, q_.field_.from_int(-1), T(b.parent, inner));
    return out;
  }

  bool step(int d) {
    const int r = q_.r_;
    const Field& f = q_.field_;
    std::map<MultiDegree, Comp> comps;
    for (int k = 1; k <= r; ++k)
      for (int c : by_degree_[d - 1]) {
        auto md = add_letter(q_.basis_[c].multidegree, k);
        auto it = comps.try_emplace(md, f).first;
        it->second.symbols.push_back(sym(k, c));
      }
    if (comps.empty()) return false;

    std::vector<Pending> pending;
    for (int a = 1; 2 * a <= d; ++a)
      for (int u : by_degree_[a])
        for (int v : by_degree_[d - a]) {
          if (a == d - a && v < u) continue;
          SparseVec ev = make_sparse({{v, f.one()}});
          SparseVec eu = make_sparse({{u, f.one()}});
          SparseVec tuv = T(u, ev);
          SparseVec rel = tuv;
          axpy(rel, f.one(), T(v, eu));
          auto md = sum_md(q_.basis_[u].multidegree, q_.basis_[v].multidegree);
          auto it = comps.find(md);
          if (it == comps.end()) continue;
          if (!rel.empty()) it->second.ech.insert(std::move(rel));
          pending.push_back({u, v, md, std::move(tuv)});
        }
    if (q_.presentation_ == Presentation::Sandwich && d >= 3)
      for (int k = 1; k <= r; ++k)
        for (int u : by_degree_[d - 2]) {
          SparseVec rel = symbols_of(k, q_.prod_[k - 1][u]);
          if (rel.empty()) continue;
          auto md = add_letter(add_letter(q_.basis_[u].multidegree, k), k);
          auto it = comps.find(md);
          if (it != comps.end()) it->second.ech.insert(std::move(rel));
        }

    std::unordered_map<std::int64_t, int> new_index;
    std::vector<int> fresh;
    for (auto& [md, comp] : comps) {
      std::sort(comp.symbols.begin(), comp.symbols.end());
      Component info{d, md, static_cast<int>(comp.symbols.size()), comp.ech.rank(), {}};
      for (auto s : comp.symbols) {
        if (comp.ech.is_pivot(s)) continue;
        BasisMonomial b;
        b.degree = d;
        b.multidegree = md;
        b.generator = static_cast<int>(s % r) + 1;
        b.parent = static_cast<int>(s / r);
        b.word = {b.generator};
        const auto& tail = q_.basis_[b.parent].word;
        b.word.insert(b.word.end(), tail.begin(), tail.end());
        int idx = static_cast<int>(q_.basis_.size());
        q_.basis_.push_back(std::move(b));
        new_index[s] = idx;
        fresh.push_back(idx);
        info.basis.push_back(idx);
      }
      q_.components_.push_back(std::move(info));
    }
    if (fresh.empty()) return false;
    grow();
    by_degree_.push_back(fresh);

    for (auto& p : pending) {
      const auto& comp = comps.at(p.md);
      SparseVec nf = comp.ech.reduce(std::move(p.t));
      std::vector<std::pair<std::int64_t, Scalar>> terms;
      terms.reserve(nf.size());
      for (const auto& [s, c] : nf.terms) terms.emplace_back(new_index.at(s), c);
      SparseVec val = make_sparse(std::move(terms));
      if (p.u == p.v) {
        if (!val.empty()) throw AntisymmetryViolation(p.u, p.v);
        continue;
      }
      q_.prod_[p.v][p.u] = scaled(val, f.from_int(-1));
      q_.prod_[p.u][p.v] = std::move(val);
    }
    return true;
  }

  GradedLieQuotient q_;
  int cap_ = 16;
  std::vector<std::vector<int>> by_degree_;
};

std::vector<int> GradedLieQuotient::dims_by_degree() const {
  std::vector<int> out(max_degree_, 0);
  for (const auto& b : basis_) ++out[b.degree - 1];
  return out;
}

std::map<MultiDegree, int> GradedLieQuotient::multidegree_dims() const {
  std::map<MultiDegree, int> out;
  for (const auto& b : basis_) ++out[b.multidegree];
  return out;
}

Vec GradedLieQuotient::bracket(const Vec& a, const Vec& b) const {
  if (static_cast<int>(a.size()) != dim() || static_cast<int>(b.size()) != dim())
    throw DimensionMismatch("bracket operands have the wrong length");
  Vec out = zero_vec(field_, dim());
  for (int i = 0; i < dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < dim(); ++j) {
      if (b[j].is_zero()) continue;
      Scalar c = a[i] * b[j];
      for (const auto& [k, v] : prod_[i][j].terms) out[k].add_mul(c, v);
    }
  }
  return out;
}

Vec GradedLieQuotient::generator(int i) const {
  if (i < 1 || i > r_) throw PreconditionNotMet("generator index out of range");
  return unit_vec(field_, dim(), i - 1);
}

Vec GradedLieQuotient::monomial(const Word& w) const {
  if (w.empty()) throw PreconditionNotMet("empty monomial");
  Vec v = generator(w.back());
  for (int j = static_cast<int>(w.size()) - 2; j >= 0; --j) v = bracket(generator(w[j]), v);
  return v;
}

std::string GradedLieQuotient::label(int i) const { return freelie::left_normed_string(basis_.at(i).word); }

LieAlgebra GradedLieQuotient::to_lie_algebra() const {
  std::vector<std::string> labels;
  for (int i = 0; i < dim(); ++i) labels.push_back(label(i));
  std::vector<StructureConstant> sc;
  for (int i = 0; i < dim(); ++i)
    for (int j = i + 1; j < dim(); ++j)
      for (const auto& [k, v] : prod_[i][j].terms) sc.push_back({i, j, static_cast<int>(k), v});
  return LieAlgebra(field_, std::move(labels), sc, false);
}

namespace {

SparseVec sparse_bracket(const std::vector<std::vector<SparseVec>>& prod, const SparseVec& a, const SparseVec& b) {
  SparseVec out;
  for (const auto& [i, x] : a.terms)
    for (const auto& [j, y] : b.terms) axpy(out, x * y, prod[i][j]);
  return out;
}

}  // namespace

Report GradedLieQuotient::certify() const {
  Report rep;
  rep.name = "graded quotient r=" + std::to_string(r_);
  const int n = dim();
  const Scalar one = field_.one();
  const Scalar minus = field_.from_int(-1);
  bool anti = true;
  for (int u = 0; u < n && anti; ++u) {
    if (!prod_[u][u].empty()) anti = false;
    for (int v = u + 1; v < n && anti; ++v)
      if (!(prod_[v][u] == scaled(prod_[u][v], minus))) anti = false;
  }
  rep.expect_true("antisymmetry", anti);

  long long failures = 0, checked = 0;
  for (int i = 0; i < r_; ++i) {
    SparseVec xi = make_sparse({{i, one}});
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        if (basis_[u].degree + basis_[v].degree + 1 > max_degree_) continue;
        ++checked;
        SparseVec lhs = sparse_bracket(prod_, xi, prod_[u][v]);
        SparseVec a = sparse_bracket(prod_, prod_[i][u], make_sparse({{v, one}}));
        SparseVec b = sparse_bracket(prod_, make_sparse({{u, one}}), prod_[i][v]);
        axpy(lhs, minus, a);
        axpy(lhs, minus, b);
        if (!lhs.empty()) ++failures;
      }
  }
  rep.add("jacobi with a generator", "0 failures", std::to_string(failures) + " failures of " + std::to_string(checked),
          failures == 0);

  if (presentation_ == Presentation::Sandwich) {
    long long bad = 0;
    for (int i = 0; i < r_; ++i)
      for (int u = 0; u < n; ++u)
        if (!sparse_bracket(prod_, make_sparse({{i, one}}), prod_[i][u]).empty()) ++bad;
    rep.add("sandwich relations", "0 failures", std::to_string(bad) + " failures", bad == 0);
  }
  return rep;
}

std::string GradedLieQuotient::to_json() const {
  nlohmann::json j;
  j["r"] = r_;
  j["field"] = field_.name();
  j["dims_by_degree"] = dims_by_degree();
  j["total"] = dim();
  j["truncated"] = truncated_;
  auto arr = nlohmann::json::array();
  for (const auto& [md, c] : multidegree_dims()) arr.push_back({{"degree", md}, {"dim", c}});
  j["multidegree_dims"] = arr;
  return j.dump(2);
}

GradedLieQuotient graded_quotient(int r, const QuotientOptions& opts) { return Builder(r, opts).run(); }

GradedLieQuotient sandwich_algebra(int r, const Field& f) {
  QuotientOptions o;
  o.field = f;
  return graded_quotient(r, o);
}

std::vector<int> sandwich_dims_via_free_algebra(int r, int cap) {
  freelie::FreeLieAlgebra F(r);
  const Field f = F.field();
  std::vector<int> dims;
  std::vector<freelie::Element> J;  // spanning rows of the relation ideal in the previous degree
  for (int d = 1;; ++d) {
    if (d > cap) throw DegreeCapExceeded("no vanishing component up to degree " + std::to_string(cap));
    const auto& words = F.basis(d);
    std::map<Word, std::int64_t> index;
    for (std::size_t i = 0; i < words.size(); ++i) index[words[i]] = static_cast<std::int64_t>(i);
    auto to_sparse = [&](const freelie::Element& e) {
      std::vector<std::pair<std::int64_t, Scalar>> t;
      for (const auto& [w, c] : e.terms()) t.emplace_back(index.at(w), c);
      return make_sparse(std::move(t));
    };
    SparseEchelon ech(f);
    std::vector<freelie::Element> next;
    auto offer = [&](const freelie::Element& e) {
      if (e.is_zero()) return;
      if (ech.insert(to_sparse(e))) next.push_back(e);
    };
    for (int i = 1; i <= r; ++i) {
      auto xi = F.generator(i);
      for (const auto& j : J) offer(F.bracket(xi, j));
      if (d >= 3)
        for (const auto& u : F.basis(d - 2)) offer(F.bracket(xi, F.bracket(xi, F.basis_element(u))));
    }
    int dim = static_cast<int>(words.size()) - ech.rank();
    if (dim == 0) break;
    dims.push_back(dim);
    J = std::move(next);
  }
  return dims;
}

bool AssocDims::palindromic() const {
  if (dims_by_length.size() < 2) return true;
  std::vector<int> tail(dims_by_length.begin() + 1, dims_by_length.end());
  return std::equal(tail.begin(), tail.end(), tail.rbegin());
}

AssocDims assoc_dims_from(const GradedLieQuotient& l_next) {
  AssocDims out;
  out.r = l_next.rank() - 1;
  for (const auto& [md, c] : l_next.multidegree_dims()) {
    if (md.back() != 1) continue;
    int len = total(md) - 1;
    if (static_cast<int>(out.dims_by_length.size()) <= len) out.dims_by_length.resize(len + 1, 0);
    out.dims_by_length[len] += c;
    out.total += c;
  }
  return out;
}

AssocDims assoc_dims_via_embedding(int r, const Field& f) { return assoc_dims_from(sandwich_algebra(r + 1, f)); }

namespace {

using Poly = std::map<Word, Scalar>;

void poly_add(Poly& a, const Poly& b, const Scalar& c) {
  for (const auto& [w, x] : b) {
    auto& slot = a.try_emplace(w, c.field().zero()).first->second;
    slot.add_mul(c, x);
    if (slot.is_zero()) a.erase(w);
  }
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [u, x] : a)
    for (const auto& [v, y] : b) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      Poly t{{w, x * y}};
      poly_add(out, t, x.field().one());
    }
  return out;
}

// Associative expansion of the standard bracketing of a Lyndon word.
Poly expand_lyndon(const Word& w, const Field& f) {
  if (w.size() == 1) return {{w, f.one()}};
  auto [u, v] = freelie::standard_factorization(w);
  Poly pu = expand_lyndon(u, f), pv = expand_lyndon(v, f);
  Poly out = poly_mul(pu, pv);
  poly_add(out, poly_mul(pv, pu), f.from_int(-1));
  return out;
}

std::int64_t word_index(const Word& w, int r) {
  std::int64_t k = 0;
  for (int c : w) k = k * r + (c - 1);
  return k;
}

void all_words(int r, int len, std::vector<Word>& out) {
  out.clear();
  Word w(len, 1);
  if (len == 0) {
    out.push_back(w);
    return;
  }
  while (true) {
    out.push_back(w);
    int i = len - 1;
    while (i >= 0 && w[i] == r) w[i--] = 1;
    if (i < 0) break;
    ++w[i];
  }
}

}  // namespace

AssocDims assoc_dims_direct(int r) {
  if (r < 1 || r > 3) throw PreconditionNotMet("direct associative computation supports r <= 3");
  const Field f = Field::rationals();
  // Generators of the ideal: y_i y_i and y_i P y_i for P a Lie basis element.
  std::vector<Poly> rels;
  AssocDims out;
  out.r = r;
  out.dims_by_length.push_back(1);
  out.total = 1;
  std::vector<Word> left, right;
  for (int len = 1; len <= 16; ++len) {
    for (int i = 1; i <= r; ++i) {
      if (len == 2) rels.push_back({{{i, i}, f.one()}});
      if (len >= 3)
        for (const auto& u : freelie::lyndon_words(r, len - 2)) {
          Poly p = expand_lyndon(u, f);
          Poly q;
          for (const auto& [w, c] : p) {
            Word x{i};
            x.insert(x.end(), w.begin(), w.end());
            x.push_back(i);
            q.emplace(x, c);
          }
          rels.push_back(std::move(q));
        }
    }
    SparseEchelon ech(f);
    for (const auto& rel : rels) {
      int rl = static_cast<int>(rel.begin()->first.size());
      for (int a = 0; a + rl <= len; ++a) {
        all_words(r, a, left);
        all_words(r, len - rl - a, right);
        for (const auto& lw : left)
          for (const auto& rw : right) {
            std::vector<std::pair<std::int64_t, Scalar>> t;
            for (const auto& [w, c] : rel) {
              Word x = lw;
              x.insert(x.end(), w.begin(), w.end());
              x.insert(x.end(), rw.begin(), rw.end());
              t.emplace_back(word_index(x, r), c);
            }
            ech.insert(make_sparse(std::move(t)));
          }
      }
    }
    std::int64_t words = 1;
    for (int k = 0; k < len; ++k) words *= r;
    int dim = static_cast<int>(words - ech.rank());
    if (dim == 0) return out;
    out.dims_by_length.push_back(dim);
    out.total += dim;
  }
  throw DegreeCapExceeded("associative quotient did not terminate");
}

Report check_subalgebra_embedding(const GradedLieQuotient& lr, const GradedLieQuotient& lprev) {
  Report rep;
  rep.name = "embedding of L_" + std::to_string(lprev.rank()) + " in L_" + std::to_string(lr.rank());
  std::map<MultiDegree, int> restricted;
  for (const auto& [md, c] : lr.multidegree_dims()) {
    if (md.back() != 0) continue;
    restricted[MultiDegree(md.begin(), md.end() - 1)] = c;
  }
  auto prev = lprev.multidegree_dims();
  rep.expect_eq("component count", static_cast<int>(prev.size()), static_cast<int>(restricted.size()));
  int mism = 0, sum = 0;
  for (const auto& [md, c] : prev) {
    auto it = restricted.find(md);
    if (it == restricted.end() || it->second != c) ++mism;
  }
  for (const auto& [md, c] : restricted) sum += c;
  rep.expect_eq("mismatched components", 0, mism);
  rep.expect_eq("dimension", lprev.dim(), sum);
  return rep;
}

Report check_subalgebra_embedding(int r) {
  if (r < 2) throw InvalidRank("embedding needs r >= 2");
  return check_subalgebra_embedding(sandwich_algebra(r), sandwich_algebra(r - 1));
}

std::vector<Word> four_generator_spanning_monomials() {
  return {{1}, {2}, {3}, {4},
          {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4},
          {1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 1, 3}, {2, 1, 4}, {2, 3, 4}, {3, 1, 4}, {3, 2, 4},
          {1, 2, 3, 4}, {1, 3, 2, 4}, {2, 1, 3, 4}, {2, 3, 1, 4}, {3, 1, 2, 4}, {3, 2, 1, 4},
          {1, 2, 3, 1, 4}, {2, 1, 3, 2, 4}, {3, 1, 2, 3, 4}, {4, 1, 2, 3, 4}};
}

Report spanning_set_check_4gen(const GradedLieQuotient& l4) {
  if (l4.rank() != 4) throw InvalidRank("expected four generators");
  Report rep;
  rep.name = "four-generator spanning set";
  const Field& f = l4.field();
  const auto mons = four_generator_spanning_monomials();
  std::vector<Vec> vals;
  for (const auto& w : mons) vals.push_back(l4.monomial(w));
  Subspace span = Subspace::span(f, l4.dim(), vals);
  rep.expect_eq("monomial count", 28, static_cast<int>(mons.size()));
  rep.expect_eq("rank of monomials", 28, span.dim());
  rep.expect_eq("dim L_4", 28, l4.dim());

  // Each identity is a list of (sign, left word, right word); an empty right word means the monomial itself.
  struct Term {
    int sign;
    Word a, b;
  };
  const std::vector<std::vector<Term>> ids = {
      {{1, {1, 2, 3, 4}, {}}, {-1, {1, 3, 2, 4}, {}}, {1, {1, 4, 2, 3}, {}}},
      {{1, {2, 1, 3, 4}, {}}, {-1, {2, 3, 1, 4}, {}}, {1, {2, 4, 1, 3}, {}}},
      {{1, {3, 1, 2, 4}, {}}, {-1, {3, 2, 1, 4}, {}}, {1, {3, 4, 1, 2}, {}}},
      {{1, {4, 1, 2, 3}, {}}, {-1, {1, 4, 2, 3}, {}}, {1, {2, 3}, {4, 1}}},
      {{1, {4, 2, 1, 3}, {}}, {-1, {2, 4, 1, 3}, {}}, {1, {1, 3}, {4, 2}}},
      {{1, {4, 3, 1, 2}, {}}, {-1, {3, 4, 1, 2}, {}}, {1, {1, 2}, {4, 3}}},
      {{1, {1, 2, 3, 4}, {}}, {-1, {2, 1, 3, 4}, {}}, {1, {3, 4}, {1, 2}}},
      {{1, {1, 3, 2, 4}, {}}, {-1, {3, 1, 2, 4}, {}}, {1, {2, 4}, {1, 3}}},
      {{1, {2, 3, 1, 4}, {}}, {-1, {3, 2, 1, 4}, {}}, {1, {1, 4}, {2, 3}}},
  };
  for (std::size_t k = 0; k < ids.size(); ++k) {
    Vec acc = zero_vec(f, l4.dim());
    for (const auto& t : ids[k]) {
      Vec v = t.b.empty() ? l4.monomial(t.a) : l4.bracket(l4.monomial(t.a), l4.monomial(t.b));
      acc = acc + f.from_int(t.sign) * v;
    }
    rep.expect_true("identity (" + std::to_string(k + 1) + ") vanishes", is_zero(acc));
  }

  int nonzero6 = 0;
  std::vector<Word> words;
  all_words(4, 6, words);
  for (const auto& w : words)
    if (!is_zero(l4.monomial(w))) ++nonzero6;
  rep.expect_eq("nonzero length-6 monomials", 0, nonzero6);

  std::vector<int> single(5, 0);
  for (const auto& w : mons)
    if (std::count(w.begin(), w.end(), 4) == 1) ++single[w.size() - 1];
  auto r3 = assoc_dims_from(l4);
  rep.expect_eq("single-u monomials by length", r3.dims_by_length, single);
  return rep;
}

Report spanning_set_check_4gen() { return spanning_set_check_4gen(sandwich_algebra(4)); }

}  // namespace extremal::nilquot
