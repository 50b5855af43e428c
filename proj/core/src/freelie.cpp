#include "extremal/freelie.hpp"

#include <algorithm>

namespace extremal::freelie {

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  for (std::size_t i = 1; i < w.size(); ++i)
    if (!(w < Word(w.begin() + static_cast<std::ptrdiff_t>(i), w.end()))) return false;
  return true;
}

std::vector<Word> lyndon_words(int r, int d) {
  // Duval's generation in lexicographic order.
  std::vector<Word> out;
  if (r < 1 || d < 1) return out;
  Word w{1};
  while (!w.empty()) {
    if (static_cast<int>(w.size()) == d) out.push_back(w);
    std::size_t m = w.size();
    while (static_cast<int>(w.size()) < d) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == r) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  return out;
}

namespace {

int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  return n > 1 ? -result : result;
}

}  // namespace

long long witt_number(int r, int d) {
  long long sum = 0;
  for (int e = 1; e <= d; ++e) {
    if (d % e) continue;
    long long pw = 1;
    for (int k = 0; k < d / e; ++k) pw *= r;
    sum += mobius(e) * pw;
  }
  return sum / d;
}

std::pair<Word, Word> standard_factorization(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    Word v(w.begin() + static_cast<std::ptrdiff_t>(i), w.end());
    if (is_lyndon(v)) return {Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i)), v};
  }
  return {w, {}};
}

MultiDegree multidegree(const Word& w, int r) {
  MultiDegree m(static_cast<std::size_t>(r), 0);
  for (int a : w) ++m[static_cast<std::size_t>(a - 1)];
  return m;
}

std::string bracket_string(const Word& w) {
  if (w.size() == 1) return "x" + std::to_string(w[0]);
  auto [u, v] = standard_factorization(w);
  return "[" + bracket_string(u) + "," + bracket_string(v) + "]";
}

std::string left_normed_string(const Word& w) {
  if (w.empty()) return "";
  std::string s = "x" + std::to_string(w.back());
  for (auto it = w.rbegin() + 1; it != w.rend(); ++it) s = "[x" + std::to_string(*it) + "," + s + "]";
  return s;
}

Scalar Element::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? field_.zero() : it->second;
}

void Element::add(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Element& Element::operator+=(const Element& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

Element operator*(const Scalar& c, const Element& e) {
  Element r(e.field_);
  if (c.is_zero()) return r;
  for (const auto& [w, x] : e.terms_) r.terms_.emplace(w, c * x);
  return r;
}

MultiDegree Element::homogeneous_degree(int r) const {
  MultiDegree m;
  for (const auto& [w, c] : terms_) {
    MultiDegree d = multidegree(w, r);
    if (m.empty())
      m = d;
    else if (m != d)
      return {};
  }
  return m;
}

std::string Element::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")*" + bracket_string(w);
  }
  return s;
}

FreeLieAlgebra::FreeLieAlgebra(int r, Field f) : r_(r), field_(f) {
  if (r < 1) throw PreconditionNotMet("free Lie algebra needs at least one generator");
}

Element FreeLieAlgebra::generator(int i) const {
  if (i < 1 || i > r_) throw PreconditionNotMet("generator index out of range");
  return basis_element({i});
}

Element FreeLieAlgebra::basis_element(const Word& w) const {
  if (!is_lyndon(w)) throw PreconditionNotMet("not a Lyndon word");
  Element e(field_);
  e.add(w, field_.one());
  return e;
}

Element FreeLieAlgebra::bracket_words(const Word& u, const Word& v) const {
  if (u == v) return Element(field_);
  if (v < u) return field_.from_int(-1) * bracket_words(v, u);
  {
    std::lock_guard lock(mu_);
    auto it = cache_.find({u, v});
    if (it != cache_.end()) return it->second;
  }
  Element result(field_);
  Word uv = u;
  uv.insert(uv.end(), v.begin(), v.end());
  if (u.size() == 1) {
    result.add(uv, field_.one());
  } else {
    auto [u1, u2] = standard_factorization(u);
    if (!(u2 < v)) {
      result.add(uv, field_.one());
    } else {
      // [[u1,u2],v] = [u1,[u2,v]] - [u2,[u1,v]]
      result = bracket(basis_element(u1), bracket_words(u2, v)) -
               bracket(basis_element(u2), bracket_words(u1, v));
    }
  }
  std::lock_guard lock(mu_);
  cache_.emplace(std::make_pair(u, v), result);
  return result;
}

Element FreeLieAlgebra::bracket(const Element& a, const Element& b) const {
  Element r(field_);
  for (const auto& [u, cu] : a.terms())
    for (const auto& [v, cv] : b.terms()) r += (cu * cv) * bracket_words(u, v);
  return r;
}

Element FreeLieAlgebra::monomial(const Word& w) const {
  if (w.empty()) throw PreconditionNotMet("empty monomial");
  Element e = generator(w.back());
  for (auto it = w.rbegin() + 1; it != w.rend(); ++it) e = bracket(generator(*it), e);
  return e;
}

const std::vector<Word>& FreeLieAlgebra::basis(int d) const {
  std::lock_guard lock(mu_);
  auto it = basis_cache_.find(d);
  if (it == basis_cache_.end()) it = basis_cache_.emplace(d, lyndon_words(r_, d)).first;
  return it->second;
}

}  // namespace extremal::freelie
