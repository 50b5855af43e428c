#include "extremal/sparse.hpp"

#include <algorithm>

namespace extremal {

const Scalar* SparseVec::find(std::int64_t key) const {
  auto it = std::lower_bound(terms.begin(), terms.end(), key,
                             [](const auto& t, std::int64_t k) { return t.first < k; });
  if (it == terms.end() || it->first != key) return nullptr;
  return &it->second;
}

SparseVec make_sparse(std::vector<std::pair<std::int64_t, Scalar>> terms) {
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec v;
  for (auto& t : terms) {
    if (!v.terms.empty() && v.terms.back().first == t.first)
      v.terms.back().second += t.second;
    else
      v.terms.push_back(std::move(t));
  }
  std::erase_if(v.terms, [](const auto& t) { return t.second.is_zero(); });
  return v;
}

void axpy(SparseVec& a, const Scalar& c, const SparseVec& b) {
  if (c.is_zero() || b.empty()) return;
  std::vector<std::pair<std::int64_t, Scalar>> out;
  out.reserve(a.terms.size() + b.terms.size());
  auto i = a.terms.begin();
  auto j = b.terms.begin();
  while (i != a.terms.end() || j != b.terms.end()) {
    if (j == b.terms.end() || (i != a.terms.end() && i->first < j->first)) {
      out.push_back(std::move(*i++));
    } else if (i == a.terms.end() || j->first < i->first) {
      out.emplace_back(j->first, c * j->second);
      ++j;
    } else {
      Scalar s = std::move(i->second);
      s.add_mul(c, j->second);
      if (!s.is_zero()) out.emplace_back(i->first, std::move(s));
      ++i;
      ++j;
    }
  }
  a.terms = std::move(out);
}

SparseVec scaled(const SparseVec& v, const Scalar& c) {
  SparseVec r;
  if (c.is_zero()) return r;
  r.terms.reserve(v.terms.size());
  for (const auto& [k, x] : v.terms) r.terms.emplace_back(k, x * c);
  return r;
}

void SparseEchelon::normalize(SparseVec& v) const {
  if (v.empty()) return;
  if (field_.is_finite()) return;
  mpz_class l = 1;
  for (const auto& t : v.terms) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.second.rational().get_den_mpz_t());
  mpz_class g = 0;
  for (const auto& t : v.terms) {
    mpz_class n = t.second.rational().get_num() * (l / t.second.rational().get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  Scalar f = field_.from_mpq(mpq_class(l, g));
  for (auto& t : v.terms) t.second *= f;
}

SparseVec SparseEchelon::eliminate_fraction_free(SparseVec v) const {
  for (std::size_t r = 0; r < rows_.size() && !v.empty(); ++r) {
    const Scalar* c = v.find(pivots_[r]);
    if (!c) continue;
    const Scalar* p = rows_[r].find(pivots_[r]);
    Scalar cv = *c;
    if (field_.is_finite()) {
      axpy(v, -cv / *p, rows_[r]);
    } else {
      // v <- p*v - c*row keeps integer entries.
      v = scaled(v, *p);
      axpy(v, -cv, rows_[r]);
      normalize(v);
    }
  }
  return v;
}

bool SparseEchelon::insert(SparseVec v) {
  normalize(v);
  v = eliminate_fraction_free(std::move(v));
  if (v.empty()) return false;
  // Smallest coefficient wins; ties go to the largest key so low keys stay free.
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.terms.size(); ++i)
    if (v.terms[i].second.size_hint() <= v.terms[best].second.size_hint()) best = i;
  std::int64_t key = v.terms[best].first;
  if (field_.is_finite()) v = scaled(v, v.terms[best].second.inverse());
  pivot_row_.emplace(key, rows_.size());
  pivots_.push_back(key);
  rows_.push_back(std::move(v));
  return true;
}

SparseVec SparseEchelon::reduce(SparseVec v) const {
  for (std::size_t r = 0; r < rows_.size() && !v.empty(); ++r) {
    const Scalar* c = v.find(pivots_[r]);
    if (!c) continue;
    const Scalar* p = rows_[r].find(pivots_[r]);
    axpy(v, -(*c / *p), rows_[r]);
  }
  return v;
}

}  // namespace extremal
