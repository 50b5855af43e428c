#include "extremal/rootdata.hpp"

#include <algorithm>
#include <climits>
#include <functional>

#include <gmpxx.h>

#include "extremal/errors.hpp"

namespace extremal {

namespace {

// Gram matrix of the simple roots, short roots of squared length 2.
std::vector<std::vector<int>> simple_gram(char type, int n) {
  std::vector<std::vector<int>> g(n, std::vector<int>(n, 0));
  auto link = [&](int i, int j, int v) { g[i - 1][j - 1] = g[j - 1][i - 1] = v; };
  switch (type) {
    case 'A':
      for (int i = 1; i <= n; ++i) g[i - 1][i - 1] = 2;
      for (int i = 1; i < n; ++i) link(i, i + 1, -1);
      break;
    case 'B':
      for (int i = 1; i < n; ++i) g[i - 1][i - 1] = 4;
      g[n - 1][n - 1] = 2;
      for (int i = 1; i < n; ++i) link(i, i + 1, -2);
      break;
    case 'C':
      for (int i = 1; i < n; ++i) g[i - 1][i - 1] = 2;
      g[n - 1][n - 1] = 4;
      for (int i = 1; i < n - 1; ++i) link(i, i + 1, -1);
      link(n - 1, n, -2);
      break;
    case 'D':
      for (int i = 1; i <= n; ++i) g[i - 1][i - 1] = 2;
      for (int i = 1; i < n - 1; ++i) link(i, i + 1, -1);
      link(n - 2, n, -1);
      break;
    case 'E':
      for (int i = 1; i <= n; ++i) g[i - 1][i - 1] = 2;
      link(1, 3, -1);
      link(2, 4, -1);
      for (int i = 3; i < n; ++i) link(i, i + 1, -1);
      break;
    case 'F':
      g[0][0] = g[1][1] = 4;
      g[2][2] = g[3][3] = 2;
      link(1, 2, -2);
      link(2, 3, -2);
      link(3, 4, -1);
      break;
    case 'G':
      g[0][0] = 2;
      g[1][1] = 6;
      link(1, 2, -3);
      break;
  }
  return g;
}

bool valid_rank(char type, int n) {
  switch (type) {
    case 'A': return n >= 1;
    case 'B': return n >= 2;
    case 'C': return n >= 2;
    case 'D': return n >= 4;
    case 'E': return n >= 6 && n <= 8;
    case 'F': return n == 4;
    case 'G': return n == 2;
    default: return false;
  }
}

Root neg(const Root& r) {
  Root out(r);
  for (int& c : out) c = -c;
  return out;
}

Root plus(const Root& a, const Root& b) {
  Root out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Root minus(const Root& a, const Root& b) { return plus(a, neg(b)); }

}  // namespace

RootSystem::RootSystem(char type, int rank) : type_(type), rank_(rank) {
  if (!valid_rank(type, rank))
    throw InvalidRank(std::string("no root system of type ") + type + std::to_string(rank));
  gram_ = simple_gram(type, rank);
  for (int i = 0; i < rank; ++i) long_norm_ = std::max(long_norm_, gram_[i][i]);

  std::vector<Root> pos;
  std::map<Root, bool> seen;
  std::vector<Root> level;
  for (int i = 0; i < rank; ++i) {
    Root r(rank, 0);
    r[i] = 1;
    level.push_back(r);
  }
  while (!level.empty()) {
    std::vector<Root> next;
    for (const auto& b : level) {
      pos.push_back(b);
      seen[b] = true;
    }
    for (const auto& b : level)
      for (int i = 0; i < rank; ++i) {
        Root a(rank, 0);
        a[i] = 1;
        int p = 0;
        for (Root down = minus(b, a); seen.count(down); down = minus(down, a)) ++p;
        int q = p - pairing(b, a);
        if (q <= 0) continue;
        Root up = plus(b, a);
        if (!seen.count(up) && std::find(next.begin(), next.end(), up) == next.end()) next.push_back(up);
      }
    level = std::move(next);
  }
  std::sort(pos.begin(), pos.end(), [](const Root& a, const Root& b) {
    int ha = height(a), hb = height(b);
    return ha != hb ? ha < hb : a < b;
  });
  roots_ = pos;
  for (const auto& r : pos) roots_.push_back(neg(r));
  for (std::size_t i = 0; i < roots_.size(); ++i) index_[roots_[i]] = static_cast<int>(i);
}

std::vector<Root> RootSystem::positive_roots() const {
  return {roots_.begin(), roots_.begin() + num_positive()};
}

std::vector<Root> RootSystem::simple_roots() const {
  std::vector<Root> out;
  for (int i = 0; i < rank_; ++i) {
    Root r(rank_, 0);
    r[i] = 1;
    out.push_back(r);
  }
  return out;
}

int RootSystem::index_of(const Root& r) const {
  auto it = index_.find(r);
  return it == index_.end() ? -1 : it->second;
}

int RootSystem::height(const Root& r) {
  int h = 0;
  for (int c : r) h += c;
  return h;
}

bool RootSystem::is_positive(const Root& r) { return height(r) > 0; }

int RootSystem::inner(const Root& a, const Root& b) const {
  int s = 0;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) s += a[i] * gram_[i][j] * b[j];
  return s;
}

int RootSystem::pairing(const Root& b, const Root& a) const { return 2 * inner(b, a) / norm(a); }

std::vector<int> RootSystem::coroot(const Root& a) const {
  std::vector<int> c(rank_);
  int na = norm(a);
  for (int i = 0; i < rank_; ++i) c[i] = a[i] * gram_[i][i] / na;
  return c;
}

std::vector<std::vector<int>> RootSystem::cartan_matrix() const {
  auto s = simple_roots();
  std::vector<std::vector<int>> m(rank_, std::vector<int>(rank_));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) m[i][j] = pairing(s[j], s[i]);
  return m;
}

std::vector<int> RootSystem::to_epsilon(const Root& r) const {
  if (!has_epsilon_coordinates()) throw UnsupportedType("epsilon coordinates exist for B, C, D only");
  const int n = rank_;
  std::vector<int> e(n, 0);
  for (int i = 0; i < n - 1; ++i) {
    e[i] += r[i];
    e[i + 1] -= r[i];
  }
  switch (type_) {
    case 'B': e[n - 1] += r[n - 1]; break;
    case 'C': e[n - 1] += 2 * r[n - 1]; break;
    default:
      e[n - 2] += r[n - 1];
      e[n - 1] += r[n - 1];
      break;
  }
  return e;
}

Root RootSystem::from_epsilon(const std::vector<int>& eps) const {
  if (static_cast<int>(eps.size()) != rank_) throw DimensionMismatch("epsilon vector has the wrong length");
  for (const auto& r : roots_)
    if (to_epsilon(r) == eps) return r;
  throw PreconditionNotMet("not a root in epsilon coordinates");
}

std::string RootSystem::root_string(const Root& r) {
  std::string s = is_positive(r) ? "" : "-";
  for (int c : r) s += std::to_string(c < 0 ? -c : c);
  return s;
}

Root RootSystem::parse_root(const std::string& s) const {
  bool negative = !s.empty() && s[0] == '-';
  std::string body = negative ? s.substr(1) : s;
  if (static_cast<int>(body.size()) != rank_) throw ParseError("root string '" + s + "' has the wrong length");
  Root r(rank_);
  for (int i = 0; i < rank_; ++i) {
    if (body[i] < '0' || body[i] > '9') throw ParseError("bad root string '" + s + "'");
    r[i] = (negative ? -1 : 1) * (body[i] - '0');
  }
  if (!is_root(r)) throw PreconditionNotMet("'" + s + "' is not a root of " + name());
  return r;
}

ChevalleyConstants::ChevalleyConstants(const RootSystem& rs) : rs_(rs) {
  const auto& R = rs_.roots();
  const int m = static_cast<int>(R.size());
  const int npos = rs_.num_positive();
  table_.assign(static_cast<std::size_t>(m) * m, INT_MIN);

  for (int xi = rs_.rank(); xi < npos; ++xi)
    for (int a = 0; a < xi && !extraspecial_.count(xi); ++a) {
      int b = rs_.index_of(minus(R[xi], R[a]));
      if (b >= 0 && b < npos && a < b) extraspecial_[xi] = {a, b};
    }

  std::function<int(int, int)> n_of = [&](int a, int b) -> int {
    int& slot = table_[static_cast<std::size_t>(a) * m + b];
    if (slot != INT_MIN) return slot;
    int s = rs_.index_of(plus(R[a], R[b]));
    int value = 0;
    if (s < 0) {
      value = 0;
    } else if (a < npos && b < npos) {
      if (a > b) {
        value = -n_of(b, a);
      } else {
        auto [a1, b1] = extraspecial_.at(s);
        if (a == a1 && b == b1) {
          value = string_length_down(R[b], R[a]) + 1;
        } else {
          const Root& al = R[a];
          const Root& be = R[b];
          const Root& al1 = R[a1];
          int na1 = a1 + npos, nb1 = b1 + npos;
          mpq_class sum = 0;
          int d1 = rs_.index_of(minus(be, al1));
          if (d1 >= 0) sum += mpq_class(n_of(b, na1) * n_of(a, nb1), rs_.norm(R[d1]));
          int d2 = rs_.index_of(minus(al, al1));
          if (d2 >= 0) sum += mpq_class(n_of(na1, a) * n_of(b, nb1), rs_.norm(R[d2]));
          sum.canonicalize();
          mpq_class v = mpq_class(rs_.norm(R[s])) * sum / mpq_class(n_of(a1, b1));
          v.canonicalize();
          if (v.get_den() != 1) throw WellDefinednessFailure("non-integral structure constant");
          value = static_cast<int>(v.get_num().get_si());
        }
      }
    } else if (a >= npos && b >= npos) {
      value = -n_of(a - npos, b - npos);
    } else {
      // a + b + c = 0 with c = -(a+b); move to the pair of equal sign.
      int c = rs_.index_of(neg(R[s]));
      mpq_class v;
      if ((c < npos) == (a < npos))
        v = mpq_class(rs_.norm(R[c]) * n_of(c, a), rs_.norm(R[b]));
      else
        v = mpq_class(rs_.norm(R[c]) * n_of(b, c), rs_.norm(R[a]));
      v.canonicalize();
      if (v.get_den() != 1) throw WellDefinednessFailure("non-integral structure constant");
      value = static_cast<int>(v.get_num().get_si());
    }
    table_[static_cast<std::size_t>(a) * m + b] = value;
    return value;
  };
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) n_of(a, b);
}

int ChevalleyConstants::N(const Root& a, const Root& b) const {
  int i = rs_.index_of(a), j = rs_.index_of(b);
  if (i < 0 || j < 0) throw PreconditionNotMet("not a root");
  return N(i, j);
}

std::pair<int, int> ChevalleyConstants::extraspecial_pair(int positive_root) const {
  auto it = extraspecial_.find(positive_root);
  if (it == extraspecial_.end()) throw PreconditionNotMet("simple roots have no extraspecial pair");
  return it->second;
}

int ChevalleyConstants::string_length_down(const Root& b, const Root& a) const {
  int p = 0;
  for (Root d = minus(b, a); rs_.is_root(d); d = minus(d, a)) ++p;
  return p;
}

}  // namespace extremal
