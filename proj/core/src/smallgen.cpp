#include "extremal/smallgen.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "extremal/nilquot.hpp"

namespace extremal::smallgen {

namespace {

int edge_slot(int a, int b) {
  if (a > b) std::swap(a, b);
  if (a == 0 && b == 1) return 0;
  if (a == 0 && b == 2) return 1;
  if (a == 1 && b == 2) return 2;
  throw PreconditionNotMet("edge needs two distinct generators");
}

// Sign of (g,h,k) as a permutation of (0,1,2); 0 if not a permutation.
int perm_sign(int g, int h, int k) {
  if (g == h || h == k || g == k) return 0;
  int inv = (g > h) + (g > k) + (h > k);
  return inv % 2 ? -1 : 1;
}

// f(g,[h,k]) for distinct generators, by cyclic invariance.
Scalar central_value(const TriangleParams& p, int g, int h, int k) {
  int s = perm_sign(g, h, k);
  if (s == 0) return p.central.field().zero();
  return s > 0 ? p.central : -p.central;
}

}  // namespace

TriangleParams TriangleParams::make(const Field& f, long long xy, long long xz, long long yz, long long central) {
  return {f.from_int(xy), f.from_int(xz), f.from_int(yz), f.from_int(central)};
}

Scalar TriangleParams::edge(int a, int b) const {
  if (a == b) return central.field().zero();
  switch (edge_slot(a, b)) {
    case 0: return xy;
    case 1: return xz;
    default: return yz;
  }
}

void TriangleParams::set_edge(int a, int b, const Scalar& v) {
  switch (edge_slot(a, b)) {
    case 0: xy = v; break;
    case 1: xz = v; break;
    default: yz = v; break;
  }
}

int TriangleParams::nonzero_edges() const {
  return !xy.is_zero() + !xz.is_zero() + !yz.is_zero();
}

std::string TriangleParams::to_string() const {
  return "(" + xy.to_string() + "," + xz.to_string() + "," + yz.to_string() + "; " + central.to_string() + ")";
}

TwoGenResult two_gen_classify(const Scalar& f_xy, bool bracket_nonzero) {
  Field F = f_xy.field();
  if (!f_xy.is_zero()) {
    // basis x, y, h = [x,y]; [x,h] = f x, [y,h] = -f y
    LieAlgebra L(F, {"x", "y", "[x,y]"},
                 {{0, 1, 2, F.one()}, {0, 2, 0, f_xy}, {1, 2, 1, -f_xy}});
    return {TwoGenCase::Sl2, L, L.basis_vector(0), L.basis_vector(1)};
  }
  if (bracket_nonzero) {
    LieAlgebra L(F, {"x", "y", "[x,y]"}, {{0, 1, 2, F.one()}});
    return {TwoGenCase::Heisenberg, L, L.basis_vector(0), L.basis_vector(1)};
  }
  LieAlgebra L(F, {"x", "y"}, {});
  return {TwoGenCase::Abelian, L, L.basis_vector(0), L.basis_vector(1)};
}

TriangleParams exp_transform_params(const TriangleParams& p, const Scalar& s) {
  return exp_transform_params(p, 0, 2, s);
}

TriangleParams exp_transform_params(const TriangleParams& p, int base, int target, const Scalar& s) {
  if (base == target || base < 0 || base > 2 || target < 0 || target > 2)
    throw PreconditionNotMet("exp transform needs distinct generators");
  int other = 3 - base - target;
  Field F = p.central.field();
  Scalar half = F.from_ratio(1, 2);
  Scalar f_bo = p.edge(base, other), f_bt = p.edge(base, target), f_ot = p.edge(other, target);
  Scalar c_bot = central_value(p, base, other, target);
  TriangleParams q = p;
  q.set_edge(other, target, f_ot - s * c_bot + half * s * s * f_bo * f_bt);
  // f(b,[o,t']) = f(b,[o,t]) - s f(b,t) f(b,o), rewritten in the (x,y,z) orientation
  Scalar new_c_bot = c_bot - s * f_bt * f_bo;
  q.central = perm_sign(base, other, target) > 0 ? new_c_bot : -new_c_bot;
  return q;
}

TriangleParams scale_params(const TriangleParams& p, const Scalar& alpha, const Scalar& beta, const Scalar& gamma) {
  if (!p.central.is_zero()) throw CentralNotZero("scaling requires central parameter 0");
  if (alpha.is_zero() || beta.is_zero() || gamma.is_zero())
    throw PreconditionNotMet("scaling factors must be nonzero");
  TriangleParams q = p;
  q.xy = alpha * beta * p.xy;
  q.xz = alpha * gamma * p.xz;
  q.yz = beta * gamma * p.yz;
  return q;
}

TriangleParams permute_params(const TriangleParams& p, const std::vector<int>& perm) {
  if (perm.size() != 3 || perm_sign(perm[0], perm[1], perm[2]) == 0)
    throw PreconditionNotMet("not a permutation of the generators");
  TriangleParams q = p;
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) q.set_edge(a, b, p.edge(perm[a], perm[b]));
  q.central = central_value(p, perm[0], perm[1], perm[2]);
  return q;
}

std::string NormalizationStep::to_string() const {
  static const char* names = "xyz";
  std::ostringstream os;
  switch (kind) {
    case Kind::ExpTransform:
      os << "exp-transform(" << names[base] << "," << names[target] << "," << s.to_string() << ")";
      break;
    case Kind::Scale:
      os << "scale(" << alpha.to_string() << "," << beta.to_string() << "," << gamma.to_string() << ")";
      break;
    case Kind::Permute:
      os << "permute(" << names[perm[0]] << names[perm[1]] << names[perm[2]] << ")";
      break;
  }
  return os.str();
}

TriangleParams replay(const TriangleParams& p, const std::vector<NormalizationStep>& steps) {
  TriangleParams q = p;
  for (const auto& st : steps) {
    switch (st.kind) {
      case NormalizationStep::Kind::ExpTransform: q = exp_transform_params(q, st.base, st.target, st.s); break;
      case NormalizationStep::Kind::Scale: q = scale_params(q, st.alpha, st.beta, st.gamma); break;
      case NormalizationStep::Kind::Permute: q = permute_params(q, st.perm); break;
    }
  }
  return q;
}

NormalizationTrace normalize(const TriangleParams& p) {
  Field F = p.central.field();
  NormalizationTrace tr;
  tr.start = p;
  TriangleParams q = p;
  auto push = [&](NormalizationStep st) {
    q = replay(q, {st});
    tr.steps.push_back(std::move(st));
  };
  auto exp_step = [&](int base, int target, const Scalar& s) {
    NormalizationStep st;
    st.kind = NormalizationStep::Kind::ExpTransform;
    st.base = base;
    st.target = target;
    st.s = s;
    push(st);
  };

  // Kill the central parameter; at most two preparatory steps add edges.
  while (!q.central.is_zero()) {
    int base = -1;
    for (int b = 0; b < 3 && base < 0; ++b) {
      int o = (b + 1) % 3, t = (b + 2) % 3;
      if (!q.edge(b, o).is_zero() && !q.edge(b, t).is_zero()) base = b;
    }
    if (base >= 0) {
      int o = (base + 1) % 3, t = (base + 2) % 3;
      Scalar c_bot = central_value(q, base, o, t);
      exp_step(base, t, c_bot / (q.edge(base, t) * q.edge(base, o)));
      continue;
    }
    // Transform a target lying off the nonzero edge (if any); the new edge f(o,t') = -s f(b,[o,t]).
    int b = 0, t = 2;
    for (int a = 0; a < 3; ++a)
      for (int c = 0; c < 3; ++c)
        if (a != c && !q.edge(a, c).is_zero()) b = a, t = 3 - a - c;
    exp_step(b, t, F.one());
  }

  tr.edge_case = q.nonzero_edges();
  // Nonzero edges into canonical position: case 1 on xy, case 2 on xy and xz.
  if (tr.edge_case == 1 && q.xy.is_zero()) {
    NormalizationStep st;
    st.kind = NormalizationStep::Kind::Permute;
    st.perm = !q.xz.is_zero() ? std::vector<int>{0, 2, 1} : std::vector<int>{1, 2, 0};
    push(st);
  } else if (tr.edge_case == 2 && !q.yz.is_zero()) {
    NormalizationStep st;
    st.kind = NormalizationStep::Kind::Permute;
    st.perm = q.xy.is_zero() ? std::vector<int>{2, 0, 1} : std::vector<int>{1, 0, 2};
    push(st);
  }

  Scalar minus2 = F.from_int(-2);
  Scalar one = F.one();
  NormalizationStep st;
    st.kind = NormalizationStep::Kind::Scale;
  st.alpha = st.beta = st.gamma = one;
  switch (tr.edge_case) {
    case 0: break;
    case 1: st.alpha = minus2 / q.xy; break;
    case 2:
      st.beta = minus2 / q.xy;
      st.gamma = minus2 / q.xz;
      break;
    case 3: {
      // alpha = r/(ab), beta = r/(ac), gamma = r/(bc) with r^2 = -2abc
      Scalar abc = q.xy * q.xz * q.yz;
      auto r = (minus2 * abc).sqrt();
      if (!r) {
        tr.extension_required = true;
        tr.final = q;
        return tr;
      }
      st.alpha = *r / (q.xy * q.xz);
      st.beta = *r / (q.xy * q.yz);
      st.gamma = *r / (q.xz * q.yz);
      break;
    }
  }
  if (!(st.alpha.is_one() && st.beta.is_one() && st.gamma.is_one())) push(st);
  tr.final = q;
  return tr;
}

namespace {

constexpr int kX = 0, kY = 1, kZ = 2, kXY = 3, kXZ = 4, kYZ = 5, kXYZ = 6, kYXZ = 7;
const std::vector<std::string> kLabels = {"x", "y", "z", "[x,y]", "[x,z]", "[y,z]", "[x,[y,z]]", "[y,[x,z]]"};

int degree_of(int i) { return i < 3 ? 1 : i < 6 ? 2 : 3; }

std::array<int, 2> pair_of(int i) {
  switch (i) {
    case kXY: return {kX, kY};
    case kXZ: return {kX, kZ};
    default: return {kY, kZ};
  }
}

// [p,[q,r]]
std::array<int, 3> triple_of(int i) { return i == kXYZ ? std::array<int, 3>{kX, kY, kZ} : std::array<int, 3>{kY, kX, kZ}; }

class Engine {
 public:
  explicit Engine(const TriangleParams& p) : p_(p), F_(p.central.field()), half_(F_.from_ratio(1, 2)) {}

  Vec e(int i) const { return unit_vec(F_, 8, i); }
  Vec zero() const { return zero_vec(F_, 8); }

  Vec br2(int g, int h) const {
    if (g == h) return zero();
    if (g < h) return e(slot(g, h));
    return -e(slot(h, g));
  }

  Scalar fgen(int g, int h) const { return p_.edge(g, h); }

  Scalar fbasis(int g, int i) const {
    int d = degree_of(i);
    if (d == 1) return fgen(g, i);
    if (d == 2) {
      auto [h, k] = pair_of(i);
      return central_value(p_, g, h, k);
    }
    auto [pp, q, r] = triple_of(i);
    if (g == pp) return F_.zero();
    // f(g,[p,W]) = -f(p,[g,W])
    return -fval(pp, gen_deg2(g, q, r));
  }

  Scalar fval(int g, const Vec& v) const {
    Scalar s = F_.zero();
    for (int i = 0; i < 8; ++i)
      if (!v[i].is_zero()) s.add_mul(v[i], fbasis(g, i));
    return s;
  }

  // [g,[h,k]] for generators g and h != k.
  Vec gen_deg2(int g, int h, int k) const {
    if (g == h) return fgen(g, k) * e(g);
    if (g == k) return -fgen(g, h) * e(g);
    Vec out;
    if (g == kX) out = e(kXYZ);
    else if (g == kY) out = e(kYXZ);
    else out = e(kYXZ) - e(kXYZ);  // Jacobi: [z,[x,y]] = -[x,[y,z]] - [y,[z,x]]
    bool canonical = (g == kZ) ? (h == kX) : (h < k);
    return canonical ? out : -out;
  }

  // [g, v] for g a generator and v supported on degree-2 monomials.
  Vec gen_bracket_deg2(int g, const Vec& v) const {
    Vec out = zero();
    for (int i = kXY; i <= kYZ; ++i) {
      if (v[i].is_zero()) continue;
      auto [h, k] = pair_of(i);
      axpy(out, v[i], gen_deg2(g, h, k));
    }
    return out;
  }

  // [b_i, b_j] for i < j.
  Vec bracket(int i, int j, std::string& rule) const {
    int di = degree_of(i), dj = degree_of(j);
    if (di == 1 && dj == 1) {
      rule = "definition";
      return br2(i, j);
    }
    if (di == 1 && dj == 2) {
      auto [h, k] = pair_of(j);
      rule = (i == h || i == k) ? "extremality" : (i == kZ ? "jacobi" : "definition");
      return gen_deg2(i, h, k);
    }
    if (di == 1 && dj == 3) {
      auto [pp, q, r] = triple_of(j);
      int g = i;
      if (g == pp) {
        rule = "extremality";
        return fval(pp, br2(q, r)) * e(pp);
      }
      rule = "ide2";
      if (g == q) {
        // 2[q,[p,[q,r]]] = f_q([p,r]) q - f_q(r) [q,p] - f_q(p) [q,r]
        Vec v = fval(q, br2(pp, r)) * e(q) - fgen(q, r) * br2(q, pp) - fgen(q, pp) * br2(q, r);
        return half_ * v;
      }
      // [r,[p,[q,r]]] = -[r,[p,[r,q]]]
      Vec v = fval(r, br2(pp, q)) * e(r) - fgen(r, q) * br2(r, pp) - fgen(r, pp) * br2(r, q);
      return -(half_ * v);
    }
    if (di == 2 && dj == 2) {
      rule = "ide1";
      auto [g1, h1] = pair_of(i);
      auto [g2, h2] = pair_of(j);
      int s = (g1 == g2 || g1 == h2) ? g1 : h1;
      int u = s == g1 ? h1 : g1;
      int w = s == g2 ? h2 : g2;
      Scalar sign = F_.one();
      if (s != g1) sign = -sign;
      if (s != g2) sign = -sign;
      // 2[[s,u],[s,w]] = f_s([u,w]) s + f_s(w) [s,u] - f_s(u) [s,w]
      Vec v = fval(s, br2(u, w)) * e(s) + fgen(s, w) * br2(s, u) - fgen(s, u) * br2(s, w);
      return (sign * half_) * v;
    }
    if (di == 2 && dj == 3) {
      auto [g, h] = pair_of(i);
      auto [pp, q, r] = triple_of(j);
      if (pp == g || pp == h) {
        int u = pp == g ? h : g;
        Scalar sign = pp == g ? F_.one() : -F_.one();
        if (u == q) {
          // 2[[p,q],[p,[q,r]]] = f_q(r) f_p(q) p + f_p([q,r]) [p,q] - f_p(q) [p,[q,r]]
          rule = "rela";
          Vec v = (fgen(q, r) * fgen(pp, q)) * e(pp) + fval(pp, br2(q, r)) * br2(pp, q) - fgen(pp, q) * e(j);
          return (sign * half_) * v;
        }
        // 2[[p,u],[p,W]] = f_p([u,W]) p + f_p(W) [p,u] - f_p(u) [p,W],  W = [q,r]
        rule = "ide1";
        Vec uw = gen_deg2(u, q, r);
        Vec v = fval(pp, uw) * e(pp) + fval(pp, br2(q, r)) * br2(pp, u) - fgen(pp, u) * e(j);
        return (sign * half_) * v;
      }
      // {g,h} = {q,r}: [[q,r],[p,[q,r]]] = -[[q,r],[[q,r],p]]
      rule = "relb";
      Scalar sign = (g == q) ? F_.one() : -F_.one();
      // 2[[q,r],[[q,r],p]] = (f_q([r,p]) - f_r([q,p])) [q,r]
      //                      + f_q(r) (f_q(p) r + f_r(p) q - [r,[q,p]] - [q,[r,p]])
      Vec inner = fgen(q, pp) * e(r) + fgen(r, pp) * e(q) - gen_deg2(r, q, pp) - gen_deg2(q, r, pp);
      Vec v = (fval(q, br2(r, pp)) - fval(r, br2(q, pp))) * br2(q, r) + fgen(q, r) * inner;
      return (-(sign * half_)) * v;
    }
    if (di == 3 && dj == 3) {
      rule = "triple-identity";
      Scalar a = fgen(kX, kY), b = fgen(kX, kZ), c = fgen(kY, kZ), d = p_.central;
      // 2[[x,[y,z]],[y,[x,z]]] = -1/2 (c d x + d b y + d a z) - c b [x,y] + c a [x,z] - b a [y,z]
      Vec v = -(half_ * (c * d)) * e(kX) - (half_ * (d * b)) * e(kY) - (half_ * (d * a)) * e(kZ) -
              (c * b) * e(kXY) + (c * a) * e(kXZ) - (b * a) * e(kYZ);
      return half_ * v;
    }
    throw RewriteIncomplete("no rule closes [" + kLabels[i] + "," + kLabels[j] + "]");
  }

 private:
  static int slot(int g, int h) { return g == kX ? (h == kY ? kXY : kXZ) : kYZ; }

  TriangleParams p_;
  Field F_;
  Scalar half_;
};

}  // namespace

ThreeGenAlgebra build_M(const TriangleParams& p) {
  if (!p.central.is_zero()) throw CentralNotZero("build_M requires central parameter 0");
  Engine eng(p);
  std::vector<StructureConstant> sc;
  std::vector<std::string> log;
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) {
      std::string rule;
      Vec v = eng.bracket(i, j, rule);
      log.push_back(kLabels[i] + " " + kLabels[j] + ": " + rule);
      for (int k = 0; k < 8; ++k)
        if (!v[k].is_zero()) sc.push_back({i, j, k, v[k]});
    }
  if (log.size() != 28) throw RewriteIncomplete("not all pairs closed");
  return {p, LieAlgebra(p.central.field(), kLabels, sc), std::move(log)};
}

namespace {

Matrix mat3(const Field& F, const std::vector<std::vector<long long>>& m) {
  Matrix a(F, 3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a(i, j) = F.from_int(m[i][j]);
  return a;
}

Vec flatten(const Matrix& m) {
  Vec v;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

Matrix comm(const Matrix& a, const Matrix& b) { return a * b - b * a; }

}  // namespace

Sl3Example sl3_example(const Field& F) {
  Sl3Example ex;
  ex.x = {{0, 1, 0}, {0, 0, 0}, {0, 0, 0}};
  ex.y = {{0, 0, 0}, {1, 0, 0}, {0, 0, 0}};
  ex.z = {{1, 1, 1}, {1, 1, 1}, {-2, -2, -2}};
  Matrix x = mat3(F, ex.x), y = mat3(F, ex.y), z = mat3(F, ex.z);
  std::vector<Matrix> b = {x, y, z, comm(x, y), comm(x, z), comm(y, z), comm(x, comm(y, z)), comm(y, comm(x, z))};
  std::vector<Vec> cols;
  for (const auto& m : b) cols.push_back(flatten(m));
  Matrix B = Matrix::from_cols(F, 9, cols);
  if (B.rank() != 8) throw PreconditionNotMet("example matrices do not span sl3 in this characteristic");
  std::vector<StructureConstant> sc;
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) {
      auto c = B.solve(flatten(comm(b[i], b[j])));
      if (!c) throw PreconditionNotMet("bracket leaves the span");
      for (int k = 0; k < 8; ++k)
        if (!(*c)[k].is_zero()) sc.push_back({i, j, k, (*c)[k]});
    }
  ex.algebra = LieAlgebra(F, kLabels, sc);
  return ex;
}

namespace {

Subspace span_of(const LieAlgebra& L, const std::vector<Vec>& vs) { return Subspace::span(L.field(), L.dim(), vs); }

// No line of the 2-dim S-invariant space V is invariant under all ops; uses a nonzero nilpotent op.
bool irreducible_2dim(const LieAlgebra& L, const Subspace& V, const std::vector<Vec>& ops) {
  if (V.dim() != 2) return false;
  std::vector<Matrix> restricted;
  for (const auto& s : ops) {
    std::vector<Vec> cols;
    for (const auto& b : V.basis()) {
      auto c = V.coordinates(L.bracket(s, b));
      if (!c) return false;
      cols.push_back(*c);
    }
    restricted.push_back(Matrix::from_cols(L.field(), 2, cols));
  }
  for (const auto& A : restricted) {
    if (A.is_zero() || !(A * A).is_zero()) continue;
    auto ker = A.kernel();
    if (ker.size() != 1) continue;
    const Vec& v = ker[0];
    for (const auto& B : restricted) {
      Vec w = B * v;
      // w in span(v)?
      Scalar det = v[0] * w[1] - v[1] * w[0];
      if (!det.is_zero()) return true;
    }
    return false;
  }
  throw PreconditionNotMet("no nonzero nilpotent operator on the module");
}

std::vector<int> dims(const std::vector<Subspace>& s) {
  std::vector<int> d;
  for (const auto& x : s) d.push_back(x.dim());
  return d;
}

void check_sl2_triple(Report& rep, const LieAlgebra& M, const Vec& e, const Vec& f, const Vec& h) {
  const Field& F = M.field();
  rep.expect_true("S: [x,y] = h", M.bracket(e, f) == h);
  rep.expect_true("S: [h,x] = 2x", M.bracket(h, e) == F.from_int(2) * e);
  rep.expect_true("S: [h,y] = -2y", M.bracket(h, f) == F.from_int(-2) * f);
}

}  // namespace

std::vector<Vec> extremal_spanning(const ThreeGenAlgebra& A) {
  const LieAlgebra& M = A.algebra;
  Scalar half = M.field().from_ratio(1, 2);
  std::vector<Vec> gens = {M.basis_vector(kX), M.basis_vector(kY), M.basis_vector(kZ)};
  std::vector<Vec> out = gens;
  Subspace span = Subspace::span(M.field(), 8, out);
  // Images under exp(g,1) = 1 + ad_g + ad_g^2/2, two rounds.
  for (int round = 0; round < 2 && span.dim() < 8; ++round) {
    std::vector<Vec> next = out;
    for (const auto& g : gens)
      for (const auto& v : out) {
        Vec w = v + M.bracket(g, v) + half * M.bracket(g, M.bracket(g, v));
        if (span.insert(w)) next.push_back(w);
      }
    out = std::move(next);
  }
  return out;
}

Report verify_3gen_structure(const ThreeGenAlgebra& A) {
  const LieAlgebra& M = A.algebra;
  const TriangleParams& p = A.params;
  const Field& F = M.field();
  Report rep;
  int edge_case = p.nonzero_edges();
  rep.name = "3-generator case " + std::to_string(edge_case);
  Vec e[8];
  for (int i = 0; i < 8; ++i) e[i] = M.basis_vector(i);
  Scalar m2 = F.from_int(-2), half = F.from_ratio(1, 2);

  rep.expect_eq("dim M", 8, M.dim());
  rep.expect_eq("central parameter", std::string("0"), p.central.to_string());
  bool normalized = true;
  for (const auto& s : {p.xy, p.xz, p.yz}) normalized = normalized && (s.is_zero() || s == m2);
  rep.expect_true("nonzero edges equal -2", normalized);
  bool canonical = edge_case == 0 || edge_case == 3 || (edge_case == 1 && !p.xy.is_zero()) ||
                   (edge_case == 2 && p.yz.is_zero());
  rep.expect_true("edges in canonical position", canonical);

  // Generators extremal with the prescribed values.
  auto fx = is_extremal(M, e[kX]), fy = is_extremal(M, e[kY]), fz = is_extremal(M, e[kZ]);
  rep.expect_true("x, y, z extremal", fx && fy && fz);
  if (fx && fy && fz) {
    rep.expect_eq("f(x,y)", p.xy.to_string(), (*fx)[kY].to_string());
    rep.expect_eq("f(x,z)", p.xz.to_string(), (*fx)[kZ].to_string());
    rep.expect_eq("f(y,z)", p.yz.to_string(), (*fy)[kZ].to_string());
    rep.expect_eq("f(x,[y,z])", p.central.to_string(), (*fx)[kYZ].to_string());
    auto form = extremal_form(M, extremal_spanning(A));
    rep.expect_eq("extremal form f(x,y)", p.xy.to_string(), form(e[kX], e[kY]).to_string());
    rep.expect_eq("extremal form f(x,z)", p.xz.to_string(), form(e[kX], e[kZ]).to_string());
    rep.expect_eq("extremal form f(y,z)", p.yz.to_string(), form(e[kY], e[kZ]).to_string());
    rep.expect_eq("extremal form f(x,[y,z])", p.central.to_string(), form(e[kX], e[kYZ]).to_string());
  }

  Subspace whole = Subspace::whole(F, 8);
  Subspace Z = center(M);
  Subspace D = bracket_subspaces(M, whole, whole);

  switch (edge_case) {
    case 0: {
      rep.expect_true("nilpotent", is_nilpotent(M, whole));
      rep.expect_eq("lower central series dims", std::vector<int>{8, 5, 2, 0}, dims(lower_central_series(M)));
      Subspace expect_Z = span_of(M, {e[kXYZ], e[kYXZ]});
      rep.expect_true("center = k[x,[y,z]] + k[y,[x,z]]", Z == expect_Z);
      rep.expect_true("[[M,M],M] = center", bracket_subspaces(M, D, whole) == Z);
      // Isomorphism with L_3: send each monomial of the graded basis to its value in M.
      auto l3 = nilquot::sandwich_algebra(3, F);
      std::vector<Vec> cols;
      for (const auto& bm : l3.basis()) {
        Vec v = e[bm.word.back() - 1];
        for (int t = static_cast<int>(bm.word.size()) - 2; t >= 0; --t) v = M.bracket(e[bm.word[t] - 1], v);
        cols.push_back(v);
      }
      rep.expect_eq("dim L_3", 8, l3.dim());
      bool iso = l3.dim() == 8 && is_isomorphism(l3.to_lie_algebra(), M, Matrix::from_cols(F, 8, cols));
      rep.expect_true("isomorphic to L_3", iso);
      break;
    }
    case 1: {
      Subspace expect_Z = span_of(M, {e[kZ] - e[kXYZ] - e[kYXZ]});
      rep.expect_true("center = k(z - [x,[y,z]] - [y,[x,z]])", Z == expect_Z);
      rep.expect_eq("dim [M,M]", 7, D.dim());
      rep.expect_true("M = Z + [M,M] direct", Z.intersect(D).dim() == 0 && Z.sum(D).dim() == 8);
      Subspace S = span_of(M, {e[kX], e[kXY], e[kY]});
      Subspace R = span_of(M, {e[kZ], e[kXZ], e[kYZ], e[kXYZ], e[kYXZ]});
      rep.expect_true("S subalgebra", is_subalgebra(M, S));
      check_sl2_triple(rep, M, e[kX], e[kY], e[kXY]);
      auto rad = solvable_radical(M);
      rep.expect_eq("dim solvable radical", 5, rad.space.dim());
      rep.expect_true("radical = kz + k[x,z] + k[y,z] + k[x,[y,z]] + k[y,[x,z]]", rad.space == R);
      rep.expect_true("R ideal", is_ideal(M, R));
      rep.expect_true("M = S + R direct", S.intersect(R).dim() == 0 && S.sum(R).dim() == 8);
      std::vector<Vec> ops = {e[kX], e[kY], e[kXY]};
      rep.expect_true("k[x,z] + k[y,[x,z]] irreducible", irreducible_2dim(M, span_of(M, {e[kXZ], e[kYXZ]}), ops));
      rep.expect_true("k[y,z] + k[x,[y,z]] irreducible", irreducible_2dim(M, span_of(M, {e[kYZ], e[kXYZ]}), ops));
      break;
    }
    case 2: {
      Subspace S = span_of(M, {e[kX], e[kXY], e[kY]});
      Subspace R = span_of(M, {e[kY] - half * e[kYXZ], e[kZ] - half * e[kYXZ], e[kXY] - e[kXZ], e[kYZ], e[kXYZ]});
      Subspace RR = span_of(M, {e[kY] + e[kZ] - e[kYXZ], e[kYZ], e[kXYZ]});
      Subspace RRR = span_of(M, {e[kYZ], e[kXYZ]});
      check_sl2_triple(rep, M, e[kX], e[kY], e[kXY]);
      auto rad = solvable_radical(M);
      rep.expect_eq("dim solvable radical", 5, rad.space.dim());
      rep.expect_true("radical as listed", rad.space == R);
      rep.expect_true("[R,R] as listed", bracket_subspaces(M, R, R) == RR);
      rep.expect_true("[R,[R,R]] = k[y,z] + k[x,[y,z]]", bracket_subspaces(M, R, RR) == RRR);
      rep.expect_eq("dim center", 0, Z.dim());
      rep.expect_true("[M,M] = M", D.dim() == 8);
      rep.expect_true("M = S + R direct", S.intersect(R).dim() == 0 && S.sum(R).dim() == 8);
      Vec line = e[kY] + e[kZ] - e[kXYZ] - e[kYXZ];
      bool centralized = true;
      for (const auto& s : S.basis()) centralized = centralized && is_zero(M.bracket(s, line));
      rep.expect_true("k(y + z - [x,[y,z]] - [y,[x,z]]) centralized by S", centralized);
      break;
    }
    case 3: {
      auto ex = sl3_example(F);
      bool same = true;
      for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) same = same && M.product(i, j) == ex.algebra.product(i, j);
      rep.expect_true("structure constants match the sl3 matrix realization", same);
      rep.expect_true("isomorphic to sl3", is_isomorphism(M, ex.algebra, Matrix::identity(F, 8)));
      rep.expect_eq("dim center", 0, Z.dim());
      rep.expect_true("[M,M] = M", D.dim() == 8);
      break;
    }
    default: break;
  }
  return rep;
}

}  // namespace extremal::smallgen
