#include "extremal/scalar.hpp"

#include <ostream>
#include <tuple>
#include <utility>

namespace extremal {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % p);
}

std::int64_t powmod(std::int64_t b, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1;
  b = mod(b, p);
  while (e > 0) {
    if (e & 1) r = mulmod(r, b, p);
    b = mulmod(b, b, p);
    e >>= 1;
  }
  return r;
}

std::int64_t invmod(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = mod(a, p);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  return mod(t, p);
}

// Tonelli-Shanks; a must be a nonzero quadratic residue mod odd prime p.
std::int64_t sqrtmod(std::int64_t a, std::int64_t p) {
  if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
  std::int64_t q = p - 1, s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  std::int64_t z = 2;
  while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
  std::int64_t m = s, c = powmod(z, q, p), t = powmod(a, q, p), r = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    std::int64_t i = 0, tt = t;
    while (tt != 1) {
      tt = mulmod(tt, tt, p);
      ++i;
    }
    std::int64_t b = c;
    for (std::int64_t j = 0; j < m - i - 1; ++j) b = mulmod(b, b, p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  return r;
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::int64_t p) {
  if (p == 2) throw CharacteristicTwoUnsupported("characteristic 2 is not supported");
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  if (p >= (std::int64_t{1} << 31)) throw NotPrime("modulus " + std::to_string(p) + " exceeds 2^31");
  return Field(p);
}

Field Field::of_characteristic(std::int64_t c) { return c == 0 ? rationals() : prime(c); }

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t n) const {
  if (p_) return Scalar::make_residue(p_, mod(n, p_));
  return Scalar::make_rational(mpq_class(static_cast<long>(n)));
}

Scalar Field::from_ratio(std::int64_t num, std::int64_t den) const {
  if (den == 0) throw DivisionByZero("zero denominator");
  if (p_) return from_int(num) / from_int(den);
  mpq_class q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return Scalar::make_rational(q);
}

Scalar Field::from_mpq(const mpq_class& q) const {
  if (!p_) return Scalar::make_rational(q);
  mpz_class n = q.get_num() % p_, d = q.get_den() % p_;
  if (d == 0) throw DivisionByZero("denominator vanishes mod " + std::to_string(p_));
  return from_int(n.get_si()) / from_int(d.get_si());
}

Scalar Field::parse(std::string_view text) const {
  std::string s(text);
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) throw ParseError("cannot parse scalar '" + s + "'");
  if (q.get_den() == 0) throw DivisionByZero("zero denominator in '" + s + "'");
  q.canonicalize();
  return from_mpq(q);
}

std::vector<Scalar> Field::elements() const {
  if (!p_) throw PreconditionNotMet("the rationals are infinite");
  std::vector<Scalar> out;
  out.reserve(static_cast<std::size_t>(p_));
  for (std::int64_t r = 0; r < p_; ++r) out.push_back(Scalar::make_residue(p_, r));
  return out;
}

std::string Field::name() const { return p_ ? "GF(" + std::to_string(p_) + ")" : "Q"; }

Scalar Scalar::make_rational(mpq_class q) {
  Scalar s;
  s.q_ = std::move(q);
  return s;
}

Scalar Scalar::make_residue(std::int64_t p, std::int64_t r) {
  Scalar s;
  s.p_ = p;
  s.r_ = r;
  return s;
}

Scalar Scalar::operator-() const {
  if (p_) return make_residue(p_, r_ ? p_ - r_ : 0);
  return make_rational(-q_);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check(o);
  if (p_) {
    r_ += o.r_;
    if (r_ >= p_) r_ -= p_;
  } else {
    q_ += o.q_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check(o);
  if (p_) {
    r_ -= o.r_;
    if (r_ < 0) r_ += p_;
  } else {
    q_ -= o.q_;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check(o);
  if (p_)
    r_ = r_ * o.r_ % p_;
  else
    q_ *= o.q_;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

void Scalar::add_mul(const Scalar& b, const Scalar& c) {
  check(b);
  check(c);
  if (p_) {
    r_ = (r_ + b.r_ * c.r_) % p_;
  } else {
    mpq_class t = b.q_ * c.q_;
    q_ += t;
  }
}

void Scalar::sub_mul(const Scalar& b, const Scalar& c) {
  check(b);
  check(c);
  if (p_) {
    r_ = mod(r_ - b.r_ * c.r_ % p_, p_);
  } else {
    mpq_class t = b.q_ * c.q_;
    q_ -= t;
  }
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ != b.p_) return false;
  return a.p_ ? a.r_ == b.r_ : a.q_ == b.q_;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (p_) return make_residue(p_, invmod(r_, p_));
  return make_rational(1 / q_);
}

Scalar Scalar::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar r = Field(p_).one(), b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

std::optional<Scalar> Scalar::sqrt() const {
  if (is_zero()) return *this;
  if (p_) {
    if (powmod(r_, (p_ - 1) / 2, p_) != 1) return std::nullopt;
    std::int64_t s = sqrtmod(r_, p_);
    return make_residue(p_, std::min(s, p_ - s));
  }
  if (sgn(q_) < 0) return std::nullopt;
  const mpz_class& n = q_.get_num();
  const mpz_class& d = q_.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  return make_rational(mpq_class(sn, sd));
}

std::size_t Scalar::size_hint() const {
  if (p_) return 1;
  return mpz_sizeinbase(q_.get_num_mpz_t(), 2) + mpz_sizeinbase(q_.get_den_mpz_t(), 2);
}

std::optional<std::int64_t> Scalar::to_int() const {
  if (p_) return r_;
  if (q_.get_den() != 1 || !q_.get_num().fits_slong_p()) return std::nullopt;
  return q_.get_num().get_si();
}

std::string Scalar::to_string() const { return p_ ? std::to_string(r_) : q_.get_str(); }

std::size_t Scalar::hash() const {
  if (p_) return std::hash<std::int64_t>{}(r_ * 1315423911 + p_);
  return std::hash<std::string>{}(q_.get_str());
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace extremal
