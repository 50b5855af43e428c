#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "extremal/errors.hpp"

namespace extremal {

class Scalar;

// The rationals (characteristic 0) or a prime field GF(p) with p odd.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(0); }
  static Field prime(std::int64_t p);
  // 0 selects the rationals.
  static Field of_characteristic(std::int64_t c);

  std::int64_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }
  bool is_finite() const { return p_ != 0; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t n) const;
  Scalar from_ratio(std::int64_t num, std::int64_t den) const;
  Scalar from_mpq(const mpq_class& q) const;
  Scalar parse(std::string_view text) const;

  // All elements of a prime field in residue order.
  std::vector<Scalar> elements() const;

  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Scalar;
  explicit Field(std::int64_t p) : p_(p) {}
  std::int64_t p_ = 0;
};

// Canonical field element: reduced fraction over Q, residue in [0,p) over GF(p).
class Scalar {
 public:
  Scalar() = default;

  Field field() const { return Field(p_); }
  std::int64_t characteristic() const { return p_; }

  bool is_zero() const { return p_ ? r_ == 0 : sgn(q_) == 0; }
  bool is_one() const { return p_ ? r_ == 1 : q_ == 1; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // a += b * c without temporaries on the rational path.
  void add_mul(const Scalar& b, const Scalar& c);
  void sub_mul(const Scalar& b, const Scalar& c);

  Scalar inverse() const;
  Scalar pow(std::int64_t e) const;

  // Smaller residue over GF(p); positive root over Q; none for non-squares.
  std::optional<Scalar> sqrt() const;

  // Exact value for the rationals; residue for GF(p).
  const mpq_class& rational() const { return q_; }
  std::int64_t residue() const { return r_; }
  // Bit size of numerator plus denominator; residues count as 1.
  std::size_t size_hint() const;
  // Integer value if this is an integer (rationals) or a residue.
  std::optional<std::int64_t> to_int() const;

  std::string to_string() const;
  std::size_t hash() const;

 private:
  friend class Field;
  static Scalar make_rational(mpq_class q);
  static Scalar make_residue(std::int64_t p, std::int64_t r);
  void check(const Scalar& o) const {
    if (p_ != o.p_) throw FieldMismatch("scalars from different fields");
  }

  std::int64_t p_ = 0;
  std::int64_t r_ = 0;
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

bool is_prime(std::int64_t n);

}  // namespace extremal

template <>
struct std::hash<extremal::Scalar> {
  std::size_t operator()(const extremal::Scalar& s) const { return s.hash(); }
};
