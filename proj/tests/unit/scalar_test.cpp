#include <gtest/gtest.h>

#include "extremal/errors.hpp"
#include "extremal/scalar.hpp"

using namespace extremal;

TEST(Field, RejectsCharacteristicTwo) {
  EXPECT_THROW(Field::prime(2), CharacteristicTwoUnsupported);
  EXPECT_THROW(Field::prime(9), NotPrime);
  EXPECT_NO_THROW(Field::prime(7));
}

TEST(Field, Names) {
  EXPECT_EQ(Field::rationals().name(), "Q");
  EXPECT_EQ(Field::prime(5).name(), "GF(5)");
  EXPECT_EQ(Field::of_characteristic(0), Field::rationals());
}

TEST(Scalar, RationalArithmetic) {
  auto q = Field::rationals();
  Scalar a = q.from_ratio(1, 3), b = q.from_ratio(1, 6);
  EXPECT_EQ((a + b).to_string(), "1/2");
  EXPECT_EQ((a * b).to_string(), "1/18");
  EXPECT_EQ((a / b).to_string(), "2");
  EXPECT_EQ(q.parse("-3/4") * q.from_int(4), q.from_int(-3));
  EXPECT_THROW(a / q.zero(), DivisionByZero);
}

TEST(Scalar, PrimeArithmetic) {
  auto f = Field::prime(7);
  Scalar a = f.from_int(3);
  EXPECT_EQ((a * a.inverse()), f.one());
  EXPECT_EQ(f.from_ratio(1, 2), f.from_int(4));
  EXPECT_EQ(a.pow(6), f.one());
  EXPECT_EQ(f.elements().size(), 7u);
}

TEST(Scalar, FieldMismatch) {
  EXPECT_THROW(Field::prime(3).one() + Field::prime(5).one(), FieldMismatch);
  EXPECT_THROW(Field::rationals().one() + Field::prime(5).one(), FieldMismatch);
}

TEST(Scalar, SquareRoots) {
  auto f = Field::prime(13);
  for (int x = 1; x < 13; ++x) {
    auto r = f.from_int(x).sqrt();
    if (r) EXPECT_EQ(*r * *r, f.from_int(x));
  }
  EXPECT_FALSE(f.from_int(2).sqrt().has_value());
  EXPECT_EQ(*Field::rationals().from_ratio(9, 4).sqrt(), Field::rationals().from_ratio(3, 2));
  EXPECT_FALSE(Field::rationals().from_int(2).sqrt().has_value());
}
