#pragma once

#include <stdexcept>
#include <string>

namespace extremal {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define EXTREMAL_ERROR(Name)        \
  struct Name : Error {             \
    using Error::Error;             \
  }

EXTREMAL_ERROR(CharacteristicTwoUnsupported);
EXTREMAL_ERROR(NotPrime);
EXTREMAL_ERROR(FieldMismatch);
EXTREMAL_ERROR(DivisionByZero);
EXTREMAL_ERROR(ParseError);
EXTREMAL_ERROR(DimensionMismatch);
EXTREMAL_ERROR(ZeroElement);
EXTREMAL_ERROR(NotSpanning);
EXTREMAL_ERROR(WellDefinednessFailure);
EXTREMAL_ERROR(PreconditionNotMet);
EXTREMAL_ERROR(NotADirectSum);
EXTREMAL_ERROR(InvalidRank);
EXTREMAL_ERROR(UnsupportedType);
EXTREMAL_ERROR(CentralNotZero);
EXTREMAL_ERROR(RewriteIncomplete);
EXTREMAL_ERROR(DegreeCapExceeded);

#undef EXTREMAL_ERROR

struct AntisymmetryViolation : Error {
  AntisymmetryViolation(int i, int j)
      : Error("antisymmetry violated at (" + std::to_string(i) + "," + std::to_string(j) + ")"), i(i), j(j) {}
  int i, j;
};

struct JacobiViolation : Error {
  JacobiViolation(int i, int j, int k)
      : Error("Jacobi identity violated at (" + std::to_string(i) + "," + std::to_string(j) + "," +
              std::to_string(k) + ")"),
        i(i), j(j), k(k) {}
  int i, j, k;
};

struct NotExtremal : Error {
  explicit NotExtremal(int index)
      : Error("element " + std::to_string(index) + " is not extremal"), index(index) {}
  int index;
};

struct NotASandwich : Error {
  explicit NotASandwich(int index)
      : Error("witness " + std::to_string(index) + " is not a sandwich"), index(index) {}
  int index;
};

}  // namespace extremal
