#pragma once

#include <stdexcept>
#include <string>

namespace chiralwalk {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonSquareError : public Error {
 public:
  NonSquareError(long rows, long cols)
      : Error("matrix is not square: " + std::to_string(rows) + "x" +
              std::to_string(cols)) {}
};

class HermiticityError : public Error {
 public:
  HermiticityError(int row, int col, double asymmetry, double threshold)
      : Error("hermiticity violated at (" + std::to_string(row) + "," +
              std::to_string(col) + "): asymmetry " +
              std::to_string(asymmetry) + " exceeds " +
              std::to_string(threshold)),
        row(row),
        col(col),
        asymmetry(asymmetry) {}
  int row;
  int col;
  double asymmetry;
};

class UnitarityError : public Error {
 public:
  explicit UnitarityError(double deviation)
      : Error("matrix is not unitary: max deviation " +
              std::to_string(deviation)) {}
};

class DimensionMismatchError : public Error {
 public:
  DimensionMismatchError(long a, long b)
      : Error("dimension mismatch: " + std::to_string(a) + " vs " +
              std::to_string(b)) {}
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

class StepOffSupportError : public Error {
 public:
  StepOffSupportError(int from, int to)
      : Error("walk step (" + std::to_string(from) + " -> " +
              std::to_string(to) + ") is not on the support"),
        from(from),
        to(to) {}
  int from;
  int to;
};

class ZeroWeightError : public Error {
 public:
  ZeroWeightError() : Error("cycle weight is zero; phase undefined") {}
};

class NonzeroDiagonalError : public Error {
 public:
  explicit NonzeroDiagonalError(int index)
      : Error("diagonal entry " + std::to_string(index) +
              " is nonzero; split the diagonal off first"),
        index(index) {}
  int index;
};

class VerificationError : public Error {
 public:
  using Error::Error;
};

class InvalidGeneratorError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace chiralwalk
