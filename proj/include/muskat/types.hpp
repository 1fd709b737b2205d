#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace muskat {

using Index = Eigen::Index;
using Real = double;
using Complex = std::complex<double>;
using RealVector = Eigen::VectorXd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SizeMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class InvalidCutoff : public Error {
 public:
  using Error::Error;
};

class UndefinedRadius : public Error {
 public:
  using Error::Error;
};

class InvalidContour : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class InvalidFamily : public Error {
 public:
  using Error::Error;
};

// Raised when |cosh(dz2) - cos(dz1)| drops below the chord-arc floor, or the
// tangent vector of the parametrization vanishes.
class DegenerateGeometry : public Error {
 public:
  DegenerateGeometry(const std::string& what, Index i, Index j)
      : Error(what + " (nodes " + std::to_string(i) + ", " + std::to_string(j) + ")"), i_(i), j_(j) {}
  Index first() const { return i_; }
  Index second() const { return j_; }

 private:
  Index i_;
  Index j_;
};

}  // namespace muskat
