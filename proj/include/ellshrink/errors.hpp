#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ellshrink {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numeric argument violated its documented domain (range, sign, bound).
class DomainError : public Error {
 public:
  using Error::Error;
};

class NotSymmetric : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotPositiveDefinite : public DomainError {
 public:
  using DomainError::DomainError;
};

class DegenerateDenominator : public DomainError {
 public:
  using DomainError::DomainError;
};

class DimensionMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

class DimensionTooLarge : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An observation row with zero Euclidean norm (sign statistics undefined).
class ZeroNormRow : public Error {
 public:
  ZeroNormRow(std::size_t row_index, const std::string& what)
      : Error(what), row(row_index) {}
  std::size_t row;
};

/// A data column whose second sample moment vanishes (kurtosis undefined).
class ZeroVarianceColumn : public Error {
 public:
  ZeroVarianceColumn(std::size_t column_index, const std::string& what)
      : Error(what), column(column_index) {}
  std::size_t column;
};

/// Scenario/config file problems; message carries field context.
class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace ellshrink
