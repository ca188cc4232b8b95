#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace circswarm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: non-finite values, too few agents, zero scale, ...
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::size_t expected, std::size_t actual);

  std::size_t expected() const noexcept { return expected_; }
  std::size_t actual() const noexcept { return actual_; }

 private:
  std::size_t expected_;
  std::size_t actual_;
};

/// The factor is zero, so no N-th root exists to scale the Fourier basis.
class DegenerateFactor : public Error {
 public:
  DegenerateFactor();
};

/// Raised by inverse() when one or more modal eigenvalues vanish.
class SingularSpectrum : public Error {
 public:
  explicit SingularSpectrum(std::vector<std::size_t> modes);

  const std::vector<std::size_t>& modes() const noexcept { return modes_; }

 private:
  std::vector<std::size_t> modes_;
};

/// Several modes tie for dominance, so no rank-one limit exists.
class MultiModal : public Error {
 public:
  explicit MultiModal(std::vector<std::size_t> dominant);

  const std::vector<std::size_t>& dominant() const noexcept { return dominant_; }

 private:
  std::vector<std::size_t> dominant_;
};

/// A simulated state left the range of double precision.
class NumericOverflow : public Error {
 public:
  using Error::Error;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

/// Scenario configuration problem; `field()` names the offending key.
class ConfigError : public Error {
 public:
  ConfigError(std::string field, const std::string& message);

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace circswarm
