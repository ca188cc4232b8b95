#include "circswarm/errors.hpp"

#include <sstream>
#include <utility>

namespace circswarm {

namespace {

std::string join_indices(const std::vector<std::size_t>& indices) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i > 0) out << ", ";
    out << indices[i];
  }
  out << '}';
  return out.str();
}

}  // namespace

DimensionMismatch::DimensionMismatch(std::size_t expected, std::size_t actual)
    : Error("dimension mismatch: expected " + std::to_string(expected) + ", got " +
            std::to_string(actual)),
      expected_(expected),
      actual_(actual) {}

DegenerateFactor::DegenerateFactor()
    : Error("degenerate factor: lambda = 0 has no invertible N-th root") {}

SingularSpectrum::SingularSpectrum(std::vector<std::size_t> modes)
    : Error("singular spectrum: vanishing modes " + join_indices(modes)), modes_(std::move(modes)) {}

MultiModal::MultiModal(std::vector<std::size_t> dominant)
    : Error("no unique dominant mode: modes " + join_indices(dominant) + " tie"),
      dominant_(std::move(dominant)) {}

ConfigError::ConfigError(std::string field, const std::string& message)
    : Error("config field '" + field + "': " + message), field_(std::move(field)) {}

}  // namespace circswarm
