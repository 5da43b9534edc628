#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spectra_chi {

/// Malformed external input (graph6 lines, JSON documents).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// An iterative numerical routine failed to meet its accuracy contract.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace spectra_chi
