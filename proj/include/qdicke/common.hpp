#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>

namespace qdicke {

using Cx = std::complex<double>;

// Requested object would exceed the dense-vector budget of this library.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Requested feature is outside the supported domain (e.g. circuits for d > 2).
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Hard cap on any dense statevector or operator dimension we materialize.
inline constexpr std::size_t kMaxDenseDim = std::size_t{1} << 22;

// d^n as std::size_t; throws ResourceError once the product passes kMaxDenseDim.
std::size_t dense_dim(int d, int n);

}  // namespace qdicke
