#include "qdicke/common.hpp"

#include <string>

namespace qdicke {

std::size_t dense_dim(int d, int n) {
  if (d < 1 || n < 0) throw std::invalid_argument("dense_dim: need d >= 1 and n >= 0");
  std::size_t dim = 1;
  for (int i = 0; i < n; ++i) {
    if (dim > kMaxDenseDim / static_cast<std::size_t>(d))
      throw ResourceError("dense dimension " + std::to_string(d) + "^" + std::to_string(n) +
                          " exceeds the supported limit");
    dim *= static_cast<std::size_t>(d);
  }
  if (dim > kMaxDenseDim)
    throw ResourceError("dense dimension " + std::to_string(d) + "^" + std::to_string(n) +
                        " exceeds the supported limit");
  return dim;
}

}  // namespace qdicke
