#pragma once

#include <vector>

namespace slicesum {

// Gauss-Legendre rule transformed to [0, 1]. Nodes strictly increasing,
// weights positive and summing to 1; exact for polynomials of degree 2L-1.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  int size() const { return static_cast<int>(nodes.size()); }
};

// Newton iteration on Legendre polynomials; 1 <= L <= 65536.
QuadratureRule gauss_legendre(int L);

// Thread-safe memoized rules (rule construction is O(L^2)).
const QuadratureRule& cached_gauss_legendre(int L);

}  // namespace slicesum
