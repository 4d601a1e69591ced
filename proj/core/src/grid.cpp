#include "pburgers/grid.hpp"

#include <cmath>
#include <string>

#include "pburgers/errors.hpp"

namespace pburgers {

GridSpec GridSpec::make(int K, int M, double dealias) {
  GridSpec g{K, M, 2 * K + 1, M + 1, dealias};
  g.validate();
  return g;
}

void GridSpec::validate() const {
  if (K < 1) throw InputError("grid.K: must be >= 1, got " + std::to_string(K));
  if (M < 1) throw InputError("grid.M: must be >= 1, got " + std::to_string(M));
  if (Nt < 2 * K + 1) {
    throw InputError("grid.Nt: must be >= 2K+1 = " + std::to_string(2 * K + 1) +
                     ", got " + std::to_string(Nt));
  }
  if (Nx < M + 1) {
    throw InputError("grid.Nx: must be >= M+1 = " + std::to_string(M + 1) +
                     ", got " + std::to_string(Nx));
  }
  if (!(dealias >= 1.5)) {
    throw InputError("grid.dealias: padding factor must be >= 1.5");
  }
}

int GridSpec::padded_nt() const {
  return static_cast<int>(std::ceil(dealias * Nt));
}

int GridSpec::padded_nx() const {
  return static_cast<int>(std::ceil(dealias * Nx));
}

GridSpec GridSpec::refined() const {
  return GridSpec{2 * K, 2 * M, 2 * Nt, 2 * Nx, dealias};
}

}  // namespace pburgers
