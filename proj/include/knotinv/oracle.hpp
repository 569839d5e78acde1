#pragma once

#include <cstdint>
#include <optional>

#include "knotinv/integrand.hpp"
#include "knotinv/mc_engine.hpp"
#include "knotinv/smoothing.hpp"

namespace knotinv {

// Deterministic product-grid quadrature of the ordered integrals. Each unit
// S-interval is cut into q cells; a tuple of cells i1 >= i2 >= ... is one
// piece of the ordered simplex. Cells that repeat r times form an r-simplex
// of volume h^r / r!, evaluated at its centroid (offsets r/(r+1), ...,
// 1/(r+1) inside the cell), so no two copies ever sit on the same point.
struct QuadratureSpec {
  int q = 1;
  int cap = 200;  // refuse q * N above this
  std::optional<double> epsilon;
  NormalRule normal_rule = NormalRule::kDiagonal;
  Execution execution = Execution::kParallel;
  int workers = 0;
};

struct OracleResult {
  double rho1 = 0.0;
  double rho2 = 0.0;
  double rho = 0.0;
  std::uint64_t evaluations = 0;
  std::uint64_t n_flagged = 0;
};

OracleResult oracle_rho(const SmoothedKnot& sk, const QuadratureSpec& spec);

}  // namespace knotinv
