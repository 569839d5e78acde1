#pragma once

#include <map>
#include <string>
#include <vector>

#include "knotinv/knot.hpp"

namespace knotinv {

// Regular M-gon inscribed in the circle of the given radius in z = 0.
DiscreteKnot polygon_circle(int sides, double radius = 1.0);

// Axis-aligned square with the given side, vertices (0,0,0),(s,0,0),(s,s,0),
// (0,s,0).
DiscreteKnot lattice_square(double side = 1.0);

// M points of the (p,q) torus knot
//   ((R + r cos(q t)) cos(p t), (R + r cos(q t)) sin(p t), -r sin(q t)),
// t = 2 pi k / M. p = 2, q = 3 gives a trefoil, p = 2, q = 5 the 5_1 knot.
DiscreteKnot torus_knot(int p, int q, int sides, double major = 2.0,
                        double minor = 1.0);

// Shipped simple-cubic-lattice embeddings: "0_1" (26 steps), "3_1" (24),
// "4_1" (30), "5_1" (34).
DiscreteKnot shipped_lattice_knot(const std::string& type);
std::vector<std::string> shipped_lattice_types();

// Analytic value of rho for the Alexander-Briggs types 0_1, 3_1, ..., 9_1.
double analytic_rho(const std::string& type);
bool has_analytic_rho(const std::string& type);

// Dispatch used by the CLI: kind is one of "circle" (sides, radius),
// "square" (side), "torus" (p, q, sides, major, minor), "lattice" (type
// given as the "type" string parameter).
DiscreteKnot generate(const std::string& kind,
                      const std::map<std::string, double>& params,
                      const std::string& type = {});

}  // namespace knotinv
