#include "knotinv/generators.hpp"

#include <cmath>
#include <numbers>

#include "knotinv/errors.hpp"
#include "shipped_knots.hpp"

namespace knotinv {

namespace {

struct AnalyticEntry {
  const char* type;
  int twelfths;  // rho = twelfths / 12
};

constexpr AnalyticEntry kAnalytic[] = {
    {"0_1", -1}, {"3_1", 23},  {"4_1", -25}, {"5_1", 71},
    {"6_1", -49}, {"7_1", 143}, {"8_1", -73}, {"9_1", 239},
};

double param(const std::map<std::string, double>& params, const char* key,
             double fallback) {
  const auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

int int_param(const std::map<std::string, double>& params, const char* key,
              int fallback) {
  const double v = param(params, key, fallback);
  if (v != std::floor(v)) {
    throw ConfigError(std::string("parameter ") + key + " must be an integer");
  }
  return static_cast<int>(v);
}

}  // namespace

DiscreteKnot polygon_circle(int sides, double radius) {
  if (sides < 3) throw ConfigError("a polygonal circle needs at least 3 sides");
  if (!(radius > 0.0)) throw ConfigError("circle radius must be positive");
  std::vector<Vec3> v;
  v.reserve(sides);
  for (int k = 0; k < sides; ++k) {
    const double t = 2.0 * std::numbers::pi * k / sides;
    v.push_back({radius * std::cos(t), radius * std::sin(t), 0.0});
  }
  return DiscreteKnot(std::move(v), "circle_" + std::to_string(sides));
}

DiscreteKnot lattice_square(double side) {
  if (!(side > 0.0)) throw ConfigError("square side must be positive");
  return DiscreteKnot(
      {{0, 0, 0}, {side, 0, 0}, {side, side, 0}, {0, side, 0}}, "square");
}

DiscreteKnot torus_knot(int p, int q, int sides, double major, double minor) {
  if (sides < 3) throw ConfigError("torus knot needs at least 3 sides");
  if (p < 1 || q < 1) throw ConfigError("torus knot p, q must be positive");
  if (!(major > minor && minor > 0.0)) {
    throw ConfigError("torus knot needs major > minor > 0");
  }
  std::vector<Vec3> v;
  v.reserve(sides);
  for (int k = 0; k < sides; ++k) {
    const double t = 2.0 * std::numbers::pi * k / sides;
    const double r = major + minor * std::cos(q * t);
    v.push_back({r * std::cos(p * t), r * std::sin(p * t),
                 -minor * std::sin(q * t)});
  }
  return DiscreteKnot(std::move(v), "torus_" + std::to_string(p) + "_" +
                                        std::to_string(q) + "_" +
                                        std::to_string(sides));
}

std::vector<std::string> shipped_lattice_types() {
  return {"0_1", "3_1", "4_1", "5_1"};
}

DiscreteKnot shipped_lattice_knot(const std::string& type) {
  const std::vector<std::array<int, 3>>* table = nullptr;
  if (type == "0_1") table = &detail::k01Lattice;
  if (type == "3_1") table = &detail::k31Lattice;
  if (type == "4_1") table = &detail::k41Lattice;
  if (type == "5_1") table = &detail::k51Lattice;
  if (table == nullptr) {
    throw ConfigError("no shipped lattice coordinates for knot type " + type);
  }
  std::vector<Vec3> v;
  v.reserve(table->size());
  for (const auto& p : *table) {
    v.push_back({double(p[0]), double(p[1]), double(p[2])});
  }
  return DiscreteKnot(std::move(v), type + "_lattice_" +
                                        std::to_string(table->size()));
}

bool has_analytic_rho(const std::string& type) {
  for (const auto& e : kAnalytic) {
    if (type == e.type) return true;
  }
  return false;
}

double analytic_rho(const std::string& type) {
  for (const auto& e : kAnalytic) {
    if (type == e.type) return e.twelfths / 12.0;
  }
  throw ConfigError("no analytic value for knot type " + type);
}

DiscreteKnot generate(const std::string& kind,
                      const std::map<std::string, double>& params,
                      const std::string& type) {
  if (kind == "circle") {
    return polygon_circle(int_param(params, "sides", 64),
                          param(params, "radius", 1.0));
  }
  if (kind == "square") return lattice_square(param(params, "side", 1.0));
  if (kind == "torus") {
    return torus_knot(int_param(params, "p", 2), int_param(params, "q", 3),
                      int_param(params, "sides", 60),
                      param(params, "major", 2.0), param(params, "minor", 1.0));
  }
  if (kind == "lattice") return shipped_lattice_knot(type.empty() ? "3_1" : type);
  throw ConfigError("unknown generator kind '" + kind + "'");
}

}  // namespace knotinv
