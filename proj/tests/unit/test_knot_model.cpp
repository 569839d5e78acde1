#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "knotinv/errors.hpp"
#include "knotinv/generators.hpp"
#include "knotinv/knot.hpp"
#include "knotinv/knot_io.hpp"
#include "knotinv/mc_engine.hpp"
#include "knotinv/smoothing.hpp"
#include "support/oracles.hpp"

using namespace knotinv;

namespace {

DiscreteKnot unit_square() {
  return DiscreteKnot({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}});
}

void check_vec(const Vec3& a, const Vec3& b, double tol = 1e-12) {
  CHECK(a.x == doctest::Approx(b.x).epsilon(tol));
  CHECK(a.y == doctest::Approx(b.y).epsilon(tol));
  CHECK(a.z == doctest::Approx(b.z).epsilon(tol));
}

}  // namespace

TEST_CASE("point_at on the unit square") {
  const DiscreteKnot sq = unit_square();
  check_vec(point_at(sq, 1.5), {1, 0.5, 0});
  check_vec(point_at(sq, 3.0), {0, 1, 0});
  check_vec(point_at(sq, 0.0), {0, 0, 0});
  check_vec(point_at(sq, 4.0), {0, 0, 0});
  CHECK_THROWS_AS(point_at(sq, -0.1), DomainError);
  CHECK_THROWS_AS(point_at(sq, 4.0001), DomainError);
}

TEST_CASE("point_at matches independent interpolation on the 8-segment trefoil") {
  const DiscreteKnot k = torus_knot(2, 3, 8, 3.0, 1.0);
  for (double S : {4.25, 0.0, 0.3, 1.0, 5.999, 7.5, 8.0}) {
    check_vec(point_at(k, S), testing::interpolate(k.vertices(), S), 1e-13);
  }
}

TEST_CASE("tangent_at uses the following segment at joints") {
  const DiscreteKnot sq = unit_square();
  check_vec(tangent_at(sq, 0.5), {1, 0, 0});
  check_vec(tangent_at(sq, 2.0), {-1, 0, 0});
  check_vec(tangent_at(sq, 4.0), tangent_at(sq, 0.0));
  const DiscreteKnot k = torus_knot(2, 3, 30);
  for (std::size_t j = 0; j < k.size(); ++j) {
    CHECK(norm(tangent_at(k, j + 0.37)) ==
          doctest::Approx(k.segment_length(j)).epsilon(1e-12));
  }
}

TEST_CASE("curve properties: continuity, closure, total length") {
  const DiscreteKnot k = shipped_lattice_knot("4_1");
  const double n = static_cast<double>(k.size());
  for (std::size_t i = 1; i < k.size(); ++i) {
    CHECK(distance(point_at(k, i - 1e-9), point_at(k, i + 1e-9)) < 1e-8);
  }
  check_vec(point_at(k, n), k.vertex(0));
  CHECK(distance(point_at(k, n - 1e-12), k.vertex(0)) < 1e-10);
  double sum = 0.0;
  for (std::size_t j = 0; j < k.size(); ++j) sum += norm(tangent_at(k, j + 0.5));
  CHECK(sum == doctest::Approx(k.total_length()).epsilon(1e-12));
}

TEST_CASE("rescale") {
  const DiscreteKnot sq = unit_square();
  const DiscreteKnot same = rescale(sq, 1.0);
  for (std::size_t i = 0; i < 4; ++i) check_vec(same.vertex(i), sq.vertex(i));
  const DiscreteKnot half = rescale(sq, 0.5);
  for (std::size_t j = 0; j < 4; ++j) {
    CHECK(half.segment_length(j) == doctest::Approx(0.5));
  }
  CHECK_THROWS_AS(rescale(sq, 0.0), DomainError);
  CHECK_THROWS_AS(rescale(sq, -2.0), DomainError);

  const DiscreteKnot k = torus_knot(2, 5, 40);
  const double eta = 0.37;
  const DiscreteKnot r = rescale(k, eta);
  const Vec3 c = centroid(k);
  for (double S : {0.0, 3.3, 17.9, 40.0}) {
    check_vec(point_at(r, S), c + (point_at(k, S) - c) * eta, 1e-12);
  }
}

TEST_CASE("rho is scale invariant") {
  SamplerConfig cfg;
  cfg.n = 400'000;
  const DiscreteKnot k = shipped_lattice_knot("3_1");
  const auto a = rho(SmoothedKnot::smooth(k), cfg).total;
  for (double eta : {0.37, 0.1, 10.0}) {
    cfg.seed = 7;
    const auto b = rho(SmoothedKnot::smooth(rescale(k, eta)), cfg).total;
    const double se = std::hypot(a.std_error, b.std_error);
    CHECK(std::abs(a.mean - b.mean) < 3.0 * se);
  }
}

TEST_CASE("load and save") {
  std::istringstream text("# square\n0 0 0\n1 0 0\n\n1 1 0\n0 1 0 # last\n");
  const DiscreteKnot sq = parse_knot_text(text);
  CHECK(sq.size() == 4);
  CHECK(sq.is_cubic_lattice());

  std::istringstream dup("0 0 0\n1 0 0\n1 0 0\n0 1 0\n");
  try {
    parse_knot_text(dup);
    FAIL("expected an error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("zero-length segment at index") !=
          std::string::npos);
  }

  std::istringstream bad("0 0 0\n1 x 0\n1 1 0\n");
  CHECK_THROWS_AS(parse_knot_text(bad), InputError);
  std::istringstream two("0 0 0\n1 0 0\n");
  CHECK_THROWS_AS(parse_knot_text(two), InputError);
  // bow tie: segments 0 and 2 cross at (0.5, 0.5, 0)
  std::istringstream crossing("0 0 0\n1 1 0\n1 0 0\n0 1 0\n");
  CHECK_THROWS_AS(parse_knot_text(crossing), InputError);

  const DiscreteKnot t = load_knot(KNOTINV_DATA_DIR "/3_1_lattice_24.knot");
  CHECK(t.size() == 24);
  CHECK(t.is_cubic_lattice());

  const DiscreteKnot k = torus_knot(2, 3, 31);
  const auto dir = std::filesystem::temp_directory_path();
  save_knot(k, dir / "knotinv_rt.json");
  const DiscreteKnot kj = load_knot(dir / "knotinv_rt.json");
  save_knot(k, dir / "knotinv_rt.knot");
  const DiscreteKnot kt = load_knot(dir / "knotinv_rt.knot");
  REQUIRE(kj.size() == k.size());
  REQUIRE(kt.size() == k.size());
  for (std::size_t i = 0; i < k.size(); ++i) {
    CHECK(kj.vertex(i) == k.vertex(i));
    check_vec(kt.vertex(i), k.vertex(i), 1e-15);
  }
}

TEST_CASE("generators") {
  const DiscreteKnot c = polygon_circle(64);
  CHECK(c.size() == 64);
  for (const Vec3& p : c.vertices()) {
    CHECK(p.z == 0.0);
    CHECK(norm(p) == doctest::Approx(1.0).epsilon(1e-14));
  }
  const DiscreteKnot sq = lattice_square();
  CHECK(sq.size() == 4);
  CHECK(sq.is_cubic_lattice());
  CHECK_THROWS(polygon_circle(2));
  CHECK_THROWS(generate("spiral", {}));
  for (const std::string& t : shipped_lattice_types()) {
    CHECK(shipped_lattice_knot(t).is_cubic_lattice());
  }
}

TEST_CASE("torus knot generator gives the trefoil value") {
  SamplerConfig cfg;
  cfg.n = 1'000'000;
  const auto r = rho(SmoothedKnot::smooth(torus_knot(2, 3, 60)), cfg).total;
  CHECK(std::abs(r.mean - 23.0 / 12.0) < 3.0 * r.std_error);
}
