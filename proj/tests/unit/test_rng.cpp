#include <doctest.h>

#include <set>

#include "knotinv/rng.hpp"
#include "knotinv/stats.hpp"

using namespace knotinv;

TEST_CASE("Philox4x32-10 known answers") {
  using B = Philox4x32::Block;
  CHECK(Philox4x32::bijection({0, 0, 0, 0}, {0, 0}) ==
        B{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u});
  CHECK(Philox4x32::bijection({0xffffffffu, 0xffffffffu, 0xffffffffu,
                               0xffffffffu},
                              {0xffffffffu, 0xffffffffu}) ==
        B{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu});
  CHECK(Philox4x32::bijection({0x243f6a88u, 0x85a308d3u, 0x13198a2eu,
                               0x03707344u},
                              {0xa4093822u, 0x299f31d0u}) ==
        B{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u});
}

TEST_CASE("streams are reproducible and distinct") {
  RandomStream a(42, StreamPurpose::kRho1, 3);
  RandomStream b(42, StreamPurpose::kRho1, 3);
  RandomStream c(42, StreamPurpose::kRho2, 3);
  RandomStream d(42, StreamPurpose::kRho1, 4);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 1000; ++i) {
    const auto x = a.next_u64();
    CHECK(x == b.next_u64());
    seen.insert(x);
    seen.insert(c.next_u64());
    seen.insert(d.next_u64());
  }
  CHECK(seen.size() == 3000);
}

TEST_CASE("uniform draws stay in [0, 1) with the right moments") {
  RandomStream r(1, StreamPurpose::kTest, 0);
  Welford w;
  for (int i = 0; i < 200000; ++i) {
    const double u = r.uniform();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    w.add(u);
  }
  CHECK(std::abs(w.mean - 0.5) < 4 * w.std_error());
  CHECK(w.variance() == doctest::Approx(1.0 / 12.0).epsilon(0.01));
}

TEST_CASE("Welford merge equals a single pass") {
  Welford all, left, right;
  for (int i = 0; i < 1000; ++i) {
    const double v = std::sin(i * 0.37) * 10 + i * 0.01;
    all.add(v);
    (i < 400 ? left : right).add(v);
  }
  left.merge(right);
  CHECK(left.count == all.count);
  CHECK(left.mean == doctest::Approx(all.mean).epsilon(1e-13));
  CHECK(left.variance() == doctest::Approx(all.variance()).epsilon(1e-12));
  Welford f;
  f.add(std::numeric_limits<double>::quiet_NaN());
  f.add(1.0);
  CHECK(f.flagged == 1);
  CHECK(f.count == 1);
}
