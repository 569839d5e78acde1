#pragma once

#include <array>
#include <vector>

namespace knotinv::detail {

extern const std::vector<std::array<int, 3>> k01Lattice;  // 26 steps
extern const std::vector<std::array<int, 3>> k31Lattice;  // 24 steps
extern const std::vector<std::array<int, 3>> k41Lattice;  // 30 steps
extern const std::vector<std::array<int, 3>> k51Lattice;  // 34 steps

}  // namespace knotinv::detail
