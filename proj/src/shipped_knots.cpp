// Generated from data/*.knot by tools/scripts/lattice_knots.py output.
#include "shipped_knots.hpp"

namespace knotinv::detail {

const std::vector<std::array<int, 3>> k01Lattice = {
    {2, 1, -1}, {2, 2, -1}, {2, 3, -1}, {1, 3, -1}, {0, 3, -1}, {-1, 3, -1},
    {-2, 3, -1}, {-2, 2, -1}, {-3, 2, -1}, {-4, 2, -1}, {-5, 2, -1}, {-5, 1, -1},
    {-5, 1, 0}, {-5, 0, 0}, {-5, -1, 0}, {-4, -1, 0}, {-3, -1, 0}, {-3, -2, 0},
    {-2, -2, 0}, {-1, -2, 0}, {0, -2, 0}, {1, -2, 0}, {2, -2, 0}, {2, -1, 0},
    {2, 0, 0}, {2, 1, 0},
};

const std::vector<std::array<int, 3>> k31Lattice = {
    {1, 1, 0}, {0, 1, 0}, {-1, 1, 0}, {-1, 0, 0}, {-1, -1, 0}, {-1, -2, 0},
    {-1, -2, -1}, {0, -2, -1}, {0, -2, -2}, {0, -1, -2}, {0, 0, -2}, {0, 0, -1},
    {0, 0, 0}, {0, -1, 0}, {0, -1, 1}, {-1, -1, 1}, {-2, -1, 1}, {-2, -1, 0},
    {-2, -1, -1}, {-1, -1, -1}, {0, -1, -1}, {1, -1, -1}, {1, 0, -1}, {1, 0, 0},
};

const std::vector<std::array<int, 3>> k41Lattice = {
    {0, 0, -1}, {0, 0, -2}, {-1, 0, -2}, {-2, 0, -2}, {-2, 0, -1}, {-2, 0, 0},
    {-2, 0, 1}, {-1, 0, 1}, {-1, -1, 1}, {-1, -2, 1}, {-1, -2, 0}, {-1, -2, -1},
    {-1, -1, -1}, {-1, 0, -1}, {-1, 1, -1}, {0, 1, -1}, {1, 1, -1}, {1, 0, -1},
    {1, -1, -1}, {1, -1, 0}, {0, -1, 0}, {-1, -1, 0}, {-2, -1, 0}, {-2, -1, 1},
    {-2, -1, 2}, {-2, 0, 2}, {-1, 0, 2}, {0, 0, 2}, {0, 0, 1}, {0, 0, 0},
};

const std::vector<std::array<int, 3>> k51Lattice = {
    {1, 1, 0}, {0, 1, 0}, {0, 1, 1}, {0, 1, 2}, {-1, 1, 2}, {-2, 1, 2},
    {-2, 1, 1}, {-2, 1, 0}, {-1, 1, 0}, {-1, 0, 0}, {-1, -1, 0}, {0, -1, 0},
    {1, -1, 0}, {1, 0, 0}, {1, 0, 1}, {1, 1, 1}, {1, 2, 1}, {0, 2, 1},
    {-1, 2, 1}, {-1, 1, 1}, {-1, 0, 1}, {-2, 0, 1}, {-2, 0, 0}, {-2, 0, -1},
    {-1, 0, -1}, {0, 0, -1}, {0, 0, 0}, {0, 0, 1}, {0, 0, 2}, {1, 0, 2},
    {2, 0, 2}, {2, 0, 1}, {2, 1, 1}, {2, 1, 0},
};

}  // namespace knotinv::detail
