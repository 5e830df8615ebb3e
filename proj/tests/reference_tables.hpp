#pragma once

// Printed reference tables, transcribed entry by entry.

#include <vector>

namespace cobweb::reference {

// zeta of the cobweb over sizes <1,2,3,4,5>, 15x15.
inline const std::vector<std::vector<int>> zeta_nat5 = {
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
    {0, 1, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
    {0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
    {0, 0, 0, 1, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1},
    {0, 0, 0, 0, 1, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1},
    {0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
    {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 1, 1, 1, 1},
    {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1, 1, 1, 1},
    {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 1, 1, 1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
};

// zeta over sizes <1,1,1,2,3>, leading 8x8 corner.
inline const std::vector<std::vector<int>> zeta_fib_prefix = {
    {1, 1, 1, 1, 1, 1, 1, 1},
    {0, 1, 1, 1, 1, 1, 1, 1},
    {0, 0, 1, 1, 1, 1, 1, 1},
    {0, 0, 0, 1, 0, 1, 1, 1},
    {0, 0, 0, 0, 1, 0, 0, 1},
    {0, 0, 0, 0, 0, 1, 0, 0},
    {0, 0, 0, 0, 0, 0, 1, 0},
    {0, 0, 0, 0, 0, 0, 0, 1},
};

// Mobius matrix over sizes <1,2,3,4,5,6>, leading 16x16 corner.
inline const std::vector<std::vector<int>> mobius_nat6 = {
    {1, -1, -1, 1, 1, 1, -2, -2, -2, -2, 6, 6, 6, 6, 6, -24},
    {0, 1, 0, -1, -1, -1, 2, 2, 2, 2, -6, -6, -6, -6, -6, 24},
    {0, 0, 1, -1, -1, -1, 2, 2, 2, 2, -6, -6, -6, -6, -6, 24},
    {0, 0, 0, 1, 0, 0, -1, -1, -1, -1, 3, 3, 3, 3, 3, -12},
    {0, 0, 0, 0, 1, 0, -1, -1, -1, -1, 3, 3, 3, 3, 3, -12},
    {0, 0, 0, 0, 0, 1, -1, -1, -1, -1, 3, 3, 3, 3, 3, -12},
    {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, -1, -1, -1, -1, -1, 4},
    {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1, -1, -1, -1, -1, 4},
    {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, -1, -1, -1, -1, -1, 4},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, -1, -1, -1, -1, 4},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, -1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, -1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
};

// Mobius matrix over sizes <1,1,1,2,3,5,8>, leading 16x16 corner.
inline const std::vector<std::vector<int>> mobius_fib_rooted = {
    {1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 1, -1, -1, 1, 1, 1, -2, -2, -2, -2, -2, 8, 8, 8},
    {0, 0, 0, 1, 0, -1, -1, -1, 2, 2, 2, 2, 2, -8, -8, -8},
    {0, 0, 0, 0, 1, -1, -1, -1, 2, 2, 2, 2, 2, -8, -8, -8},
    {0, 0, 0, 0, 0, 1, 0, 0, -1, -1, -1, -1, -1, 4, 4, 4},
    {0, 0, 0, 0, 0, 0, 1, 0, -1, -1, -1, -1, -1, 4, 4, 4},
    {0, 0, 0, 0, 0, 0, 0, 1, -1, -1, -1, -1, -1, 4, 4, 4},
    {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1, -1, -1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, -1, -1, -1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1, -1, -1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, -1, -1, -1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, -1, -1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
};

// coding matrix for F = nat, rows 1..5 of 6 columns.
inline const std::vector<std::vector<int>> coding_nat = {
    {1, -1, 1, -2, 6, -24},
    {0, 1, -1, 2, -6, 24},
    {0, 0, 1, -1, 3, -12},
    {0, 0, 0, 1, -1, 4},
    {0, 0, 0, 0, 1, -1},
};

// coding matrix for F = <1,1,3,3,3,3>, rows 1..5.
inline const std::vector<std::vector<int>> coding_1_1_3 = {
    {1, -1, 0, 0, 0, 0},
    {0, 1, -1, 2, -4, 8},
    {0, 0, 1, -1, 2, -4},
    {0, 0, 0, 1, -1, 2},
    {0, 0, 0, 0, 1, -1},
};

// coding matrix for F = <1,3,3,3,3,3>, rows 1..5.
inline const std::vector<std::vector<int>> coding_1_3 = {
    {1, -1, 2, -4, 8, -16},
    {0, 1, -1, 2, -4, 8},
    {0, 0, 1, -1, 2, -4},
    {0, 0, 0, 1, -1, 2},
    {0, 0, 0, 0, 1, -1},
};

}  // namespace cobweb::reference
