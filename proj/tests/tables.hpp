// Published reference rows used across the test suites: resonance centers E
// and half-widths Gamma/2, each block as {graphic E, graphic G/2,
// analytic E, analytic G/2}.
#ifndef SQRES_TESTS_TABLES_HPP
#define SQRES_TESTS_TABLES_HPP

#include <array>

namespace tables {

struct Row {
    double Eg, Gg, Ea, Ga;
};

// well V0=1000, b=20 (n_inf = 202), m = 0..7
inline constexpr std::array<Row, 8> well_1000_20{{
    {6.798680, 0.527888, 6.798344, 0.521472},
    {16.790717, 0.843441, 16.791319, 0.819544},
    {26.832718, 1.084738, 26.833641, 1.036023},
    {36.926378, 1.295156, 36.925312, 1.215324},
    {47.065373, 1.489006, 47.066330, 1.372098},
    {57.258014, 1.673245, 57.256697, 1.513363},
    {67.497189, 1.852008, 67.496412, 1.643124},
    {77.786734, 2.028109, 77.785474, 1.763421},
}};

// well V0=743, b=22 (n_inf = 191), m = 0..7
inline constexpr std::array<Row, 8> well_743_22{{
    {0.911072, 0.174723, 0.911235, 0.173561},
    {8.720839, 0.547966, 8.721274, 0.536941},
    {16.571405, 0.768964, 16.572095, 0.740160},
    {24.463107, 0.951658, 24.463700, 0.899287},
    {32.397141, 1.116079, 32.396089, 1.034864},
    {40.370347, 1.270414, 40.369261, 1.155214},
    {48.381943, 1.419086, 48.383217, 1.264691},
    {56.436735, 1.564930, 56.437956, 1.365912},
}};

// barrier V0=1000, b=5, n = 1..8
inline constexpr std::array<Row, 8> barrier_1000_5{{
    {1000.394784, 0.009995, 1000.394784, 0.009987},
    {1001.579136, 0.040036, 1001.579136, 0.039949},
    {1003.553057, 0.090291, 1003.553057, 0.089886},
    {1006.316546, 0.161043, 1006.316546, 0.159797},
    {1009.869604, 0.252698, 1009.869604, 0.249683},
    {1014.212230, 0.365794, 1014.212230, 0.359544},
    {1019.344424, 0.501014, 1019.344424, 0.489379},
    {1025.266187, 0.659204, 1025.266187, 0.639189},
}};

// barrier V0=1000, b=10, n = 1..8
inline constexpr std::array<Row, 8> barrier_1000_10{{
    {1000.098696, 0.001248, 1000.098696, 0.001248},
    {1000.394784, 0.004996, 1000.394784, 0.004993},
    {1000.888264, 0.011248, 1000.888264, 0.011235},
    {1001.579136, 0.020013, 1001.579136, 0.019974},
    {1002.467401, 0.031303, 1002.467401, 0.031210},
    {1003.553057, 0.045134, 1003.553057, 0.044943},
    {1004.836106, 0.061525, 1004.836106, 0.061172},
    {1006.316546, 0.080501, 1006.316546, 0.079898},
}};

// Exact bound levels of the well V0=16, b=5 (theta = 10), to 6 decimals.
inline constexpr std::array<double, 7> well_16_5_levels{
    -15.673935, -14.698263, -13.081239, -10.839456,
    -8.004924,  -4.647942,  -1.011073,
};

} // namespace tables

#endif
