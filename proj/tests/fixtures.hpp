#pragma once

#include <string>
#include <vector>

#include "foldmatch/folded.hpp"
#include "foldmatch/geometry.hpp"

namespace fixtures {

inline fm::Triangulation fix_a() { return fm::Triangulation(6, {{3, 5}, {0, 3}, {0, 2}}); }
inline fm::Diag fix_a_gamma() { return {1, 4}; }

inline fm::ThetaTriangulation fix_b() { return fm::make_theta(3, {{2, 4}, {1, 4}, {4, 0}, {5, 0}, {6, 0}}, 4, 0); }
inline fm::Orbit fix_b_orbit() { return fm::orbit_of({2, 7}, 3); }

inline fm::ThetaTriangulation fix_c() { return fm::make_theta(3, {{0, 2}, {2, 4}, {4, 0}, {4, 6}, {6, 0}}, 4, 0); }
inline fm::Orbit fix_c_orbit() { return fm::orbit_of({1, 7}, 3); }

inline const std::string fix_a_F = "1 + y1 + y3 + y1*y3 + y1*y2*y3";
inline const std::string fix_b_F =
    "1 + 2*y3 + y3^2 + 2*y2*y3 + 2*y2*y3^2 + y1*y2*y3^2 + y2^2*y3^2 + y1*y2^2*y3^2";
inline const std::string fix_c_F = "1 + y1 + y1*y3 + y1*y2*y3";
inline const std::vector<int> fix_b_g{1, 0, -2};
inline const std::vector<int> fix_c_g{-1, 0, 0};

inline std::string data(const std::string &name) { return std::string(FOLDMATCH_TEST_DATA) + "/" + name; }

}  // namespace fixtures
