#pragma once

#include <string>

#include "foldmatch/snake.hpp"

namespace fm {

// edge labels joined by commas, tau indices as numbers, other segments as [a,b]
std::string edge_label(const SnakeGraph &G, int e);

std::string to_dot(const SnakeGraph &G, const Matching *overlay = nullptr);
std::string to_tikz(const SnakeGraph &G, const Matching *overlay = nullptr);

}  // namespace fm
