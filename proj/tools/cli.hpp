#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "foldmatch/geometry.hpp"

namespace fm::cli {

struct Instance {
    int rank = 0;
    Kind kind = Kind::A;
    std::vector<std::array<int, 2>> triangulation;
    std::optional<std::array<int, 2>> target;

    Triangulation polygon() const;          // kind A
    ThetaTriangulation theta() const;       // kind B/C
};

// throws fm::Error (ParseError or a validation code)
Instance parse_instance(const std::string &text);
std::string instance_json(const Instance &inst);

int exit_code(ErrorCode c);
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace fm::cli
