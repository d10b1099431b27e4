#pragma once

// The 27-coordinate binary code from the weak-order example: three 9x3
// matrices read row by row.

#include <vector>

#include "posetcodes/codes.hpp"

namespace fixtures {

namespace pc = posetcodes;

inline std::vector<std::vector<pc::Element>> example_matrices()
{
    // clang-format off
    const std::vector<std::vector<std::vector<pc::Element>>> m = {
        {{1,0,0},{1,0,0},{1,0,0},{0,0,0},{0,0,0},{0,0,0},{0,0,0},{0,0,0},{0,0,0}},
        {{0,0,0},{0,0,0},{0,0,0},{0,1,0},{0,1,0},{0,1,0},{0,0,1},{0,0,0},{0,0,0}},
        {{0,0,0},{0,0,0},{0,0,0},{0,0,0},{0,0,0},{0,1,0},{0,0,1},{0,0,1},{0,0,1}},
    };
    // clang-format on
    std::vector<std::vector<pc::Element>> rows;
    for (const auto& mat : m) {
        std::vector<pc::Element> row;
        for (const auto& r : mat)
            row.insert(row.end(), r.begin(), r.end());
        rows.push_back(row);
    }
    return rows;
}

inline std::vector<pc::VectorFq> example_generators()
{
    const auto field = pc::Field::get(2);
    std::vector<pc::VectorFq> out;
    for (const auto& row : example_matrices())
        out.emplace_back(field, row);
    return out;
}

inline pc::Subspace example_code()
{
    return pc::span(pc::Field::get(2), 27, example_generators());
}

inline pc::Poset weak_3x9()
{
    return pc::Poset::weak_order(std::vector<std::size_t>(9, 3));
}

} // namespace fixtures
