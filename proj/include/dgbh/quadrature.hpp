#pragma once

#include <vector>

#include "dgbh/geometry.hpp"

namespace dgbh {

/// Quadrature rule on the reference triangle {x,y >= 0, x+y <= 1} or on the
/// unit edge [0,1]. Triangle rules use both point coordinates; edge rules
/// store the 1D parameter in .x (with .y = 0).
struct QuadratureRule {
    std::vector<Vec2> points;
    std::vector<double> weights;
    int exactness_degree = 0;

    int size() const { return int(points.size()); }
};

constexpr int max_triangle_exactness = 20;

/// Rule exact for all monomials of total degree <= d on the reference
/// triangle. All weights positive, all points strictly inside.
QuadratureRule triangle_quadrature(int d);

/// Gauss-Legendre rule on [0,1] with ceil((d+1)/2) points.
QuadratureRule edge_quadrature(int d);

}  // namespace dgbh
