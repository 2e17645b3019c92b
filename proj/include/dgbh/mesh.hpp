#pragma once

#include <array>
#include <iosfwd>
#include <vector>

#include "dgbh/geometry.hpp"

namespace dgbh {

struct Vertex {
    double x = 0.0;
    double y = 0.0;
};

struct Triangle {
    std::array<int, 3> vertex_ids{};  // counterclockwise
    double area = 0.0;
    double diameter = 0.0;  // longest edge
};

enum class EdgeKind { interior, boundary };

struct Edge {
    std::array<int, 2> vertex_ids{};  // sorted ascending
    double length = 0.0;
    EdgeKind kind = EdgeKind::boundary;
    int first_tri = -1;   // adjacent element with the smaller id
    int second_tri = -1;  // -1 on boundary edges
    Vec2 normal;          // unit, perpendicular, outward from first_tri

    bool is_interior() const { return kind == EdgeKind::interior; }
};

/// Structured triangulation of the unit square with full edge topology.
struct Mesh {
    int n = 0;       // subdivisions per side
    double h = 0.0;  // max element diameter
    std::vector<Vertex> vertices;
    std::vector<Triangle> triangles;
    std::vector<Edge> edges;

    Vec2 vertex(int id) const { return {vertices[id].x, vertices[id].y}; }
    Vec2 centroid(int tri) const;
};

/// n x n grid of unit-square cells, each cut along the lower-left to
/// upper-right diagonal. Vertices and cells are numbered row-major, the
/// lower triangle of each cell before the upper one.
Mesh build_uniform_mesh(int n);

struct EdgePartition {
    std::vector<int> interior;
    std::vector<int> boundary;
};

EdgePartition classify_edges(const Mesh& mesh);

Vec2 edge_normal(const Mesh& mesh, int edge_id);

Vec2 edge_midpoint(const Mesh& mesh, int edge_id);

/// Plain-text dump for debugging: "v x y", "t i j k", "e i j kind tri1 [tri2]".
void write_mesh_dump(const Mesh& mesh, std::ostream& out);

}  // namespace dgbh
