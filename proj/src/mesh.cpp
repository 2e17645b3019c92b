#include "dgbh/mesh.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <stdexcept>

namespace dgbh {

Vec2 Mesh::centroid(int tri) const {
    const Triangle& t = triangles[tri];
    Vec2 a = vertex(t.vertex_ids[0]);
    Vec2 b = vertex(t.vertex_ids[1]);
    Vec2 c = vertex(t.vertex_ids[2]);
    return {(a.x + b.x + c.x) / 3.0, (a.y + b.y + c.y) / 3.0};
}

namespace {

double signed_area(Vec2 a, Vec2 b, Vec2 c) {
    return 0.5 * ((b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y));
}

double longest_edge(Vec2 a, Vec2 b, Vec2 c) {
    return std::max({norm(b - a), norm(c - b), norm(a - c)});
}

}  // namespace

Mesh build_uniform_mesh(int n) {
    if (n < 1) throw std::invalid_argument("build_uniform_mesh: n must be >= 1");

    Mesh mesh;
    mesh.n = n;

    const int verts_per_side = n + 1;
    mesh.vertices.reserve(verts_per_side * verts_per_side);
    for (int j = 0; j < verts_per_side; ++j)
        for (int i = 0; i < verts_per_side; ++i)
            mesh.vertices.push_back({double(i) / n, double(j) / n});

    auto vid = [&](int i, int j) { return j * verts_per_side + i; };

    mesh.triangles.reserve(2 * n * n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            int v00 = vid(i, j);
            int v10 = vid(i + 1, j);
            int v11 = vid(i + 1, j + 1);
            int v01 = vid(i, j + 1);
            // diagonal v00 -> v11, lower triangle first
            mesh.triangles.push_back({{v00, v10, v11}});
            mesh.triangles.push_back({{v00, v11, v01}});
        }
    }

    mesh.h = 0.0;
    for (Triangle& t : mesh.triangles) {
        Vec2 a = mesh.vertex(t.vertex_ids[0]);
        Vec2 b = mesh.vertex(t.vertex_ids[1]);
        Vec2 c = mesh.vertex(t.vertex_ids[2]);
        t.area = signed_area(a, b, c);
        if (t.area <= 0.0) throw std::logic_error("build_uniform_mesh: not counterclockwise");
        t.diameter = longest_edge(a, b, c);
        mesh.h = std::max(mesh.h, t.diameter);
    }

    // Edge table in discovery order over triangles. The first triangle that
    // touches an edge has the smaller element id, so it becomes first_tri.
    std::map<std::pair<int, int>, int> edge_index;
    for (int e = 0; e < int(mesh.triangles.size()); ++e) {
        const auto& v = mesh.triangles[e].vertex_ids;
        for (int k = 0; k < 3; ++k) {
            int va = v[k];
            int vb = v[(k + 1) % 3];
            auto key = std::minmax(va, vb);
            auto it = edge_index.find(key);
            if (it == edge_index.end()) {
                Edge edge;
                edge.vertex_ids = {key.first, key.second};
                edge.length = norm(mesh.vertex(key.second) - mesh.vertex(key.first));
                edge.first_tri = e;
                edge_index.emplace(key, int(mesh.edges.size()));
                mesh.edges.push_back(edge);
            } else {
                Edge& edge = mesh.edges[it->second];
                edge.second_tri = e;
                edge.kind = EdgeKind::interior;
            }
        }
    }

    for (int k = 0; k < int(mesh.edges.size()); ++k) {
        Edge& edge = mesh.edges[k];
        Vec2 a = mesh.vertex(edge.vertex_ids[0]);
        Vec2 b = mesh.vertex(edge.vertex_ids[1]);
        Vec2 t = b - a;
        Vec2 nrm{t.y / edge.length, -t.x / edge.length};
        Vec2 mid{0.5 * (a.x + b.x), 0.5 * (a.y + b.y)};
        // orient away from first_tri
        if (dot(nrm, mesh.centroid(edge.first_tri) - mid) > 0.0) nrm = -1.0 * nrm;
        edge.normal = nrm;
    }

    return mesh;
}

EdgePartition classify_edges(const Mesh& mesh) {
    EdgePartition part;
    for (int k = 0; k < int(mesh.edges.size()); ++k) {
        if (mesh.edges[k].is_interior())
            part.interior.push_back(k);
        else
            part.boundary.push_back(k);
    }
    return part;
}

Vec2 edge_normal(const Mesh& mesh, int edge_id) {
    return mesh.edges.at(edge_id).normal;
}

Vec2 edge_midpoint(const Mesh& mesh, int edge_id) {
    const Edge& e = mesh.edges.at(edge_id);
    Vec2 a = mesh.vertex(e.vertex_ids[0]);
    Vec2 b = mesh.vertex(e.vertex_ids[1]);
    return {0.5 * (a.x + b.x), 0.5 * (a.y + b.y)};
}

void write_mesh_dump(const Mesh& mesh, std::ostream& out) {
    out.precision(17);
    for (const Vertex& v : mesh.vertices) out << "v " << v.x << ' ' << v.y << '\n';
    for (const Triangle& t : mesh.triangles)
        out << "t " << t.vertex_ids[0] << ' ' << t.vertex_ids[1] << ' ' << t.vertex_ids[2] << '\n';
    for (const Edge& e : mesh.edges) {
        out << "e " << e.vertex_ids[0] << ' ' << e.vertex_ids[1] << ' '
            << (e.is_interior() ? 'I' : 'B') << ' ' << e.first_tri;
        if (e.is_interior()) out << ' ' << e.second_tri;
        out << '\n';
    }
}

}  // namespace dgbh
