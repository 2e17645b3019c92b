#include "dgbh/fespace.hpp"

#include <cmath>
#include <stdexcept>

namespace dgbh {

DGSpace::DGSpace(const Mesh& mesh, int p)
    : degree(p),
      dofs_per_element((p + 1) * (p + 2) / 2),
      num_elements(int(mesh.triangles.size())),
      total_dofs(int(mesh.triangles.size()) * (p + 1) * (p + 2) / 2),
      basis(p) {}

AffineMap::AffineMap(const Mesh& mesh, int tri)
    : AffineMap(mesh.vertex(mesh.triangles[tri].vertex_ids[0]),
                mesh.vertex(mesh.triangles[tri].vertex_ids[1]),
                mesh.vertex(mesh.triangles[tri].vertex_ids[2])) {}

AffineMap::AffineMap(Vec2 v0, Vec2 v1, Vec2 v2) : origin_(v0) {
    j00_ = v1.x - v0.x;
    j10_ = v1.y - v0.y;
    j01_ = v2.x - v0.x;
    j11_ = v2.y - v0.y;
    det_ = j00_ * j11_ - j01_ * j10_;
    if (det_ == 0.0) throw std::invalid_argument("AffineMap: degenerate triangle");
}

Vec2 AffineMap::to_physical(Vec2 ref) const {
    return {origin_.x + j00_ * ref.x + j01_ * ref.y, origin_.y + j10_ * ref.x + j11_ * ref.y};
}

Vec2 AffineMap::to_reference(Vec2 phys) const {
    const double dx = phys.x - origin_.x;
    const double dy = phys.y - origin_.y;
    return {(j11_ * dx - j01_ * dy) / det_, (-j10_ * dx + j00_ * dy) / det_};
}

Vec2 AffineMap::pullback_gradient(Vec2 g) const {
    // J^{-T} g
    return {(j11_ * g.x - j10_ * g.y) / det_, (-j01_ * g.x + j00_ * g.y) / det_};
}

Eigen::VectorXd interpolate_nodal(const Mesh& mesh, const DGSpace& space, const ScalarField& f) {
    Eigen::VectorXd coeffs(space.total_dofs);
    for (int e = 0; e < space.num_elements; ++e) {
        AffineMap map(mesh, e);
        for (int i = 0; i < space.dofs_per_element; ++i) {
            Vec2 p = map.to_physical(space.basis.nodes()[i]);
            coeffs[space.global_dof(e, i)] = f(p.x, p.y);
        }
    }
    return coeffs;
}

double dg_value(const Mesh& mesh, const DGSpace& space, const Eigen::VectorXd& coeffs, int element,
                Vec2 phys) {
    AffineMap map(mesh, element);
    Vec2 ref = map.to_reference(phys);
    double acc = 0.0;
    for (int i = 0; i < space.dofs_per_element; ++i)
        acc += coeffs[space.global_dof(element, i)] * space.basis.value(i, ref.x, ref.y);
    return acc;
}

Vec2 dg_gradient(const Mesh& mesh, const DGSpace& space, const Eigen::VectorXd& coeffs,
                 int element, Vec2 phys) {
    AffineMap map(mesh, element);
    Vec2 ref = map.to_reference(phys);
    Vec2 acc;
    for (int i = 0; i < space.dofs_per_element; ++i) {
        Vec2 g = map.pullback_gradient(space.basis.gradient(i, ref.x, ref.y));
        double c = coeffs[space.global_dof(element, i)];
        acc.x += c * g.x;
        acc.y += c * g.y;
    }
    return acc;
}

}  // namespace dgbh
