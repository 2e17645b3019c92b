#pragma once

#include <Eigen/Dense>
#include <functional>

#include "dgbh/basis.hpp"
#include "dgbh/mesh.hpp"

namespace dgbh {

using ScalarField = std::function<double(double, double)>;

/// Discontinuous piecewise-polynomial space of degree p: every element owns
/// its (p+1)(p+2)/2 nodal dofs, numbered contiguously per element.
struct DGSpace {
    int degree = 1;
    int dofs_per_element = 3;
    int num_elements = 0;
    int total_dofs = 0;
    ReferenceBasis basis;

    DGSpace(const Mesh& mesh, int p);

    int global_dof(int element, int local) const { return element * dofs_per_element + local; }
};

/// Affine map from the reference triangle to a physical triangle.
/// det(J) = 2*area; physical gradients are J^{-T} times reference gradients.
class AffineMap {
  public:
    AffineMap(const Mesh& mesh, int tri);
    AffineMap(Vec2 v0, Vec2 v1, Vec2 v2);

    Vec2 to_physical(Vec2 ref) const;
    Vec2 to_reference(Vec2 phys) const;
    Vec2 pullback_gradient(Vec2 ref_grad) const;
    double jacobian_det() const { return det_; }

  private:
    Vec2 origin_;
    double j00_, j01_, j10_, j11_;  // jacobian columns (v1-v0 | v2-v0)
    double det_;
};

/// Coefficients of the elementwise nodal interpolant of f.
Eigen::VectorXd interpolate_nodal(const Mesh& mesh, const DGSpace& space, const ScalarField& f);

/// Value / gradient of a DG coefficient vector on one element.
double dg_value(const Mesh& mesh, const DGSpace& space, const Eigen::VectorXd& coeffs, int element,
                Vec2 phys);
Vec2 dg_gradient(const Mesh& mesh, const DGSpace& space, const Eigen::VectorXd& coeffs,
                 int element, Vec2 phys);

}  // namespace dgbh
