#pragma once

#include <array>
#include <vector>

#include "dgbh/geometry.hpp"

namespace dgbh {

/// Lagrange basis of degree p on uniformly spaced nodes of the reference
/// triangle {x,y >= 0, x+y <= 1}. Nodal: phi_i(node_j) = delta_ij.
class ReferenceBasis {
  public:
    explicit ReferenceBasis(int degree);

    int degree() const { return degree_; }
    int size() const { return int(nodes_.size()); }
    const std::vector<Vec2>& nodes() const { return nodes_; }

    double value(int i, double x, double y) const;
    Vec2 gradient(int i, double x, double y) const;

    /// All basis values / gradients at one point; out must hold size() entries.
    void values(double x, double y, double* out) const;
    void gradients(double x, double y, Vec2* out) const;

  private:
    int degree_ = 0;
    std::vector<Vec2> nodes_;
    std::vector<std::array<int, 2>> monomials_;  // exponents (a, b)
    std::vector<double> coeff_;                  // column i = monomial coefficients of phi_i
};

/// Valid degrees are 1, 2, 3.
ReferenceBasis reference_basis(int p);

}  // namespace dgbh
