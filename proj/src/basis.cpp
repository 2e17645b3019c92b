#include "dgbh/basis.hpp"

#include <Eigen/Dense>
#include <stdexcept>

namespace dgbh {

namespace {

double int_pow(double x, int e) {
    double r = 1.0;
    for (int k = 0; k < e; ++k) r *= x;
    return r;
}

}  // namespace

ReferenceBasis::ReferenceBasis(int degree) : degree_(degree) {
    if (degree < 1 || degree > 3)
        throw std::invalid_argument("ReferenceBasis: degree must be 1, 2 or 3");

    for (int j = 0; j <= degree; ++j)
        for (int i = 0; i + j <= degree; ++i) {
            nodes_.push_back({double(i) / degree, double(j) / degree});
            monomials_.push_back({i, j});
        }

    const int m = size();
    Eigen::MatrixXd vandermonde(m, m);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c)
            vandermonde(r, c) =
                int_pow(nodes_[r].x, monomials_[c][0]) * int_pow(nodes_[r].y, monomials_[c][1]);

    Eigen::MatrixXd inv = vandermonde.fullPivLu().inverse();
    coeff_.resize(m * m);
    for (int c = 0; c < m; ++c)
        for (int r = 0; r < m; ++r) coeff_[c * m + r] = inv(r, c);  // column c: phi_c
}

double ReferenceBasis::value(int i, double x, double y) const {
    const int m = size();
    double acc = 0.0;
    for (int j = 0; j < m; ++j)
        acc += coeff_[i * m + j] * int_pow(x, monomials_[j][0]) * int_pow(y, monomials_[j][1]);
    return acc;
}

Vec2 ReferenceBasis::gradient(int i, double x, double y) const {
    const int m = size();
    Vec2 g;
    for (int j = 0; j < m; ++j) {
        const double c = coeff_[i * m + j];
        const int a = monomials_[j][0];
        const int b = monomials_[j][1];
        if (a > 0) g.x += c * a * int_pow(x, a - 1) * int_pow(y, b);
        if (b > 0) g.y += c * b * int_pow(x, a) * int_pow(y, b - 1);
    }
    return g;
}

void ReferenceBasis::values(double x, double y, double* out) const {
    for (int i = 0; i < size(); ++i) out[i] = value(i, x, y);
}

void ReferenceBasis::gradients(double x, double y, Vec2* out) const {
    for (int i = 0; i < size(); ++i) out[i] = gradient(i, x, y);
}

ReferenceBasis reference_basis(int p) { return ReferenceBasis(p); }

}  // namespace dgbh
