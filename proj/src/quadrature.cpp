#include "dgbh/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dgbh {

namespace {

// Gauss-Legendre nodes/weights on [-1,1], Newton on the Legendre recurrence.
// Done in long double so the downstream exactness checks sit at double eps.
void gauss_legendre(int q, std::vector<long double>& x, std::vector<long double>& w) {
    x.assign(q, 0.0L);
    w.assign(q, 0.0L);
    const long double pi = 3.14159265358979323846264338327950288L;
    for (int k = 0; k < q; ++k) {
        long double t = std::cos(pi * (k + 0.75L) / (q + 0.5L));
        long double dp = 0.0L;
        for (int iter = 0; iter < 100; ++iter) {
            long double p0 = 1.0L, p1 = t;
            for (int j = 2; j <= q; ++j) {
                long double p2 = ((2 * j - 1) * t * p1 - (j - 1) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = q * (t * p1 - p0) / (t * t - 1.0L);
            long double dt = p1 / dp;
            t -= dt;
            if (std::fabs(dt) < 1e-19L) break;
        }
        x[k] = t;
        w[k] = 2.0L / ((1.0L - t * t) * dp * dp);
    }
}

// Same rule mapped to [0,1].
void gauss_legendre_unit(int q, std::vector<long double>& x, std::vector<long double>& w) {
    gauss_legendre(q, x, w);
    for (int k = 0; k < q; ++k) {
        x[k] = 0.5L * (x[k] + 1.0L);
        w[k] *= 0.5L;
    }
}

}  // namespace

QuadratureRule triangle_quadrature(int d) {
    if (d < 1 || d > max_triangle_exactness)
        throw std::invalid_argument("triangle_quadrature: exactness degree must be in [1, " +
                                    std::to_string(max_triangle_exactness) + "], got " +
                                    std::to_string(d));

    // Conical product rule through the collapsed-square map
    //   (s,t) in [0,1]^2  ->  (x,y) = (s(1-t), t),  jacobian (1-t).
    // A monomial x^a y^b pulls back to degree a in s and a+b+1 in t.
    const int qs = (d + 2) / 2;      // exactness d in s
    const int qt = (d + 3) / 2;      // exactness d+1 in t
    std::vector<long double> xs, ws, xt, wt;
    gauss_legendre_unit(qs, xs, ws);
    gauss_legendre_unit(qt, xt, wt);

    QuadratureRule rule;
    rule.exactness_degree = d;
    rule.points.reserve(qs * qt);
    rule.weights.reserve(qs * qt);
    for (int i = 0; i < qs; ++i) {
        for (int j = 0; j < qt; ++j) {
            long double s = xs[i], t = xt[j];
            rule.points.push_back({double(s * (1.0L - t)), double(t)});
            rule.weights.push_back(double(ws[i] * wt[j] * (1.0L - t)));
        }
    }
    return rule;
}

QuadratureRule edge_quadrature(int d) {
    if (d < 1) throw std::invalid_argument("edge_quadrature: exactness degree must be >= 1");
    const int q = (d + 2) / 2;  // ceil((d+1)/2)
    std::vector<long double> x, w;
    gauss_legendre_unit(q, x, w);

    QuadratureRule rule;
    rule.exactness_degree = d;
    rule.points.reserve(q);
    rule.weights.reserve(q);
    for (int k = 0; k < q; ++k) {
        rule.points.push_back({double(x[k]), 0.0});
        rule.weights.push_back(double(w[k]));
    }
    return rule;
}

}  // namespace dgbh
