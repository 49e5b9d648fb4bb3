#pragma once

#include <array>
#include <vector>

namespace porofem {

// Quadrature on the reference triangle {(x,y): x,y >= 0, x+y <= 1}.
// Points are barycentric (l0,l1,l2); weights sum to the reference area 1/2.
struct QuadratureRule {
    std::vector<std::array<double, 3>> points;
    std::vector<double> weights;
    int exactness = 0;

    int size() const { return static_cast<int>(points.size()); }

    // 7-point symmetric rule, exact for polynomials up to degree 5.
    // Default rule for all forms in the solver.
    static const QuadratureRule& triangle_default();

    // Conical-product rule (Gauss-Legendre x Gauss-Jacobi) exact to the given
    // total degree; all weights positive. Used for oracles and error norms.
    static QuadratureRule triangle(int degree);
};

// Gauss-Legendre quadrature on [0,1] for edge integrals.
struct EdgeRule {
    std::vector<double> points;
    std::vector<double> weights;
    int exactness = 0;

    int size() const { return static_cast<int>(points.size()); }

    static const EdgeRule& gauss3();      // degree 5, default for edge terms
    static EdgeRule gauss(int n_points);  // degree 2n-1
};

}  // namespace porofem
