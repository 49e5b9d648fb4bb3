#include "porofem/quadrature.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace porofem {

namespace {

// Gauss nodes/weights on [-1,1] for the Jacobi weight (1-x)^a (1+x)^b via
// Golub-Welsch: eigenvalues of the symmetric tridiagonal recurrence matrix.
void gauss_jacobi(int n, double a, double b, std::vector<double>& x, std::vector<double>& w) {
    if (n < 1) throw std::invalid_argument("gauss_jacobi: need at least one point");
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        double s = 2 * k + a + b;
        J(k, k) = (a + b == 0.0 && k == 0) ? 0.0 : (b * b - a * a) / (s * (s + 2));
        if (k > 0) {
            double num = 4.0 * k * (k + a) * (k + b) * (k + a + b);
            double den = s * s * (s + 1) * (s - 1);
            // k = 1 with a+b = 0 hits the removable 0/0 in (k+a+b)/(s-1)
            if (k == 1 && a + b == 0.0) { num = 4.0; den = s * s * (s + 1); }
            double beta = std::sqrt(num / den);
            J(k, k - 1) = J(k - 1, k) = beta;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    double mu0 = std::pow(2.0, a + b + 1) * std::tgamma(a + 1) * std::tgamma(b + 1) /
                 std::tgamma(a + b + 2);
    x.resize(n);
    w.resize(n);
    for (int k = 0; k < n; ++k) {
        x[k] = es.eigenvalues()(k);
        double v = es.eigenvectors()(0, k);
        w[k] = mu0 * v * v;
    }
}

}  // namespace

const QuadratureRule& QuadratureRule::triangle_default() {
    static const QuadratureRule rule = [] {
        QuadratureRule r;
        r.exactness = 5;
        const double s15 = std::sqrt(15.0);
        const double a1 = (6.0 - s15) / 21.0, a2 = (6.0 + s15) / 21.0;
        const double w0 = 9.0 / 80.0;
        const double w1 = (155.0 - s15) / 2400.0;
        const double w2 = (155.0 + s15) / 2400.0;
        r.points.push_back({1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0});
        r.weights.push_back(w0);
        auto orbit = [&r](double a, double w) {
            double c = 1.0 - 2.0 * a;
            r.points.push_back({c, a, a});
            r.points.push_back({a, c, a});
            r.points.push_back({a, a, c});
            r.weights.insert(r.weights.end(), 3, w);
        };
        orbit(a1, w1);
        orbit(a2, w2);
        return r;
    }();
    return rule;
}

QuadratureRule QuadratureRule::triangle(int degree) {
    if (degree < 1) degree = 1;
    int n = (degree + 2) / 2;  // 2n-1 >= degree
    std::vector<double> xg, wg, xj, wj;
    gauss_jacobi(n, 0.0, 0.0, xg, wg);
    gauss_jacobi(n, 1.0, 0.0, xj, wj);

    QuadratureRule r;
    r.exactness = 2 * n - 1;
    r.points.reserve(n * n);
    r.weights.reserve(n * n);
    for (int j = 0; j < n; ++j) {
        double eta = 0.5 * (xj[j] + 1.0);  // [0,1], Jacobi weight (1-eta)
        double vj = wj[j] / 4.0;
        for (int i = 0; i < n; ++i) {
            double xi = 0.5 * (xg[i] + 1.0);
            double ui = wg[i] / 2.0;
            double x = xi * (1.0 - eta);
            double y = eta;
            r.points.push_back({1.0 - x - y, x, y});
            r.weights.push_back(ui * vj);
        }
    }
    return r;
}

const EdgeRule& EdgeRule::gauss3() {
    static const EdgeRule rule = [] { return gauss(3); }();
    return rule;
}

EdgeRule EdgeRule::gauss(int n_points) {
    std::vector<double> x, w;
    gauss_jacobi(n_points, 0.0, 0.0, x, w);
    EdgeRule r;
    r.exactness = 2 * n_points - 1;
    r.points.resize(n_points);
    r.weights.resize(n_points);
    for (int k = 0; k < n_points; ++k) {
        r.points[k] = 0.5 * (x[k] + 1.0);
        r.weights[k] = 0.5 * w[k];
    }
    return r;
}

}  // namespace porofem
