#include "conerc/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace conerc::quad {

namespace {

// Golub-Welsch: eigen-decompose the Jacobi matrix of the orthogonal
// polynomial recurrence. Nodes are eigenvalues, weights mu0 * v_1^2.
Rule golub_welsch(const std::vector<double>& diag,
                  const std::vector<double>& offdiag, double mu0) {
    const int n = static_cast<int>(diag.size());
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) J(i, i) = diag[i];
    for (int i = 0; i + 1 < n; ++i) {
        J(i, i + 1) = offdiag[i];
        J(i + 1, i) = offdiag[i];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    Rule r;
    r.x.resize(n);
    r.w.resize(n);
    for (int i = 0; i < n; ++i) {
        r.x[i] = es.eigenvalues()(i);
        const double v = es.eigenvectors()(0, i);
        r.w[i] = mu0 * v * v;
    }
    return r;
}

} // namespace

Rule gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n >= 1");
    std::vector<double> d(n, 0.0), od(n - 1);
    for (int k = 1; k < n; ++k)
        od[k - 1] = k / std::sqrt(4.0 * k * k - 1.0);
    return golub_welsch(d, od, 2.0);
}

Rule gauss_legendre_ab(int n, double a, double b) {
    Rule r = gauss_legendre(n);
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    for (auto& x : r.x) x = c + h * x;
    for (auto& w : r.w) w *= h;
    return r;
}

Rule gauss_laguerre(int n, double alpha) {
    if (n < 1) throw std::invalid_argument("gauss_laguerre: n >= 1");
    if (alpha <= -1.0)
        throw std::invalid_argument("gauss_laguerre: alpha > -1 required");
    std::vector<double> d(n), od(n - 1);
    for (int k = 0; k < n; ++k) d[k] = 2.0 * k + alpha + 1.0;
    for (int k = 1; k < n; ++k) od[k - 1] = std::sqrt(k * (k + alpha));
    return golub_welsch(d, od, std::tgamma(alpha + 1.0));
}

Rule gauss_jacobi(int n, double alpha, double beta) {
    if (n < 1) throw std::invalid_argument("gauss_jacobi: n >= 1");
    if (alpha <= -1.0 || beta <= -1.0)
        throw std::invalid_argument("gauss_jacobi: alpha,beta > -1 required");
    std::vector<double> d(n), od(n - 1);
    const double ab = alpha + beta;
    d[0] = (beta - alpha) / (ab + 2.0);
    for (int k = 1; k < n; ++k) {
        const double t = 2.0 * k + ab;
        d[k] = (beta * beta - alpha * alpha) / (t * (t + 2.0));
    }
    // k=1 uses the cancelled form: the generic num/den pair shares the factor
    // (1+ab), which hits 0/0 when ab = -1
    if (n > 1)
        od[0] = std::sqrt(4.0 * (1.0 + alpha) * (1.0 + beta) /
                          ((ab + 2.0) * (ab + 2.0) * (ab + 3.0)));
    for (int k = 2; k < n; ++k) {
        const double t = 2.0 * k + ab;
        const double num = 4.0 * k * (k + alpha) * (k + beta) * (k + ab);
        const double den = t * t * (t + 1.0) * (t - 1.0);
        od[k - 1] = std::sqrt(num / den);
    }
    // mu0 = 2^(a+b+1) B(a+1, b+1)
    const double mu0 = std::exp((ab + 1.0) * std::log(2.0) +
                                std::lgamma(alpha + 1.0) +
                                std::lgamma(beta + 1.0) -
                                std::lgamma(ab + 2.0));
    return golub_welsch(d, od, mu0);
}

} // namespace conerc::quad
