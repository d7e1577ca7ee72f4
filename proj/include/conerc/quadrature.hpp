#pragma once

#include <vector>

namespace conerc::quad {

struct Rule {
    std::vector<double> x;
    std::vector<double> w;
    std::size_t size() const { return x.size(); }
};

// nodes/weights on [-1,1], weight 1
Rule gauss_legendre(int n);

// affine image of gauss_legendre on [a,b]
Rule gauss_legendre_ab(int n, double a, double b);

// [0,inf), weight x^alpha e^{-x}, alpha > -1
Rule gauss_laguerre(int n, double alpha);

// [-1,1], weight (1-x)^alpha (1+x)^beta, alpha,beta > -1
Rule gauss_jacobi(int n, double alpha, double beta);

} // namespace conerc::quad
