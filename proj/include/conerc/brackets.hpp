#pragma once

#include "conerc/qseries.hpp"

#include <array>
#include <complex>
#include <vector>

namespace conerc::rcb {

using cplx = std::complex<double>;

// classical bracket coefficients: entry l multiplies f^(j-l) g^(l),
// value (-1)^l C(k1+j-1, l) C(k2+j-1, j-l)
std::vector<rational> rcb_coeffs(int k1, int k2, int j);

// rank-one scalar coefficients: entry n multiplies f^(n) g^(m-n),
// value C(m,n) (-1)^n / ((nu1)_n (nu2)_{m-n})
std::vector<rational> gen_rcb_scalar_coeffs(const rational& nu1,
                                            const rational& nu2, int m);

// bracket on q-expansions with D = q d/dq; weight = k1 + k2 + 2j
QSeries rcb_qseries(const QSeries& f, const QSeries& g, int j);

struct Moebius {
    double a, b, c, d;
};

// closed-form holomorphic test functions on the upper half plane
struct TestFunction {
    enum class Tag { ExpIA, PowZW };
    Tag tag;
    double a = 1.0; // exp(i a z)
    cplx w0;        // (z - w0)^(-k)
    int k = 1;

    static TestFunction exp_ia(double a);
    static TestFunction pow_zw(cplx w0, int k);
    cplx deriv(int ell, cplx z) const; // l-th derivative, closed form
};

cplx moebius_apply(const Moebius& g, cplx z);
cplx slash_action(const TestFunction& f, int k, const Moebius& g, cplx z);

// max over points of |F_j(f|g1, g|g2)(z) - (F_j(f,g))|g(z)|; scale_out gets
// the max magnitude of either side for relative comparisons
double covariance_residual(const TestFunction& f, const TestFunction& g,
                           int k1, int k2, int j, const Moebius& gamma,
                           const std::vector<cplx>& points,
                           double* scale_out = nullptr);

// exact expansion over the monomials E4^a E6^b of matching weight;
// throws std::domain_error when no exact representation exists
struct BasisExpansion {
    int weight = 0;
    std::vector<std::array<int, 2>> monomials; // (a, b) with 4a + 6b = weight
    std::vector<rational> coords;
};
BasisExpansion express_in_modular_basis(const QSeries& f);

} // namespace conerc::rcb
