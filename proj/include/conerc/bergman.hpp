#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace conerc::bergman {

using cplx = std::complex<double>;

// coef * u^a * exp(-b u) on the half line
struct ConeFunction {
    double coef = 1.0;
    double a = 0.0;
    double b = 1.0;

    double operator()(double u) const;
};

// truncated strip quadrature: dyadically graded panels in x up to +-x_max
// and in y over [y_min, y_max]; refine doubles the nodes per panel
struct StripScheme {
    double x_max = 1024.0;
    double y_min = 2e-4;
    double y_max = 1024.0;
    int nodes_per_panel = 14;
    int refine = 0;
};

using TubeFunction = std::function<cplx(cplx)>;

// (2 pi)^(-1/2) int_0^inf f(u) exp(izu) du, Im z > 0
cplx laplace_closed(const ConeFunction& f, cplx z);
cplx laplace_transform(const ConeFunction& f, cplx z, int nodes = 64);

// transform of a sampled evaluator; g(u) ~ u^alpha_hint exp(-b_hint u)
cplx laplace_general(const std::function<double(double)>& g, cplx z,
                     double alpha_hint, double b_hint, int nodes = 64);

// ||f||^2_nu = int_0^inf |f(u)|^2 (2u)^(1-nu) du
double cone_norm_sq_closed(const ConeFunction& f, double nu); // throws on divergence
double cone_norm_sq(const std::function<double(double)>& g, double nu,
                    double alpha_hint, double decay_hint, int nodes = 64);

// ||F||^2_nu = int int |F(x+iy)|^2 y^(nu-2) dx dy over the truncated strip
double tube_norm_sq(const TubeFunction& f, double nu, const StripScheme& s = {});

// max |dF/dx + i dF/dy| over points, central differences (holomorphy check)
double cauchy_riemann_residual(const TubeFunction& f,
                               const std::vector<cplx>& points, double h = 1e-5);

// (u * v)(tau) = int_0^tau u(tau - t) v(t) dt
double cone_convolution(const ConeFunction& u, const ConeFunction& v, double tau,
                        int nodes = 96);
// closed form when u.b == v.b
ConeFunction convolve_equal_decay(const ConeFunction& u, const ConeFunction& v);

// least-squares fit of c_nu in K_nu(z,w) = c_nu ((z - conj w)/2i)^(-nu)
double calibrate_cnu(double nu, const StripScheme& s = {});
// |integral of K_nu(z,.) F y^(nu-2) - F(z)|
double reproducing_residual(double nu, const TubeFunction& f, cplx z, double c_nu,
                            const StripScheme& s = {});

struct KhsResult {
    double residual; // |(1-t)^(-nu) - partial sum|
    double bound;    // geometric tail bound from the first omitted term
    double scale;    // |(1-t)^(-nu)|
};
KhsResult khs_expansion_check(double nu, cplx z, cplx w, int order);

// The convolution inequality ||u*v||_{nu1+nu2} <= C ||u||_{nu1} ||v||_{nu2}
// lives on the cone side; the transform isometry carries it to the bound on
// ||F1 F2||. bound_* and holds_* state the cone-side inequality under the
// three constant variants from special-functions.
struct ProductReport {
    double norm_f1 = 0, norm_f2 = 0; // tube norms, exact via the isometry
    double product_norm = 0;         // ||F1 F2||_{nu1+nu2}, exact
    double product_norm_quad = 0;    // same by strip quadrature
    double cone_norm_u = 0, cone_norm_v = 0;
    double conv_norm = 0;            // ||u*v||_{nu1+nu2}
    double bound_final = 0, bound_intermediate = 0, bound_derived = 0;
    bool finite = false;
    bool holds_final = false, holds_intermediate = false, holds_derived = false;
    double homomorphism_residual = 0; // transform of u*v vs sqrt(2pi) L(u) L(v)
};
// u, v must share the decay rate b (closed-form convolution route)
ProductReport pointwise_product_check(const ConeFunction& u, double nu1,
                                      const ConeFunction& v, double nu2,
                                      const StripScheme& s = {});

} // namespace conerc::bergman
