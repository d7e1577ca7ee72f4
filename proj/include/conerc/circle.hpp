#pragma once

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <vector>

// Circle model for SL(2,R): spherical principal series pi^{+-}_mu on even
// functions, the intertwiner A_mu with its scalar c(mu), and the sharp
// calculus on symbols over pairs of points.
//
// Conventions. Points of the projective circle are angles theta in [0, pi);
// the pairing of two points is <u,v> = cos(u - v). Even functions expand in
// the modes e^{2 i n theta}. Integrals use arc length d(theta) on [0, pi),
// total mass pi; the eigenvalue tables and c(mu) below are stated in this
// normalization and satisfy lambda_n(mu) lambda_n(-mu-2) = c(mu) exactly.

namespace conerc::circle {

using cplx = std::complex<double>;

// ---------------------------------------------------------------------------
// group elements and the projective action

struct GroupElement {
    double a = 1, b = 0, c = 0, d = 1; // row major, det = 1

    GroupElement inverse() const { return {d, -b, -c, a}; }
    // Cartan involution theta(g) = (g^T)^{-1}
    GroupElement cartan() const { return {d, -c, -b, a}; }
    double det() const { return a * d - b * c; }

    static GroupElement rotation(double alpha);
    static GroupElement boost(double t);  // diag(e^t, e^{-t})
    static GroupElement shear(double c);  // unipotent upper triangular
};

GroupElement operator*(const GroupElement& g, const GroupElement& h);

struct ActionResult {
    double angle;  // angle of g.s in [0, pi)
    double factor; // ||g(s)||
};

ActionResult projective_action(const GroupElement& g, double theta);

// ---------------------------------------------------------------------------
// even symbols on the circle

struct CircleSymbol {
    // coef[n + nmax] multiplies e^{2 i n theta}, n = -nmax .. nmax
    std::vector<cplx> coef;
    // relative energy dropped by the last grid-to-mode projection
    double aliasing_loss = 0.0;

    CircleSymbol() = default;
    explicit CircleSymbol(int nmax) : coef(2 * nmax + 1, cplx(0, 0)) {}

    int nmax() const { return (static_cast<int>(coef.size()) - 1) / 2; }
    cplx mode(int n) const;
    cplx operator()(double theta) const;
    // arc-measure norm: pi sum |c_n|^2
    double norm_sq() const;

    static CircleSymbol basis(int n, int nmax);
};

// project a pi-periodic function onto modes |n| <= nmax using a uniform
// grid; records the relative energy outside the window in aliasing_loss
CircleSymbol project_to_modes(const std::function<cplx(double)>& f, int nmax,
                              int grid = 0);

// (pi^-_mu(g) phi)(s) = phi(g^{-1}.s) ||g^{-1}(s)||^mu
// (pi^+_mu(g) phi)(s): same with theta(g^{-1}) in place of g^{-1}
// nmax_out < 0 keeps the input window
CircleSymbol pi_minus(cplx mu, const GroupElement& g, const CircleSymbol& phi,
                      int nmax_out = -1, int grid = 0);
CircleSymbol pi_plus(cplx mu, const GroupElement& g, const CircleSymbol& phi,
                     int nmax_out = -1, int grid = 0);

// ---------------------------------------------------------------------------
// the intertwiner A_mu phi (s) = int |<s,t>|^{-mu-2} phi(t) dt

// closed form on mode n:
//   lambda_n(mu) = pi Gamma(p+1) / (2^p Gamma(p/2+n+1) Gamma(p/2-n+1)),
//   p = -mu-2,
// valid by continuation off the poles of Gamma(p+1); zero when a
// denominator argument hits a non-positive integer.
cplx a_mu_eigenvalue(int n, cplx mu);

// the same number by singularity-adapted quadrature; requires mu < -1
cplx a_mu_eigenvalue_quad(int n, double mu, int nodes = 48);

// apply A_mu by quadrature on a grid; requires mu < -1
CircleSymbol a_mu_apply(double mu, const CircleSymbol& phi, int nodes = 48);

// c(mu) = pi Gamma((mu+1)/2) Gamma(-(mu+1)/2) / (Gamma(-mu/2) Gamma(1+mu/2));
// A_{-mu-2} A_mu = c(mu) Id. Evaluated after folding mu to Re mu <= -1 so
// the symmetry c(mu) = c(-mu-2) holds to the bit.
cplx c_mu(cplx mu);

// d(s) = pi^{-1/2} Gamma((1+is)/2) / Gamma(is/2); |d(s)|^2 c(-1+is) = 1
cplx d_s(double s);

// operator-norm residual of A_mu pi^-_mu(g) - pi^+_{-mu-2}(g) A_mu on modes
// |n| <= nmax (A_mu by closed form, representations sampled on the grid)
double intertwining_residual(cplx mu, const GroupElement& g, int nmax,
                             int grid = 1024);

// ---------------------------------------------------------------------------
// kernel operators on the grid and the plain sharp product (mu in (-1,0))

using BiFunction = std::function<cplx(double, double)>;

struct KernelOperator {
    Eigen::MatrixXcd mat; // k(theta_j, theta_k) samples, or a mode matrix
    int grid = 0;         // grid size when grid-based (odd), else 0
    int nmax = 0;         // mode half-window when mode-based
    bool mode_basis = false;
};

// kernel f(u,v)|<u,v>|^mu sampled on an odd uniform grid; mu in (-1,0)
KernelOperator op_from_symbol(const BiFunction& f, double mu, int grid = 257);

KernelOperator identity_kernel(int grid);
KernelOperator compose(const KernelOperator& A, const KernelOperator& B);
double hs_norm(const KernelOperator& K);

// grid <-> mode conversions (exact on band-limited kernels)
Eigen::MatrixXcd to_mode_matrix(const KernelOperator& K, int nmax);
KernelOperator mode_to_grid(const Eigen::MatrixXcd& M, int grid);

struct SharpResult {
    Eigen::MatrixXcd symbol;   // recovered symbol samples on the grid
    Eigen::MatrixXcd composed; // composed kernel
    double coverage = 0.0;     // fraction of entries with |<u,v>| > band
    double band = 0.0;
    int grid = 0;
};

// plain product: symbol of Op(f) Op(g), recovered by dividing the composed
// kernel by |<u,v>|^mu; entries inside the excision band are still filled
// (the weight power is bounded for mu < 0) but flagged by the coverage
SharpResult sharp_product(const BiFunction& f, const BiFunction& g, double mu,
                          int grid = 257, double band = 0.1);

// signed cross ratio [u,y,x,v] = <u,x><y,v> / (<u,v><y,x>) through angles
double cross_ratio(double u, double y, double x, double v);

enum class SharpRoute { JacobiPanels, GradedMesh };

// the same product through the cross-ratio integral
//   (f#g)(u,v) = int f(u,x) g(x,v) |[u,x,x,v]|^mu dx
// evaluated pointwise by singularity-adapted quadrature
cplx sharp_integral_formula(const BiFunction& f, const BiFunction& g,
                            double mu, double u, double v,
                            SharpRoute route = SharpRoute::JacobiPanels,
                            int nodes = 48);

// ---------------------------------------------------------------------------
// covariant calculus in the mode picture

// two-variable symbol f(u,v) = sum_{a,b} coef(a+n,b+n) e^{2iau} e^{2ibv}
struct BiSymbol {
    Eigen::MatrixXcd coef;
    double aliasing_loss = 0.0;

    BiSymbol() = default;
    explicit BiSymbol(int nmax)
        : coef(Eigen::MatrixXcd::Zero(2 * nmax + 1, 2 * nmax + 1)) {}

    int nmax() const { return (static_cast<int>(coef.rows()) - 1) / 2; }
    cplx operator()(double u, double v) const;
    static BiSymbol constant(cplx value);
};

// L_x f (u,v) = f(x^{-1}.u, theta(x^{-1}).v), reprojected to |a|,|b| <= nmax_out
BiSymbol act_symbol(const GroupElement& x, const BiSymbol& f, int nmax_out,
                    int grid = 512);

// mode matrix of the operator with kernel f(u,v)|<u,v>|^mu on |n| <= window:
//   [Op(f)]_{mn} = sum_{a+b=m-n} f_{ab} lambda_{b+n}(-mu-2)
Eigen::MatrixXcd op_mode_matrix(const BiSymbol& f, cplx mu, int window);

// mode matrix of Op(f # g) for the covariant product, Op(f) A_mu Op(g)
Eigen::MatrixXcd covariant_product_matrix(const BiSymbol& f, const BiSymbol& g,
                                          cplx mu, int window);

// mode matrix of pi^{-+}_mu(g) on |n| <= window
Eigen::MatrixXcd rep_mode_matrix(cplx mu, const GroupElement& g, bool plus,
                                 int window, int grid = 1024);

// Frobenius-relative residual, on the central |n| <= ncentral block, of
//   Op(L_x f) A_mu Op(L_x g) = pi^-_mu(x) [Op(f) A_mu Op(g)] pi^+_{-mu-2}(x^{-1})
double covariant_covariance_residual(const BiSymbol& f, const BiSymbol& g,
                                     cplx mu, const GroupElement& x,
                                     int window = 48, int ncentral = 16);

// ---------------------------------------------------------------------------
// H-invariant vector of the weight-k holomorphic series, rank one:
// xi_k(z) = (-conj z)^{-k/2}, invariant under z -> a^2 z up to the a^k cocycle

struct XiReport {
    double residual = 0.0;
    bool branch_flag = false; // the principal power approached its cut
};

XiReport xi_invariance_check(int k, double a, cplx z);

} // namespace conerc::circle
