#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

namespace conerc::jordan {

using cplx = std::complex<double>;
using Vec = Eigen::VectorXd;
using CVec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXd;
using CMat = Eigen::MatrixXcd;

enum class Kind { Sym, Herm, Spin };

// Euclidean Jordan algebra descriptor. Coordinates are orthonormal for the
// trace form tr(x o y) up to a kind-wide constant:
//   sym(n):  upper triangle row-major, off-diagonal entries scaled by sqrt(2)
//   herm(n): n diagonal reals, then (re, im) pairs for i<j against the basis
//            (E_ij+E_ji)/sqrt2, i(E_ij-E_ji)/sqrt2
//   spin(n): (x', x_n) with x' of length n-1 first, x_n last
struct Algebra {
    Kind kind;
    int n;      // size parameter
    int rank;   // r
    int dim;    // n_V
    int peirce; // d

    std::string name() const;
};

Algebra make(Kind kind, int n);
Algebra parse(const std::string& text); // "sym:3", "herm:2", "spin:5"

Vec unit(const Algebra& a);

Vec jordan_product(const Algebra& a, const Vec& x, const Vec& y);
CVec jordan_product(const Algebra& a, const CVec& x, const CVec& y);

// L(x) y = x o y
Mat lmap(const Algebra& a, const Vec& x);
CMat lmap(const Algebra& a, const CVec& x);

// P(x) = 2 L(x)^2 - L(x^2)
Mat quadratic_rep(const Algebra& a, const Vec& x);
CMat quadratic_rep(const Algebra& a, const CVec& x);

// D(x,y) = L(x o y) - [L(x), L(y)]
Mat dmap(const Algebra& a, const Vec& x, const Vec& y);
CMat dmap(const Algebra& a, const CVec& x, const CVec& y);

// a_1..a_r with f_x(t) = t^r - a_1 t^{r-1} + ... + (-1)^r a_r
std::vector<double> char_coeffs(const Algebra& a, const Vec& x);
std::vector<double> eigenvalues(const Algebra& a, const Vec& x); // ascending

double jordan_det(const Algebra& a, const Vec& x);
cplx jordan_det(const Algebra& a, const CVec& x);
double jordan_trace(const Algebra& a, const Vec& x);

Vec inverse(const Algebra& a, const Vec& x);   // throws std::domain_error
CVec inverse(const Algebra& a, const CVec& x);

bool is_in_cone(const Algebra& a, const Vec& x);

// |z| = ||D(z, zbar)||^(1/2), operator norm over the complexification
double spectral_norm(const Algebra& a, const CVec& z);
double spectral_norm(const Algebra& a, const Vec& x);

// h(z,w): holomorphic in z, anti-holomorphic in w, h(z,0)=1
cplx canonical_poly(const Algebra& a, const CVec& z, const CVec& w);

// B(z,w) = Id - 2 (z box wbar) + P(z) P(wbar); det B = h^(2 dim/rank)
CMat bergman_op(const Algebra& a, const CVec& z, const CVec& w);

struct CayleyResult {
    CVec value;
    bool boundary; // spectral norm within 1e-9 of 1 (or outside)
};
// p(z) = (z - ie) o (z + ie)^{-1}; z in the tube over the cone
CayleyResult cayley(const Algebra& a, const CVec& z);

// coordinate <-> matrix conversions (sym and herm kinds)
CMat to_matrix(const Algebra& a, const CVec& x);
CVec from_matrix(const Algebra& a, const CMat& m);

} // namespace conerc::jordan
