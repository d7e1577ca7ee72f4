#pragma once

#include "conerc/algebra.hpp"

#include <complex>
#include <string>
#include <vector>

namespace conerc::special {

using cplx = std::complex<double>;

// log Gamma, principal determination, complex argument (Lanczos g=7)
cplx log_gamma(cplx z);

// arguments nu - (j-1) d/2 that sit at non-positive integers
std::vector<double> gamma_poles(cplx nu, const jordan::Algebra& a);

// log of the conical Gamma function
//   (2 pi)^((n_V - r)/2) prod_j Gamma(nu - (j-1) d/2)
// throws std::domain_error at a pole
cplx log_gindikin_gamma(cplx nu, const jordan::Algebra& a);
cplx gindikin_gamma(cplx nu, const jordan::Algebra& a);

// Gamma(p) Gamma(q) / Gamma(p+q) over the cone
cplx gindikin_beta(cplx p, cplx q, const jordan::Algebra& a);

// (nu)_m = prod_j prod_{k=1}^{m_j} (nu - (d/2)(j-1) + k - 1)
// m must be a partition of length rank
double pochhammer_general(double nu, const std::vector<long>& m,
                          const jordan::Algebra& a);

// {0, d/2, ..., (r-1) d/2} united with ((r-1) d/2, infinity)
bool wallach_contains(double nu, const jordan::Algebra& a);

// Convolution-inequality constant, three candidate normalizations of the
// power of two (the Gamma quotient part is common):
//   final:        2^(n/r - (nu1+nu2) r/2)
//   intermediate: 2^(n/2 - (nu1+nu2) r/2)
//   derived:      2^(-n/2)   (all nu dependence cancels)
enum class ConvVariant { Final, Intermediate, Derived };
ConvVariant parse_variant(const std::string& s);
double conv_constant(double nu1, double nu2, const jordan::Algebra& a,
                     ConvVariant v = ConvVariant::Final);

} // namespace conerc::special
