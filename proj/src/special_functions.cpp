#include "conerc/special_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace conerc::special {

namespace {

constexpr double kTwoPi = 6.283185307179586;

bool near_nonpositive_integer(cplx t) {
    if (std::abs(t.imag()) > 1e-12) return false;
    const double x = t.real();
    if (x > 0.5) return false;
    return std::abs(x - std::round(x)) < 1e-9;
}

} // namespace

cplx log_gamma(cplx z) {
    static const double coef[9] = {
        0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
        771.32342877765313,      -176.61502916214059,   12.507343278686905,
        -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
    if (z.real() < 0.5) {
        // reflection; imaginary part is defined up to 2 pi shifts, the
        // exponentiated value is what callers rely on
        return std::log(M_PI) - std::log(std::sin(M_PI * z)) - log_gamma(1.0 - z);
    }
    const cplx zm = z - 1.0;
    cplx acc = coef[0];
    for (int i = 1; i < 9; ++i) acc += coef[i] / (zm + static_cast<double>(i));
    const cplx t = zm + 7.5;
    return 0.5 * std::log(kTwoPi) + (zm + 0.5) * std::log(t) - t + std::log(acc);
}

std::vector<double> gamma_poles(cplx nu, const jordan::Algebra& a) {
    std::vector<double> poles;
    const double half_d = 0.5 * a.peirce;
    for (int j = 1; j <= a.rank; ++j) {
        const cplx t = nu - (j - 1) * half_d;
        if (near_nonpositive_integer(t)) poles.push_back(t.real());
    }
    return poles;
}

cplx log_gindikin_gamma(cplx nu, const jordan::Algebra& a) {
    const auto poles = gamma_poles(nu, a);
    if (!poles.empty())
        throw std::domain_error("gindikin gamma: pole at shifted argument " +
                                std::to_string(poles.front()));
    cplx acc = 0.5 * (a.dim - a.rank) * std::log(kTwoPi);
    const double half_d = 0.5 * a.peirce;
    for (int j = 1; j <= a.rank; ++j) acc += log_gamma(nu - (j - 1) * half_d);
    return acc;
}

cplx gindikin_gamma(cplx nu, const jordan::Algebra& a) {
    return std::exp(log_gindikin_gamma(nu, a));
}

cplx gindikin_beta(cplx p, cplx q, const jordan::Algebra& a) {
    if (!gamma_poles(p + q, a).empty()) return 0.0; // denominator blows up
    return std::exp(log_gindikin_gamma(p, a) + log_gindikin_gamma(q, a) -
                    log_gindikin_gamma(p + q, a));
}

double pochhammer_general(double nu, const std::vector<long>& m,
                          const jordan::Algebra& a) {
    if (static_cast<int>(m.size()) != a.rank)
        throw std::invalid_argument("pochhammer: weight length must equal rank " +
                                    std::to_string(a.rank));
    for (std::size_t j = 0; j < m.size(); ++j) {
        if (m[j] < 0) throw std::invalid_argument("pochhammer: negative part");
        if (j > 0 && m[j] > m[j - 1])
            throw std::invalid_argument("pochhammer: parts must be non-increasing");
    }
    const double half_d = 0.5 * a.peirce;
    double acc = 1.0;
    for (std::size_t j = 0; j < m.size(); ++j)
        for (long k = 1; k <= m[j]; ++k)
            acc *= nu - half_d * static_cast<double>(j) + (k - 1);
    return acc;
}

bool wallach_contains(double nu, const jordan::Algebra& a) {
    const double half_d = 0.5 * a.peirce;
    const double edge = (a.rank - 1) * half_d;
    if (nu >= edge - 1e-9) return true;
    for (int j = 0; j <= a.rank - 2; ++j)
        if (std::abs(nu - j * half_d) < 1e-9) return true;
    return false;
}

ConvVariant parse_variant(const std::string& s) {
    if (s == "final") return ConvVariant::Final;
    if (s == "intermediate") return ConvVariant::Intermediate;
    if (s == "derived") return ConvVariant::Derived;
    throw std::invalid_argument("unknown constant variant '" + s +
                                "' (final|intermediate|derived)");
}

double conv_constant(double nu1, double nu2, const jordan::Algebra& a,
                     ConvVariant v) {
    const double n = a.dim, r = a.rank;
    const double threshold = 2.0 * n / r - 1.0;
    if (!(nu1 > threshold) || !(nu2 > threshold))
        throw std::domain_error("conv_constant: parameters must exceed 2n/r - 1 = " +
                                std::to_string(threshold));
    auto log_q = [&](double nu) {
        return (log_gindikin_gamma(2.0 * nu - 2.0 * n / r, a) +
                log_gindikin_gamma(n / r, a) -
                log_gindikin_gamma(2.0 * nu - n / r, a))
            .real();
    };
    double exp2 = 0.0;
    switch (v) {
    case ConvVariant::Final: exp2 = n / r - 0.5 * (nu1 + nu2) * r; break;
    case ConvVariant::Intermediate: exp2 = 0.5 * n - 0.5 * (nu1 + nu2) * r; break;
    case ConvVariant::Derived: exp2 = -0.5 * n; break;
    }
    return std::exp(exp2 * std::log(2.0) + 0.25 * (log_q(nu1) + log_q(nu2)));
}

} // namespace conerc::special
