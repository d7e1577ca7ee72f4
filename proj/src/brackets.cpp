#include "conerc/brackets.hpp"

#include <cmath>
#include <stdexcept>

namespace conerc::rcb {

std::vector<rational> rcb_coeffs(int k1, int k2, int j) {
    if (k1 < 1 || k2 < 1 || j < 0)
        throw std::invalid_argument("rcb_coeffs: need k1,k2 >= 1 and j >= 0");
    std::vector<rational> out(j + 1);
    for (int l = 0; l <= j; ++l) {
        rational v = rational(binomial(k1 + j - 1, l) * binomial(k2 + j - 1, j - l));
        out[l] = (l % 2 == 0) ? v : -v;
    }
    return out;
}

std::vector<rational> gen_rcb_scalar_coeffs(const rational& nu1,
                                            const rational& nu2, int m) {
    if (m < 0) throw std::invalid_argument("gen_rcb_scalar_coeffs: m >= 0");
    std::vector<rational> out(m + 1);
    for (int n = 0; n <= m; ++n) {
        const rational d1 = rising(nu1, n), d2 = rising(nu2, m - n);
        if (d1 == 0 || d2 == 0)
            throw std::domain_error("gen_rcb_scalar_coeffs: pochhammer zero in denominator");
        rational v = rational(binomial(m, n)) / (d1 * d2);
        out[n] = (n % 2 == 0) ? v : -v;
    }
    return out;
}

QSeries rcb_qseries(const QSeries& f, const QSeries& g, int j) {
    const auto coef = rcb_coeffs(f.weight, g.weight, j);
    // derivative towers f^(0..j), g^(0..j) under q d/dq
    std::vector<QSeries> df{f}, dg{g};
    for (int i = 1; i <= j; ++i) {
        df.push_back(theta(df.back()));
        dg.push_back(theta(dg.back()));
    }
    QSeries acc = qs_zero(f.weight + g.weight + 2 * j, std::min(f.order(), g.order()));
    for (int l = 0; l <= j; ++l) {
        QSeries term = mul(df[j - l], dg[l]);
        term.weight = acc.weight; // mul sums the tags; the bracket weight is fixed
        acc = add(acc, scale(coef[l], term));
    }
    return acc;
}

TestFunction TestFunction::exp_ia(double a) {
    if (a <= 0) throw std::invalid_argument("exp_ia: a > 0 required for decay");
    TestFunction f;
    f.tag = Tag::ExpIA;
    f.a = a;
    return f;
}

TestFunction TestFunction::pow_zw(cplx w0, int k) {
    if (w0.imag() >= 0)
        throw std::invalid_argument("pow_zw: Im w0 < 0 keeps the pole off the half plane");
    if (k < 1) throw std::invalid_argument("pow_zw: k >= 1");
    TestFunction f;
    f.tag = Tag::PowZW;
    f.w0 = w0;
    f.k = k;
    return f;
}

cplx TestFunction::deriv(int ell, cplx z) const {
    if (tag == Tag::ExpIA) {
        const cplx ia(0.0, a);
        return std::pow(ia, ell) * std::exp(ia * z);
    }
    // (z - w0)^(-k): l-th derivative is (-1)^l (k)_l (z - w0)^(-k-l)
    double rising_k = 1.0;
    for (int i = 0; i < ell; ++i) rising_k *= k + i;
    const double sign = (ell % 2 == 0) ? 1.0 : -1.0;
    return sign * rising_k * std::pow(z - w0, -k - ell);
}

cplx moebius_apply(const Moebius& g, cplx z) {
    return (g.a * z + g.b) / (g.c * z + g.d);
}

cplx slash_action(const TestFunction& f, int k, const Moebius& g, cplx z) {
    if (z.imag() <= 0)
        throw std::invalid_argument("slash_action: point must be in the upper half plane");
    const cplx den = g.c * z + g.d;
    if (std::abs(den) < 1e-14) throw std::domain_error("slash_action: cz + d vanished");
    return std::pow(den, -k) * f.deriv(0, moebius_apply(g, z));
}

namespace {

// A (cz+d)^(-p) f^(m)(gz); differentiating maps one term to two
struct SlashTerm {
    cplx A;
    int p;
    int m;
};

std::vector<SlashTerm> differentiate(const std::vector<SlashTerm>& terms, double c) {
    std::vector<SlashTerm> out;
    out.reserve(2 * terms.size());
    for (const auto& t : terms) {
        out.push_back({-double(t.p) * c * t.A, t.p + 1, t.m});
        out.push_back({t.A, t.p + 2, t.m + 1}); // chain rule, (gz)' = (cz+d)^-2
    }
    return out;
}

cplx eval_terms(const std::vector<SlashTerm>& terms, const TestFunction& f,
                const Moebius& g, cplx z) {
    const cplx den = g.c * z + g.d;
    const cplx gz = moebius_apply(g, z);
    cplx acc = 0.0;
    for (const auto& t : terms) acc += t.A * std::pow(den, -t.p) * f.deriv(t.m, gz);
    return acc;
}

} // namespace

double covariance_residual(const TestFunction& f, const TestFunction& g,
                           int k1, int k2, int j, const Moebius& gamma,
                           const std::vector<cplx>& points, double* scale_out) {
    if (std::abs(gamma.a * gamma.d - gamma.b * gamma.c - 1.0) > 1e-12)
        throw std::invalid_argument("covariance_residual: det != 1");
    const auto coef = rcb_coeffs(k1, k2, j);
    std::vector<double> cd(j + 1);
    for (int l = 0; l <= j; ++l) cd[l] = coef[l].convert_to<double>();

    // derivative term lists of the slashed functions, orders 0..j
    std::vector<std::vector<SlashTerm>> tf{{{1.0, k1, 0}}}, tg{{{1.0, k2, 0}}};
    for (int i = 1; i <= j; ++i) {
        tf.push_back(differentiate(tf.back(), gamma.c));
        tg.push_back(differentiate(tg.back(), gamma.c));
    }

    double worst = 0.0, scale = 0.0;
    for (cplx z : points) {
        if (z.imag() <= 0)
            throw std::invalid_argument("covariance_residual: points must be in the upper half plane");
        // scale tracks the summed term magnitudes, not the cancelled total:
        // brackets can vanish identically (k2 a1 = k1 a2 for exponentials)
        // and the roundoff floor is set by the terms
        cplx lhs = 0.0;
        double mag = 0.0;
        for (int l = 0; l <= j; ++l) {
            const cplx term = cd[l] * eval_terms(tf[j - l], f, gamma, z) *
                              eval_terms(tg[l], g, gamma, z);
            lhs += term;
            mag += std::abs(term);
        }
        const cplx gz = moebius_apply(gamma, z);
        const cplx den = gamma.c * z + gamma.d;
        const cplx pref = std::pow(den, -(k1 + k2 + 2 * j));
        cplx rhs = 0.0;
        for (int l = 0; l <= j; ++l) {
            const cplx term = pref * cd[l] * f.deriv(j - l, gz) * g.deriv(l, gz);
            rhs += term;
            mag += std::abs(term);
        }
        worst = std::max(worst, std::abs(lhs - rhs));
        scale = std::max(scale, mag);
    }
    if (scale_out) *scale_out = scale;
    return worst;
}

BasisExpansion express_in_modular_basis(const QSeries& f) {
    if (f.weight < 0 || f.weight % 2 != 0)
        throw std::invalid_argument("modular basis: weight must be even and non-negative");
    BasisExpansion ex;
    ex.weight = f.weight;
    for (int b = 0; 6 * b <= f.weight; ++b) {
        if ((f.weight - 6 * b) % 4 == 0)
            ex.monomials.push_back({(f.weight - 6 * b) / 4, b});
    }
    const int k = static_cast<int>(ex.monomials.size());
    const int order = f.order();
    if (order + 1 < k)
        throw std::invalid_argument("modular basis: series too short for this weight");

    std::vector<QSeries> mono;
    if (k > 0) {
        const QSeries e4 = eisenstein_qexp(4, order), e6 = eisenstein_qexp(6, order);
        for (const auto& [a, b] : ex.monomials) {
            QSeries m = qs_one(order);
            for (int i = 0; i < a; ++i) m = mul(m, e4);
            for (int i = 0; i < b; ++i) m = mul(m, e6);
            m.weight = f.weight;
            mono.push_back(std::move(m));
        }
    }

    // exact solve on the first k coefficients, then verify the full series
    std::vector<std::vector<rational>> aug(k, std::vector<rational>(k + 1));
    for (int row = 0; row < k; ++row) {
        for (int col = 0; col < k; ++col) aug[row][col] = mono[col].c[row];
        aug[row][k] = f.c[row];
    }
    std::vector<rational> x(k, rational(0));
    for (int col = 0; col < k; ++col) {
        int pivot = -1;
        for (int row = col; row < k; ++row)
            if (aug[row][col] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0)
            throw std::domain_error("modular basis: singular coefficient system");
        std::swap(aug[col], aug[pivot]);
        for (int row = 0; row < k; ++row) {
            if (row == col || aug[row][col] == 0) continue;
            const rational factor = aug[row][col] / aug[col][col];
            for (int c2 = col; c2 <= k; ++c2) aug[row][c2] -= factor * aug[col][c2];
        }
    }
    for (int i = 0; i < k; ++i) x[i] = aug[i][k] / aug[i][i];

    QSeries recon = qs_zero(f.weight, order);
    for (int i = 0; i < k; ++i) recon = add(recon, scale(x[i], mono[i]));
    if (!identical(recon, f))
        throw std::domain_error("modular basis: residual series is nonzero; "
                                "input is not modular of this weight");
    ex.coords = std::move(x);
    return ex;
}

} // namespace conerc::rcb
