#include "conerc/circle.hpp"

#include "conerc/quadrature.hpp"
#include "conerc/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace conerc::circle {

namespace {

constexpr double kPi = 3.14159265358979323846;

double fold_angle(double t) {
    double a = std::fmod(t, kPi);
    if (a < 0) a += kPi;
    if (a >= kPi) a -= kPi;
    return a;
}

bool near_nonpos_int(cplx z, double tol) {
    if (std::abs(z.imag()) > tol) return false;
    const double r = std::round(z.real());
    return r < 0.5 && std::abs(z.real() - r) < tol;
}

cplx cpow(cplx base, cplx expo) { return std::exp(expo * std::log(base)); }

// modes -N..N sampled on the uniform grid, E_{j, n+N} = e^{2 i n theta_j}
Eigen::MatrixXcd mode_frame(int grid, int nmax) {
    Eigen::MatrixXcd e(grid, 2 * nmax + 1);
    for (int j = 0; j < grid; ++j) {
        const double th = kPi * j / grid;
        for (int n = -nmax; n <= nmax; ++n)
            e(j, n + nmax) = std::polar(1.0, 2.0 * n * th);
    }
    return e;
}

CircleSymbol project_samples(const std::vector<cplx>& vals, int nmax) {
    const int grid = static_cast<int>(vals.size());
    CircleSymbol out(nmax);
    double total = 0.0;
    for (int j = 0; j < grid; ++j) total += std::norm(vals[j]);
    total /= grid;
    for (int n = -nmax; n <= nmax; ++n) {
        cplx acc(0, 0);
        for (int j = 0; j < grid; ++j) {
            const double th = kPi * j / grid;
            acc += vals[j] * std::polar(1.0, -2.0 * n * th);
        }
        out.coef[n + nmax] = acc / static_cast<double>(grid);
    }
    double kept = 0.0;
    for (const cplx& c : out.coef) kept += std::norm(c);
    out.aliasing_loss = total > 0 ? std::max(0.0, 1.0 - kept / total) : 0.0;
    return out;
}

int auto_grid(int requested, int nmax) {
    return std::max(requested, std::max(256, 16 * nmax + 8));
}

} // namespace

// ---------------------------------------------------------------------------
// group

GroupElement GroupElement::rotation(double alpha) {
    return {std::cos(alpha), -std::sin(alpha), std::sin(alpha), std::cos(alpha)};
}

GroupElement GroupElement::boost(double t) {
    return {std::exp(t), 0, 0, std::exp(-t)};
}

GroupElement GroupElement::shear(double c) { return {1, c, 0, 1}; }

GroupElement operator*(const GroupElement& g, const GroupElement& h) {
    return {g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d,
            g.c * h.a + g.d * h.c, g.c * h.b + g.d * h.d};
}

ActionResult projective_action(const GroupElement& g, double theta) {
    const double cx = std::cos(theta), sx = std::sin(theta);
    const double x = g.a * cx + g.b * sx;
    const double y = g.c * cx + g.d * sx;
    const double r = std::hypot(x, y);
    return {fold_angle(std::atan2(y, x)), r};
}

// ---------------------------------------------------------------------------
// symbols

cplx CircleSymbol::mode(int n) const {
    const int nm = nmax();
    if (std::abs(n) > nm) return cplx(0, 0);
    return coef[n + nm];
}

cplx CircleSymbol::operator()(double theta) const {
    const int nm = nmax();
    cplx acc(0, 0);
    for (int n = -nm; n <= nm; ++n)
        acc += coef[n + nm] * std::polar(1.0, 2.0 * n * theta);
    return acc;
}

double CircleSymbol::norm_sq() const {
    double s = 0.0;
    for (const cplx& c : coef) s += std::norm(c);
    return kPi * s;
}

CircleSymbol CircleSymbol::basis(int n, int nmax) {
    CircleSymbol phi(nmax);
    phi.coef[n + nmax] = 1.0;
    return phi;
}

CircleSymbol project_to_modes(const std::function<cplx(double)>& f, int nmax,
                              int grid) {
    const int g = auto_grid(grid, nmax);
    std::vector<cplx> vals(g);
    for (int j = 0; j < g; ++j) vals[j] = f(kPi * j / g);
    return project_samples(vals, nmax);
}

CircleSymbol pi_minus(cplx mu, const GroupElement& g, const CircleSymbol& phi,
                      int nmax_out, int grid) {
    const int nout = nmax_out < 0 ? phi.nmax() : nmax_out;
    const int ng = std::max(auto_grid(grid, std::max(phi.nmax(), nout)), 1024);
    const GroupElement gi = g.inverse();
    std::vector<cplx> vals(ng);
    for (int j = 0; j < ng; ++j) {
        const ActionResult ar = projective_action(gi, kPi * j / ng);
        vals[j] = phi(ar.angle) * std::exp(mu * std::log(ar.factor));
    }
    return project_samples(vals, nout);
}

CircleSymbol pi_plus(cplx mu, const GroupElement& g, const CircleSymbol& phi,
                     int nmax_out, int grid) {
    return pi_minus(mu, g.cartan(), phi, nmax_out, grid);
}

// ---------------------------------------------------------------------------
// intertwiner

cplx a_mu_eigenvalue(int n, cplx mu) {
    using special::log_gamma;
    n = std::abs(n);
    const cplx p = -mu - 2.0;
    const cplx d1 = 0.5 * p + cplx(n + 1.0, 0);
    const cplx d2 = 0.5 * p + cplx(1.0 - n, 0);
    const double tol = 1e-9;
    if (near_nonpos_int(p + 1.0, tol)) {
        // Gamma(p+1) pole; survives unless a denominator pole cancels it,
        // which happens exactly when p is a non-positive even integer
        const long m = std::lround(-p.real() / 2.0);
        if (std::abs(p.real() + 2.0 * m) > tol || p.real() > tol || m < 1)
            throw std::domain_error("a_mu_eigenvalue: pole in mu");
        // p = -2m: lambda = pi (-1)^(m+n) 2^(2m-1) (m+n-1)! / ((2m-1)! (n-m)!)
        if (n < m) return cplx(0, 0); // double denominator pole wins
        double val = kPi * std::pow(2.0, 2.0 * m - 1.0);
        val *= std::exp(std::lgamma(m + n) - std::lgamma(2.0 * m) -
                        std::lgamma(n - m + 1.0));
        if ((m + n) % 2) val = -val;
        return cplx(val, 0);
    }
    if (near_nonpos_int(d1, tol) || near_nonpos_int(d2, tol)) return cplx(0, 0);
    const cplx lg =
        log_gamma(p + 1.0) - p * std::log(2.0) - log_gamma(d1) - log_gamma(d2);
    return kPi * std::exp(lg);
}

cplx a_mu_eigenvalue_quad(int n, double mu, int nodes) {
    if (!(mu < -1.0))
        throw std::domain_error("a_mu_eigenvalue_quad: needs mu < -1");
    if (nodes < 2 || nodes > 200)
        throw std::invalid_argument("a_mu_eigenvalue_quad: bad node count");
    const double p = -mu - 2.0;
    const auto rule = quad::gauss_jacobi(nodes, 0.0, p);
    const double half = kPi / 4.0; // half-length of [0, pi/2]
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        const double x = half * (1.0 + rule.x[i]);
        const double smooth = std::pow(std::sin(x) / x, p);
        acc += rule.w[i] * smooth * 2.0 * std::cos(2.0 * n * (x - kPi / 2.0));
    }
    return std::pow(half, p + 1.0) * acc;
}

CircleSymbol a_mu_apply(double mu, const CircleSymbol& phi, int nodes) {
    if (!(mu < -1.0)) throw std::domain_error("a_mu_apply: needs mu < -1");
    if (nodes < 2 || nodes > 200)
        throw std::invalid_argument("a_mu_apply: bad node count");
    const double p = -mu - 2.0;
    const auto rule = quad::gauss_jacobi(nodes, 0.0, p);
    const double half = kPi / 4.0;
    const int nm = phi.nmax();
    const int grid = 2 * nm + 33;
    std::vector<double> xs(rule.size()), sm(rule.size());
    for (std::size_t i = 0; i < rule.size(); ++i) {
        xs[i] = half * (1.0 + rule.x[i]);
        sm[i] = std::pow(std::sin(xs[i]) / xs[i], p);
    }
    const double scale = std::pow(half, p + 1.0);
    std::vector<cplx> vals(grid);
    for (int j = 0; j < grid; ++j) {
        const double th = kPi * j / grid;
        cplx acc(0, 0);
        for (std::size_t i = 0; i < rule.size(); ++i)
            acc += rule.w[i] * sm[i] *
                   (phi(th + kPi / 2.0 - xs[i]) + phi(th - kPi / 2.0 + xs[i]));
        vals[j] = scale * acc;
    }
    return project_samples(vals, nm);
}

cplx c_mu(cplx mu) {
    using special::log_gamma;
    // fold to Re mu <= -1 so c(mu) and c(-mu-2) take identical paths
    if (mu.real() > -1.0 || (mu.real() == -1.0 && mu.imag() < 0.0))
        mu = -2.0 - mu;
    if (mu.imag() == 0.0) mu = cplx(mu.real(), 0.0); // scrub -0.0 from the fold
    const cplx a = 0.5 * (mu + 1.0);
    const cplx b = -0.5 * (mu + 1.0);
    const cplx den1 = -0.5 * mu;
    const cplx den2 = 1.0 + 0.5 * mu;
    const double tol = 1e-9;
    if (near_nonpos_int(a, tol) || near_nonpos_int(b, tol))
        throw std::domain_error("c_mu: pole in mu");
    if (near_nonpos_int(den1, tol) || near_nonpos_int(den2, tol))
        return cplx(0, 0);
    return kPi * std::exp(log_gamma(a) + log_gamma(b) - log_gamma(den1) -
                          log_gamma(den2));
}

cplx d_s(double s) {
    using special::log_gamma;
    if (s == 0.0) return cplx(0, 0); // 1/Gamma(0)
    const cplx is2(0, 0.5 * s);
    return std::exp(log_gamma(0.5 + is2) - log_gamma(is2)) / std::sqrt(kPi);
}

Eigen::MatrixXcd rep_mode_matrix(cplx mu, const GroupElement& g, bool plus,
                                 int window, int grid) {
    const GroupElement gi = (plus ? g.cartan() : g).inverse();
    const int cols = 2 * window + 1;
    Eigen::MatrixXcd s(grid, cols);
    for (int j = 0; j < grid; ++j) {
        const ActionResult ar = projective_action(gi, kPi * j / grid);
        const cplx w = std::exp(mu * std::log(ar.factor));
        for (int n = -window; n <= window; ++n)
            s(j, n + window) = w * std::polar(1.0, 2.0 * n * ar.angle);
    }
    const Eigen::MatrixXcd e = mode_frame(grid, window);
    return (e.adjoint() * s) / static_cast<double>(grid);
}

double intertwining_residual(cplx mu, const GroupElement& g, int nmax,
                             int grid) {
    const int w = nmax + 16;
    const Eigen::MatrixXcd mm = rep_mode_matrix(mu, g, false, w, grid);
    const Eigen::MatrixXcd mp = rep_mode_matrix(-2.0 - mu, g, true, w, grid);
    Eigen::VectorXcd lam(2 * w + 1);
    for (int n = -w; n <= w; ++n) lam(n + w) = a_mu_eigenvalue(n, mu);
    const Eigen::MatrixXcd lhs = lam.asDiagonal() * mm;
    const Eigen::MatrixXcd rhs = mp * lam.asDiagonal();
    const int c0 = w - nmax, cn = 2 * nmax + 1;
    const Eigen::MatrixXcd diff = (lhs - rhs).block(c0, c0, cn, cn);
    const Eigen::MatrixXcd ref = lhs.block(c0, c0, cn, cn);
    const double top = diff.jacobiSvd().singularValues()(0);
    const double bot = ref.jacobiSvd().singularValues()(0);
    return bot > 0 ? top / bot : top;
}

// ---------------------------------------------------------------------------
// grid operators, plain sharp product

KernelOperator op_from_symbol(const BiFunction& f, double mu, int grid) {
    if (!(mu > -1.0 && mu < 0.0))
        throw std::domain_error("op_from_symbol: needs mu in (-1,0)");
    if (grid < 3 || grid % 2 == 0)
        throw std::invalid_argument(
            "op_from_symbol: grid must be odd (even grids hit the kernel zeros)");
    KernelOperator k;
    k.grid = grid;
    k.mat.resize(grid, grid);
    for (int j = 0; j < grid; ++j) {
        const double u = kPi * j / grid;
        for (int l = 0; l < grid; ++l) {
            const double v = kPi * l / grid;
            k.mat(j, l) =
                f(u, v) * std::pow(std::abs(std::cos(u - v)), mu);
        }
    }
    return k;
}

KernelOperator identity_kernel(int grid) {
    if (grid < 3) throw std::invalid_argument("identity_kernel: grid too small");
    KernelOperator k;
    k.grid = grid;
    k.mat = (grid / kPi) * Eigen::MatrixXcd::Identity(grid, grid);
    return k;
}

KernelOperator compose(const KernelOperator& a, const KernelOperator& b) {
    if (a.mode_basis != b.mode_basis)
        throw std::invalid_argument("compose: mixed bases");
    if (a.mode_basis) {
        if (a.nmax != b.nmax) throw std::invalid_argument("compose: size mismatch");
        KernelOperator c;
        c.mode_basis = true;
        c.nmax = a.nmax;
        c.mat = a.mat * b.mat;
        return c;
    }
    if (a.grid != b.grid) throw std::invalid_argument("compose: grid mismatch");
    KernelOperator c;
    c.grid = a.grid;
    c.mat = (kPi / a.grid) * (a.mat * b.mat);
    return c;
}

double hs_norm(const KernelOperator& k) {
    if (k.mode_basis) return k.mat.norm();
    return (kPi / k.grid) * k.mat.norm();
}

Eigen::MatrixXcd to_mode_matrix(const KernelOperator& k, int nmax) {
    if (k.mode_basis) throw std::invalid_argument("to_mode_matrix: already modes");
    if (k.grid < 2 * nmax + 1)
        throw std::invalid_argument("to_mode_matrix: grid too small");
    const Eigen::MatrixXcd e = mode_frame(k.grid, nmax);
    const double h = kPi / k.grid;
    return (h * h / kPi) * (e.adjoint() * k.mat * e);
}

KernelOperator mode_to_grid(const Eigen::MatrixXcd& m, int grid) {
    const int nmax = (static_cast<int>(m.rows()) - 1) / 2;
    if (grid < 2 * nmax + 1)
        throw std::invalid_argument("mode_to_grid: grid too small");
    const Eigen::MatrixXcd e = mode_frame(grid, nmax);
    KernelOperator k;
    k.grid = grid;
    k.mat = (e * m * e.adjoint()) / kPi;
    return k;
}

SharpResult sharp_product(const BiFunction& f, const BiFunction& g, double mu,
                          int grid, double band) {
    const KernelOperator kf = op_from_symbol(f, mu, grid);
    const KernelOperator kg = op_from_symbol(g, mu, grid);
    const KernelOperator kc = compose(kf, kg);
    SharpResult r;
    r.grid = grid;
    r.band = band;
    r.composed = kc.mat;
    r.symbol.resize(grid, grid);
    long off_band = 0;
    for (int j = 0; j < grid; ++j) {
        const double u = kPi * j / grid;
        for (int l = 0; l < grid; ++l) {
            const double v = kPi * l / grid;
            const double c = std::abs(std::cos(u - v));
            r.symbol(j, l) = kc.mat(j, l) * std::pow(c, -mu);
            if (c > band) ++off_band;
        }
    }
    r.coverage = static_cast<double>(off_band) / (static_cast<double>(grid) * grid);
    if (r.coverage == 0.0)
        throw std::invalid_argument("sharp_product: excision band covers everything");
    return r;
}

double cross_ratio(double u, double y, double x, double v) {
    return std::cos(u - x) * std::cos(y - v) /
           (std::cos(u - v) * std::cos(y - x));
}

namespace {

// integrand of the cross-ratio form, with the endpoint singularities of the
// arc [a,b] divided out: value(x) * ((x-a)(b-x))^mu is the true integrand
struct ArcIntegrand {
    const BiFunction& f;
    const BiFunction& g;
    double mu, u, v, a, b, wuv;

    cplx smooth(double x) const {
        const double xa = x - a, bx = b - x;
        const double s1 = std::abs(std::sin(xa)) / xa;
        const double s2 = std::abs(std::sin(bx)) / bx;
        const double xf = fold_angle(x);
        return f(u, xf) * g(xf, v) * wuv * std::pow(s1 * s2, mu);
    }
    // full integrand, safe away from the endpoints
    cplx full(double x) const {
        const double xf = fold_angle(x);
        return f(u, xf) * g(xf, v) * wuv *
               std::pow(std::abs(std::sin(x - a) * std::sin(b - x)), mu);
    }
};

cplx arc_jacobi(const ArcIntegrand& arc, int nodes) {
    const auto rule = quad::gauss_jacobi(nodes, arc.mu, arc.mu);
    const double h = 0.5 * (arc.b - arc.a);
    cplx acc(0, 0);
    for (std::size_t i = 0; i < rule.size(); ++i)
        acc += rule.w[i] * arc.smooth(arc.a + h * (1.0 + rule.x[i]));
    return std::pow(h, 2.0 * arc.mu + 1.0) * acc;
}

cplx arc_graded(const ArcIntegrand& arc, int nodes) {
    // dyadic panels from each endpoint toward the middle, plus the analytic
    // endpoint slivers int_0^d t^mu dt = d^(mu+1)/(mu+1)
    const auto rule = quad::gauss_legendre(nodes);
    const double mid = 0.5 * (arc.a + arc.b);
    const int levels = 26;
    cplx acc(0, 0);
    for (int side = 0; side < 2; ++side) {
        const double end = side == 0 ? arc.a : arc.b;
        const double dir = side == 0 ? 1.0 : -1.0;
        double width = (mid - arc.a);
        for (int k = 0; k < levels; ++k) {
            const double hi = width, lo = 0.5 * width;
            const double c = end + dir * 0.5 * (lo + hi);
            const double h = 0.5 * (hi - lo);
            for (std::size_t i = 0; i < rule.size(); ++i)
                acc += rule.w[i] * h * arc.full(c + dir * h * rule.x[i]);
            width = lo;
        }
        // remaining sliver [end, end +- width]
        acc += arc.smooth(end + dir * 0.5 * width) *
               std::pow(width, arc.mu + 1.0) / (arc.mu + 1.0) *
               std::pow(arc.b - arc.a, arc.mu);
    }
    return acc;
}

} // namespace

cplx sharp_integral_formula(const BiFunction& f, const BiFunction& g,
                            double mu, double u, double v, SharpRoute route,
                            int nodes) {
    if (!(mu > -1.0 && mu < 0.0))
        throw std::domain_error("sharp_integral_formula: needs mu in (-1,0)");
    u = fold_angle(u);
    v = fold_angle(v);
    if (std::abs(std::sin(u - v)) < 1e-9)
        throw std::invalid_argument("sharp_integral_formula: coincident points");
    const double wuv = std::pow(std::abs(std::cos(u - v)), -mu);
    double s1 = fold_angle(u + kPi / 2.0);
    double s2 = fold_angle(v + kPi / 2.0);
    if (s2 < s1) std::swap(s1, s2);
    cplx total(0, 0);
    const double arcs[2][2] = {{s1, s2}, {s2, s1 + kPi}};
    for (const auto& ab : arcs) {
        if (ab[1] - ab[0] < 1e-12) continue;
        ArcIntegrand arc{f, g, mu, u, v, ab[0], ab[1], wuv};
        total += route == SharpRoute::JacobiPanels ? arc_jacobi(arc, nodes)
                                                   : arc_graded(arc, nodes);
    }
    return total;
}

// ---------------------------------------------------------------------------
// covariant calculus

cplx BiSymbol::operator()(double u, double v) const {
    const int nm = nmax();
    cplx acc(0, 0);
    for (int a = -nm; a <= nm; ++a) {
        for (int b = -nm; b <= nm; ++b) {
            const cplx c = coef(a + nm, b + nm);
            if (c == cplx(0, 0)) continue;
            acc += c * std::polar(1.0, 2.0 * (a * u + b * v));
        }
    }
    return acc;
}

BiSymbol BiSymbol::constant(cplx value) {
    BiSymbol f(0);
    f.coef(0, 0) = value;
    return f;
}

BiSymbol act_symbol(const GroupElement& x, const BiSymbol& f, int nmax_out,
                    int grid) {
    const GroupElement xi = x.inverse();
    const GroupElement xci = x.cartan().inverse();
    const int nf = f.nmax();
    const int g = std::max(grid, 8 * std::max(nf, nmax_out) + 8);
    Eigen::MatrixXcd eu(g, 2 * nf + 1), ev(g, 2 * nf + 1);
    for (int j = 0; j < g; ++j) {
        const double th = kPi * j / g;
        const double au = projective_action(xi, th).angle;
        const double av = projective_action(xci, th).angle;
        for (int n = -nf; n <= nf; ++n) {
            eu(j, n + nf) = std::polar(1.0, 2.0 * n * au);
            ev(j, n + nf) = std::polar(1.0, 2.0 * n * av);
        }
    }
    const Eigen::MatrixXcd samples = eu * f.coef * ev.transpose();
    const Eigen::MatrixXcd e = mode_frame(g, nmax_out);
    BiSymbol out(nmax_out);
    out.coef = (e.adjoint() * samples * e.conjugate()) /
               (static_cast<double>(g) * g);
    const double total = samples.squaredNorm() / (static_cast<double>(g) * g);
    const double kept = out.coef.squaredNorm();
    out.aliasing_loss = total > 0 ? std::max(0.0, 1.0 - kept / total) : 0.0;
    return out;
}

Eigen::MatrixXcd op_mode_matrix(const BiSymbol& f, cplx mu, int window) {
    const int nf = f.nmax();
    // lambda_k of the kernel exponent mu itself, i.e. eigenvalue at -mu-2
    std::vector<cplx> lam(2 * (window + nf) + 1);
    for (int k = -(window + nf); k <= window + nf; ++k)
        lam[k + window + nf] = a_mu_eigenvalue(k, -2.0 - mu);
    const int w = 2 * window + 1;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(w, w);
    for (int mm = -window; mm <= window; ++mm) {
        for (int nn = -window; nn <= window; ++nn) {
            const int k = mm - nn;
            cplx acc(0, 0);
            for (int b = std::max(-nf, k - nf); b <= std::min(nf, k + nf); ++b)
                acc += f.coef(k - b + nf, b + nf) * lam[b + nn + window + nf];
            m(mm + window, nn + window) = acc;
        }
    }
    return m;
}

Eigen::MatrixXcd covariant_product_matrix(const BiSymbol& f, const BiSymbol& g,
                                          cplx mu, int window) {
    Eigen::VectorXcd lam(2 * window + 1);
    for (int n = -window; n <= window; ++n)
        lam(n + window) = a_mu_eigenvalue(n, mu);
    return op_mode_matrix(f, mu, window) * lam.asDiagonal() *
           op_mode_matrix(g, mu, window);
}

double covariant_covariance_residual(const BiSymbol& f, const BiSymbol& g,
                                     cplx mu, const GroupElement& x,
                                     int window, int ncentral) {
    const int nact = std::min(window, std::max(f.nmax(), g.nmax()) + 20);
    const BiSymbol lf = act_symbol(x, f, nact);
    const BiSymbol lg = act_symbol(x, g, nact);
    const Eigen::MatrixXcd m1 = covariant_product_matrix(lf, lg, mu, window);
    const Eigen::MatrixXcd c = covariant_product_matrix(f, g, mu, window);
    const Eigen::MatrixXcd pm = rep_mode_matrix(mu, x, false, window);
    const Eigen::MatrixXcd pp =
        rep_mode_matrix(-2.0 - mu, x.inverse(), true, window);
    const Eigen::MatrixXcd m2 = pm * c * pp;
    const int c0 = window - ncentral, cn = 2 * ncentral + 1;
    const double top = (m1 - m2).block(c0, c0, cn, cn).norm();
    const double bot = m1.block(c0, c0, cn, cn).norm();
    return bot > 0 ? top / bot : top;
}

// ---------------------------------------------------------------------------
// xi invariance

XiReport xi_invariance_check(int k, double a, cplx z) {
    if (k <= 0 || k % 2 != 0)
        throw std::invalid_argument(
            "xi_invariance_check: the invariant vector exists for even k only");
    if (!(z.imag() > 0))
        throw std::invalid_argument("xi_invariance_check: z must satisfy Im z > 0");
    if (a == 0.0) throw std::invalid_argument("xi_invariance_check: a must be nonzero");
    const auto xi = [k](cplx w) {
        return cpow(-std::conj(w), cplx(-0.5 * k, 0));
    };
    const cplx z2 = a * a * z;
    XiReport rep;
    const double cut = kPi - 1e-6;
    if (std::abs(std::arg(-std::conj(z))) > cut ||
        std::abs(std::arg(-std::conj(z2))) > cut)
        rep.branch_flag = true;
    rep.residual = std::abs(std::pow(std::abs(a), k) * xi(z2) - xi(z));
    return rep;
}

} // namespace conerc::circle
