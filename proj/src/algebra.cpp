#include "conerc/algebra.hpp"

#include <cmath>
#include <stdexcept>

namespace conerc::jordan {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

void check_dim(const Algebra& a, Eigen::Index sz) {
    if (sz != a.dim)
        throw std::invalid_argument("element size " + std::to_string(sz) +
                                    " does not match algebra " + a.name());
}

// row-major upper-triangle index for i <= j
int sym_idx(int n, int i, int j) { return i * n - i * (i - 1) / 2 + (j - i); }

CVec spin_product(const CVec& x, const CVec& y) {
    const int m = static_cast<int>(x.size()) - 1;
    CVec out(m + 1);
    const cplx xn = x(m), yn = y(m);
    cplx dot = 0.0;
    for (int i = 0; i < m; ++i) {
        out(i) = xn * y(i) + yn * x(i);
        dot += x(i) * y(i);
    }
    out(m) = dot + xn * yn;
    return out;
}

} // namespace

std::string Algebra::name() const {
    const char* k = kind == Kind::Sym ? "sym" : kind == Kind::Herm ? "herm" : "spin";
    return std::string(k) + ":" + std::to_string(n);
}

Algebra make(Kind kind, int n) {
    Algebra a{kind, n, 0, 0, 0};
    switch (kind) {
    case Kind::Sym:
        if (n < 1) throw std::invalid_argument("sym: n >= 1 required");
        a.rank = n;
        a.dim = n * (n + 1) / 2;
        a.peirce = 1;
        break;
    case Kind::Herm:
        if (n < 1) throw std::invalid_argument("herm: n >= 1 required");
        a.rank = n;
        a.dim = n * n;
        a.peirce = 2;
        break;
    case Kind::Spin:
        if (n < 3) throw std::invalid_argument("spin: n >= 3 required");
        a.rank = 2;
        a.dim = n;
        a.peirce = n - 2;
        break;
    }
    return a;
}

Algebra parse(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("algebra spec must look like kind:n, got '" + text + "'");
    const std::string kind = text.substr(0, colon);
    int n = 0;
    try {
        n = std::stoi(text.substr(colon + 1));
    } catch (const std::exception&) {
        throw std::invalid_argument("bad size in algebra spec '" + text + "'");
    }
    if (kind == "sym") return make(Kind::Sym, n);
    if (kind == "herm") return make(Kind::Herm, n);
    if (kind == "spin") return make(Kind::Spin, n);
    throw std::invalid_argument("unsupported kind '" + kind +
                                "' (supported: sym, herm, spin)");
}

CMat to_matrix(const Algebra& a, const CVec& x) {
    check_dim(a, x.size());
    const int n = a.n;
    CMat m = CMat::Zero(n, n);
    if (a.kind == Kind::Sym) {
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                const cplx c = x(sym_idx(n, i, j));
                if (i == j) m(i, i) = c;
                else m(i, j) = m(j, i) = c / kSqrt2;
            }
    } else if (a.kind == Kind::Herm) {
        for (int i = 0; i < n; ++i) m(i, i) = x(i);
        int p = n;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const cplx re = x(p), im = x(p + 1);
                p += 2;
                m(i, j) = (re + cplx(0, 1) * im) / kSqrt2;
                m(j, i) = (re - cplx(0, 1) * im) / kSqrt2;
            }
    } else {
        throw std::invalid_argument("to_matrix: spin factor has no matrix model");
    }
    return m;
}

CVec from_matrix(const Algebra& a, const CMat& m) {
    const int n = a.n;
    if (m.rows() != n || m.cols() != n)
        throw std::invalid_argument("from_matrix: wrong matrix size");
    CVec x(a.dim);
    if (a.kind == Kind::Sym) {
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j)
                x(sym_idx(n, i, j)) = (i == j) ? m(i, i) : (m(i, j) + m(j, i)) / kSqrt2;
    } else if (a.kind == Kind::Herm) {
        for (int i = 0; i < n; ++i) x(i) = m(i, i);
        int p = n;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                x(p) = (m(i, j) + m(j, i)) / kSqrt2;
                x(p + 1) = cplx(0, 1) * (m(j, i) - m(i, j)) / kSqrt2;
                p += 2;
            }
    } else {
        throw std::invalid_argument("from_matrix: spin factor has no matrix model");
    }
    return x;
}

Vec unit(const Algebra& a) {
    Vec e = Vec::Zero(a.dim);
    switch (a.kind) {
    case Kind::Sym:
        for (int i = 0; i < a.n; ++i) e(sym_idx(a.n, i, i)) = 1.0;
        break;
    case Kind::Herm:
        for (int i = 0; i < a.n; ++i) e(i) = 1.0;
        break;
    case Kind::Spin:
        e(a.dim - 1) = 1.0;
        break;
    }
    return e;
}

CVec jordan_product(const Algebra& a, const CVec& x, const CVec& y) {
    check_dim(a, x.size());
    check_dim(a, y.size());
    if (a.kind == Kind::Spin) return spin_product(x, y);
    const CMat mx = to_matrix(a, x), my = to_matrix(a, y);
    return from_matrix(a, 0.5 * (mx * my + my * mx));
}

Vec jordan_product(const Algebra& a, const Vec& x, const Vec& y) {
    return jordan_product(a, x.cast<cplx>().eval(), y.cast<cplx>().eval()).real();
}

CMat lmap(const Algebra& a, const CVec& x) {
    check_dim(a, x.size());
    CMat l(a.dim, a.dim);
    CVec b = CVec::Zero(a.dim);
    for (int k = 0; k < a.dim; ++k) {
        b(k) = 1.0;
        l.col(k) = jordan_product(a, x, b);
        b(k) = 0.0;
    }
    return l;
}

Mat lmap(const Algebra& a, const Vec& x) { return lmap(a, x.cast<cplx>().eval()).real(); }

CMat quadratic_rep(const Algebra& a, const CVec& x) {
    const CMat l = lmap(a, x);
    return 2.0 * l * l - lmap(a, jordan_product(a, x, x));
}

Mat quadratic_rep(const Algebra& a, const Vec& x) {
    return quadratic_rep(a, x.cast<cplx>().eval()).real();
}

CMat dmap(const Algebra& a, const CVec& x, const CVec& y) {
    const CMat lx = lmap(a, x), ly = lmap(a, y);
    return lmap(a, jordan_product(a, x, y)) - (lx * ly - ly * lx);
}

Mat dmap(const Algebra& a, const Vec& x, const Vec& y) {
    return dmap(a, x.cast<cplx>().eval(), y.cast<cplx>().eval()).real();
}

std::vector<double> eigenvalues(const Algebra& a, const Vec& x) {
    check_dim(a, x.size());
    std::vector<double> ev;
    if (a.kind == Kind::Spin) {
        const int m = a.dim - 1;
        const double norm = x.head(m).norm();
        ev = {x(m) - norm, x(m) + norm};
    } else {
        Eigen::SelfAdjointEigenSolver<CMat> es(to_matrix(a, x.cast<cplx>().eval()));
        ev.assign(es.eigenvalues().data(), es.eigenvalues().data() + a.rank);
    }
    return ev;
}

std::vector<double> char_coeffs(const Algebra& a, const Vec& x) {
    const auto ev = eigenvalues(a, x);
    const int r = a.rank;
    // expand prod (t - lambda_i); c[k] = (-1)^k e_k
    std::vector<double> c(r + 1, 0.0);
    c[0] = 1.0;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j >= 1; --j) c[j] -= ev[i] * c[j - 1];
    std::vector<double> out(r);
    for (int k = 1; k <= r; ++k) out[k - 1] = (k % 2 == 0 ? c[k] : -c[k]);
    return out;
}

double jordan_trace(const Algebra& a, const Vec& x) {
    check_dim(a, x.size());
    if (a.kind == Kind::Spin) return 2.0 * x(a.dim - 1);
    double t = 0.0;
    if (a.kind == Kind::Sym)
        for (int i = 0; i < a.n; ++i) t += x(sym_idx(a.n, i, i));
    else
        for (int i = 0; i < a.n; ++i) t += x(i);
    return t;
}

cplx jordan_det(const Algebra& a, const CVec& x) {
    check_dim(a, x.size());
    if (a.kind == Kind::Spin) {
        const int m = a.dim - 1;
        cplx q = 0.0;
        for (int i = 0; i < m; ++i) q += x(i) * x(i);
        return x(m) * x(m) - q;
    }
    return to_matrix(a, x).determinant();
}

double jordan_det(const Algebra& a, const Vec& x) {
    return jordan_det(a, x.cast<cplx>().eval()).real();
}

CVec inverse(const Algebra& a, const CVec& x) {
    const cplx det = jordan_det(a, x);
    const double scale = std::max(x.norm(), 1e-300);
    if (std::abs(det) <= 1e-12 * std::pow(scale, a.rank))
        throw std::domain_error("inverse: singular element (|det| = " +
                                std::to_string(std::abs(det)) + ")");
    // x^{-1} = P(x)^{-1} x, valid on the complexification as well
    return quadratic_rep(a, x).lu().solve(x);
}

Vec inverse(const Algebra& a, const Vec& x) {
    return inverse(a, x.cast<cplx>().eval()).real();
}

bool is_in_cone(const Algebra& a, const Vec& x) {
    for (double ev : eigenvalues(a, x))
        if (ev <= 0.0) return false;
    return true;
}

double spectral_norm(const Algebra& a, const CVec& z) {
    check_dim(a, z.size());
    const Vec x = z.real(), y = z.imag();
    const Mat s = dmap(a, x, x) + dmap(a, y, y);
    const Mat t = dmap(a, y, x) - dmap(a, x, y);
    CMat h = s.cast<cplx>() + cplx(0, 1) * t.cast<cplx>();
    Eigen::SelfAdjointEigenSolver<CMat> es(h);
    const double top = es.eigenvalues().maxCoeff();
    return std::sqrt(std::max(top, 0.0));
}

double spectral_norm(const Algebra& a, const Vec& x) {
    return spectral_norm(a, x.cast<cplx>().eval());
}

cplx canonical_poly(const Algebra& a, const CVec& z, const CVec& w) {
    check_dim(a, z.size());
    check_dim(a, w.size());
    if (a.kind == Kind::Spin) {
        const int m = a.dim - 1;
        const CVec wc = w.conjugate();
        cplx dot = 0.0;
        for (int i = 0; i <= m; ++i) dot += z(i) * wc(i);
        return 1.0 - 2.0 * dot + jordan_det(a, z) * jordan_det(a, wc);
    }
    const CMat zm = to_matrix(a, z), wm = to_matrix(a, w);
    const CMat id = CMat::Identity(a.n, a.n);
    return (id - zm * wm.adjoint()).determinant();
}

CMat bergman_op(const Algebra& a, const CVec& z, const CVec& w) {
    check_dim(a, z.size());
    check_dim(a, w.size());
    const CVec wc = w.conjugate();
    // z box wbar = L(z o wbar) + [L(z), L(wbar)]
    const CMat lz = lmap(a, z), lw = lmap(a, wc);
    const CMat box = lmap(a, jordan_product(a, z, wc)) + (lz * lw - lw * lz);
    return CMat::Identity(a.dim, a.dim) - 2.0 * box +
           quadratic_rep(a, z) * quadratic_rep(a, wc);
}

CayleyResult cayley(const Algebra& a, const CVec& z) {
    check_dim(a, z.size());
    const CVec ie = cplx(0, 1) * unit(a).cast<cplx>();
    const CVec num = z - ie;
    const CVec den = inverse(a, (z + ie).eval()); // throws if z + ie singular
    CayleyResult r;
    r.value = jordan_product(a, num, den);
    r.boundary = spectral_norm(a, r.value) >= 1.0 - 1e-9;
    return r;
}

} // namespace conerc::jordan
