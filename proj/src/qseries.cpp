#include "conerc/qseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace conerc::rcb {

QSeries qs_zero(int weight, int order) {
    if (order < 0) throw std::invalid_argument("qseries: order >= 0");
    return {weight, std::vector<rational>(order + 1, rational(0))};
}

QSeries qs_one(int order) {
    QSeries f = qs_zero(0, order);
    f.c[0] = 1;
    return f;
}

QSeries add(const QSeries& f, const QSeries& g) {
    if (f.weight != g.weight)
        throw std::invalid_argument("qseries add: weight mismatch");
    const int n = std::min(f.order(), g.order());
    QSeries out = qs_zero(f.weight, n);
    for (int i = 0; i <= n; ++i) out.c[i] = f.c[i] + g.c[i];
    return out;
}

QSeries sub(const QSeries& f, const QSeries& g) {
    return add(f, scale(rational(-1), g));
}

QSeries mul(const QSeries& f, const QSeries& g) {
    const int n = std::min(f.order(), g.order());
    QSeries out = qs_zero(f.weight + g.weight, n);
    for (int i = 0; i <= n; ++i) {
        if (f.c[i] == 0) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (g.c[j] == 0) continue;
            out.c[i + j] += f.c[i] * g.c[j];
        }
    }
    return out;
}

QSeries scale(const rational& a, const QSeries& f) {
    QSeries out = f;
    for (auto& x : out.c) x *= a;
    return out;
}

QSeries theta(const QSeries& f) {
    QSeries out = f;
    out.weight += 2;
    for (int n = 0; n <= f.order(); ++n) out.c[n] *= n;
    return out;
}

bool identical(const QSeries& f, const QSeries& g) {
    const int n = std::min(f.order(), g.order());
    for (int i = 0; i <= n; ++i)
        if (f.c[i] != g.c[i]) return false;
    return true;
}

std::vector<bigint> sigma_table(int k, int n_max) {
    std::vector<bigint> sig(n_max + 1, bigint(0));
    for (long d = 1; d <= n_max; ++d) {
        bigint dk = 1;
        for (int i = 0; i < k; ++i) dk *= d;
        for (long m = d; m <= n_max; m += d) sig[m] += dk;
    }
    return sig;
}

QSeries eisenstein_qexp(int k, int order) {
    if (k != 4 && k != 6)
        throw std::invalid_argument("eisenstein: only weights 4 and 6");
    QSeries f = qs_zero(k, order);
    f.c[0] = 1;
    const auto sig = sigma_table(k - 1, order);
    const rational factor = (k == 4) ? rational(240) : rational(-504);
    for (int n = 1; n <= order; ++n) f.c[n] = factor * rational(sig[n]);
    return f;
}

QSeries delta_qexp(int order) {
    // euler product prod (1 - q^n) through q^(order-1), then 24th power, shift
    QSeries euler = qs_zero(0, std::max(order - 1, 0));
    euler.c[0] = 1;
    for (int n = 1; n <= euler.order(); ++n) {
        QSeries factor = qs_zero(0, euler.order());
        factor.c[0] = 1;
        factor.c[n] = -1;
        euler = mul(euler, factor);
    }
    QSeries p24 = qs_one(euler.order());
    for (int i = 0; i < 24; ++i) p24 = mul(p24, euler);
    QSeries out = qs_zero(12, order);
    for (int n = 1; n <= order; ++n) out.c[n] = p24.c[n - 1];
    return out;
}

} // namespace conerc::rcb
