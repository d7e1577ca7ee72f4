#pragma once

#include "conerc/rational.hpp"

#include <vector>

namespace conerc::rcb {

// truncated power series in q, exact rational coefficients, modular weight tag
struct QSeries {
    int weight = 0;
    std::vector<rational> c; // c[n] multiplies q^n

    int order() const { return static_cast<int>(c.size()) - 1; }
};

QSeries qs_zero(int weight, int order);
QSeries qs_one(int order); // constant 1, weight 0

QSeries add(const QSeries& f, const QSeries& g); // equal weights required
QSeries sub(const QSeries& f, const QSeries& g);
QSeries mul(const QSeries& f, const QSeries& g); // weight adds, order = min
QSeries scale(const rational& a, const QSeries& f);

// q d/dq; raises the weight tag by 2
QSeries theta(const QSeries& f);

bool identical(const QSeries& f, const QSeries& g); // through common order

// sigma_k(1..n_max) in one sieve pass
std::vector<bigint> sigma_table(int k, int n_max);

QSeries eisenstein_qexp(int k, int order); // k = 4 or 6
QSeries delta_qexp(int order);             // q prod (1 - q^n)^24

} // namespace conerc::rcb
