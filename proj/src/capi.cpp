#include "conerc/conerc.h"

#include "conerc/algebra.hpp"
#include "conerc/brackets.hpp"
#include "conerc/circle.hpp"
#include "conerc/qseries.hpp"
#include "conerc/special_functions.hpp"
#include "conerc/suites.hpp"

#include "json.hpp"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

using json = nlohmann::ordered_json;

struct conerc_algebra {
    conerc::jordan::Algebra impl;
};

namespace {

thread_local std::string t_error;

conerc_status classify(const std::exception& e, conerc_status fallback) {
    const std::string msg = e.what();
    t_error = msg;
    if (msg.find("singular") != std::string::npos) return CONERC_ERR_SINGULAR;
    if (msg.find("pole") != std::string::npos) return CONERC_ERR_POLE;
    if (msg.find("residual series is nonzero") != std::string::npos)
        return CONERC_ERR_NOT_MODULAR;
    return fallback;
}

char* copy_out(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) return nullptr;
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

// every entry point funnels through here so the error handling stays uniform
template <typename Fn>
conerc_status guarded(Fn&& body) {
    t_error.clear();
    try {
        return body();
    } catch (const std::invalid_argument& e) {
        return classify(e, CONERC_ERR_INVALID_ARGUMENT);
    } catch (const std::domain_error& e) {
        return classify(e, CONERC_ERR_DOMAIN);
    } catch (const nlohmann::json::exception& e) {
        t_error = e.what();
        return CONERC_ERR_INVALID_ARGUMENT;
    } catch (const std::exception& e) {
        t_error = e.what();
        return CONERC_ERR_INTERNAL;
    } catch (...) {
        t_error = "unknown error";
        return CONERC_ERR_INTERNAL;
    }
}

conerc_status need(bool ok, const char* what) {
    if (ok) return CONERC_OK;
    t_error = what;
    return CONERC_ERR_INVALID_ARGUMENT;
}

std::string rat_str(const conerc::rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

conerc::report::RunReport report_from_json(const std::string& text) {
    const json j = json::parse(text);
    conerc::report::RunReport r;
    r.suite = j.at("suite").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.generator = j.at("generator").get<std::string>();
    for (const auto& [k, v] : j.at("config").items())
        r.config.emplace_back(k, v.get<std::string>());
    for (const auto& rec : j.at("records")) {
        conerc::report::CheckRecord c;
        c.name = rec.at("name").get<std::string>();
        c.pass = rec.at("status").get<std::string>() == "pass";
        c.residual = rec.at("residual").get<double>();
        c.tolerance = rec.at("tolerance").get<double>();
        c.runtime_ms = rec.at("runtime_ms").get<double>();
        r.records.push_back(c);
    }
    return r;
}

} // namespace

extern "C" {

const char* conerc_version(void) { return "0.1.0"; }

const char* conerc_last_error(void) { return t_error.c_str(); }

void conerc_string_free(char* s) { std::free(s); }

conerc_status conerc_algebra_create(const char* spec, conerc_algebra** out) {
    return guarded([&]() -> conerc_status {
        if (auto st = need(spec && out, "null argument")) return st;
        *out = new conerc_algebra{conerc::jordan::parse(spec)};
        return CONERC_OK;
    });
}

void conerc_algebra_destroy(conerc_algebra* a) { delete a; }

conerc_status conerc_algebra_dim(const conerc_algebra* a, int* out) {
    return guarded([&]() -> conerc_status {
        if (auto st = need(a && out, "null argument")) return st;
        *out = a->impl.dim;
        return CONERC_OK;
    });
}

conerc_status conerc_algebra_info(const conerc_algebra* a, char** json_out) {
    return guarded([&]() -> conerc_status {
        if (auto st = need(a && json_out, "null argument")) return st;
        const char* kind = a->impl.kind == conerc::jordan::Kind::Sym    ? "sym"
                           : a->impl.kind == conerc::jordan::Kind::Herm ? "herm"
                                                                        : "spin";
        json j;
        j["kind"] = kind;
        j["n"] = a->impl.n;
        j["rank"] = a->impl.rank;
        j["dim"] = a->impl.dim;
        j["peirce"] = a->impl.peirce;
        *json_out = copy_out(j.dump());
        return CONERC_OK;
    });
}

conerc_status conerc_jordan_product(const conerc_algebra* a, const double* x,
                                    const double* y, double* out) {
    return guarded([&]() -> conerc_status {
        if (auto st = need(a && x && y && out, "null argument")) return st;
        const int d = a->impl.dim;
        const Eigen::VectorXd vx = Eigen::Map<const Eigen::VectorXd>(x, d);
        const Eigen::VectorXd vy = Eigen::Map<const Eigen::VectorXd>(y, d);
        Eigen::Map<Eigen::VectorXd>(out, d) =
            conerc::jordan::jordan_product(a->impl, vx, vy);
        return CONERC_OK;
    });
}

conerc_status conerc_jordan_det(const conerc_algebra* a, const double* x,
                                double* out) {
    return guarded([&]() -> conerc_status {
        if (auto st = need(a && x && out, "null argument")) return st;
        const Eigen::VectorXd vx =
            Eigen::Map<const Eigen::VectorXd>(x, a->impl.dim);
        *out = conerc::jordan::jordan_det(a->impl, vx);
        return CONERC_OK;
    });
}

conerc_status conerc_jordan_inverse(const conerc_algebra* a, const double* x,
                                    double* out) {
    return guarded([&]() -> conerc_status {
        if (auto st = need(a && x && out, "null argument")) return st;
        const int d = a->impl.dim;
        const Eigen::VectorXd vx = Eigen::Map<const Eigen::VectorXd>(x, d);
        Eigen::Map<Eigen::VectorXd>(out, d) =
            conerc::jordan::inverse(a->impl, vx);
        return CONERC_OK;
    });
}

conerc_status conerc_spectral_norm(const conerc_algebra* a, const double* re,
                                   const double* im, double* out) {
    return guarded([&]() -> conerc_status {
        if (auto st = need(a && re && im && out, "null argument")) return st;
        const int d = a->impl.dim;
        conerc::jordan::CVec z(d);
        for (int i = 0; i < d; ++i) z[i] = conerc::jordan::cplx(re[i], im[i]);
        *out = conerc::jordan::spectral_norm(a->impl, z);
        return CONERC_OK;
    });
}

conerc_status conerc_gindikin_gamma(const conerc_algebra* a, double nu_re,
                                    double nu_im, double out[2]) {
    return guarded([&]() -> conerc_status {
        if (auto st = need(a && out, "null argument")) return st;
        const auto v = conerc::special::gindikin_gamma(
            conerc::special::cplx(nu_re, nu_im), a->impl);
        out[0] = v.real();
        out[1] = v.imag();
        return CONERC_OK;
    });
}

conerc_status conerc_pochhammer(const conerc_algebra* a, double nu,
                                const int64_t* m, size_t mlen, double* out) {
    return guarded([&]() -> conerc_status {
        if (auto st = need(a && m && out && mlen > 0, "null argument"))
            return st;
        const std::vector<long> mv(m, m + mlen);
        *out = conerc::special::pochhammer_general(nu, mv, a->impl);
        return CONERC_OK;
    });
}

conerc_status conerc_wallach_contains(const conerc_algebra* a, double nu,
                                      int* out) {
    return guarded([&]() -> conerc_status {
        if (auto st = need(a && out, "null argument")) return st;
        *out = conerc::special::wallach_contains(nu, a->impl) ? 1 : 0;
        return CONERC_OK;
    });
}

conerc_status conerc_conv_constant(const conerc_algebra* a, double nu1,
                                   double nu2, const char* variant,
                                   double* out) {
    return guarded([&]() -> conerc_status {
        if (auto st = need(a && variant && out, "null argument")) return st;
        *out = conerc::special::conv_constant(
            nu1, nu2, a->impl, conerc::special::parse_variant(variant));
        return CONERC_OK;
    });
}

conerc_status conerc_rcb_coeffs_json(int k1, int k2, int j, char** json_out) {
    return guarded([&]() -> conerc_status {
        if (auto st = need(json_out != nullptr, "null argument")) return st;
        const std::vector<conerc::rational> c =
            conerc::rcb::rcb_coeffs(k1, k2, j);
        json out;
        out["k1"] = k1;
        out["k2"] = k2;
        out["j"] = j;
        json arr = json::array();
        for (const conerc::rational& r : c) arr.push_back(rat_str(r));
        out["coeffs"] = arr;
        *json_out = copy_out(out.dump());
        return CONERC_OK;
    });
}

conerc_status conerc_rcb_modular_json(const char* f, const char* g, int j,
                                      int order, char** json_out) {
    return guarded([&]() -> conerc_status {
        if (auto st = need(f && g && json_out, "null argument")) return st;
        auto series = [&](const char* name) {
            const std::string s = name;
            if (s == "E4") return conerc::rcb::eisenstein_qexp(4, order);
            if (s == "E6") return conerc::rcb::eisenstein_qexp(6, order);
            throw std::invalid_argument("rcb modular: f,g must be E4 or E6");
        };
        const conerc::rcb::QSeries fs = series(f), gs = series(g);
        const conerc::rcb::QSeries br = conerc::rcb::rcb_qseries(fs, gs, j);
        const conerc::rcb::BasisExpansion ex =
            conerc::rcb::express_in_modular_basis(br);
        json out;
        out["f"] = f;
        out["g"] = g;
        out["j"] = j;
        out["order"] = order;
        out["weight"] = ex.weight;
        json mono = json::array();
        for (const auto& ab : ex.monomials) mono.push_back({ab[0], ab[1]});
        out["monomials"] = mono;
        json coords = json::array();
        for (const conerc::rational& r : ex.coords) coords.push_back(rat_str(r));
        out["coords"] = coords;
        *json_out = copy_out(out.dump());
        return CONERC_OK;
    });
}

conerc_status conerc_c_mu(double mu_re, double mu_im, double out[2]) {
    return guarded([&]() -> conerc_status {
        if (auto st = need(out != nullptr, "null argument")) return st;
        const auto v = conerc::circle::c_mu(conerc::circle::cplx(mu_re, mu_im));
        out[0] = v.real();
        out[1] = v.imag();
        return CONERC_OK;
    });
}

conerc_status conerc_a_mu_eigenvalue(int n, double mu_re, double mu_im,
                                     double out[2]) {
    return guarded([&]() -> conerc_status {
        if (auto st = need(out != nullptr, "null argument")) return st;
        const auto v = conerc::circle::a_mu_eigenvalue(
            n, conerc::circle::cplx(mu_re, mu_im));
        out[0] = v.real();
        out[1] = v.imag();
        return CONERC_OK;
    });
}

conerc_status conerc_run_suite_json(const char* suite, const char* config_json,
                                    char** json_out) {
    return guarded([&]() -> conerc_status {
        if (auto st = need(suite && json_out, "null argument")) return st;
        conerc::report::SuiteConfig cfg = conerc::report::config_from_json(
            config_json ? config_json : "");
        cfg.seed = conerc::report::seed_from_env(cfg.seed);
        const conerc::report::RunReport r =
            conerc::report::run_suite(suite, cfg);
        *json_out = copy_out(conerc::report::emit_json(r));
        return CONERC_OK;
    });
}

conerc_status conerc_report_table(const char* report_json, int color,
                                  char** text_out) {
    return guarded([&]() -> conerc_status {
        if (auto st = need(report_json && text_out, "null argument")) return st;
        const conerc::report::RunReport r = report_from_json(report_json);
        *text_out = copy_out(conerc::report::emit_table(r, color != 0));
        return CONERC_OK;
    });
}

conerc_status conerc_report_all_pass(const char* report_json, int* out) {
    return guarded([&]() -> conerc_status {
        if (auto st = need(report_json && out, "null argument")) return st;
        *out = report_from_json(report_json).all_pass() ? 1 : 0;
        return CONERC_OK;
    });
}

} // extern "C"
