#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "conerc/conerc.h"

#include "json.hpp"

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

using json = nlohmann::json;

namespace {

struct AlgebraHandle {
    conerc_algebra* a = nullptr;
    explicit AlgebraHandle(const char* spec) {
        REQUIRE(conerc_algebra_create(spec, &a) == CONERC_OK);
    }
    ~AlgebraHandle() { conerc_algebra_destroy(a); }
};

std::string take(char* s) {
    REQUIRE(s != nullptr);
    std::string out = s;
    conerc_string_free(s);
    return out;
}

} // namespace

TEST_CASE("version and error plumbing") {
    CHECK(std::strlen(conerc_version()) > 0);

    conerc_algebra* a = nullptr;
    CHECK(conerc_algebra_create("frob:3", &a) == CONERC_ERR_INVALID_ARGUMENT);
    CHECK(std::strlen(conerc_last_error()) > 0);
    CHECK(a == nullptr);

    // a successful call clears the message
    CHECK(conerc_algebra_create("sym:2", &a) == CONERC_OK);
    CHECK(std::strlen(conerc_last_error()) == 0);
    conerc_algebra_destroy(a);

    CHECK(conerc_algebra_dim(nullptr, nullptr) == CONERC_ERR_INVALID_ARGUMENT);
    conerc_string_free(nullptr); // must be a no-op
}

TEST_CASE("algebra handles and element operations") {
    AlgebraHandle h("sym:2");
    int dim = 0;
    REQUIRE(conerc_algebra_dim(h.a, &dim) == CONERC_OK);
    REQUIRE(dim == 3);

    json info = json::parse(take([&] {
        char* s = nullptr;
        REQUIRE(conerc_algebra_info(h.a, &s) == CONERC_OK);
        return s;
    }()));
    CHECK(info["kind"] == "sym");
    CHECK(info["rank"] == 2);
    CHECK(info["dim"] == 3);
    CHECK(info["peirce"] == 1);

    // flat layout for sym:2 is the row-major upper triangle (x11, x12, x22),
    // off-diagonal coordinate c standing for matrix entry c/sqrt(2)
    std::vector<double> e = {1.0, 0.0, 1.0};
    std::vector<double> x = {2.0, 0.5, 3.0};
    std::vector<double> out(3, 0.0);
    REQUIRE(conerc_jordan_product(h.a, e.data(), x.data(), out.data()) ==
            CONERC_OK);
    for (int i = 0; i < 3; ++i) CHECK(out[i] == doctest::Approx(x[i]).epsilon(1e-14));

    double det = 0;
    REQUIRE(conerc_jordan_det(h.a, x.data(), &det) == CONERC_OK);
    CHECK(det == doctest::Approx(6.0 - 0.125).epsilon(1e-14));

    // x * x^{-1} = e
    std::vector<double> inv(3, 0.0);
    REQUIRE(conerc_jordan_inverse(h.a, x.data(), inv.data()) == CONERC_OK);
    REQUIRE(conerc_jordan_product(h.a, x.data(), inv.data(), out.data()) ==
            CONERC_OK);
    CHECK(out[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(out[1]) < 1e-12);
    CHECK(out[2] == doctest::Approx(1.0).epsilon(1e-12));

    // singular element maps to the dedicated status
    std::vector<double> sing = {1.0, std::sqrt(2.0), 1.0}; // det = 0
    CHECK(conerc_jordan_inverse(h.a, sing.data(), inv.data()) ==
          CONERC_ERR_SINGULAR);

    double snorm = 0;
    std::vector<double> re = {0.3, -0.1, 0.2}, im = {0.0, 0.4, -0.2};
    REQUIRE(conerc_spectral_norm(h.a, re.data(), im.data(), &snorm) == CONERC_OK);
    CHECK(snorm > 0.0);
}

TEST_CASE("special function values through the C surface") {
    AlgebraHandle r1("sym:1");
    double v[2] = {0, 0};
    REQUIRE(conerc_gindikin_gamma(r1.a, 4.0, 0.0, v) == CONERC_OK);
    CHECK(v[0] == doctest::Approx(6.0).epsilon(1e-12)); // Gamma(4) = 3!
    CHECK(std::abs(v[1]) < 1e-12);

    AlgebraHandle s3("sym:3");
    const int64_t m[3] = {3, 2, 1};
    double p = 0;
    REQUIRE(conerc_pochhammer(s3.a, 2.7, m, 3, &p) == CONERC_OK);
    // (2.7)_3 (2.2)_2 (1.7)_1
    const double want = (2.7 * 3.7 * 4.7) * (2.2 * 3.2) * 1.7;
    CHECK(p == doctest::Approx(want).epsilon(1e-12));

    int in_set = -1;
    REQUIRE(conerc_wallach_contains(s3.a, 0.5, &in_set) == CONERC_OK);
    CHECK(in_set == 1);
    REQUIRE(conerc_wallach_contains(s3.a, 0.25, &in_set) == CONERC_OK);
    CHECK(in_set == 0);

    double c = 0;
    REQUIRE(conerc_conv_constant(r1.a, 3.0, 3.0, "final", &c) == CONERC_OK);
    CHECK(c == doctest::Approx(0.125).epsilon(1e-12));
    CHECK(conerc_conv_constant(r1.a, 3.0, 3.0, "בogus", &c) ==
          CONERC_ERR_INVALID_ARGUMENT);
}

TEST_CASE("rankin-cohen data as json") {
    json coeffs = json::parse(take([&] {
        char* s = nullptr;
        REQUIRE(conerc_rcb_coeffs_json(4, 6, 1, &s) == CONERC_OK);
        return s;
    }()));
    REQUIRE(coeffs["coeffs"].size() == 2);
    CHECK(coeffs["coeffs"][0] == "6");
    CHECK(coeffs["coeffs"][1] == "-4");

    // [E4, E6]_1 = 3456 Delta = 2 E4^3 - 2 E6^2
    json mod = json::parse(take([&] {
        char* s = nullptr;
        REQUIRE(conerc_rcb_modular_json("E4", "E6", 1, 50, &s) == CONERC_OK);
        return s;
    }()));
    CHECK(mod["weight"] == 12);
    REQUIRE(mod["monomials"].size() == mod["coords"].size());
    bool saw_e43 = false, saw_e62 = false;
    for (std::size_t i = 0; i < mod["monomials"].size(); ++i) {
        const int a = mod["monomials"][i][0], b = mod["monomials"][i][1];
        const std::string c = mod["coords"][i];
        if (a == 3 && b == 0) {
            CHECK(c == "2");
            saw_e43 = true;
        } else if (a == 0 && b == 2) {
            CHECK(c == "-2");
            saw_e62 = true;
        } else {
            CHECK(c == "0");
        }
    }
    CHECK(saw_e43);
    CHECK(saw_e62);

    char* s = nullptr;
    CHECK(conerc_rcb_modular_json("E8", "E6", 1, 50, &s) ==
          CONERC_ERR_INVALID_ARGUMENT);
}

TEST_CASE("sharp calculus spot values") {
    double v[2] = {0, 0};
    REQUIRE(conerc_c_mu(-1.5, 0.0, v) == CONERC_OK);
    CHECK(v[0] == doctest::Approx(-4 * 3.14159265358979324).epsilon(1e-12));

    REQUIRE(conerc_a_mu_eigenvalue(0, -2.0, 0.0, v) == CONERC_OK);
    CHECK(v[0] == doctest::Approx(3.14159265358979324).epsilon(1e-12));

    CHECK(conerc_c_mu(-1.0, 0.0, v) == CONERC_ERR_POLE);
    CHECK(conerc_a_mu_eigenvalue(0, -1.0, 0.0, v) == CONERC_ERR_POLE);
}

TEST_CASE("suite runner: reports, determinism, table rendering") {
    const std::string rep = take([&] {
        char* s = nullptr;
        REQUIRE(conerc_run_suite_json("cmu", "{\"mu\":-1.5,\"nmax\":8}", &s) ==
                CONERC_OK);
        return s;
    }());
    json j = json::parse(rep);
    CHECK(j["suite"] == "cmu");
    CHECK(j["generator"] == "mt19937-64");
    CHECK(j["records"].size() == 11);
    CHECK(j["all_pass"] == true);
    for (const auto& r : j["records"]) {
        CHECK(r["status"] == "pass");
        CHECK(std::isfinite(r["residual"].get<double>()));
    }

    // byte determinism
    const std::string rep2 = take([&] {
        char* s = nullptr;
        REQUIRE(conerc_run_suite_json("cmu", "{\"mu\":-1.5,\"nmax\":8}", &s) ==
                CONERC_OK);
        return s;
    }());
    CHECK(rep == rep2);

    int all = 0;
    REQUIRE(conerc_report_all_pass(rep.c_str(), &all) == CONERC_OK);
    CHECK(all == 1);

    const std::string table = take([&] {
        char* s = nullptr;
        REQUIRE(conerc_report_table(rep.c_str(), 0, &s) == CONERC_OK);
        return s;
    }());
    CHECK(table.find("lambda product, n=0") != std::string::npos);
    CHECK(table.find("pass") != std::string::npos);
    CHECK(table.find("\033[") == std::string::npos); // no color when off

    char* s = nullptr;
    CHECK(conerc_run_suite_json("nope", "", &s) == CONERC_ERR_INVALID_ARGUMENT);
    CHECK(conerc_run_suite_json("cmu", "{\"frob\":1}", &s) ==
          CONERC_ERR_INVALID_ARGUMENT);
    CHECK(conerc_report_table("not json", 0, &s) == CONERC_ERR_INVALID_ARGUMENT);
}
