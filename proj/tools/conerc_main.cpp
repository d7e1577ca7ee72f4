// command line front end; talks to the library only through the C surface
#include "conerc/conerc.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#ifdef _WIN32
#include <io.h>
#define CONERC_ISATTY _isatty(_fileno(stdout))
#else
#include <unistd.h>
#define CONERC_ISATTY isatty(fileno(stdout))
#endif

using json = nlohmann::ordered_json;

namespace {

struct Freed {
    char* p = nullptr;
    ~Freed() { conerc_string_free(p); }
};

[[noreturn]] void die(conerc_status st) {
    std::cerr << "error: " << conerc_last_error() << "\n";
    std::exit(st == CONERC_OK ? 1 : static_cast<int>(st));
}

struct AlgebraGuard {
    conerc_algebra* a = nullptr;
    explicit AlgebraGuard(const std::string& spec) {
        if (auto st = conerc_algebra_create(spec.c_str(), &a)) die(st);
    }
    ~AlgebraGuard() { conerc_algebra_destroy(a); }
};

// flags shared by the verify subtree; only flags the user passed end up in the
// config object so library defaults stay authoritative
struct VerifyOpts {
    long seed = 0;
    int trials = 0, points = 0, order = 0, draws = 0, modes = 0, grid = 0,
        nmax = 0, refine = 0;
    double nu = 0, mu = 0, tol = 0;
    bool timings = false;
    std::string algebra, format = "table";
};

void add_verify_flags(CLI::App* cmd, VerifyOpts& o) {
    cmd->add_option("--seed", o.seed, "rng seed (env CONE_RCB_SEED wins)");
    cmd->add_option("--trials", o.trials, "randomized trials per check");
    cmd->add_option("--points", o.points, "sample points for identity checks");
    cmd->add_option("--order", o.order, "q-expansion order");
    cmd->add_option("--draws", o.draws, "independent random draws");
    cmd->add_option("--modes", o.modes, "mode cutoff for operator checks");
    cmd->add_option("--grid", o.grid, "grid size (even values are bumped)");
    cmd->add_option("--nmax", o.nmax, "highest mode index");
    cmd->add_option("--refine", o.refine, "refinement ladder depth");
    cmd->add_option("--nu", o.nu, "weight parameter");
    cmd->add_option("--mu", o.mu, "principal series parameter");
    cmd->add_option("--tol", o.tol, "override per-check tolerance");
    cmd->add_option("--algebra", o.algebra, "restrict to one algebra spec");
    cmd->add_flag("--timings", o.timings, "record per-check runtimes");
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "table"}));
}

std::string verify_config(const CLI::App* cmd, const VerifyOpts& o) {
    json cfg = json::object();
    auto passed = [&](const char* name) { return cmd->count(name) > 0; };
    if (passed("--seed")) cfg["seed"] = o.seed;
    if (passed("--trials")) cfg["trials"] = o.trials;
    if (passed("--points")) cfg["points"] = o.points;
    if (passed("--order")) cfg["order"] = o.order;
    if (passed("--draws")) cfg["draws"] = o.draws;
    if (passed("--modes")) cfg["modes"] = o.modes;
    if (passed("--grid")) cfg["grid"] = o.grid;
    if (passed("--nmax")) cfg["nmax"] = o.nmax;
    if (passed("--refine")) cfg["refine"] = o.refine;
    if (passed("--nu")) cfg["nu"] = o.nu;
    if (passed("--mu")) cfg["mu"] = o.mu;
    if (passed("--tol")) cfg["tol"] = o.tol;
    if (passed("--algebra")) cfg["algebra"] = o.algebra;
    if (o.timings) cfg["timings"] = true;
    return cfg.dump();
}

int run_verify(const std::string& suite, const CLI::App* cmd,
               const VerifyOpts& o) {
    const std::string cfg = verify_config(cmd, o);
    Freed rep;
    if (auto st = conerc_run_suite_json(suite.c_str(), cfg.c_str(), &rep.p))
        die(st);
    if (o.format == "json") {
        std::cout << rep.p;
    } else {
        Freed table;
        const int color = CONERC_ISATTY ? 1 : 0;
        if (auto st = conerc_report_table(rep.p, color, &table.p)) die(st);
        std::cout << table.p;
    }
    int ok = 0;
    if (auto st = conerc_report_all_pass(rep.p, &ok)) die(st);
    return ok ? 0 : 1;
}

std::vector<int64_t> parse_partition(const std::string& s) {
    std::vector<int64_t> m;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find(',', pos);
        if (next == std::string::npos) next = s.size();
        m.push_back(std::stoll(s.substr(pos, next - pos)));
        pos = next + 1;
    }
    return m;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cone reproducing kernels and Rankin-Cohen brackets"};
    app.set_version_flag("--version", conerc_version());
    app.require_subcommand(1);

    // jordan check
    auto* jordan = app.add_subcommand("jordan", "Jordan algebra checks");
    jordan->require_subcommand(1);
    auto* jcheck = jordan->add_subcommand("check", "run the algebra suite");
    VerifyOpts jopts;
    add_verify_flags(jcheck, jopts);

    // gamma
    auto* gamma =
        app.add_subcommand("gamma", "Gindikin gamma function of the cone");
    std::string g_algebra = "sym:2";
    double g_nu_re = 0, g_nu_im = 0;
    gamma->add_option("--algebra", g_algebra, "algebra spec, e.g. sym:3");
    gamma->add_option("--nu", g_nu_re, "argument (real part)")->required();
    gamma->add_option("--nu-imag", g_nu_im, "argument (imaginary part)");

    // pochhammer
    auto* poch =
        app.add_subcommand("pochhammer", "generalized Pochhammer symbol");
    std::string p_algebra = "sym:3", p_m = "1";
    double p_nu = 0;
    poch->add_option("--algebra", p_algebra, "algebra spec");
    poch->add_option("--nu", p_nu, "base parameter")->required();
    poch->add_option("--m", p_m, "partition, comma separated, e.g. 3,2,1")
        ->required();

    // wallach
    auto* wallach =
        app.add_subcommand("wallach", "Wallach set membership test");
    std::string w_algebra = "sym:3";
    double w_nu = 0;
    wallach->add_option("--algebra", w_algebra, "algebra spec");
    wallach->add_option("--nu", w_nu, "parameter to test")->required();

    // rcb coeffs | modular | covariance
    auto* rcb = app.add_subcommand("rcb", "Rankin-Cohen brackets");
    rcb->require_subcommand(1);
    auto* rcoef = rcb->add_subcommand("coeffs", "bracket coefficients");
    int rc_k1 = 4, rc_k2 = 6, rc_j = 1;
    rcoef->add_option("--k1", rc_k1, "first weight")->required();
    rcoef->add_option("--k2", rc_k2, "second weight")->required();
    rcoef->add_option("--j", rc_j, "bracket order")->required();
    auto* rmod =
        rcb->add_subcommand("modular", "bracket of Eisenstein series in the "
                                       "E4/E6 monomial basis");
    std::string rm_f = "E4", rm_g = "E6";
    int rm_j = 1, rm_order = 50;
    rmod->add_option("--f", rm_f, "first form (E4 or E6)");
    rmod->add_option("--g", rm_g, "second form (E4 or E6)");
    rmod->add_option("--j", rm_j, "bracket order");
    rmod->add_option("--order", rm_order, "q-expansion order");
    auto* rcov = rcb->add_subcommand("covariance", "run the bracket suite");
    VerifyOpts ropts;
    add_verify_flags(rcov, ropts);

    // verify <suite>
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string v_suite;
    verify
        ->add_option("suite", v_suite,
                     "jordan|gamma|rcb|bergman|sharp|cmu|all")
        ->required();
    VerifyOpts vopts;
    add_verify_flags(verify, vopts);

    CLI11_PARSE(app, argc, argv);

    if (jcheck->parsed()) return run_verify("jordan", jcheck, jopts);

    if (gamma->parsed()) {
        AlgebraGuard a(g_algebra);
        double v[2] = {0, 0};
        const auto st = conerc_gindikin_gamma(a.a, g_nu_re, g_nu_im, v);
        json out;
        out["algebra"] = g_algebra;
        out["nu"] = g_nu_im == 0.0 ? json(g_nu_re)
                                   : json::array({g_nu_re, g_nu_im});
        if (st == CONERC_ERR_POLE) {
            out["pole"] = true;
        } else if (st != CONERC_OK) {
            die(st);
        } else {
            out["value"] = v[1] == 0.0 ? json(v[0]) : json::array({v[0], v[1]});
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    if (poch->parsed()) {
        AlgebraGuard a(p_algebra);
        const auto m = parse_partition(p_m);
        double v = 0;
        if (auto st = conerc_pochhammer(a.a, p_nu, m.data(),
                                        static_cast<int>(m.size()), &v))
            die(st);
        json out;
        out["algebra"] = p_algebra;
        out["nu"] = p_nu;
        out["m"] = m;
        out["value"] = v;
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    if (wallach->parsed()) {
        AlgebraGuard a(w_algebra);
        int member = 0;
        if (auto st = conerc_wallach_contains(a.a, w_nu, &member)) die(st);
        json out;
        out["algebra"] = w_algebra;
        out["nu"] = w_nu;
        out["member"] = member != 0;
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    if (rcoef->parsed()) {
        Freed s;
        if (auto st = conerc_rcb_coeffs_json(rc_k1, rc_k2, rc_j, &s.p)) die(st);
        std::cout << s.p << "\n";
        return 0;
    }

    if (rmod->parsed()) {
        Freed s;
        if (auto st = conerc_rcb_modular_json(rm_f.c_str(), rm_g.c_str(), rm_j,
                                              rm_order, &s.p))
            die(st);
        std::cout << s.p << "\n";
        return 0;
    }

    if (rcov->parsed()) return run_verify("rcb", rcov, ropts);

    if (verify->parsed()) return run_verify(v_suite, verify, vopts);

    return 0;
}
