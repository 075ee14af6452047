// Command-line front end. Every knob funnels through the shared library's
// run-config key=value interface: an optional --config file loads first, then
// whichever flags were actually given override it, one set() per flag.

#include <cstdio>
#include <deque>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gcdsum/gcdsum.h"

namespace {

struct binding {
    CLI::Option* opt = nullptr;
    std::string* slot = nullptr;
    std::string key;
};

struct subcommand {
    CLI::App* cmd = nullptr;
    std::string config_path;
    std::deque<std::string> storage;  // stable addresses for CLI11 bindings
    std::vector<binding> binds;

    void bind(const std::string& flag, const std::string& key, const std::string& desc) {
        storage.emplace_back();
        binding b;
        b.slot = &storage.back();
        b.opt = cmd->add_option(flag, *b.slot, desc);
        b.key = key;
        binds.push_back(b);
    }
};

void add_common(subcommand& s) {
    s.cmd->add_option("--config", s.config_path,
                      "key=value config file applied before the flags");
    s.bind("--output,-o", "output", "CSV output path (stdout when omitted)");
}

void add_model_params(subcommand& s) {
    s.bind("--r", "r", "weight exponent r >= 1");
    s.bind("--s", "s", "power parameter s (1 for the plain averages)");
    s.bind("--a", "a", "fractional exponent a in (-1, 0) where the model takes one");
    s.bind("--weight", "h", "weight selector h: mu, abs_mu, tau, xi_q");
    s.bind("--q", "q", "parameter of the xi_q weight");
}

struct ctx_guard {
    gcdsum_ctx* p = nullptr;
    ~ctx_guard() { gcdsum_ctx_free(p); }
};

struct cfg_guard {
    gcdsum_run_config* p = nullptr;
    ~cfg_guard() { gcdsum_run_config_free(p); }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical workbench for weighted averages of gcd-sum functions"};
    app.set_version_flag("--version", "1.0.0");
    app.require_subcommand(1);

    std::vector<std::unique_ptr<subcommand>> subs;
    auto make_sub = [&](const char* name, const char* desc) -> subcommand& {
        subs.push_back(std::make_unique<subcommand>());
        subcommand& s = *subs.back();
        s.cmd = app.add_subcommand(name, desc);
        return s;
    };

    {
        subcommand& s = make_sub("verify-identity",
                                 "check the exact closed-form rearrangement of the "
                                 "weighted averages over a range of x");
        s.bind("--r", "r", "weight exponent r >= 1");
        s.bind("--s", "s", "power parameter s (1 checks the plain identity)");
        s.bind("--f", "f",
               "arithmetic function: mu, abs_mu, one, id, tau, phi, psi, id_a(a), "
               "sigma_a(a), phi_alpha(alpha), psi_beta(beta), xi_q(q)");
        s.bind("--x-max", "x_max", "check every x in 1..x_max (or sample, see --samples)");
        s.bind("--samples", "samples", "number of random x draws; 0 checks every x");
        s.bind("--seed", "seed", "seed for the random draws");
        s.bind("--budget", "budget", "inner-loop cap for the s >= 2 literal evaluation");
        add_common(s);
    }
    {
        subcommand& s = make_sub("error-term",
                                 "sweep one model's exact value, closed main term, and "
                                 "displayed remainder formula over a sample grid");
        s.bind("--theorem", "theorem",
               "model selector: K-id, K-phi, gcd331, Th1, Th2-phi, Th2-psi, Th5, Th6, "
               "Th7, Cor-phi_s, Cor-psi_s, Cor-tau, Cor-phi_s+a, Cor-psi_s+a, Cor-tau_s+a");
        add_model_params(s);
        s.bind("--x-max", "x_max", "upper end of the sample grid (lower end is 10)");
        add_common(s);
    }
    {
        subcommand& s = make_sub("mean-square",
                                 "integrate a squared remainder over [1, T] and compare "
                                 "against its predicted leading term");
        s.bind("--theorem", "theorem",
               "law selector: Th3, Th4-phi, Th4-psi, Lrx, Urx, delta-a");
        add_model_params(s);
        s.bind("--T-list", "T_list", "comma-separated list of T endpoints");
        s.bind("--series-N", "series_N", "truncation of the predicted-constant series");
        add_common(s);
    }
    {
        subcommand& s = make_sub("constants",
                                 "evaluate one mean-square leading constant as a "
                                 "truncated series with a tail bound");
        s.bind("--kind", "kind", "series selector: C2, C3, C4, D1, D2, Kmean");
        s.bind("--a", "a", "fractional exponent a where the series takes one");
        s.bind("--series-N", "series_N", "series truncation point");
        add_common(s);
    }
    {
        subcommand& s = make_sub("tabulate", "sieve an arithmetic function into a CSV table");
        s.bind("--f", "f", "arithmetic function selector (see verify-identity --f)");
        s.bind("--table-limit", "table_limit", "tabulate f(1..table_limit)");
        add_common(s);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    subcommand* active = nullptr;
    for (auto& s : subs)
        if (s->cmd->parsed()) active = s.get();
    if (!active) {
        std::fprintf(stderr, "gcdsum: no command given\n");
        return 1;
    }

    ctx_guard ctx{gcdsum_ctx_new()};
    cfg_guard cfg{gcdsum_run_config_new()};
    if (!ctx.p || !cfg.p) {
        std::fprintf(stderr, "gcdsum: out of memory\n");
        return 1;
    }

    auto fail = [&]() -> int {
        std::fprintf(stderr, "gcdsum: %s\n", gcdsum_last_error(ctx.p));
        return 1;
    };

    if (!active->config_path.empty() &&
        gcdsum_run_config_load_file(ctx.p, cfg.p, active->config_path.c_str()) != GCDSUM_OK)
        return fail();
    if (gcdsum_run_config_set(ctx.p, cfg.p, "command", active->cmd->get_name().c_str()) !=
        GCDSUM_OK)
        return fail();
    for (const binding& b : active->binds)
        if (b.opt->count() > 0 &&
            gcdsum_run_config_set(ctx.p, cfg.p, b.key.c_str(), b.slot->c_str()) != GCDSUM_OK)
            return fail();

    int exit_code = 0;
    if (gcdsum_run(ctx.p, cfg.p, &exit_code) != GCDSUM_OK) return fail();
    return exit_code;
}
