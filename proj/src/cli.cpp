#include "horadam/cli.hpp"

#include "horadam/gfengine.hpp"
#include "horadam/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <optional>

namespace horadam {

namespace {

struct CliConfig {
    std::string preset;
    std::string a, b, p, q;
    bool symbolic = false;
    unsigned k = 1;
    std::size_t n = kDefaultSeriesLength;
    std::string x;
    bool json = false;
    bool oracle = false;
    std::string only;
    std::uint64_t seed = kDefaultSeed;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

HoradamParams resolve_params(const CliConfig& cfg) {
    const bool explicit_any = !cfg.a.empty() || !cfg.b.empty() || !cfg.p.empty() || !cfg.q.empty();
    const int sources = int(!cfg.preset.empty()) + int(explicit_any) + int(cfg.symbolic);
    if (sources != 1) {
        throw UsageError("select exactly one of --preset, --a/--b/--p/--q, --symbolic");
    }
    if (cfg.symbolic) {
        return HoradamParams::symbolic();
    }
    if (!cfg.preset.empty()) {
        try {
            return preset(cfg.preset);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    if (cfg.a.empty() || cfg.b.empty() || cfg.p.empty() || cfg.q.empty()) {
        throw UsageError("explicit parameters need all of --a, --b, --p, --q");
    }
    try {
        return HoradamParams::numeric(rat_parse(cfg.a), rat_parse(cfg.b), rat_parse(cfg.p), rat_parse(cfg.q));
    } catch (const ParseError& e) {
        throw UsageError(e.what());
    }
}

void add_param_options(CLI::App& cmd, CliConfig& cfg) {
    cmd.add_option("--preset", cfg.preset, "fibonacci, lucas, pell or chebyshev-u");
    cmd.add_option("--a", cfg.a, "w_0 as a rational n/d");
    cmd.add_option("--b", cfg.b, "w_1 as a rational n/d");
    cmd.add_option("--p", cfg.p, "recurrence coefficient p");
    cmd.add_option("--q", cfg.q, "recurrence coefficient q");
    cmd.add_flag("--symbolic", cfg.symbolic, "keep a, b, p, q as symbols");
    cmd.add_option("--k", cfg.k, "power k >= 1")->check(CLI::PositiveNumber);
    cmd.add_flag("--json", cfg.json, "machine-readable output");
}

int cmd_gf(const CliConfig& cfg, std::ostream& out) {
    const GfResult result = horadam_gf(cfg.k, resolve_params(cfg));
    if (cfg.json) {
        out << to_json(result).dump(2) << '\n';
        return kExitOk;
    }
    out << "numerator: " << to_string(result.numerator) << '\n'
        << "denominator: " << to_string(result.denominator) << '\n'
        << "reduced: " << to_string(result.reduced) << '\n';
    return kExitOk;
}

nlohmann::json strings(const std::vector<QPolynomial>& values) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& v : values) {
        out.push_back(to_string(v));
    }
    return out;
}

int cmd_series(const CliConfig& cfg, std::ostream& out) {
    if (cfg.n < 1) {
        throw UsageError("--n must be >= 1");
    }
    const HoradamParams params = resolve_params(cfg);
    const GfResult result = horadam_gf(cfg.k, params);
    const auto coeffs = series_coeffs(result.reduced, cfg.n);
    std::optional<std::vector<QPolynomial>> oracle;
    if (cfg.oracle) {
        oracle = power_series_oracle(params, cfg.k, cfg.n);
    }
    const bool match = !oracle || *oracle == coeffs;

    if (cfg.json) {
        nlohmann::json j = {{"k", cfg.k}, {"params", to_json(params)}, {"coefficients", strings(coeffs)}};
        if (oracle) {
            j["oracle"] = strings(*oracle);
            j["match"] = match;
        }
        out << j.dump(2) << '\n';
    } else if (oracle) {
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            out << i << '\t' << to_string(coeffs[i]) << '\t' << to_string((*oracle)[i]) << '\t'
                << (coeffs[i] == (*oracle)[i] ? "ok" : "MISMATCH") << '\n';
        }
        out << (match ? "match" : "mismatch") << '\n';
    } else {
        const bool all_constant =
            std::all_of(coeffs.begin(), coeffs.end(), [](const QPolynomial& c) { return c.is_constant(); });
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (all_constant) {
                out << (i ? " " : "") << to_string(coeffs[i]);
            } else {
                out << i << ": " << to_string(coeffs[i]) << '\n';
            }
        }
        if (all_constant) {
            out << '\n';
        }
    }
    return match ? kExitOk : kExitVerifyFail;
}

int cmd_eval(const CliConfig& cfg, std::ostream& out) {
    if (cfg.x.empty()) {
        throw UsageError("eval requires --x");
    }
    Rational x0;
    try {
        x0 = rat_parse(cfg.x);
    } catch (const ParseError& e) {
        throw UsageError(e.what());
    }
    const GfResult result = horadam_gf(cfg.k, resolve_params(cfg));
    const Rational value = eval_at(result.reduced, x0);
    if (cfg.json) {
        out << nlohmann::json{{"k", cfg.k}, {"x", to_string(x0)}, {"value", to_string(value)}}.dump(2) << '\n';
    } else {
        out << to_string(value) << '\n';
    }
    return kExitOk;
}

int cmd_verify(const CliConfig& cfg, std::ostream& out) {
    VerifyOptions options;
    if (!cfg.only.empty()) {
        options.only = cfg.only;
    }
    options.seed = cfg.seed;
    std::vector<VerifyReport> reports;
    try {
        reports = run_verification(options);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    std::size_t pass = 0, erratum = 0, fail = 0;
    for (const auto& r : reports) {
        (r.status == Status::Pass ? pass : r.status == Status::Erratum ? erratum : fail)++;
    }
    if (cfg.json) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : reports) {
            j.push_back(to_json(r));
        }
        out << j.dump(2) << '\n';
    } else {
        for (const auto& r : reports) {
            out << to_string(r.status) << '\t' << r.subject << '\t' << r.details << '\n';
        }
        out << "summary: " << pass << " PASS, " << erratum << " ERRATUM, " << fail << " FAIL\n";
    }
    return fail == 0 ? kExitOk : kExitVerifyFail;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact generating functions of powers of Horadam sequences", "horadam_gf"};
    app.require_subcommand(1);
    CliConfig cfg;

    auto* gf = app.add_subcommand("gf", "numerator, denominator and reduced form of H_k(x)");
    add_param_options(*gf, cfg);

    auto* series = app.add_subcommand("series", "first N series coefficients of H_k(x)");
    add_param_options(*series, cfg);
    series->add_option("--n", cfg.n, "number of coefficients");
    series->add_flag("--oracle", cfg.oracle, "compare against the recurrence");

    auto* eval = app.add_subcommand("eval", "exact value of H_k at a rational point");
    add_param_options(*eval, cfg);
    eval->add_option("--x", cfg.x, "evaluation point n/d");

    auto* verify = app.add_subcommand("verify", "run the verification battery");
    verify->add_option("--only", cfg.only, "series, points, printed, corollary or linear");
    verify->add_option("--seed", cfg.seed, "seed for random parameter draws");
    verify->add_flag("--json", cfg.json, "machine-readable output");

    // CLI11 parses a reversed vector.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (gf->parsed()) {
            return cmd_gf(cfg, out);
        }
        if (series->parsed()) {
            return cmd_series(cfg, out);
        }
        if (eval->parsed()) {
            return cmd_eval(cfg, out);
        }
        return cmd_verify(cfg, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace horadam
