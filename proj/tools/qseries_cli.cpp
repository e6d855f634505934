// qseries command-line front end.
//
//   qseries expand <target> [--a --b --c --x --y --z --base --family --p] [--order N] [--format text|json]
//   qseries verify <identity> | --all | --prefix P  [--order N] [--format text|json]
//
// Exit codes: 0 success, 1 a mandatory identity did not verify, 2 usage or build error.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <qseries.hpp>

namespace {

using namespace qseries;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

struct expand_options {
    std::string target;
    std::optional<exp_t> a, b, c;
    std::optional<std::string> x, y, z;
    exp_t base = 1;
    std::optional<int> family;
    std::optional<exp_t> p;
};

struct verify_options {
    std::string identity;
    bool all = false;
    std::optional<std::string> prefix;
};

template <class T>
const T& require(const std::optional<T>& v, const char* flag, const std::string& target) {
    if (!v) throw CLI::ValidationError(flag, "required by target '" + target + "'");
    return *v;
}

series expand(const expand_options& o, exp_t order) {
    const auto& t = o.target;
    auto mono = [&](const std::optional<std::string>& v, const char* flag) { return parse_monomial(require(v, flag, t)); };
    auto params = [&] { return hecke_params(require(o.a, "--a", t), require(o.b, "--b", t), require(o.c, "--c", t)); };
    auto habiro = [&] { return habiro_spec(require(o.family, "--family", t), require(o.p, "--p", t)); };

    if (t == "fabc") return hecke_f_monomial(params(), mono(o.x, "--x"), mono(o.y, "--y"), order);
    if (t == "main-rhs") return main_rhs_monomial(params(), mono(o.x, "--x"), mono(o.y, "--y"), order);
    if (t == "theta") return theta_product(mono(o.x, "--x"), o.base, order);
    if (t == "false-theta") return false_theta_sum(mono(o.x, "--x"), o.base, order);
    if (t == "appell") return appell_m(mono(o.x, "--x"), mono(o.z, "--z"), o.base, order);
    if (t == "phi") return phi_sixth(order);
    if (t == "habiro") return habiro_series(habiro(), order);
    if (t == "habiro-hecke") return habiro_hecke_side(habiro(), order);
    throw CLI::ValidationError("target", "unknown expand target '" + t + "'");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact truncated q-series: Hecke-type double sums, theta and false theta functions, "
                 "Appell functions and identity verification"};
    app.require_subcommand(1);

    exp_t order = 50;
    std::string format = "text";
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--order", order, "Largest q-exponent to compute")->capture_default_str();
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    };

    expand_options eo;
    auto* expand_cmd = app.add_subcommand("expand", "Expand a series to the requested order");
    expand_cmd->add_option("target", eo.target, "fabc | theta | false-theta | appell | phi | habiro | habiro-hecke | main-rhs")
        ->required()
        ->check(CLI::IsMember({"fabc", "theta", "false-theta", "appell", "phi", "habiro", "habiro-hecke", "main-rhs"}));
    expand_cmd->add_option("--a", eo.a);
    expand_cmd->add_option("--b", eo.b);
    expand_cmd->add_option("--c", eo.c);
    expand_cmd->add_option("--x", eo.x, "Monomial literal such as q^2 or -q^-1");
    expand_cmd->add_option("--y", eo.y, "Monomial literal");
    expand_cmd->add_option("--z", eo.z, "Monomial literal");
    expand_cmd->add_option("--base", eo.base, "Base power p (theta, Appell) or quadratic coefficient P (false-theta)")
        ->capture_default_str();
    expand_cmd->add_option("--family", eo.family, "Habiro family 1..5");
    expand_cmd->add_option("--p", eo.p, "Habiro depth p >= 1");
    add_common(expand_cmd);

    verify_options vo;
    auto* verify_cmd = app.add_subcommand("verify", "Verify catalog identities");
    verify_cmd->add_option("identity", vo.identity, "Catalog id, e.g. main:1,1,2 or theta-zero:2");
    verify_cmd->add_flag("--all", vo.all, "Run the whole catalog");
    verify_cmd->add_option("--prefix", vo.prefix, "Run every catalog entry whose id starts with this prefix");
    add_common(verify_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*expand_cmd) {
            const series s = expand(eo, order);
            std::cout << (format == "json" ? to_json(s).dump() : to_text(s)) << "\n";
            return exit_ok;
        }

        const int selectors = (vo.identity.empty() ? 0 : 1) + (vo.all ? 1 : 0) + (vo.prefix ? 1 : 0);
        if (selectors != 1) {
            std::cerr << "verify: give exactly one of <identity>, --all, --prefix\n";
            return exit_usage;
        }
        std::vector<identity_report> reports;
        if (!vo.identity.empty())
            reports.push_back(run_identity(vo.identity, order));
        else
            reports = run_suite(vo.all ? std::string() : *vo.prefix, order);
        if (reports.empty()) {
            std::cerr << "verify: no catalog entry matches the prefix\n";
            return exit_usage;
        }

        bool ok = true;
        if (format == "json") {
            nlohmann::json out = nlohmann::json::array();
            for (const auto& r : reports) out.push_back(to_json(r));
            std::cout << out.dump(2) << "\n";
        } else {
            for (const auto& r : reports) std::cout << to_text(r) << "\n";
        }
        for (const auto& r : reports) ok = ok && r.passes();
        return ok ? exit_ok : exit_failed;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return exit_usage;
    } catch (const qseries::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
}
