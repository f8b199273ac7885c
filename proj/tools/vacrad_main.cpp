// vacrad: emission observables of a ground-state atom oscillating in the
// electromagnetic vacuum. Every subcommand writes a CSV data table plus a
// JSON manifest recording the exact inputs; `verify` runs the physics
// self-test battery.

#include <cstdlib>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include <unistd.h>

#include <CLI11.hpp>

#include "vacrad/config.hpp"
#include "vacrad/csv.hpp"
#include "vacrad/dce.hpp"
#include "vacrad/manifest.hpp"
#include "vacrad/mie.hpp"
#include "vacrad/planar.hpp"
#include "vacrad/verify.hpp"

namespace {

using namespace vacrad;

constexpr const char* kVersion = "0.1.0";
constexpr double kPi = std::numbers::pi;

const ConfigSchema& config_schema() {
    static const ConfigSchema schema = {
        {"rho", ConfigType::Double},    {"beta", ConfigType::Double},
        {"x", ConfigType::Double},      {"pol", ConfigType::String},
        {"n_theta", ConfigType::Int},   {"n_x", ConfigType::Int},
        {"n_phi", ConfigType::Int},     {"seed", ConfigType::Int},
        {"out", ConfigType::String},    {"polar", ConfigType::Flag},
        {"level", ConfigType::String},
    };
    return schema;
}

std::string stem_of(const std::string& path) {
    const auto slash = path.find_last_of('/');
    const auto dot = path.find_last_of('.');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return path;
    return path.substr(0, dot);
}

std::string manifest_path_for(const std::string& out) { return stem_of(out) + ".manifest.json"; }
std::string polar_path_for(const std::string& out) { return stem_of(out) + "_polar.csv"; }

// Flag > config file > built-in default.
struct Resolver {
    const ConfigMap& cfg;

    double num(const CLI::Option* opt, double cli_value, const std::string& key, double fallback) const {
        if (opt->count() > 0) return cli_value;
        if (cfg.count(key)) return config_double(cfg, key);
        return fallback;
    }
    long long integer(const CLI::Option* opt, long long cli_value, const std::string& key,
                      long long fallback) const {
        if (opt->count() > 0) return cli_value;
        if (cfg.count(key)) return config_int(cfg, key);
        return fallback;
    }
    std::string text(const CLI::Option* opt, const std::string& cli_value, const std::string& key,
                     const std::string& fallback) const {
        if (opt->count() > 0) return cli_value;
        if (cfg.count(key)) return cfg.at(key);
        return fallback;
    }
    bool flag(const CLI::Option* opt, const std::string& key) const {
        if (opt->count() > 0) return true;
        if (cfg.count(key)) return config_flag(cfg, key);
        return false;
    }
};

ConfigMap load_optional_config(const std::string& path) {
    if (path.empty()) return {};
    return load_config(path, config_schema());
}

struct PolChoice {
    bool te = false;
    bool tm = false;
};

PolChoice parse_pol(const std::string& pol) {
    if (pol == "te") return {true, false};
    if (pol == "tm") return {false, true};
    if (pol == "both") return {true, true};
    throw std::invalid_argument("pol must be one of te, tm, both");
}

void finish_run(const std::string& command, const std::map<std::string, std::string>& params,
                const std::map<std::string, std::string>& outputs,
                const std::map<std::string, double>& results,
                std::optional<std::int64_t> seed, std::optional<int> workers,
                const std::string& out_path) {
    RunManifest m;
    m.command = command;
    m.parameters = params;
    m.tool_version = kVersion;
    m.seed = seed;
    m.timestamp = iso8601_utc_now();
    m.outputs = outputs;
    m.results = results;
    m.workers = workers;
    write_text_file(m.to_json(), manifest_path_for(out_path));
}

// Polar companion table: same grid, values rescaled per the figure
// conventions (unit value along the motion axis, or unit maximum when the
// absolute scale is arbitrary).
enum class PolarNorm { OnAxis, Max };

SpectrumTable normalized_polar(const SpectrumTable& table, PolarNorm norm) {
    SpectrumTable out = table;
    out.units = "dimensionless (normalized shape)";
    for (std::size_t c = 0; c < out.values.size(); ++c) {
        double ref = 0.0;
        if (norm == PolarNorm::OnAxis) {
            ref = out.values[c].front();
        } else {
            for (const double v : out.values[c]) ref = std::max(ref, v);
        }
        if (ref == 0.0)
            throw std::invalid_argument("--polar: normalization reference value is zero");
        out.value_names[c] = "r_" + out.value_names[c];
        for (double& v : out.values[c]) v /= ref;
    }
    return out;
}

int run_mie_angular(const ConfigMap& cfg, const CLI::Option* o_rho, double rho,
                    const CLI::Option* o_beta, double beta, const CLI::Option* o_n, long long n,
                    const CLI::Option* o_polar, const CLI::Option* o_out, const std::string& out) {
    const Resolver r{cfg};
    const double rho_v = r.num(o_rho, rho, "rho", 2.0);
    const double beta_v = r.num(o_beta, beta, "beta", 0.01);
    const auto n_theta = static_cast<int>(r.integer(o_n, n, "n_theta", 181));
    const bool polar = r.flag(o_polar, "polar");
    const std::string out_path = r.text(o_out, out, "out", "mie_angular.csv");

    const ReducedMieParams p(rho_v, beta_v);
    const SpectrumTable table = make_table(
        "theta", linspace(0.0, kPi, n_theta), {"rate"},
        {[&](double theta) { return mie_angular_rate(p, theta).per_steradian; }},
        "Gamma_0 per steradian", Exec::Parallel);
    write_table(table, out_path);

    std::map<std::string, std::string> outputs{{"csv", out_path}};
    if (polar) {
        write_table(mie_polar_profile(p, n_theta, Exec::Parallel), polar_path_for(out_path));
        outputs["polar_csv"] = polar_path_for(out_path);
    }
    finish_run("mie-angular",
               {{"rho", format_double(rho_v)},
                {"beta", format_double(beta_v)},
                {"n_theta", std::to_string(n_theta)},
                {"polar", polar ? "true" : "false"}},
               outputs, {}, std::nullopt, std::nullopt, out_path);
    return 0;
}

int run_mie_rate(const ConfigMap& cfg, const CLI::Option* o_rho, double rho,
                 const CLI::Option* o_beta, double beta, const CLI::Option* o_nt, long long nt,
                 const CLI::Option* o_np, long long np, const CLI::Option* o_out,
                 const std::string& out) {
    const Resolver r{cfg};
    const double rho_v = r.num(o_rho, rho, "rho", 2.0);
    const double beta_v = r.num(o_beta, beta, "beta", 0.01);
    const auto n_theta = static_cast<int>(r.integer(o_nt, nt, "n_theta", 16));
    const auto n_phi = static_cast<int>(r.integer(o_np, np, "n_phi", 32));
    const std::string out_path = r.text(o_out, out, "out", "mie_rate.csv");

    const ReducedMieParams p(rho_v, beta_v);
    const QuadratureSpec q(n_theta, n_phi, 1e-12);
    const double total = mie_total_rate(p);
    const double quad = mie_total_rate_quadrature(p, q, Exec::Parallel);
    const double closed = mie_total_rate_integral_closed_form(p);

    std::vector<std::pair<std::string, double>> rows{
        {"total_rate", total},
        {"angular_integral_quadrature", quad},
        {"angular_integral_closed_form", closed},
    };
    std::map<std::string, double> results{
        {"total_rate", total},
        {"angular_integral_quadrature", quad},
        {"angular_integral_closed_form", closed},
    };
    if (rho_v > 1.0) {
        // The two published closed forms disagree; surface the ratio.
        rows.emplace_back("angular_integral_over_total_rate", quad / total);
        results["angular_integral_over_total_rate"] = quad / total;
    }
    write_text_file(named_values_to_csv("Gamma_0 (ratios dimensionless)", rows), out_path);

    finish_run("mie-rate",
               {{"rho", format_double(rho_v)},
                {"beta", format_double(beta_v)},
                {"n_theta", std::to_string(n_theta)},
                {"n_phi", std::to_string(n_phi)}},
               {{"csv", out_path}}, results, std::nullopt, std::nullopt, out_path);
    return 0;
}

int run_dce_angular(const ConfigMap& cfg, const CLI::Option* o_x, double x,
                    const CLI::Option* o_pol, const std::string& pol, const CLI::Option* o_n,
                    long long n, const CLI::Option* o_polar, const CLI::Option* o_out,
                    const std::string& out) {
    const Resolver r{cfg};
    const double x_v = r.num(o_x, x, "x", 0.5);
    const std::string pol_v = r.text(o_pol, pol, "pol", "both");
    const auto n_theta = static_cast<int>(r.integer(o_n, n, "n_theta", 181));
    const bool polar = r.flag(o_polar, "polar");
    const std::string out_path = r.text(o_out, out, "out", "dce_angular.csv");

    const PolChoice choice = parse_pol(pol_v);
    std::vector<std::string> names;
    std::vector<std::function<double(double)>> fns;
    if (choice.te) {
        names.emplace_back("te");
        fns.emplace_back([=](double theta) { return dce_angular_spectrum(x_v, theta, Polarization::TE); });
    }
    if (choice.tm) {
        names.emplace_back("tm");
        fns.emplace_back([=](double theta) { return dce_angular_spectrum(x_v, theta, Polarization::TM); });
    }
    const SpectrumTable table =
        make_table("theta", linspace(0.0, kPi, n_theta), names, fns,
                   "(alpha0 v_m)^2 omega_cm^6 / (60 pi^2 c^8)", Exec::Parallel);
    write_table(table, out_path);

    std::map<std::string, std::string> outputs{{"csv", out_path}};
    if (polar) {
        write_table(normalized_polar(table, PolarNorm::OnAxis), polar_path_for(out_path));
        outputs["polar_csv"] = polar_path_for(out_path);
    }
    finish_run("dce-angular",
               {{"x", format_double(x_v)},
                {"pol", pol_v},
                {"n_theta", std::to_string(n_theta)},
                {"polar", polar ? "true" : "false"}},
               outputs, {}, std::nullopt, std::nullopt, out_path);
    return 0;
}

int run_dce_spectrum(const ConfigMap& cfg, const CLI::Option* o_pol, const std::string& pol,
                     const CLI::Option* o_n, long long n, const CLI::Option* o_out,
                     const std::string& out) {
    const Resolver r{cfg};
    const std::string pol_v = r.text(o_pol, pol, "pol", "both");
    const auto n_x = static_cast<int>(r.integer(o_n, n, "n_x", 101));
    const std::string out_path = r.text(o_out, out, "out", "dce_spectrum.csv");

    const PolChoice choice = parse_pol(pol_v);
    std::vector<std::string> names;
    std::vector<std::function<double(double)>> fns;
    if (choice.te) {
        names.emplace_back("te");
        fns.emplace_back([](double x) { return dce_frequency_spectrum(x, Polarization::TE); });
    }
    if (choice.tm) {
        names.emplace_back("tm");
        fns.emplace_back([](double x) { return dce_frequency_spectrum(x, Polarization::TM); });
    }
    const SpectrumTable table = make_table("x", linspace(0.0, 1.0, n_x), names, fns,
                                           "(alpha0 v_m)^2 omega_cm^6 / (45 pi c^8)", Exec::Parallel);
    write_table(table, out_path);
    finish_run("dce-spectrum", {{"pol", pol_v}, {"n_x", std::to_string(n_x)}},
               {{"csv", out_path}}, {}, std::nullopt, std::nullopt, out_path);
    return 0;
}

int run_dce_rates(const ConfigMap& cfg, const CLI::Option* o_out, const std::string& out) {
    const Resolver r{cfg};
    const std::string out_path = r.text(o_out, out, "out", "dce_rates.csv");

    const DceRates rates = dce_rates();
    const SphereComparison sphere = sphere_rate_comparison(1.0);
    const std::vector<std::pair<std::string, double>> rows{
        {"gamma_te", rates.gamma_te},
        {"gamma_tm", rates.gamma_tm},
        {"gamma_total", rates.gamma_total},
        {"tm_te_ratio", rates.tm_te_ratio},
        {"gamma_sphere_equal_polarizability", sphere.gamma_sphere},
        {"atom_over_sphere", sphere.atom_over_sphere},
    };
    write_text_file(
        named_values_to_csv("(alpha0 a)^2 omega_cm^9 / c^8 for rates; ratios dimensionless", rows),
        out_path);

    std::map<std::string, double> results(rows.begin(), rows.end());
    finish_run("dce-rates", {{"alpha_sphere_over_alpha0", format_double(1.0)}},
               {{"csv", out_path}}, results, std::nullopt, std::nullopt, out_path);
    return 0;
}

int run_planar_spectrum(const ConfigMap& cfg, const CLI::Option* o_x, double x,
                        const CLI::Option* o_pol, const std::string& pol, const CLI::Option* o_n,
                        long long n, const CLI::Option* o_polar, const CLI::Option* o_out,
                        const std::string& out) {
    const Resolver r{cfg};
    const double x_v = r.num(o_x, x, "x", 0.5);
    const std::string pol_v = r.text(o_pol, pol, "pol", "both");
    const auto n_theta = static_cast<int>(r.integer(o_n, n, "n_theta", 181));
    const bool polar = r.flag(o_polar, "polar");
    const std::string out_path = r.text(o_out, out, "out", "planar_spectrum.csv");

    const PolChoice choice = parse_pol(pol_v);
    std::vector<std::string> names;
    std::vector<std::function<double(double)>> fns;
    if (choice.te) {
        names.emplace_back("te");
        fns.emplace_back([=](double theta) { return planar_angular_spectrum(x_v, theta, Polarization::TE); });
    }
    if (choice.tm) {
        names.emplace_back("tm");
        fns.emplace_back([=](double theta) { return planar_angular_spectrum(x_v, theta, Polarization::TM); });
    }
    // Emission into the vacuum half space only.
    const SpectrumTable table = make_table("theta", linspace(0.0, kPi / 2.0, n_theta), names, fns,
                                           "arbitrary (shape only)", Exec::Parallel);
    write_table(table, out_path);

    std::map<std::string, std::string> outputs{{"csv", out_path}};
    if (polar) {
        write_table(normalized_polar(table, PolarNorm::Max), polar_path_for(out_path));
        outputs["polar_csv"] = polar_path_for(out_path);
    }
    std::map<std::string, double> results;
    if (const auto theta0 = emission_cone_boundary(x_v))
        results["cone_boundary_rad"] = *theta0;
    finish_run("planar-spectrum",
               {{"x", format_double(x_v)},
                {"pol", pol_v},
                {"n_theta", std::to_string(n_theta)},
                {"polar", polar ? "true" : "false"}},
               outputs, results, std::nullopt, std::nullopt, out_path);
    return 0;
}

int run_verify(const ConfigMap& cfg, const CLI::Option* o_level, const std::string& level,
               const CLI::Option* o_seed, long long seed, const CLI::Option* o_out,
               const std::string& out) {
    const Resolver r{cfg};
    const std::string level_v = r.text(o_level, level, "level", "full");
    const long long seed_v = r.integer(o_seed, seed, "seed", 42);
    const std::string out_path = r.text(o_out, out, "out", "verify_report.json");

    if (level_v != "fast" && level_v != "full")
        throw std::invalid_argument("level must be fast or full");

    const VerificationReport report = run_verification(
        level_v == "full" ? VerifyLevel::Full : VerifyLevel::Fast,
        static_cast<std::uint64_t>(seed_v), Exec::Parallel);

    const bool color = std::getenv("VACRAD_NO_COLOR") == nullptr && isatty(STDOUT_FILENO) != 0;
    std::cout << report.to_text(color);
    write_text_file(report.to_json(), out_path);

    finish_run("verify", {{"level", level_v}, {"seed", std::to_string(seed_v)}},
               {{"report", out_path}},
               {{"checks_passed", static_cast<double>(report.passed())},
                {"checks_failed", static_cast<double>(report.failed())}},
               seed_v, report.workers, out_path);
    return report.overall_pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"radiation observables of an oscillating ground-state atom coupled to the vacuum"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    int status = 0;

    // Shared option storage; each subcommand registers the flags it honors.
    double rho = 0.0, beta = 0.0, x = 0.0;
    std::string pol, level, out, config_path;
    long long n_theta = 0, n_x = 0, n_phi = 0, seed = 0;

    const auto add_config = [&](CLI::App* cmd) {
        return cmd->add_option("--config", config_path, "key = value parameter file");
    };

    {
        auto* cmd = app.add_subcommand("mie-angular", "one-photon angular emission rate table");
        auto* o_rho = cmd->add_option("--rho", rho, "omega_cm / omega_0");
        auto* o_beta = cmd->add_option("--beta", beta, "v_m / c");
        auto* o_n = cmd->add_option("--n-theta", n_theta, "grid points over [0, pi]");
        auto* o_out = cmd->add_option("--out", out, "CSV output path");
        auto* o_polar = cmd->add_flag("--polar", "also write the normalized polar table");
        add_config(cmd);
        cmd->callback([&, o_rho, o_beta, o_n, o_polar, o_out] {
            status = run_mie_angular(load_optional_config(config_path), o_rho, rho, o_beta, beta,
                                     o_n, n_theta, o_polar, o_out, out);
        });
    }
    {
        auto* cmd = app.add_subcommand("mie-rate", "one-photon total excitation rate");
        auto* o_rho = cmd->add_option("--rho", rho, "omega_cm / omega_0");
        auto* o_beta = cmd->add_option("--beta", beta, "v_m / c");
        auto* o_nt = cmd->add_option("--n-theta", n_theta, "quadrature nodes in cos(theta)");
        auto* o_np = cmd->add_option("--n-phi", n_phi, "quadrature nodes in phi");
        auto* o_out = cmd->add_option("--out", out, "CSV output path");
        add_config(cmd);
        cmd->callback([&, o_rho, o_beta, o_nt, o_np, o_out] {
            status = run_mie_rate(load_optional_config(config_path), o_rho, rho, o_beta, beta,
                                  o_nt, n_theta, o_np, n_phi, o_out, out);
        });
    }
    {
        auto* cmd = app.add_subcommand("dce-angular", "pair angular spectrum at fixed reduced frequency");
        auto* o_x = cmd->add_option("--x", x, "omega / omega_cm in [0, 1]");
        auto* o_pol = cmd->add_option("--pol", pol, "te, tm or both")
                          ->check(CLI::IsMember({"te", "tm", "both"}));
        auto* o_n = cmd->add_option("--n-theta", n_theta, "grid points over [0, pi]");
        auto* o_out = cmd->add_option("--out", out, "CSV output path");
        auto* o_polar = cmd->add_flag("--polar", "also write the normalized polar table");
        add_config(cmd);
        cmd->callback([&, o_x, o_pol, o_n, o_polar, o_out] {
            status = run_dce_angular(load_optional_config(config_path), o_x, x, o_pol, pol, o_n,
                                     n_theta, o_polar, o_out, out);
        });
    }
    {
        auto* cmd = app.add_subcommand("dce-spectrum", "pair frequency spectrum table");
        auto* o_pol = cmd->add_option("--pol", pol, "te, tm or both")
                          ->check(CLI::IsMember({"te", "tm", "both"}));
        auto* o_n = cmd->add_option("--n-x", n_x, "grid points over [0, 1]");
        auto* o_out = cmd->add_option("--out", out, "CSV output path");
        add_config(cmd);
        cmd->callback([&, o_pol, o_n, o_out] {
            status = run_dce_spectrum(load_optional_config(config_path), o_pol, pol, o_n, n_x,
                                      o_out, out);
        });
    }
    {
        auto* cmd = app.add_subcommand("dce-rates", "total pair emission rates and sphere comparison");
        auto* o_out = cmd->add_option("--out", out, "CSV output path");
        add_config(cmd);
        cmd->callback([&, o_out] {
            status = run_dce_rates(load_optional_config(config_path), o_out, out);
        });
    }
    {
        auto* cmd = app.add_subcommand("planar-spectrum", "pair spectrum under the planar constraint");
        auto* o_x = cmd->add_option("--x", x, "omega / omega_cm in (0, 1)");
        auto* o_pol = cmd->add_option("--pol", pol, "te, tm or both")
                          ->check(CLI::IsMember({"te", "tm", "both"}));
        auto* o_n = cmd->add_option("--n-theta", n_theta, "grid points over [0, pi/2]");
        auto* o_out = cmd->add_option("--out", out, "CSV output path");
        auto* o_polar = cmd->add_flag("--polar", "also write the normalized polar table");
        add_config(cmd);
        cmd->callback([&, o_x, o_pol, o_n, o_polar, o_out] {
            status = run_planar_spectrum(load_optional_config(config_path), o_x, x, o_pol, pol,
                                         o_n, n_theta, o_polar, o_out, out);
        });
    }
    {
        auto* cmd = app.add_subcommand("verify", "run the physics self-test battery");
        auto* o_level = cmd->add_option("--level", level, "fast or full")
                            ->check(CLI::IsMember({"fast", "full"}));
        auto* o_seed = cmd->add_option("--seed", seed, "Monte Carlo seed");
        auto* o_out = cmd->add_option("--out", out, "report JSON path");
        add_config(cmd);
        cmd->callback([&, o_level, o_seed, o_out] {
            status = run_verify(load_optional_config(config_path), o_level, level, o_seed, seed,
                                o_out, out);
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return status;
}
