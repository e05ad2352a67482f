#include "branchcone/config.hpp"
#include "branchcone/emit.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace branchcone;

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitParseError = 2;
constexpr int kExitBudgetError = 3;

int run(int argc, char** argv)
{
    CLI::App app{"branchcone: inequalities and extremal rays of saturated branching cones"};
    app.require_subcommand(1);

    std::string config_path, out_path, format_flag, mu_flag, mu_hat_flag;
    int nmax_flag = 0;
    std::size_t weyl_cap_flag = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "config file")->required();
        cmd->add_option("--out", out_path, "output path (default stdout)");
        cmd->add_option("--format", format_flag, "tsv or json");
        cmd->add_option("--nmax", nmax_flag, "max multiple for the saturation witness search");
        cmd->add_option("--weyl-cap", weyl_cap_flag, "Weyl group enumeration cap");
    };
    CLI::App* facets = app.add_subcommand("facets", "emit the inequality table");
    CLI::App* rays = app.add_subcommand("rays", "emit the extremal-ray table");
    CLI::App* check = app.add_subcommand("check", "test a weight pair for membership");
    CLI::App* verify = app.add_subcommand("verify", "run the full cross-check suite");
    for (auto* cmd : {facets, rays, check, verify})
        add_common(cmd);
    check->add_option("--mu", mu_flag, "G-side coordinates, e.g. '1 0'");
    check->add_option("--mu-hat", mu_hat_flag, "Ghat-side coordinates");
    bool no_witness = false;
    check->add_flag("--no-witness", no_witness, "skip the representation-oracle witness search");

    CLI11_PARSE(app, argc, argv);

    JobConfig cfg = JobConfig::parse_file(config_path);
    if (!format_flag.empty())
        cfg.format = format_flag;
    if (!out_path.empty())
        cfg.out = out_path;
    if (nmax_flag > 0)
        cfg.nmax = nmax_flag;
    if (weyl_cap_flag > 0)
        cfg.weyl_cap = weyl_cap_flag;
    if (cfg.format != "tsv" && cfg.format != "json")
        throw ParseError("format must be tsv or json");
    bool json = cfg.format == "json";

    EngineOptions options;
    options.weyl_cap = cfg.weyl_cap;
    ConeEngine engine(cfg.build_embedding(), options);

    std::string output;
    int status = 0;
    if (app.got_subcommand(facets)) {
        output = json ? emit_facets_json(engine) : emit_facets_tsv(engine);
    } else if (app.got_subcommand(rays)) {
        output = json ? emit_rays_json(engine) : emit_rays_tsv(engine);
    } else if (app.got_subcommand(check)) {
        std::vector<long> mu, mu_hat;
        auto parse_list = [](const std::string& s) {
            std::vector<long> out;
            std::istringstream is(s);
            long v;
            while (is >> v)
                out.push_back(v);
            return out;
        };
        if (!mu_flag.empty())
            mu = parse_list(mu_flag);
        else if (cfg.mu)
            mu = *cfg.mu;
        else
            throw ParseError("check needs --mu or a mu line in the config");
        if (!mu_hat_flag.empty())
            mu_hat = parse_list(mu_hat_flag);
        else if (cfg.mu_hat)
            mu_hat = *cfg.mu_hat;
        else
            throw ParseError("check needs --mu-hat or a mu_hat line in the config");
        CheckReport report = run_check(engine, mu, mu_hat, cfg.nmax, cfg.rep_dim_cap, !no_witness);
        output = check_to_string(report, json);
    } else {
        VerifyReport report = run_verify(engine);
        std::ostringstream os;
        for (const auto& line : report.lines)
            os << line << "\n";
        os << (report.ok ? "verify: all checks passed" : "verify: FAILURES present") << "\n";
        output = os.str();
        if (!report.ok)
            status = kExitVerifyFailed;
    }

    if (cfg.out) {
        std::ofstream out(*cfg.out);
        if (!out)
            throw std::runtime_error("cannot open output file '" + *cfg.out + "'");
        out << output;
    } else {
        std::cout << output;
    }
    return status;
}

} // namespace

int main(int argc, char** argv)
{
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const InvalidInput& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudgetError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
}
