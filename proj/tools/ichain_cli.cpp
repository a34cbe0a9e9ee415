// ichain: experiment runner for the inhomogeneous two-state chain.
//
//   ichain check6     --profile abs --n-range -100:100 --r-max 200
//   ichain peierls    --profile abs --n 3 --beta 1
//   ichain gap        --profile abs --n 10,100,1000 --beta 3 --c1 2
//   ichain maxrun     --profile abs --n 25,50,100,200 --beta 2 --c1 1.5
//   ichain mcmc-check --n 4,6,8 --beta 0.5,1,2 --boundary both --seed 7
//
// Exit status: 0 success, 1 finding (violation or failed bound), 2 usage error.

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ichain/errors.hpp"
#include "ichain/experiments.hpp"

namespace ex = ichain::experiments;

namespace {

struct Flag {
    const char* key;
    const char* help;
};

const std::vector<Flag> kFlags = {
    {"profile", "coupling profile: abs | constant:<c> | linear:<a>:<b> | table:<xmin>:<v0,...>"},
    {"n", "volume radii: list a,b,c or range lo:hi[:step]"},
    {"beta", "inverse temperatures, comma separated"},
    {"boundary", "plus | minus | both"},
    {"out", "output file (default stdout)"},
    {"format", "csv | json (JSON lines)"},
    {"seed", "64-bit seed for random blocks and the sampler"},
    {"c1", "run-length constant C1 (threshold floor(C1 ln(2n+1)))"},
    {"n-range", "check6: site range lo:hi"},
    {"r-max", "check6: largest separation r"},
    {"blocks", "peierls: 'all' or a count of random blocks per point"},
    {"sweeps", "mcmc-check: total sweeps per chain"},
    {"burn-in", "mcmc-check: discarded initial sweeps"},
    {"site", "mcmc-check: site whose marginal is estimated"},
};

// CLI11 reads "-100:100" as a short option; glue such values to their flag.
std::vector<std::string> glue_negative_values(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::vector<std::string> out;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& a = args[i];
        const bool takes_value = a.rfind("--", 0) == 0 && a.find('=') == std::string::npos &&
                                 a != "--force" && a != "--help";
        if (takes_value && i + 1 < args.size() && args[i + 1].size() > 1 && args[i + 1][0] == '-' &&
            (std::isdigit(static_cast<unsigned char>(args[i + 1][1])) || args[i + 1][1] == '.')) {
            out.push_back(a + "=" + args[++i]);
        } else {
            out.push_back(a);
        }
    }
    std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact and sampled Gibbs quantities for a one-dimensional chain with "
                 "site-dependent couplings"};
    app.require_subcommand(1);

    std::map<std::string, std::map<std::string, std::string>> values;
    std::map<std::string, std::string> config_path;
    std::map<std::string, bool> force;

    const std::vector<std::pair<const char*, const char*>> commands = {
        {"check6", "check I_n + I_{n+r} >= r on a range"},
        {"peierls", "exact block probabilities against the contour bound (plus boundary)"},
        {"gap", "origin marginals under both boundaries and their gap"},
        {"maxrun", "tail of the longest minus run beyond floor(C1 ln(2n+1))"},
        {"mcmc-check", "Glauber sampler estimates against exact marginals"},
    };
    for (const auto& [name, help] : commands) {
        auto* sub = app.add_subcommand(name, help);
        auto& kv = values[name];
        for (const auto& f : kFlags) {
            sub->add_option_function<std::string>(
                std::string("--") + f.key, [&kv, key = f.key](const std::string& v) { kv[key] = v; },
                f.help);
        }
        sub->add_option("--config", config_path[name], "flat key = value file; flags override it");
        sub->add_flag("--force", force[name], "mcmc-check: allow beta > 4");
    }

    try {
        app.parse(glue_negative_values(argc, argv));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        std::map<std::string, std::string> kv;
        if (!config_path[command].empty()) kv = ex::read_config_file(config_path[command]);
        for (const auto& [k, v] : values[command]) kv[k] = v;
        if (force[command]) kv["force"] = "true";

        const auto config = ex::make_config(command, kv);
        const auto result = ex::run_command(config);
        const std::string text = ex::render(result.rows, config.format);
        if (config.out.empty()) {
            std::cout << text << std::flush;
        } else {
            std::ofstream out(config.out, std::ios::binary);
            if (!out) throw ex::UsageError("cannot write '" + config.out + "'");
            out << text;
        }
        std::cerr << result.summary << '\n';
        return result.exit_code;
    } catch (const ex::UsageError& e) {
        std::cerr << "ichain " << command << ": " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "ichain " << command << ": error: " << e.what() << '\n';
        return 2;
    }
}
