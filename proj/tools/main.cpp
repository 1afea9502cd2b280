#include <cstdio>
#include <exception>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "experiments.hpp"
#include "teichrec/errors.hpp"

namespace {

using teichrec::cli::Options;

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// Line-oriented `key = value` files with '#' comments. Entries become
// --key value pairs inserted after the subcommand token, skipping keys the
// command line already carries, so explicit flags always win.
std::vector<std::string> apply_config_file(std::vector<std::string> args,
                                           const std::set<std::string>& known_keys) {
    std::string path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config") {
            if (i + 1 >= args.size()) throw teichrec::Error("--config needs a file path");
            path = args[i + 1];
            args.erase(args.begin() + i, args.begin() + i + 2);
            break;
        }
        if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
            args.erase(args.begin() + i);
            break;
        }
    }
    if (path.empty()) return args;

    std::ifstream f(path);
    if (!f) throw teichrec::Error("cannot open config file: " + path);

    std::set<std::string> given;
    for (const auto& a : args) {
        if (a.rfind("--", 0) != 0) continue;
        const auto eq = a.find('=');
        given.insert(eq == std::string::npos ? a.substr(2) : a.substr(2, eq - 2));
    }

    std::vector<std::string> extra;
    std::string line;
    while (std::getline(f, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw teichrec::Error("config file: expected 'key = value', got '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (known_keys.find(key) == known_keys.end())
            throw teichrec::Error("config file: unknown key '" + key + "'");
        if (given.count(key)) continue;
        extra.push_back("--" + key);
        extra.push_back(value);
    }

    // insert after the subcommand token so the flags land in its scope
    std::size_t insert_at = args.size();
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i].rfind("-", 0) != 0) {
            insert_at = i + 1;
            break;
        }
    }
    args.insert(args.begin() + insert_at, extra.begin(), extra.end());
    return args;
}

std::set<std::string> collect_option_names(const CLI::App& app) {
    std::set<std::string> keys;
    for (const auto* sub : app.get_subcommands({})) {
        for (const auto* opt : sub->get_options()) {
            for (const auto& name : opt->get_lnames()) keys.insert(name);
        }
    }
    return keys;
}

void add_common(CLI::App* cmd, Options& o) {
    cmd->add_option("--surface", o.surface,
                    "builtin name (torus, l3) or a surface file path");
    cmd->add_option("--out", o.out_dir, "output directory");
    cmd->add_option("--seed", o.seed, "base seed for all randomness");
    cmd->add_option("--threads", o.threads, "worker threads (0 = hardware)");
    cmd->add_option("--budget", o.budget,
                    "saddle-connection search budget (0 = TEICH_RECUR_BUDGET or default)");
}

void add_fan_opts(CLI::App* cmd, Options& o) {
    cmd->add_option("--angles", o.angles, "fan size");
    cmd->add_option("--T", o.T, "flow horizon");
    cmd->add_option("--dt", o.dt, "flow sampling step");
    cmd->add_option("--delta", o.delta, "V0 exponent parameter");
    cmd->add_option("--l", o.l, "sublevel threshold");
    cmd->add_option("--l0", o.l0, "re-entry threshold");
    cmd->add_option("--l-quantile", o.l_quantile,
                    "choose l as this quantile of trailing V (overrides --l)");
    cmd->add_flag("--plot", o.plot, "also write a gnuplot script for the CSV");
    cmd->add_option("--warp", o.warp, "apply the diagonal flow g_warp to the surface first");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"translation-surface recurrence experiments"};
    app.require_subcommand(1);

    Options o;

    auto* enumerate = app.add_subcommand("enumerate", "list saddle connections up to length L");
    add_common(enumerate, o);
    enumerate->add_option("--L", o.L, "length bound")->required();
    enumerate->add_option("--warp", o.warp, "apply g_warp first");

    auto* walk = app.add_subcommand("walk", "random-walk return-time experiment");
    add_common(walk, o);
    walk->add_option("--tau", o.tau, "walk step size");
    walk->add_option("--delta", o.delta, "V0 exponent parameter");
    walk->add_option("--l", o.l, "sublevel threshold");
    walk->add_option("--steps", o.steps, "maximum walk length");
    walk->add_option("--trials", o.trials, "Monte-Carlo trials");
    walk->add_option("--warp", o.warp, "apply g_warp first");
    walk->add_option("--drift-samples", o.n_samples, "samples per start for the drift fit");

    auto* fan = app.add_subcommand("fan", "geodesic fan V-traces");
    add_common(fan, o);
    add_fan_opts(fan, o);

    auto* first_hit = app.add_subcommand("first-hit", "no-visit fraction curve");
    add_common(first_hit, o);
    add_fan_opts(first_hit, o);

    auto* window_miss = app.add_subcommand("window-miss", "window-avoidance fraction");
    add_common(window_miss, o);
    add_fan_opts(window_miss, o);
    window_miss->add_option("--S", o.S, "window start time");

    auto* occupation = app.add_subcommand("occupation", "occupation-fraction tail and rate");
    add_common(occupation, o);
    add_fan_opts(occupation, o);
    occupation->add_option("--lambda", o.lambda, "occupation threshold");
    occupation->add_option("--theta0", o.theta0, "Chernoff search range");
    occupation->add_option("--c-prime", o.c_prime, "short-sojourn merge cutoff");

    auto* drift_verify = app.add_subcommand("drift-verify", "survival curve vs drift bound");
    add_common(drift_verify, o);
    drift_verify->add_option("--tau", o.tau, "walk step size");
    drift_verify->add_option("--delta", o.delta, "V0 exponent parameter");
    drift_verify->add_option("--l", o.l, "sublevel threshold");
    drift_verify->add_option("--steps", o.steps, "survival horizon");
    drift_verify->add_option("--trials", o.trials, "Monte-Carlo trials");
    drift_verify->add_option("--warp", o.warp, "apply g_warp first");
    drift_verify->add_option("--drift-samples", o.n_samples,
                             "samples per start for the drift fit");

    auto* chernoff = app.add_subcommand("chernoff", "alternating-sojourn deviation rate");
    chernoff->add_option("--out", o.out_dir, "output directory");
    chernoff->add_option("--eta", o.eta_spec, "outside-sojourn model")->required();
    chernoff->add_option("--xi", o.xi_spec, "cycle lower-bound model")->required();
    chernoff->add_option("--lambda", o.lambda, "occupation threshold")->required();
    chernoff->add_option("--theta0", o.theta0, "Chernoff search range");

    auto* hyp_check = app.add_subcommand("hyp-check", "hyperbolic identity battery");
    hyp_check->add_option("--out", o.out_dir, "output directory");
    hyp_check->add_option("--seed", o.seed, "base seed");
    hyp_check->add_option("--t1", o.t1, "polar-change inner radius");
    hyp_check->add_option("--t2", o.t2, "polar-change outer radius");
    hyp_check->add_option("--eta", o.eta, "envelope slack");
    hyp_check->add_option("--samples", o.samples, "Monte-Carlo sample count");

    try {
        std::vector<std::string> args(argv + 1, argv + argc);
        args = apply_config_file(std::move(args), collect_option_names(app));
        // CLI11 consumes the argument list back to front
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;  // usage/config problems exit 1, --help exits 0
    } catch (const teichrec::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }

    try {
        if (enumerate->parsed()) return teichrec::cli::run_enumerate(o);
        if (walk->parsed()) return teichrec::cli::run_walk(o);
        if (fan->parsed()) return teichrec::cli::run_fan(o);
        if (first_hit->parsed()) return teichrec::cli::run_first_hit(o);
        if (window_miss->parsed()) return teichrec::cli::run_window_miss(o);
        if (occupation->parsed()) return teichrec::cli::run_occupation(o);
        if (drift_verify->parsed()) return teichrec::cli::run_drift_verify(o);
        if (chernoff->parsed()) return teichrec::cli::run_chernoff(o);
        if (hyp_check->parsed()) return teichrec::cli::run_hyp_check(o);
    } catch (const teichrec::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 1;
}
