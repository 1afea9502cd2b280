#pragma once

#include <cstdint>
#include <string>

namespace teichrec::cli {

// Options shared by every experiment, plus the union of per-kind knobs;
// each subcommand registers only the flags it uses.
struct Options {
    std::string surface = "l3";
    std::string out_dir = "out";
    std::uint64_t seed = 1;
    int threads = 0;  // 0 = hardware concurrency
    std::uint64_t budget = 0;  // 0 = library default / TEICH_RECUR_BUDGET

    double L = 5.0;            // enumerate radius
    double tau = 2.0;
    double delta = 0.5;
    double l = 8.0;
    double l0 = 4.0;
    double lambda = 0.5;
    double theta0 = 8.0;
    double T = 12.0;
    double S = 4.0;
    double dt = 0.05;
    double warp = 0.0;         // apply g_warp to the surface first
    double l_quantile = -1.0;  // >0: choose l from the stationary V quantile
    double c_prime = 1.0;      // sojourn merge cutoff
    int steps = 40;
    int trials = 400;
    int angles = 256;
    int n_samples = 200;       // drift-estimation samples per start
    std::string eta_spec;
    std::string xi_spec;

    bool plot = false;  // emit a gnuplot script next to the CSV

    // hyp-check knobs
    double t1 = 15.0;
    double t2 = 15.0;
    double eta = 0.05;
    int samples = 10000;
};

int run_enumerate(const Options& o);
int run_walk(const Options& o);
int run_fan(const Options& o);
int run_first_hit(const Options& o);
int run_window_miss(const Options& o);
int run_occupation(const Options& o);
int run_drift_verify(const Options& o);
int run_chernoff(const Options& o);
int run_hyp_check(const Options& o);

}  // namespace teichrec::cli
