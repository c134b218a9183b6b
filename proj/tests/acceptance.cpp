// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Runs the library checks directly and the CLI contract through
// the built binary.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "interval_centers/clustering.hpp"
#include "interval_centers/csv.hpp"
#include "interval_centers/l2_hausdorff.hpp"
#include "interval_centers/oracle.hpp"

using namespace interval_centers;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& what, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": " << what;
    if (!ok && !detail.empty()) std::cout << " [" << detail << "]";
    std::cout << "\n";
    if (!ok) ++g_failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

Interval random_interval(std::mt19937& gen) {
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    double a = u(gen), b = u(gen);
    if (a > b) std::swap(a, b);
    return Interval(a, b);
}

IntervalSample random_sample(std::mt19937& gen, std::size_t n) {
    std::vector<Interval> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(random_interval(gen));
    return IntervalSample(std::move(v));
}

void criterion1_distance_identities() {
    auto t0 = Clock::now();
    std::mt19937 gen(101);
    bool ok = true;
    std::string detail;
    for (int t = 0; t < 100000 && ok; ++t) {
        Interval x = random_interval(gen), y = random_interval(gen);
        double h = hausdorff(x, y);
        if (std::abs(h - hausdorff_midlen(x, y)) > 1e-12 ||
            std::abs(h - lp_bounds_dist(x, y, Norm::LInf)) > 1e-12 ||
            std::abs(h - lp_midlen_dist(x, y, Norm::L1)) > 1e-12) {
            ok = false;
            detail = "identity violated at trial " + std::to_string(t);
        }
    }
    double el = seconds_since(t0);
    if (ok && el >= 5.0) {
        ok = false;
        detail = "runtime " + std::to_string(el) + "s";
    }
    report(1, "distance identities on 1e5 random pairs (1e-12), <5s", ok, detail);
}

void criterion2_closed_form_optimality() {
    auto t0 = Clock::now();
    std::mt19937 gen(202);
    bool ok = true;
    std::string detail;
    for (int t = 0; t < 200 && ok; ++t) {
        IntervalSample s = random_sample(gen, 1 + gen() % 15);
        struct Case {
            CentralEstimate est;
            Norm p;
            Dist d;
        };
        const Case cases[] = {{center_l1_hausdorff(s), Norm::L1, Dist::Hausdorff},
                              {center_linf_hausdorff(s), Norm::LInf, Dist::Hausdorff},
                              {center_l2_bounds(s), Norm::L2, Dist::L2Bounds},
                              {center_l2_midlen(s), Norm::L2, Dist::L2MidLen}};
        for (const auto& c : cases) {
            double ref = oracle::grid_minimize(s, c.p, c.d).value;
            if (c.est.dispersion > ref + 1e-4) {
                ok = false;
                detail = "method " + to_string(c.est.method) + " dispersion " +
                         std::to_string(c.est.dispersion) + " > oracle " + std::to_string(ref);
            }
        }
    }
    double el = seconds_since(t0);
    if (ok && el >= 120.0) {
        ok = false;
        detail = "runtime " + std::to_string(el) + "s";
    }
    report(2, "closed-form centers within 1e-4 of the grid oracle on 200 samples, <2min", ok,
           detail);
}

void criterion3_l2_hausdorff_exactness() {
    auto t0 = Clock::now();
    std::mt19937 gen(303);
    bool ok = true;
    std::string detail;
    for (int t = 0; t < 200 && ok; ++t) {
        IntervalSample s = random_sample(gen, 1 + gen() % 15);
        auto est = center_l2_hausdorff(s);
        auto ref = oracle::grid_minimize(s, Norm::L2, Dist::Hausdorff);
        double got = est.dispersion * est.dispersion;
        double want = ref.value * ref.value;
        if (std::abs(got - want) > 1e-6) {
            ok = false;
            detail = "trial " + std::to_string(t) + ": solver^2 " + std::to_string(got) +
                     " vs oracle^2 " + std::to_string(want);
        }
    }
    if (ok) {
        auto flat = center_l2_hausdorff(IntervalSample({Interval(0, 2), Interval(3, 9)}));
        if (std::abs(flat.dispersion * flat.dispersion - 24.5) > 1e-6 ||
            std::abs(flat.center.upper() - 5.5) > 1e-6) {
            ok = false;
            detail = "flat-valley case";
        }
        auto sym = center_l2_hausdorff(IntervalSample({Interval(0, 2), Interval(4, 6)}));
        if (std::abs(sym.center.lower() - 2.0) > 1e-6 || std::abs(sym.center.upper() - 4.0) > 1e-6 ||
            std::abs(sym.dispersion * sym.dispersion - 8.0) > 1e-6) {
            ok = false;
            detail = "symmetric case";
        }
    }
    double el = seconds_since(t0);
    if (ok && el >= 180.0) {
        ok = false;
        detail = "runtime " + std::to_string(el) + "s";
    }
    report(3, "exact L2/Hausdorff solver matches the oracle (1e-6) and frozen cases, <3min", ok,
           detail);
}

void criterion4_rectangle_subproblems() {
    auto t0 = Clock::now();
    std::mt19937 gen(404);
    bool ok = true;
    std::string detail;
    for (int t = 0; t < 500 && ok; ++t) {
        IntervalSample s = random_sample(gen, 1 + gen() % 12);
        auto bp = breakpoints(s);
        std::size_t j = gen() % bp.m_cells();
        std::size_t k = gen() % bp.l_cells();
        auto sol = solve_rectangle(build_subproblem(s, bp, j, k));
        if (sol.forbidden_corner) {
            ok = false;
            detail = "forbidden corner-gradient sign pattern at trial " + std::to_string(t);
            break;
        }
        auto ref = oracle::rectangle_grid_minimize(s, j, k);
        if (std::abs(sol.value - ref.value) > 1e-5) {
            ok = false;
            detail = "trial " + std::to_string(t) + ": solver " + std::to_string(sol.value) +
                     " vs oracle " + std::to_string(ref.value);
        }
    }
    double el = seconds_since(t0);
    if (ok && el >= 60.0) {
        ok = false;
        detail = "runtime " + std::to_string(el) + "s";
    }
    report(4, "500 random rectangle subproblems match the dense oracle (1e-5), no forbidden corner, <1min",
           ok, detail);
}

void criterion5_scalar_degeneration() {
    std::mt19937 gen(505);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    bool ok = true;
    std::string detail;
    for (int t = 0; t < 100 && ok; ++t) {
        std::size_t n = 1 + gen() % 12;
        std::vector<double> xs;
        std::vector<Interval> pts;
        for (std::size_t i = 0; i < n; ++i) {
            double x = u(gen);
            xs.push_back(x);
            pts.emplace_back(x, x);
        }
        IntervalSample s(std::move(pts));
        std::vector<double> sorted = xs;
        std::sort(sorted.begin(), sorted.end());
        double med = (n % 2) ? sorted[n / 2] : (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0;
        double midr = (sorted.front() + sorted.back()) / 2.0;
        double mean = 0;
        for (double x : xs) mean += x;
        mean /= n;
        double abs_dev = 0, ss = 0;
        for (double x : xs) {
            abs_dev += std::abs(x - med);
            ss += (x - mean) * (x - mean);
        }
        double half_range = (sorted.back() - sorted.front()) / 2.0;

        auto l1 = center_l1_hausdorff(s);
        auto li = center_linf_hausdorff(s);
        auto l2b = center_l2_bounds(s);
        auto l2m = center_l2_midlen(s);
        auto l2h = center_l2_hausdorff(s);
        auto bad = [&](double a, double b) { return std::abs(a - b) > 1e-9; };
        if (bad(l1.center.midpoint(), med) || l1.center.half_length() > 1e-9 ||
            bad(l1.dispersion, abs_dev) || bad(li.center.midpoint(), midr) ||
            bad(li.dispersion, half_range) || bad(l2b.center.midpoint(), mean) ||
            bad(l2b.dispersion, std::sqrt(2.0 * ss)) || bad(l2m.center.midpoint(), mean) ||
            bad(l2m.dispersion, std::sqrt(ss)) || bad(l2h.center.midpoint(), mean) ||
            bad(l2h.dispersion * l2h.dispersion, ss)) {
            ok = false;
            detail = "trial " + std::to_string(t);
        }
    }
    report(5, "degenerate samples reduce to scalar median/midrange/mean statistics (1e-9)", ok,
           detail);
}

void criterion6_complexity() {
    setenv("INTERVAL_CENTERS_THREADS", "1", 1);
    std::mt19937 gen(606);
    auto time_solver = [&](std::size_t n) {
        IntervalSample s = random_sample(gen, n);
        std::array<double, 5> times{};
        for (auto& t : times) {
            auto t0 = Clock::now();
            volatile double sink = center_l2_hausdorff(s).dispersion;
            (void)sink;
            t = seconds_since(t0);
        }
        std::sort(times.begin(), times.end());
        return times[2];
    };
    double t100 = time_solver(100);
    double t200 = time_solver(200);
    unsetenv("INTERVAL_CENTERS_THREADS");
    double ratio = t200 / t100;
    bool ok = ratio >= 6.0 && ratio <= 12.0;
    report(6, "median-of-5 wall-time ratio n=200/n=100 in [6,12]", ok,
           "ratio " + std::to_string(ratio) + " (t100 " + std::to_string(t100) + "s, t200 " +
               std::to_string(t200) + "s)");
}

void criterion7_clustering() {
    std::mt19937 gen(707);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    bool ok = true;
    std::string detail;
    struct Combo {
        Norm p;
        Dist d;
    };
    const Combo combos[] = {{Norm::L1, Dist::Hausdorff},
                            {Norm::L2, Dist::Hausdorff},
                            {Norm::L2, Dist::L2Bounds},
                            {Norm::L2, Dist::L2MidLen}};
    for (int run = 0; run < 50 && ok; ++run) {
        std::size_t n = 8 + gen() % 33, dims = 1 + gen() % 3;
        std::vector<Hypercube> items;
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Interval> comps;
            for (std::size_t j = 0; j < dims; ++j) {
                double a = u(gen), b = u(gen);
                if (a > b) std::swap(a, b);
                comps.emplace_back(a, b);
            }
            items.emplace_back(std::move(comps));
        }
        std::vector<std::string> names;
        for (std::size_t j = 0; j < dims; ++j) names.push_back("v" + std::to_string(j));
        HypercubeDataset data(std::move(items), std::move(names));

        ClusteringConfig cfg;
        cfg.k = 2 + run % 2;
        cfg.p = combos[run % 4].p;
        cfg.distance = combos[run % 4].d;
        cfg.normalize = (run / 4) % 2 == 0;
        cfg.seed = run;
        cfg.max_iter = 100;
        auto res = cluster(data, cfg);
        if (!res.converged || res.iterations >= 100) {
            ok = false;
            detail = "run " + std::to_string(run) + " did not terminate early";
        }
        for (std::size_t t = 1; t < res.criterion_trace.size() && ok; ++t) {
            bool repaired = std::find(res.repair_iterations.begin(), res.repair_iterations.end(),
                                      t) != res.repair_iterations.end();
            if (!repaired && res.criterion_trace[t] > res.criterion_trace[t - 1] + 1e-9) {
                ok = false;
                detail = "run " + std::to_string(run) + " trace increased at t=" + std::to_string(t);
            }
        }
    }
    if (ok) {
        // duplicated-groups fixture
        std::vector<Hypercube> items;
        for (int i = 0; i < 3; ++i) items.push_back(Hypercube({Interval(0, 1), Interval(2, 3)}));
        for (int i = 0; i < 3; ++i) items.push_back(Hypercube({Interval(8, 9), Interval(7, 8)}));
        HypercubeDataset data(std::move(items), {"x", "y"});
        ClusteringConfig cfg;
        cfg.k = 2;
        cfg.p = Norm::L1;
        cfg.distance = Dist::Hausdorff;
        cfg.seed = 3;
        auto res = cluster(data, cfg);
        bool grouped = res.assignments[0] == res.assignments[1] &&
                       res.assignments[1] == res.assignments[2] &&
                       res.assignments[3] == res.assignments[4] &&
                       res.assignments[4] == res.assignments[5] &&
                       res.assignments[0] != res.assignments[3];
        if (!grouped || res.criterion_trace.back() != 0.0) {
            ok = false;
            detail = "duplicated-groups fixture";
        }
    }
    report(7, "50 seeded clustering runs: non-increasing traces, early termination; groups fixture reaches 0",
           ok, detail);
}

void criterion8_l2_center_coincidence() {
    std::mt19937 gen(808);
    bool ok = true;
    std::string detail;
    for (int t = 0; t < 1000 && ok; ++t) {
        IntervalSample s = random_sample(gen, 1 + gen() % 15);
        auto b = center_l2_bounds(s);
        auto m = center_l2_midlen(s);
        if (std::abs(b.center.lower() - m.center.lower()) > 1e-12 ||
            std::abs(b.center.upper() - m.center.upper()) > 1e-12) {
            ok = false;
            detail = "centers differ at trial " + std::to_string(t);
        }
        if (b.dispersion > 0 &&
            std::abs(b.dispersion - std::sqrt(2.0) * m.dispersion) > 1e-12 * b.dispersion) {
            ok = false;
            detail = "dispersion ratio at trial " + std::to_string(t);
        }
    }
    report(8, "L2 bounds/midlen centers identical (1e-12), dispersion ratio sqrt(2)", ok, detail);
}

// --- CLI contract ---------------------------------------------------------

struct CliResult {
    int exit_code;
    std::string stdout_text;
};

CliResult run_cli(const std::string& args) {
    std::string out_path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                           "/ic_cli_out.txt";
    std::string cmd = std::string(CLI_BIN_PATH) + " " + args + " > " + out_path + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    int code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_path);
    std::stringstream ss;
    ss << in.rdbuf();
    return {code, ss.str()};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void criterion9_cli_contract() {
    std::string fx = FIXTURES_DIR;
    std::string gd = GOLDEN_DIR;
    bool ok = true;
    std::string detail;

    struct Golden {
        std::string args;
        std::string file;
    };
    const Golden goldens[] = {
        {"center --input " + fx + "/three.csv --method median", "center_median.json"},
        {"center --input " + fx + "/flat.csv --method l2-hausdorff", "center_l2h.json"},
        {"dist --input " + fx + "/pair.csv --first a --second b --distance hausdorff --q 2",
         "dist_pair.json"},
        {"cluster --input " + fx + "/groups.csv --k 2 --p 1 --distance hausdorff --seed 7",
         "cluster_groups.json"},
    };
    for (const auto& g : goldens) {
        auto r1 = run_cli(g.args);
        auto r2 = run_cli(g.args);
        if (r1.exit_code != 0) {
            ok = false;
            detail = g.file + ": exit code " + std::to_string(r1.exit_code);
            break;
        }
        if (r1.stdout_text != r2.stdout_text) {
            ok = false;
            detail = g.file + ": output not reproducible";
            break;
        }
        std::string want = read_file(gd + "/" + g.file);
        if (want.empty() || r1.stdout_text != want) {
            ok = false;
            detail = g.file + ": output differs from golden";
            break;
        }
    }

    if (ok) {
        struct ExitCase {
            std::string args;
            int code;
        };
        const ExitCase cases[] = {
            {"center --input " + fx + "/bad_row.csv --method median", 2},
            {"center --input " + fx + "/bad_header.csv --method median", 2},
            {"center --input " + fx + "/three.csv --method nope", 1},
            {"cluster --input " + fx + "/pair.csv --k 5 --p 1 --distance hausdorff", 2},
            {"cluster --input " + fx + "/pair.csv --k 2 --p 1 --distance l2-bounds", 1},
            {"bogus-subcommand", 1},
        };
        for (const auto& c : cases) {
            auto r = run_cli(c.args);
            if (r.exit_code != c.code) {
                ok = false;
                detail = "'" + c.args + "': exit " + std::to_string(r.exit_code) + " want " +
                         std::to_string(c.code);
                break;
            }
        }
    }
    report(9, "CLI golden files byte-identical, exit-code contract honored", ok, detail);
}

}  // namespace

int main() {
    criterion1_distance_identities();
    criterion2_closed_form_optimality();
    criterion3_l2_hausdorff_exactness();
    criterion4_rectangle_subproblems();
    criterion5_scalar_degeneration();
    criterion6_complexity();
    criterion7_clustering();
    criterion8_l2_center_coincidence();
    criterion9_cli_contract();
    if (g_failures) std::cout << g_failures << " criterion(s) failed\n";
    return g_failures == 0 ? 0 : 1;
}
