// Command-line front end: central intervals, hypercube distances, and
// dynamic clustering over interval-valued CSV datasets. JSON on stdout,
// diagnostics on stderr.
//
// Exit codes: 0 success, 1 usage error, 2 data/validation error.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "interval_centers/clustering.hpp"
#include "interval_centers/csv.hpp"
#include "interval_centers/l2_hausdorff.hpp"
#include "interval_centers/oracle.hpp"

namespace ic = interval_centers;
using nlohmann::json;

namespace {

// Round to 12 significant digits so output is reproducible without
// trailing float noise.
double round12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return std::strtod(buf, nullptr);
}

json interval_json(const ic::Interval& x) {
    return json{{"lo", round12(x.lower())}, {"hi", round12(x.upper())}};
}

json norm_json(ic::Norm p) {
    switch (p) {
        case ic::Norm::L1: return json(1);
        case ic::Norm::L2: return json(2);
        case ic::Norm::LInf: return json("inf");
    }
    return json();
}

ic::Method parse_method(const std::string& name) {
    if (name == "median") return ic::Method::L1Hausdorff;
    if (name == "midrange") return ic::Method::LinfHausdorff;
    if (name == "mean-bounds") return ic::Method::L2Bounds;
    if (name == "mean-midlen") return ic::Method::L2MidLen;
    if (name == "l2-hausdorff") return ic::Method::L2Hausdorff;
    throw CLI::ValidationError("--method", "unknown method '" + name + "'");
}

ic::Dist parse_dist(const std::string& name) {
    if (name == "hausdorff") return ic::Dist::Hausdorff;
    if (name == "l2-bounds") return ic::Dist::L2Bounds;
    if (name == "l2-midlen") return ic::Dist::L2MidLen;
    throw CLI::ValidationError("--distance", "unknown distance '" + name + "'");
}

ic::Norm parse_norm(const std::string& s) {
    if (s == "1") return ic::Norm::L1;
    if (s == "2") return ic::Norm::L2;
    if (s == "inf") return ic::Norm::LInf;
    throw CLI::ValidationError("exponent must be 1, 2 or inf");
}

// Row lookup for the dist subcommand: by id when the file has an id column,
// by 0-based index otherwise.
std::size_t locate_row(const ic::ParsedDataset& pd, const std::string& key) {
    if (pd.has_id) {
        for (std::size_t i = 0; i < pd.ids.size(); ++i)
            if (pd.ids[i] == key) return i;
        throw ic::RowError(0, "unknown id '" + key + "'");
    }
    char* end = nullptr;
    long idx = std::strtol(key.c_str(), &end, 10);
    if (end == key.c_str() || *end != '\0' || idx < 0 ||
        static_cast<std::size_t>(idx) >= pd.dataset.size())
        throw ic::RowError(0, "invalid row index '" + key + "'");
    return static_cast<std::size_t>(idx);
}

int run_center(const std::string& input, const std::string& method_name,
               const std::string& var) {
    ic::Method method = parse_method(method_name);
    ic::ParsedDataset pd = ic::parse_csv_file(input);
    json out = json::array();
    for (std::size_t j = 0; j < pd.dataset.dim(); ++j) {
        const std::string& name = pd.dataset.variable_names()[j];
        if (!var.empty() && var != name) continue;
        ic::CentralEstimate est = ic::central_interval(pd.dataset.coordinate_sample(j), method);
        out.push_back(json{{"variable", name},
                           {"center", interval_json(est.center)},
                           {"dispersion", round12(est.dispersion)},
                           {"method", ic::to_string(est.method)},
                           {"p", norm_json(est.p)}});
    }
    if (!var.empty() && out.empty()) {
        std::cerr << "error: unknown variable '" << var << "'\n";
        return 2;
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_cluster(const std::string& input, const ic::ClusteringConfig& cfg) {
    ic::ParsedDataset pd = ic::parse_csv_file(input);
    ic::ClusteringResult res = ic::cluster(pd.dataset, cfg);
    json protos = json::array();
    for (const auto& h : res.prototypes) {
        json cube = json::array();
        for (const auto& comp : h.components()) cube.push_back(interval_json(comp));
        protos.push_back(cube);
    }
    json trace = json::array();
    for (double v : res.criterion_trace) trace.push_back(round12(v));
    json out{{"variables", pd.dataset.variable_names()},
             {"assignments", res.assignments},
             {"prototypes", protos},
             {"criterion_trace", trace},
             {"repair_iterations", res.repair_iterations},
             {"iterations", res.iterations},
             {"converged", res.converged}};
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_dist(const std::string& input, const std::string& first, const std::string& second,
             const std::string& dist_name, const std::string& q_name, bool normalize) {
    ic::Dist d = parse_dist(dist_name);
    ic::Norm q = parse_norm(q_name);
    ic::ParsedDataset pd = ic::parse_csv_file(input);
    std::size_t i = locate_row(pd, first);
    std::size_t j = locate_row(pd, second);
    double value;
    if (normalize) {
        ic::Method method;
        if (d == ic::Dist::Hausdorff)
            method = (q == ic::Norm::L1)   ? ic::Method::L1Hausdorff
                     : (q == ic::Norm::L2) ? ic::Method::L2Hausdorff
                                           : ic::Method::LinfHausdorff;
        else if (q == ic::Norm::L2)
            method = (d == ic::Dist::L2Bounds) ? ic::Method::L2Bounds : ic::Method::L2MidLen;
        else
            throw CLI::ValidationError("--normalize",
                                       "no central-interval solver for this (distance, q) pair");
        ic::DispersionProfile prof = ic::dispersion_profile(pd.dataset, method);
        value = ic::normalized_dist(pd.dataset[i], pd.dataset[j], prof, d, q);
    } else {
        value = ic::dist_hypercube(pd.dataset[i], pd.dataset[j], d, q);
    }
    std::cout << json{{"distance", round12(value)}}.dump(2) << "\n";
    return 0;
}

int run_oracle(const std::string& input, const std::string& dist_name, const std::string& p_name) {
    ic::ParsedDataset pd = ic::parse_csv_file(input);
    json out = json::array();
    for (std::size_t j = 0; j < pd.dataset.dim(); ++j) {
        auto r = ic::oracle::grid_minimize(pd.dataset.coordinate_sample(j),
                                           parse_norm(p_name), parse_dist(dist_name));
        out.push_back(json{{"variable", pd.dataset.variable_names()[j]},
                           {"center", interval_json(r.center)},
                           {"value", round12(r.value)},
                           {"resolution", r.resolution}});
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Central tendency, dispersion and clustering for interval-valued data"};
    app.require_subcommand(1);

    std::string input, method = "median", var, first, second;
    std::string distance = "hausdorff", q = "2", p_oracle = "2";
    ic::ClusteringConfig cfg;
    std::string cluster_p = "2";
    bool normalize = false;

    auto* center = app.add_subcommand("center", "Central interval and dispersion per variable");
    center->add_option("--input", input, "CSV dataset")->required();
    center->add_option("--method", method,
                       "median|midrange|mean-bounds|mean-midlen|l2-hausdorff")
        ->required()
        ->check(CLI::IsMember({"median", "midrange", "mean-bounds", "mean-midlen", "l2-hausdorff"}));
    center->add_option("--var", var, "restrict to one variable");

    auto* clus = app.add_subcommand("cluster", "Dynamic clustering with exact centrocube prototypes");
    clus->add_option("--input", input, "CSV dataset")->required();
    clus->add_option("--k", cfg.k, "cluster count")->required();
    clus->add_option("--p", cluster_p, "exponent (1 or 2)")->check(CLI::IsMember({"1", "2"}));
    clus->add_option("--distance", distance, "hausdorff|l2-bounds|l2-midlen")
        ->check(CLI::IsMember({"hausdorff", "l2-bounds", "l2-midlen"}));
    clus->add_flag("--normalize", cfg.normalize, "divide coordinate terms by global dispersion");
    clus->add_option("--seed", cfg.seed, "RNG seed for prototype initialization");
    clus->add_option("--max-iter", cfg.max_iter, "iteration cap");

    auto* dist = app.add_subcommand("dist", "Distance between two rows");
    dist->add_option("--input", input, "CSV dataset")->required();
    dist->add_option("--first", first, "row id (or 0-based index without an id column)")->required();
    dist->add_option("--second", second, "row id (or 0-based index)")->required();
    dist->add_option("--distance", distance, "hausdorff|l2-bounds|l2-midlen")
        ->check(CLI::IsMember({"hausdorff", "l2-bounds", "l2-midlen"}));
    dist->add_option("--q", q, "combination exponent: 1, 2 or inf")
        ->check(CLI::IsMember({"1", "2", "inf"}));
    dist->add_flag("--normalize", normalize, "normalize by per-variable dispersion");

    auto* oracle = app.add_subcommand("oracle", "Brute-force reference minimizer (debugging)");
    oracle->group("");  // hidden
    oracle->add_option("--input", input)->required();
    oracle->add_option("--p", p_oracle)->check(CLI::IsMember({"1", "2", "inf"}));
    oracle->add_option("--distance", distance)
        ->check(CLI::IsMember({"hausdorff", "l2-bounds", "l2-midlen"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (center->parsed()) return run_center(input, method, var);
        if (clus->parsed()) {
            cfg.p = parse_norm(cluster_p);
            cfg.distance = parse_dist(distance);
            try {
                ic::clustering_method(cfg);  // validate the pairing before touching data
            } catch (const std::invalid_argument& e) {
                std::cerr << "error: " << e.what() << "\n";
                return 1;
            }
            return run_cluster(input, cfg);
        }
        if (dist->parsed()) return run_dist(input, first, second, distance, q, normalize);
        if (oracle->parsed()) return run_oracle(input, distance, p_oracle);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
