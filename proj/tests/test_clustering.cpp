#include <catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "interval_centers/clustering.hpp"

using namespace interval_centers;

namespace {

Hypercube cube2(double a1, double b1, double a2, double b2) {
    return Hypercube({Interval(a1, b1), Interval(a2, b2)});
}

HypercubeDataset two_groups() {
    std::vector<Hypercube> items;
    for (int i = 0; i < 4; ++i) items.push_back(cube2(0, 1, 0, 1));
    for (int i = 0; i < 4; ++i) items.push_back(cube2(10, 11, 10, 11));
    return HypercubeDataset(std::move(items), {"x", "y"});
}

HypercubeDataset random_dataset(std::mt19937& gen, std::size_t n, std::size_t k) {
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    std::vector<Hypercube> items;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Interval> comps;
        for (std::size_t j = 0; j < k; ++j) {
            double a = u(gen), b = u(gen);
            if (a > b) std::swap(a, b);
            comps.emplace_back(a, b);
        }
        items.emplace_back(std::move(comps));
    }
    std::vector<std::string> names;
    for (std::size_t j = 0; j < k; ++j) names.push_back("v" + std::to_string(j));
    return HypercubeDataset(std::move(items), std::move(names));
}

}  // namespace

TEST_CASE("config validation") {
    ClusteringConfig cfg;
    cfg.p = Norm::L1;
    cfg.distance = Dist::Hausdorff;
    CHECK(clustering_method(cfg) == Method::L1Hausdorff);
    cfg.p = Norm::L2;
    CHECK(clustering_method(cfg) == Method::L2Hausdorff);
    cfg.distance = Dist::L2Bounds;
    CHECK(clustering_method(cfg) == Method::L2Bounds);
    cfg.distance = Dist::L2MidLen;
    CHECK(clustering_method(cfg) == Method::L2MidLen);

    cfg.p = Norm::L1;
    cfg.distance = Dist::L2Bounds;
    CHECK_THROWS_AS(clustering_method(cfg), std::invalid_argument);
    cfg.p = Norm::LInf;
    cfg.distance = Dist::Hausdorff;
    CHECK_THROWS_AS(clustering_method(cfg), std::invalid_argument);
}

TEST_CASE("two well-separated duplicate groups are recovered") {
    HypercubeDataset data = two_groups();
    ClusteringConfig cfg;
    cfg.k = 2;
    cfg.p = Norm::L1;
    cfg.distance = Dist::Hausdorff;
    cfg.seed = 1;
    auto res = cluster(data, cfg);
    CHECK(res.converged);
    CHECK(res.criterion_trace.back() == 0.0);
    for (std::size_t i = 1; i < 4; ++i) CHECK(res.assignments[i] == res.assignments[0]);
    for (std::size_t i = 5; i < 8; ++i) CHECK(res.assignments[i] == res.assignments[4]);
    CHECK(res.assignments[0] != res.assignments[4]);
}

TEST_CASE("k = 1 yields the global centrocube in one iteration") {
    HypercubeDataset data = two_groups();
    ClusteringConfig cfg;
    cfg.k = 1;
    cfg.p = Norm::L2;
    cfg.distance = Dist::L2Bounds;
    auto res = cluster(data, cfg);
    CHECK(res.iterations == 1);
    CHECK(res.converged);
    auto [cc, disp] = centrocube(data, Method::L2Bounds);
    CHECK(res.prototypes[0] == cc);
    CHECK(res.criterion_trace[0] == Catch::Approx(disp * disp).margin(1e-9));
}

TEST_CASE("criterion basics") {
    HypercubeDataset data = two_groups();
    ClusteringConfig cfg;
    cfg.k = 2;
    cfg.p = Norm::L1;
    cfg.distance = Dist::Hausdorff;
    std::vector<std::size_t> perfect = {0, 0, 0, 0, 1, 1, 1, 1};
    std::vector<Hypercube> protos = {cube2(0, 1, 0, 1), cube2(10, 11, 10, 11)};
    CHECK(criterion(data, perfect, protos, cfg) == 0.0);

    // moving a point to the farther prototype cannot decrease the criterion
    std::vector<std::size_t> moved = perfect;
    moved[0] = 1;
    CHECK(criterion(data, moved, protos, cfg) >= criterion(data, perfect, protos, cfg));
}

TEST_CASE("k exceeding the distinct item count is rejected") {
    HypercubeDataset data = two_groups();  // only two distinct items
    ClusteringConfig cfg;
    cfg.k = 3;
    cfg.p = Norm::L1;
    cfg.distance = Dist::Hausdorff;
    CHECK_THROWS_AS(cluster(data, cfg), KTooLarge);
}

TEST_CASE("criterion trace is non-increasing and runs terminate") {
    std::mt19937 gen(61);
    struct Combo {
        Norm p;
        Dist d;
    };
    const Combo combos[] = {{Norm::L1, Dist::Hausdorff},
                            {Norm::L2, Dist::Hausdorff},
                            {Norm::L2, Dist::L2Bounds},
                            {Norm::L2, Dist::L2MidLen}};
    for (int trial = 0; trial < 24; ++trial) {
        HypercubeDataset data = random_dataset(gen, 8 + gen() % 25, 1 + gen() % 3);
        ClusteringConfig cfg;
        cfg.k = 2 + gen() % 2;
        const Combo& c = combos[trial % 4];
        cfg.p = c.p;
        cfg.distance = c.d;
        cfg.normalize = (trial % 2) == 0;
        cfg.seed = trial;
        auto res = cluster(data, cfg);
        CHECK(res.converged);
        CHECK(res.iterations < cfg.max_iter);
        for (std::size_t t = 1; t < res.criterion_trace.size(); ++t) {
            bool repaired = std::find(res.repair_iterations.begin(), res.repair_iterations.end(),
                                      t) != res.repair_iterations.end();
            if (!repaired)
                CHECK(res.criterion_trace[t] <= res.criterion_trace[t - 1] + 1e-9);
        }
    }
}

TEST_CASE("identical config and data give identical results") {
    std::mt19937 gen(67);
    HypercubeDataset data = random_dataset(gen, 20, 2);
    ClusteringConfig cfg;
    cfg.k = 3;
    cfg.p = Norm::L2;
    cfg.distance = Dist::Hausdorff;
    cfg.seed = 123;
    auto a = cluster(data, cfg);
    auto b = cluster(data, cfg);
    CHECK(a.assignments == b.assignments);
    CHECK(a.criterion_trace == b.criterion_trace);
    CHECK(a.iterations == b.iterations);
    REQUIRE(a.prototypes.size() == b.prototypes.size());
    for (std::size_t c = 0; c < a.prototypes.size(); ++c)
        CHECK(a.prototypes[c] == b.prototypes[c]);
}
