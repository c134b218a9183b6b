#ifndef INTERVAL_CENTERS_CLUSTERING_HPP
#define INTERVAL_CENTERS_CLUSTERING_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "interval_centers/hypercube.hpp"

// Dynamic clustering of hypercube datasets: alternate assignment to the
// nearest prototype and exact recomputation of each cluster's centrocube.
// Exact prototypes make the criterion non-increasing across iterations.

namespace interval_centers {

class KTooLarge : public std::invalid_argument {
public:
    KTooLarge() : std::invalid_argument("k exceeds the number of distinct items") {}
};

struct ClusteringConfig {
    std::size_t k = 1;
    Norm p = Norm::L2;            // exponent, used both for aggregation and distance (q = p)
    Dist distance = Dist::Hausdorff;
    bool normalize = false;
    std::uint64_t seed = 0;
    std::size_t max_iter = 100;
};

/// The prototype solver implied by a (p, distance) pair. Only pairs with an
/// exact per-coordinate solver are allowed; p = inf is excluded because the
/// monotone-decrease argument needs an additive criterion.
inline Method clustering_method(const ClusteringConfig& cfg) {
    if (cfg.k < 1) throw std::invalid_argument("k must be at least 1");
    if (cfg.max_iter < 1) throw std::invalid_argument("max_iter must be at least 1");
    if (cfg.p == Norm::L1 && cfg.distance == Dist::Hausdorff) return Method::L1Hausdorff;
    if (cfg.p == Norm::L2 && cfg.distance == Dist::Hausdorff) return Method::L2Hausdorff;
    if (cfg.p == Norm::L2 && cfg.distance == Dist::L2Bounds) return Method::L2Bounds;
    if (cfg.p == Norm::L2 && cfg.distance == Dist::L2MidLen) return Method::L2MidLen;
    throw std::invalid_argument("unsupported (p, distance) pairing for clustering");
}

struct ClusteringResult {
    std::vector<std::size_t> assignments;
    std::vector<Hypercube> prototypes;
    std::vector<double> criterion_trace;      // one value per completed iteration
    std::vector<std::size_t> repair_iterations;  // iterations where an empty cluster was reseeded
    std::size_t iterations = 0;
    bool converged = false;
};

namespace detail {

inline double item_proto_dist(const Hypercube& x, const Hypercube& proto,
                              const ClusteringConfig& cfg,
                              const std::optional<DispersionProfile>& prof) {
    if (prof) return normalized_dist(x, proto, *prof, cfg.distance, cfg.p);
    return dist_hypercube(x, proto, cfg.distance, cfg.p);
}

inline double criterion_impl(const HypercubeDataset& data,
                             const std::vector<std::size_t>& assignments,
                             const std::vector<Hypercube>& prototypes,
                             const ClusteringConfig& cfg,
                             const std::optional<DispersionProfile>& prof) {
    double acc = 0.0;
    for (std::size_t i = 0; i < data.size(); ++i) {
        double d = item_proto_dist(data[i], prototypes[assignments[i]], cfg, prof);
        acc += (cfg.p == Norm::L1) ? d : d * d;
    }
    return acc;
}

// Hand-rolled Fisher-Yates so the sampled prototypes are identical across
// standard library implementations.
inline std::vector<std::size_t> sample_distinct(const std::vector<std::size_t>& pool,
                                                std::size_t k, std::uint64_t seed) {
    std::vector<std::size_t> idx = pool;
    std::mt19937_64 gen(seed);
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t r = i + static_cast<std::size_t>(gen() % (idx.size() - i));
        std::swap(idx[i], idx[r]);
    }
    idx.resize(k);
    return idx;
}

}  // namespace detail

/// Cluster-wise sum of D(x_i, prototype)^p, with D the (optionally
/// normalized) coordinate-wise combined distance at q = p.
inline double criterion(const HypercubeDataset& data,
                        const std::vector<std::size_t>& assignments,
                        const std::vector<Hypercube>& prototypes,
                        const ClusteringConfig& cfg) {
    Method method = clustering_method(cfg);
    std::optional<DispersionProfile> prof;
    if (cfg.normalize) prof = dispersion_profile(data, method);
    return detail::criterion_impl(data, assignments, prototypes, cfg, prof);
}

inline ClusteringResult cluster(const HypercubeDataset& data, const ClusteringConfig& cfg) {
    Method method = clustering_method(cfg);

    // Distinct items, first occurrence order.
    std::vector<std::size_t> distinct;
    for (std::size_t i = 0; i < data.size(); ++i) {
        bool seen = false;
        for (std::size_t d : distinct)
            if (data[d] == data[i]) {
                seen = true;
                break;
            }
        if (!seen) distinct.push_back(i);
    }
    if (cfg.k > distinct.size()) throw KTooLarge();

    // Normalization dispersions are global, computed once before iterating.
    std::optional<DispersionProfile> prof;
    if (cfg.normalize) prof = dispersion_profile(data, method);

    ClusteringResult res;
    for (std::size_t i : detail::sample_distinct(distinct, cfg.k, cfg.seed))
        res.prototypes.push_back(data[i]);
    res.assignments.assign(data.size(), 0);

    std::vector<std::size_t> prev;
    for (std::size_t iter = 0; iter < cfg.max_iter; ++iter) {
        // Assignment step; ties go to the lowest cluster index.
        for (std::size_t i = 0; i < data.size(); ++i) {
            std::size_t best = 0;
            double best_d = detail::item_proto_dist(data[i], res.prototypes[0], cfg, prof);
            for (std::size_t c = 1; c < cfg.k; ++c) {
                double d = detail::item_proto_dist(data[i], res.prototypes[c], cfg, prof);
                if (d < best_d) {
                    best_d = d;
                    best = c;
                }
            }
            res.assignments[i] = best;
        }

        // Reseed empty clusters with the item farthest from its prototype,
        // never emptying another cluster in the process.
        std::vector<std::size_t> counts(cfg.k, 0);
        for (std::size_t a : res.assignments) ++counts[a];
        bool repaired = false;
        for (std::size_t c = 0; c < cfg.k; ++c) {
            if (counts[c] > 0) continue;
            std::size_t worst_i = data.size();
            double worst_d = -1.0;
            for (std::size_t i = 0; i < data.size(); ++i) {
                if (counts[res.assignments[i]] <= 1) continue;
                double d = detail::item_proto_dist(data[i], res.prototypes[res.assignments[i]],
                                                   cfg, prof);
                if (d > worst_d) {
                    worst_d = d;
                    worst_i = i;
                }
            }
            if (worst_i == data.size()) continue;  // nothing movable
            --counts[res.assignments[worst_i]];
            res.assignments[worst_i] = c;
            ++counts[c];
            repaired = true;
        }
        if (repaired) res.repair_iterations.push_back(iter);

        if (res.assignments == prev) {
            res.converged = true;
            break;
        }
        prev = res.assignments;

        // Representation step: exact centrocube of each cluster.
        for (std::size_t c = 0; c < cfg.k; ++c) {
            std::vector<Hypercube> members;
            for (std::size_t i = 0; i < data.size(); ++i)
                if (res.assignments[i] == c) members.push_back(data[i]);
            if (members.empty()) continue;
            HypercubeDataset sub(std::move(members), data.variable_names());
            res.prototypes[c] = centrocube(sub, method).first;
        }

        res.criterion_trace.push_back(
            detail::criterion_impl(data, res.assignments, res.prototypes, cfg, prof));
        ++res.iterations;
    }
    return res;
}

}  // namespace interval_centers

#endif  // INTERVAL_CENTERS_CLUSTERING_HPP
