#ifndef INTERVAL_CENTERS_HYPERCUBE_HPP
#define INTERVAL_CENTERS_HYPERCUBE_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "interval_centers/l2_hausdorff.hpp"

namespace interval_centers {

class DimensionMismatch : public std::invalid_argument {
public:
    DimensionMismatch() : std::invalid_argument("hypercube dimensions do not match") {}
};

class ZeroDispersion : public std::domain_error {
public:
    explicit ZeroDispersion(std::size_t coord)
        : std::domain_error("normalized distance undefined: coordinate " +
                            std::to_string(coord) +
                            " has zero dispersion but nonzero distance") {}
};

/// A k-dimensional interval: the product of k one-dimensional intervals.
class Hypercube {
public:
    explicit Hypercube(std::vector<Interval> components) : components_(std::move(components)) {
        if (components_.empty())
            throw std::invalid_argument("hypercube needs at least one component");
    }

    std::size_t dim() const { return components_.size(); }
    const Interval& operator[](std::size_t j) const { return components_[j]; }
    const std::vector<Interval>& components() const { return components_; }

    bool operator==(const Hypercube& o) const { return components_ == o.components_; }
    bool operator!=(const Hypercube& o) const { return !(*this == o); }

private:
    std::vector<Interval> components_;
};

class HypercubeDataset {
public:
    HypercubeDataset(std::vector<Hypercube> items, std::vector<std::string> names)
        : items_(std::move(items)), names_(std::move(names)) {
        if (items_.empty()) throw std::invalid_argument("dataset must not be empty");
        for (const auto& h : items_)
            if (h.dim() != items_.front().dim()) throw DimensionMismatch();
        if (names_.size() != items_.front().dim())
            throw std::invalid_argument("one variable name per coordinate required");
    }

    std::size_t size() const { return items_.size(); }
    std::size_t dim() const { return items_.front().dim(); }
    const Hypercube& operator[](std::size_t i) const { return items_[i]; }
    const std::vector<Hypercube>& items() const { return items_; }
    const std::vector<std::string>& variable_names() const { return names_; }

    /// The sample of coordinate j across all items.
    IntervalSample coordinate_sample(std::size_t j) const {
        std::vector<Interval> v;
        v.reserve(items_.size());
        for (const auto& h : items_) v.push_back(h[j]);
        return IntervalSample(std::move(v));
    }

private:
    std::vector<Hypercube> items_;
    std::vector<std::string> names_;
};

/// L_q combination of coordinate-wise interval distances.
inline double dist_hypercube(const Hypercube& x, const Hypercube& y, Dist d, Norm q) {
    if (x.dim() != y.dim()) throw DimensionMismatch();
    if (q == Norm::LInf) {
        double worst = 0.0;
        for (std::size_t j = 0; j < x.dim(); ++j)
            worst = std::max(worst, interval_distance(x[j], y[j], d));
        return worst;
    }
    double acc = 0.0;
    for (std::size_t j = 0; j < x.dim(); ++j) {
        double v = interval_distance(x[j], y[j], d);
        acc += (q == Norm::L1) ? v : v * v;
    }
    return (q == Norm::L1) ? acc : std::sqrt(acc);
}

/// Per-coordinate central intervals and their dispersions, all produced by
/// one method (and its matching exponent).
struct DispersionProfile {
    std::vector<CentralEstimate> coordinates;
    Method method;
    Norm p;

    std::size_t dim() const { return coordinates.size(); }
};

inline DispersionProfile dispersion_profile(const HypercubeDataset& data, Method method) {
    DispersionProfile prof{{}, method, method_norm(method)};
    prof.coordinates.reserve(data.dim());
    for (std::size_t j = 0; j < data.dim(); ++j)
        prof.coordinates.push_back(central_interval(data.coordinate_sample(j), method));
    return prof;
}

/// Centrocube under the p = q coordinate-wise combined distance: the product
/// of the per-coordinate central intervals. Returns the centrocube and the
/// combined dispersion (sum over items and coordinates of d^p, rooted; for
/// p = inf the max over items and coordinates).
///
/// For p = inf the coordinate-wise construction is still returned, though
/// the separability argument that makes it exactly optimal only covers
/// finite p.
inline std::pair<Hypercube, double> centrocube(const HypercubeDataset& data, Method method) {
    DispersionProfile prof = dispersion_profile(data, method);
    std::vector<Interval> comps;
    comps.reserve(prof.dim());
    for (const auto& est : prof.coordinates) comps.push_back(est.center);

    // Combine the per-coordinate dispersions: for finite p the p-th powers
    // add across coordinates; for p = inf it is the max.
    Norm p = prof.p;
    double combined = 0.0;
    for (const auto& est : prof.coordinates) {
        switch (p) {
            case Norm::L1: combined += est.dispersion; break;
            case Norm::L2: combined += est.dispersion * est.dispersion; break;
            case Norm::LInf: combined = std::max(combined, est.dispersion); break;
        }
    }
    if (p == Norm::L2) combined = std::sqrt(combined);
    return {Hypercube(std::move(comps)), combined};
}

/// L_q normalized component-wise distance: each coordinate term is
/// d(x^j, y^j) / S(c^j). A zero-dispersion coordinate contributes 0 when the
/// coordinate distance is 0 and is an error otherwise.
inline double normalized_dist(const Hypercube& x, const Hypercube& y,
                              const DispersionProfile& profile, Dist d, Norm q) {
    if (x.dim() != y.dim()) throw DimensionMismatch();
    if (x.dim() != profile.dim()) throw DimensionMismatch();
    if (q != profile.p)
        throw std::invalid_argument("normalized distance exponent must match the profile's");
    double acc = 0.0;
    for (std::size_t j = 0; j < x.dim(); ++j) {
        double num = interval_distance(x[j], y[j], d);
        double den = profile.coordinates[j].dispersion;
        double term;
        if (den == 0.0) {
            if (num != 0.0) throw ZeroDispersion(j);
            term = 0.0;
        } else {
            term = num / den;
        }
        switch (q) {
            case Norm::L1: acc += term; break;
            case Norm::L2: acc += term * term; break;
            case Norm::LInf: acc = std::max(acc, term); break;
        }
    }
    return (q == Norm::L2) ? std::sqrt(acc) : acc;
}

}  // namespace interval_centers

#endif  // INTERVAL_CENTERS_HYPERCUBE_HPP
