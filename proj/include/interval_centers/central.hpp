#ifndef INTERVAL_CENTERS_CENTRAL_HPP
#define INTERVAL_CENTERS_CENTRAL_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "interval_centers/interval.hpp"

namespace interval_centers {

/// The five supported central-interval solvers.
enum class Method { L1Hausdorff, LinfHausdorff, L2Bounds, L2MidLen, L2Hausdorff };

inline std::string to_string(Method m) {
    switch (m) {
        case Method::L1Hausdorff: return "median";
        case Method::LinfHausdorff: return "midrange";
        case Method::L2Bounds: return "mean-bounds";
        case Method::L2MidLen: return "mean-midlen";
        case Method::L2Hausdorff: return "l2-hausdorff";
    }
    return "?";
}

inline Norm method_norm(Method m) {
    switch (m) {
        case Method::L1Hausdorff: return Norm::L1;
        case Method::LinfHausdorff: return Norm::LInf;
        default: return Norm::L2;
    }
}

inline Dist method_dist(Method m) {
    switch (m) {
        case Method::L2Bounds: return Dist::L2Bounds;
        case Method::L2MidLen: return Dist::L2MidLen;
        default: return Dist::Hausdorff;
    }
}

/// A central interval together with the dispersion it achieves.
struct CentralEstimate {
    Interval center;
    double dispersion;
    Method method;
    Norm p;
};

/// Aggregated dispersion of a sample around a candidate interval:
/// (sum_i d(x_i, c)^p)^(1/p) for finite p, max_i d(x_i, c) for p = inf.
inline double eval_dispersion(const IntervalSample& sample, const Interval& c,
                              Norm p, Dist dist) {
    if (p == Norm::LInf) {
        double worst = 0.0;
        for (const auto& x : sample) worst = std::max(worst, interval_distance(x, c, dist));
        return worst;
    }
    double acc = 0.0;
    for (const auto& x : sample) {
        double d = interval_distance(x, c, dist);
        acc += (p == Norm::L1) ? d : d * d;
    }
    return (p == Norm::L1) ? acc : std::sqrt(acc);
}

namespace detail {

// Even n: average of the two middle order statistics. Any point between
// them minimizes the L1 objective; averaging is a deterministic convention.
inline double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    std::size_t n = v.size();
    return (n % 2 == 1) ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2.0;
}

inline double midrange(const std::vector<double>& v) {
    auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    return (*lo + *hi) / 2.0;
}

inline double mean(const std::vector<double>& v) {
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

inline std::vector<double> lowers(const IntervalSample& s) {
    std::vector<double> v;
    v.reserve(s.size());
    for (const auto& x : s) v.push_back(x.lower());
    return v;
}

inline std::vector<double> uppers(const IntervalSample& s) {
    std::vector<double> v;
    v.reserve(s.size());
    for (const auto& x : s) v.push_back(x.upper());
    return v;
}

inline std::vector<double> midpoints(const IntervalSample& s) {
    std::vector<double> v;
    v.reserve(s.size());
    for (const auto& x : s) v.push_back(x.midpoint());
    return v;
}

inline std::vector<double> half_lengths(const IntervalSample& s) {
    std::vector<double> v;
    v.reserve(s.size());
    for (const auto& x : s) v.push_back(x.half_length());
    return v;
}

}  // namespace detail

/// L1 combination of Hausdorff distances: midpoint and half-length of the
/// central interval are the sample medians of midpoints and half-lengths.
inline CentralEstimate center_l1_hausdorff(const IntervalSample& sample) {
    double mu = detail::median(detail::midpoints(sample));
    double lambda = detail::median(detail::half_lengths(sample));
    Interval c = Interval::from_midlen(mu, lambda);
    return {c, eval_dispersion(sample, c, Norm::L1, Dist::Hausdorff),
            Method::L1Hausdorff, Norm::L1};
}

/// Linf combination of Hausdorff distances: bounds of the central interval
/// are the midranges of the lower and upper bounds.
///
/// Note: the published closed form lists (a_(n)-a_(1))/2, which is the
/// achieved half-range (the dispersion), not the minimizing location of
/// max_i |a_i - alpha|; the minimizer is the midrange (a_(1)+a_(n))/2,
/// which brute-force minimization confirms.
inline CentralEstimate center_linf_hausdorff(const IntervalSample& sample) {
    double alpha = detail::midrange(detail::lowers(sample));
    double beta = detail::midrange(detail::uppers(sample));
    Interval c(alpha, beta);
    return {c, eval_dispersion(sample, c, Norm::LInf, Dist::Hausdorff),
            Method::LinfHausdorff, Norm::LInf};
}

/// L2 combination of L2 distances between bounds: coordinate-wise means.
inline CentralEstimate center_l2_bounds(const IntervalSample& sample) {
    Interval c(detail::mean(detail::lowers(sample)), detail::mean(detail::uppers(sample)));
    return {c, eval_dispersion(sample, c, Norm::L2, Dist::L2Bounds),
            Method::L2Bounds, Norm::L2};
}

/// L2 combination of L2 distances between midpoints and half-lengths:
/// means of midpoints and half-lengths.
inline CentralEstimate center_l2_midlen(const IntervalSample& sample) {
    double mu = detail::mean(detail::midpoints(sample));
    double lambda = detail::mean(detail::half_lengths(sample));
    Interval c = Interval::from_midlen(mu, lambda);
    return {c, eval_dispersion(sample, c, Norm::L2, Dist::L2MidLen),
            Method::L2MidLen, Norm::L2};
}

}  // namespace interval_centers

#endif  // INTERVAL_CENTERS_CENTRAL_HPP
