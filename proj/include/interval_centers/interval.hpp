#ifndef INTERVAL_CENTERS_INTERVAL_HPP
#define INTERVAL_CENTERS_INTERVAL_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace interval_centers {

class LowerExceedsUpper : public std::invalid_argument {
public:
    LowerExceedsUpper(double lo, double hi)
        : std::invalid_argument("interval lower bound " + std::to_string(lo) +
                                " exceeds upper bound " + std::to_string(hi)) {}
};

class NonFiniteBound : public std::invalid_argument {
public:
    NonFiniteBound() : std::invalid_argument("interval bounds must be finite") {}
};

/// A closed real interval [lower, upper].
///
/// Midpoint/half-length views are derived on demand; (m, l) and (a, b)
/// parameterize the same interval with a = m - l and b = m + l.
class Interval {
public:
    Interval(double lower, double upper) : lower_(lower), upper_(upper) {
        if (!std::isfinite(lower) || !std::isfinite(upper)) throw NonFiniteBound();
        if (lower > upper) throw LowerExceedsUpper(lower, upper);
    }

    static Interval from_midlen(double mid, double halflen) {
        return Interval(mid - halflen, mid + halflen);
    }

    double lower() const { return lower_; }
    double upper() const { return upper_; }
    double midpoint() const { return (lower_ + upper_) / 2.0; }
    double half_length() const { return (upper_ - lower_) / 2.0; }
    bool degenerate() const { return lower_ == upper_; }

    bool operator==(const Interval& o) const {
        return lower_ == o.lower_ && upper_ == o.upper_;
    }
    bool operator!=(const Interval& o) const { return !(*this == o); }

private:
    double lower_;
    double upper_;
};

/// An ordered sample of n >= 1 intervals for one variable.
/// Input order is preserved; indices are meaningful to callers.
class IntervalSample {
public:
    explicit IntervalSample(std::vector<Interval> items) : items_(std::move(items)) {
        if (items_.empty()) throw std::invalid_argument("sample must contain at least one interval");
    }

    std::size_t size() const { return items_.size(); }
    const Interval& operator[](std::size_t i) const { return items_[i]; }
    const std::vector<Interval>& items() const { return items_; }

    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }

private:
    std::vector<Interval> items_;
};

/// Exponent of an L_p aggregation; only the three solved cases.
enum class Norm { L1, L2, LInf };

inline std::string to_string(Norm p) {
    switch (p) {
        case Norm::L1: return "1";
        case Norm::L2: return "2";
        case Norm::LInf: return "inf";
    }
    return "?";
}

/// Hausdorff distance between two intervals via the bounds:
/// max(|a1-a2|, |b1-b2|).
inline double hausdorff(const Interval& x1, const Interval& x2) {
    return std::max(std::abs(x1.lower() - x2.lower()), std::abs(x1.upper() - x2.upper()));
}

/// Hausdorff distance via midpoints and half-lengths:
/// |m1-m2| + |l1-l2|.  Equal to hausdorff() by the identity
/// max(|x-y|, |x+y|) = |x| + |y|.
inline double hausdorff_midlen(const Interval& x1, const Interval& x2) {
    return std::abs(x1.midpoint() - x2.midpoint()) +
           std::abs(x1.half_length() - x2.half_length());
}

namespace detail {

inline double lp_norm2d(double u, double v, Norm p) {
    u = std::abs(u);
    v = std::abs(v);
    switch (p) {
        case Norm::L1: return u + v;
        case Norm::L2: return std::hypot(u, v);
        case Norm::LInf: return std::max(u, v);
    }
    return 0.0;
}

}  // namespace detail

/// L_p distance between the bound vectors (a1,b1) and (a2,b2).
/// The p = inf case coincides with the Hausdorff distance.
inline double lp_bounds_dist(const Interval& x1, const Interval& x2, Norm p) {
    return detail::lp_norm2d(x1.lower() - x2.lower(), x1.upper() - x2.upper(), p);
}

/// L_p distance between the (midpoint, half-length) vectors.
/// The p = 1 case coincides with the Hausdorff distance.
inline double lp_midlen_dist(const Interval& x1, const Interval& x2, Norm p) {
    return detail::lp_norm2d(x1.midpoint() - x2.midpoint(),
                             x1.half_length() - x2.half_length(), p);
}

/// The three interval distances used by the central-interval solvers
/// and the clustering criterion.
enum class Dist { Hausdorff, L2Bounds, L2MidLen };

inline std::string to_string(Dist d) {
    switch (d) {
        case Dist::Hausdorff: return "hausdorff";
        case Dist::L2Bounds: return "l2-bounds";
        case Dist::L2MidLen: return "l2-midlen";
    }
    return "?";
}

inline double interval_distance(const Interval& x1, const Interval& x2, Dist d) {
    switch (d) {
        case Dist::Hausdorff: return hausdorff(x1, x2);
        case Dist::L2Bounds: return lp_bounds_dist(x1, x2, Norm::L2);
        case Dist::L2MidLen: return lp_midlen_dist(x1, x2, Norm::L2);
    }
    return 0.0;
}

}  // namespace interval_centers

#endif  // INTERVAL_CENTERS_INTERVAL_HPP
