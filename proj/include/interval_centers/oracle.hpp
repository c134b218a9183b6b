#ifndef INTERVAL_CENTERS_ORACLE_HPP
#define INTERVAL_CENTERS_ORACLE_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "interval_centers/interval.hpp"

// Brute-force minimizers used to validate the solvers. Everything here
// evaluates objectives from first principles and shares no minimization
// code with the solver headers. Intentionally naive: all in-scope
// objectives are convex, so hierarchical grid refinement plus coordinate
// ternary search reaches the global minimum.

namespace interval_centers::oracle {

struct OracleResult {
    Interval center;
    double value;
    double resolution;  // final grid step
};

namespace detail {

inline double dist_at(const Interval& x, double mu, double la, Dist d) {
    double da = x.lower() - (mu - la);
    double db = x.upper() - (mu + la);
    double dm = x.midpoint() - mu;
    double dl = x.half_length() - la;
    switch (d) {
        case Dist::Hausdorff: return std::max(std::abs(da), std::abs(db));
        case Dist::L2Bounds: return std::sqrt(da * da + db * db);
        case Dist::L2MidLen: return std::sqrt(dm * dm + dl * dl);
    }
    return 0.0;
}

inline double objective(const IntervalSample& sample, double mu, double la, Norm p, Dist d) {
    if (p == Norm::LInf) {
        double worst = 0.0;
        for (const auto& x : sample) worst = std::max(worst, dist_at(x, mu, la, d));
        return worst;
    }
    double acc = 0.0;
    for (const auto& x : sample) {
        double v = dist_at(x, mu, la, d);
        acc += (p == Norm::L1) ? v : v * v;
    }
    return (p == Norm::L1) ? acc : std::sqrt(acc);
}

struct Box {
    double mu_lo, mu_hi, la_lo, la_hi;
};

struct Incumbent {
    double value = std::numeric_limits<double>::infinity();
    double mu = 0, la = 0;
};

using Objective2D = std::function<double(double, double)>;

inline void grid_pass(const Objective2D& f, const Box& box, int cells, Incumbent& inc) {
    for (int i = 0; i <= cells; ++i) {
        double mu = box.mu_lo + (box.mu_hi - box.mu_lo) * i / cells;
        for (int j = 0; j <= cells; ++j) {
            double la = box.la_lo + (box.la_hi - box.la_lo) * j / cells;
            double v = f(mu, la);
            if (v < inc.value) inc = {v, mu, la};
        }
    }
}

// Ternary search of f along the line (mu, la) + t * (dmu, dla), with the
// step range limited so the line stays inside the box. Valid because every
// restriction of a convex objective to a line is convex.
inline void line_search(const Objective2D& f, const Box& box, double dmu, double dla,
                        int steps, Incumbent& inc) {
    double t_lo = -std::numeric_limits<double>::infinity();
    double t_hi = std::numeric_limits<double>::infinity();
    auto limit = [&](double x, double d, double lo, double hi) {
        if (d > 0) {
            t_lo = std::max(t_lo, (lo - x) / d);
            t_hi = std::min(t_hi, (hi - x) / d);
        } else if (d < 0) {
            t_lo = std::max(t_lo, (hi - x) / d);
            t_hi = std::min(t_hi, (lo - x) / d);
        }
    };
    limit(inc.mu, dmu, box.mu_lo, box.mu_hi);
    limit(inc.la, dla, box.la_lo, box.la_hi);
    if (!(t_lo <= t_hi)) return;
    auto g = [&](double t) { return f(inc.mu + t * dmu, inc.la + t * dla); };
    double lo = t_lo, hi = t_hi;
    for (int s = 0; s < steps; ++s) {
        double t1 = lo + (hi - lo) / 3.0;
        double t2 = hi - (hi - lo) / 3.0;
        if (g(t1) <= g(t2))
            hi = t2;
        else
            lo = t1;
    }
    double t = (lo + hi) / 2.0;
    double v = g(t);
    if (v < inc.value) inc = {v, inc.mu + t * dmu, inc.la + t * dla};
}

// Hierarchical 41x41 grid levels, each zooming x10 around the incumbent,
// followed by rounds of line searches cycling through the two axes and the
// two diagonals (the directions along which the in-scope objectives are
// piecewise smooth). The search never leaves the initial box.
inline OracleResult minimize_over_box(const Objective2D& f, Box box, bool nonneg_lambda) {
    constexpr int kCells = 40;
    constexpr int kLevels = 4;
    if (nonneg_lambda) box.la_lo = std::max(box.la_lo, 0.0);

    Incumbent inc;
    Box outer = box;
    for (int level = 0; level < kLevels; ++level) {
        grid_pass(f, box, kCells, inc);
        double half_mu = (box.mu_hi - box.mu_lo) / 10.0 / 2.0;
        double half_la = (box.la_hi - box.la_lo) / 10.0 / 2.0;
        box.mu_lo = std::clamp(inc.mu - half_mu, outer.mu_lo, outer.mu_hi);
        box.mu_hi = std::clamp(inc.mu + half_mu, outer.mu_lo, outer.mu_hi);
        box.la_lo = std::clamp(inc.la - half_la, outer.la_lo, outer.la_hi);
        box.la_hi = std::clamp(inc.la + half_la, outer.la_lo, outer.la_hi);
    }

    const double dirs[4][2] = {{1, 0}, {0, 1}, {1, 1}, {1, -1}};
    for (int round = 0; round < 200; ++round) {
        const double* d = dirs[round % 4];
        line_search(f, outer, d[0], d[1], 60, inc);
    }

    double res = std::max(outer.mu_hi - outer.mu_lo, outer.la_hi - outer.la_lo) *
                 std::pow(2.0 / 3.0, 60);
    return {Interval::from_midlen(inc.mu, std::max(inc.la, 0.0)), inc.value, res};
}

}  // namespace detail

/// Global minimization of S_p over valid intervals (lambda >= 0) by
/// hierarchical grid search over (mu, lambda).
inline OracleResult grid_minimize(const IntervalSample& sample, Norm p, Dist d) {
    double mu_lo = sample[0].midpoint(), mu_hi = mu_lo;
    double la_lo = sample[0].half_length(), la_hi = la_lo;
    for (const auto& x : sample) {
        mu_lo = std::min(mu_lo, x.midpoint());
        mu_hi = std::max(mu_hi, x.midpoint());
        la_lo = std::min(la_lo, x.half_length());
        la_hi = std::max(la_hi, x.half_length());
    }
    double mu_range = std::max(mu_hi - mu_lo, 1.0);
    double la_range = std::max(la_hi - la_lo, 1.0);
    detail::Box box{mu_lo - mu_range, mu_hi + mu_range, la_lo - la_range, la_hi + la_range};
    auto f = [&](double mu, double la) { return detail::objective(sample, mu, la, p, d); };
    return detail::minimize_over_box(f, box, true);
}

/// Dense search of the rectangle (j, k)'s piecewise-quadratic restriction,
/// clipped to the data box on unbounded sides. Classification is rederived
/// here from scratch.
inline OracleResult rectangle_grid_minimize(const IntervalSample& sample,
                                            std::size_t j, std::size_t k) {
    std::vector<double> ms, ls;
    for (const auto& x : sample) {
        ms.push_back(x.midpoint());
        ls.push_back(x.half_length());
    }
    for (auto* v : {&ms, &ls}) {
        std::sort(v->begin(), v->end());
        v->erase(std::unique(v->begin(), v->end()), v->end());
    }
    double off_m = (ms.back() - ms.front()) + 1.0;
    double off_l = (ls.back() - ls.front()) + 1.0;

    // Finite clip of the rectangle: sentinel sides extend one data-range
    // unit beyond the nearest breakpoint.
    double mu_lo = (j == 0) ? ms.front() - off_m : ms[j - 1];
    double mu_hi = (j == ms.size()) ? ms.back() + off_m : ms[j];
    double la_lo = (k == 0) ? ls.front() - off_l : ls[k - 1];
    double la_hi = (k == ls.size()) ? ls.back() + off_l : ls[k];

    double mu_rep = (j == 0) ? ms.front() - off_m
                  : (j == ms.size()) ? ms.back() + off_m
                                     : (ms[j - 1] + ms[j]) / 2.0;
    double la_rep = (k == 0) ? ls.front() - off_l
                  : (k == ls.size()) ? ls.back() + off_l
                                     : (ls[k - 1] + ls[k]) / 2.0;

    std::vector<bool> lower_term(sample.size());
    for (std::size_t i = 0; i < sample.size(); ++i)
        lower_term[i] =
            (sample[i].midpoint() - mu_rep) * (sample[i].half_length() - la_rep) <= 0.0;

    auto f = [&](double mu, double la) {
        double alpha = mu - la;
        double beta = mu + la;
        double acc = 0.0;
        for (std::size_t i = 0; i < sample.size(); ++i) {
            double r = lower_term[i] ? sample[i].lower() - alpha : sample[i].upper() - beta;
            acc += r * r;
        }
        return acc;
    };
    detail::Box box{mu_lo, mu_hi, la_lo, la_hi};
    // The value field is authoritative here; rectangles below lambda = 0 have
    // no interval representation and the center is clamped for reporting only.
    return detail::minimize_over_box(f, box, false);
}

}  // namespace interval_centers::oracle

#endif  // INTERVAL_CENTERS_ORACLE_HPP
