#ifndef INTERVAL_CENTERS_L2_HAUSDORFF_HPP
#define INTERVAL_CENTERS_L2_HAUSDORFF_HPP

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

#include "interval_centers/central.hpp"
#include "interval_centers/interval.hpp"

// Exact minimization of the L2 combination of Hausdorff distances.
//
// The objective F(alpha, beta) = sum_i max((a_i - alpha)^2, (b_i - beta)^2)
// is convex and piecewise quadratic. In (mu, lambda) coordinates the
// (midpoint x half-length) plane splits into a grid of rectangles on which
// the active term of each max is fixed, so F restricts to a quadratic that
// is minimized in closed form per rectangle. Scanning all rectangles is
// O(n) work each, O(n^3) total.

namespace interval_centers {

class InfeasibleRectangle : public std::logic_error {
public:
    InfeasibleRectangle() : std::logic_error("rectangle has inverted bounds") {}
};

/// Distinct sorted midpoints and half-lengths of a sample. Rectangle j (resp.
/// k) spans [value(j-1), value(j)] with virtual sentinels -inf below index 0
/// and +inf above the last index.
struct Breakpoints {
    std::vector<double> m_sorted;  // distinct, ascending
    std::vector<double> l_sorted;  // distinct, ascending

    std::size_t m_cells() const { return m_sorted.size() + 1; }
    std::size_t l_cells() const { return l_sorted.size() + 1; }

    double m_lower(std::size_t j) const {
        return j == 0 ? -std::numeric_limits<double>::infinity() : m_sorted[j - 1];
    }
    double m_upper(std::size_t j) const {
        return j == m_sorted.size() ? std::numeric_limits<double>::infinity() : m_sorted[j];
    }
    double l_lower(std::size_t k) const {
        return k == 0 ? -std::numeric_limits<double>::infinity() : l_sorted[k - 1];
    }
    double l_upper(std::size_t k) const {
        return k == l_sorted.size() ? std::numeric_limits<double>::infinity() : l_sorted[k];
    }
};

inline Breakpoints breakpoints(const IntervalSample& sample) {
    Breakpoints bp;
    bp.m_sorted.reserve(sample.size());
    bp.l_sorted.reserve(sample.size());
    for (const auto& x : sample) {
        bp.m_sorted.push_back(x.midpoint());
        bp.l_sorted.push_back(x.half_length());
    }
    for (auto* v : {&bp.m_sorted, &bp.l_sorted}) {
        std::sort(v->begin(), v->end());
        v->erase(std::unique(v->begin(), v->end()), v->end());
    }
    return bp;
}

namespace detail {

// Strict interior point of a one-dimensional cell. For an unbounded side the
// finite bound is offset by one data-range unit; any interior point gives the
// same classification signs.
inline double cell_representative(double lo, double hi, const std::vector<double>& sorted) {
    double range = sorted.back() - sorted.front();
    double off = range + 1.0;
    if (std::isinf(lo)) return hi - off;
    if (std::isinf(hi)) return lo + off;
    return (lo + hi) / 2.0;
}

}  // namespace detail

/// Index sets of one rectangle. For (mu, lambda) inside the rectangle, the
/// term of sample i is (a_i - alpha)^2 when (m_i - mu)(l_i - lambda) <= 0
/// (set I_a) and (b_i - beta)^2 otherwise (set I_b).
inline std::pair<std::vector<std::size_t>, std::vector<std::size_t>> classify(
    const IntervalSample& sample, const Breakpoints& bp, std::size_t j, std::size_t k) {
    double mu_rep = detail::cell_representative(bp.m_lower(j), bp.m_upper(j), bp.m_sorted);
    double la_rep = detail::cell_representative(bp.l_lower(k), bp.l_upper(k), bp.l_sorted);
    std::vector<std::size_t> ia, ib;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        double prod = (sample[i].midpoint() - mu_rep) * (sample[i].half_length() - la_rep);
        (prod <= 0.0 ? ia : ib).push_back(i);
    }
    return {std::move(ia), std::move(ib)};
}

/// One quadratic subproblem: rectangle bounds, the I_a/I_b partition, and the
/// sums needed for the closed-form minimization.
struct RectangleSubproblem {
    std::size_t j = 0, k = 0;
    double m_minus = 0, m_plus = 0, l_minus = 0, l_plus = 0;
    std::vector<std::size_t> ia, ib;
    std::size_t n_a = 0, n_b = 0;
    double A = 0, B = 0, A2 = 0, B2 = 0;
};

inline RectangleSubproblem build_subproblem(const IntervalSample& sample,
                                            const Breakpoints& bp,
                                            std::size_t j, std::size_t k) {
    RectangleSubproblem rp;
    rp.j = j;
    rp.k = k;
    rp.m_minus = bp.m_lower(j);
    rp.m_plus = bp.m_upper(j);
    rp.l_minus = bp.l_lower(k);
    rp.l_plus = bp.l_upper(k);
    std::tie(rp.ia, rp.ib) = classify(sample, bp, j, k);
    rp.n_a = rp.ia.size();
    rp.n_b = rp.ib.size();
    for (std::size_t i : rp.ia) {
        double a = sample[i].lower();
        rp.A += a;
        rp.A2 += a * a;
    }
    for (std::size_t i : rp.ib) {
        double b = sample[i].upper();
        rp.B += b;
        rp.B2 += b * b;
    }
    return rp;
}

struct RectangleSolution {
    double mu_hat = 0;
    double lambda_hat = 0;
    double value = 0;
    bool degenerate_flag = false;   // objective had a flat valley inside the rectangle
    bool forbidden_corner = false;  // corner gradient showed the sign pattern convexity rules out
};

namespace detail {

inline double quad_value(const RectangleSubproblem& rp, double mu, double la) {
    double alpha = mu - la;
    double beta = mu + la;
    double v = rp.A2 - 2.0 * rp.A * alpha + static_cast<double>(rp.n_a) * alpha * alpha +
               rp.B2 - 2.0 * rp.B * beta + static_cast<double>(rp.n_b) * beta * beta;
    return std::max(v, 0.0);
}

// Minimize n*t^2 - 2*s1*t + s2 for t in [lo, hi]; returns the clamped vertex.
inline double clamped_quadratic_argmin(double s1, double n, double lo, double hi) {
    return std::clamp(s1 / n, lo, hi);
}

// mu that zeroes the gradient component along an edge lambda = const.
inline double edge_mu(const RectangleSubproblem& rp, double la) {
    double n = static_cast<double>(rp.n_a + rp.n_b);
    double diff = static_cast<double>(rp.n_a) - static_cast<double>(rp.n_b);
    return (rp.A + rp.B + diff * la) / n;
}

// lambda that zeroes the gradient component along an edge mu = const.
inline double edge_lambda(const RectangleSubproblem& rp, double mu) {
    double n = static_cast<double>(rp.n_a + rp.n_b);
    double diff = static_cast<double>(rp.n_a) - static_cast<double>(rp.n_b);
    return (rp.B - rp.A + diff * mu) / n;
}

}  // namespace detail

/// Minimizes the rectangle's quadratic over its (possibly unbounded) domain.
///
/// Non-degenerate case: unconstrained vertex, L2 projection onto the
/// rectangle, then the edge/corner resolution of the KKT conditions.
/// Degenerate case (I_a or I_b empty): the objective depends only on
/// beta = mu + lambda (resp. alpha = mu - lambda); the clamped 1-D quadratic
/// is solved and the midpoint of the flat minimizing segment is returned.
inline RectangleSolution solve_rectangle(const RectangleSubproblem& rp) {
    if (rp.m_minus > rp.m_plus || rp.l_minus > rp.l_plus) throw InfeasibleRectangle();

    RectangleSolution sol;
    const double na = static_cast<double>(rp.n_a);
    const double nb = static_cast<double>(rp.n_b);
    const double n = na + nb;

    if (rp.n_a == 0 || rp.n_b == 0) {
        sol.degenerate_flag = true;
        double mu_lo, mu_hi, t_hat;
        if (rp.n_a == 0) {
            // objective in t = mu + lambda
            t_hat = detail::clamped_quadratic_argmin(rp.B, nb, rp.m_minus + rp.l_minus,
                                                     rp.m_plus + rp.l_plus);
            mu_lo = std::max(rp.m_minus, t_hat - rp.l_plus);
            mu_hi = std::min(rp.m_plus, t_hat - rp.l_minus);
        } else {
            // objective in s = mu - lambda
            t_hat = detail::clamped_quadratic_argmin(rp.A, na, rp.m_minus - rp.l_plus,
                                                     rp.m_plus - rp.l_minus);
            mu_lo = std::max(rp.m_minus, t_hat + rp.l_minus);
            mu_hi = std::min(rp.m_plus, t_hat + rp.l_plus);
        }
        // At most one end of the segment can be unbounded; report the finite end.
        double mu;
        if (std::isinf(mu_lo))
            mu = mu_hi;
        else if (std::isinf(mu_hi))
            mu = mu_lo;
        else
            mu = (mu_lo + mu_hi) / 2.0;
        sol.mu_hat = mu;
        sol.lambda_hat = (rp.n_a == 0) ? t_hat - mu : mu - t_hat;
        sol.value = detail::quad_value(rp, sol.mu_hat, sol.lambda_hat);
        return sol;
    }

    // Unconstrained vertex: alpha = A/n_a, beta = B/n_b.
    double alpha_u = rp.A / na;
    double beta_u = rp.B / nb;
    double mu_u = (alpha_u + beta_u) / 2.0;
    double la_u = (beta_u - alpha_u) / 2.0;

    double mu_p = std::clamp(mu_u, rp.m_minus, rp.m_plus);
    double la_p = std::clamp(la_u, rp.l_minus, rp.l_plus);
    bool mu_clamped = mu_p != mu_u;
    bool la_clamped = la_p != la_u;

    if (!mu_clamped && !la_clamped) {
        sol.mu_hat = mu_u;
        sol.lambda_hat = la_u;
        sol.value = detail::quad_value(rp, mu_u, la_u);
        return sol;
    }

    if (mu_clamped && !la_clamped) {
        sol.mu_hat = mu_p;
        sol.lambda_hat = std::clamp(detail::edge_lambda(rp, mu_p), rp.l_minus, rp.l_plus);
    } else if (!mu_clamped && la_clamped) {
        sol.lambda_hat = la_p;
        sol.mu_hat = std::clamp(detail::edge_mu(rp, la_p), rp.m_minus, rp.m_plus);
    } else {
        // Corner. Gradient (up to the factor 2):
        double g_mu = -rp.A - rp.B + n * mu_p - (na - nb) * la_p;
        double g_la = rp.A - rp.B - (na - nb) * mu_p + n * la_p;
        // Directional derivatives along the edges pointing into the rectangle.
        double d_mu = (mu_p == rp.m_minus ? 1.0 : -1.0) * g_mu;
        double d_la = (la_p == rp.l_minus ? 1.0 : -1.0) * g_la;
        if (d_mu >= 0.0 && d_la >= 0.0) {
            sol.mu_hat = mu_p;
            sol.lambda_hat = la_p;
        } else if (d_mu < 0.0 && d_la >= 0.0) {
            sol.lambda_hat = la_p;
            sol.mu_hat = std::clamp(detail::edge_mu(rp, la_p), rp.m_minus, rp.m_plus);
        } else if (d_mu >= 0.0 && d_la < 0.0) {
            sol.mu_hat = mu_p;
            sol.lambda_hat = std::clamp(detail::edge_lambda(rp, mu_p), rp.l_minus, rp.l_plus);
        } else {
            // Convexity rules this out once the vertex projects to this corner.
            // Flag it, then recover by trying both edges.
            sol.forbidden_corner = true;
            assert(!"corner gradient sign pattern g_mu < 0 and g_lambda < 0");
            double mu_e = std::clamp(detail::edge_mu(rp, la_p), rp.m_minus, rp.m_plus);
            double la_e = std::clamp(detail::edge_lambda(rp, mu_p), rp.l_minus, rp.l_plus);
            if (detail::quad_value(rp, mu_e, la_p) <= detail::quad_value(rp, mu_p, la_e)) {
                sol.mu_hat = mu_e;
                sol.lambda_hat = la_p;
            } else {
                sol.mu_hat = mu_p;
                sol.lambda_hat = la_e;
            }
        }
    }
    sol.value = detail::quad_value(rp, sol.mu_hat, sol.lambda_hat);
    return sol;
}

namespace detail {

// F(alpha, beta) evaluated directly from the sample.
inline double l2_hausdorff_objective_sq(const IntervalSample& sample, double mu, double la) {
    double alpha = mu - la;
    double beta = mu + la;
    double acc = 0.0;
    for (const auto& x : sample) {
        double da = x.lower() - alpha;
        double db = x.upper() - beta;
        acc += std::max(da * da, db * db);
    }
    return acc;
}

struct ScanCandidate {
    double value;
    std::size_t j, k;
    double mu, la;
};

struct ScanResult {
    double best = std::numeric_limits<double>::infinity();
    std::vector<ScanCandidate> candidates;  // within tie_eps of best, scan order
    bool forbidden_corner = false;
};

constexpr double kTieEps = 1e-9;

inline void scan_rows(const IntervalSample& sample, const Breakpoints& bp,
                      std::size_t j_begin, std::size_t j_end, bool clip_nonneg_lambda,
                      ScanResult& out) {
    for (std::size_t j = j_begin; j < j_end; ++j) {
        for (std::size_t k = 0; k < bp.l_cells(); ++k) {
            RectangleSubproblem rp = build_subproblem(sample, bp, j, k);
            if (clip_nonneg_lambda) {
                if (rp.l_plus < 0.0) continue;
                rp.l_minus = std::max(rp.l_minus, 0.0);
            }
            RectangleSolution s = solve_rectangle(rp);
            out.forbidden_corner |= s.forbidden_corner;
            if (s.value <= out.best + kTieEps) {
                out.candidates.push_back({s.value, j, k, s.mu_hat, s.lambda_hat});
                if (s.value < out.best) {
                    out.best = s.value;
                    std::erase_if(out.candidates,
                                  [&](const ScanCandidate& c) { return c.value > out.best + kTieEps; });
                }
            }
        }
    }
}

inline unsigned scan_workers(std::size_t rows) {
    unsigned cap = 0;
    if (const char* env = std::getenv("INTERVAL_CENTERS_THREADS")) {
        cap = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
    }
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    unsigned t = (cap == 0) ? hw : std::min(cap, hw);
    return std::min<std::size_t>(t, std::max<std::size_t>(rows, 1));
}

inline ScanResult scan_all(const IntervalSample& sample, const Breakpoints& bp,
                           bool clip_nonneg_lambda) {
    std::size_t rows = bp.m_cells();
    unsigned workers = scan_workers(rows);
    if (workers <= 1 || rows < 2 * workers) {
        ScanResult r;
        scan_rows(sample, bp, 0, rows, clip_nonneg_lambda, r);
        return r;
    }
    std::vector<ScanResult> parts(workers);
    std::vector<std::thread> pool;
    std::size_t chunk = (rows + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        std::size_t b = std::min(rows, static_cast<std::size_t>(w) * chunk);
        std::size_t e = std::min(rows, b + chunk);
        pool.emplace_back([&, b, e, w] { scan_rows(sample, bp, b, e, clip_nonneg_lambda, parts[w]); });
    }
    for (auto& t : pool) t.join();
    // Deterministic merge: rows are scanned in (j, k) order within each part
    // and parts are concatenated in j order, so the result matches the
    // sequential scan regardless of the worker count.
    ScanResult merged;
    for (const auto& p : parts) merged.best = std::min(merged.best, p.best);
    for (const auto& p : parts) {
        merged.forbidden_corner |= p.forbidden_corner;
        for (const auto& c : p.candidates)
            if (c.value <= merged.best + kTieEps) merged.candidates.push_back(c);
    }
    return merged;
}

}  // namespace detail

/// Central interval under the L2 combination of Hausdorff distances, by the
/// exact rectangle scan. When the minimizer set is a flat segment (ties
/// across rectangles within 1e-9), the reported center is the midpoint of
/// the tied candidates' bounding box, which lies on the segment; if that
/// point fails to reproduce the minimum it falls back to the first candidate
/// in (j, k) order.
inline CentralEstimate center_l2_hausdorff(const IntervalSample& sample) {
    Breakpoints bp = breakpoints(sample);
    detail::ScanResult r = detail::scan_all(sample, bp, false);

    auto pick = [&](const detail::ScanResult& res) {
        double mu_lo = res.candidates.front().mu, mu_hi = mu_lo;
        double la_lo = res.candidates.front().la, la_hi = la_lo;
        for (const auto& c : res.candidates) {
            mu_lo = std::min(mu_lo, c.mu);
            mu_hi = std::max(mu_hi, c.mu);
            la_lo = std::min(la_lo, c.la);
            la_hi = std::max(la_hi, c.la);
        }
        double mu = (mu_lo + mu_hi) / 2.0;
        double la = (la_lo + la_hi) / 2.0;
        double v = detail::l2_hausdorff_objective_sq(sample, mu, la);
        if (v > res.best + detail::kTieEps * (1.0 + res.best)) {
            mu = res.candidates.front().mu;
            la = res.candidates.front().la;
        }
        return std::pair<double, double>(mu, la);
    };

    auto [mu, la] = pick(r);
    if (la < 0.0) {
        // All half-lengths are non-negative, so a negative winner is not
        // expected; redo the scan restricted to lambda >= 0.
        r = detail::scan_all(sample, bp, true);
        std::tie(mu, la) = pick(r);
        la = std::max(la, 0.0);
    }
    Interval c = Interval::from_midlen(mu, la);
    return {c, std::sqrt(r.best), Method::L2Hausdorff, Norm::L2};
}

/// Dispatch to one of the five central-interval solvers.
inline CentralEstimate central_interval(const IntervalSample& sample, Method m) {
    switch (m) {
        case Method::L1Hausdorff: return center_l1_hausdorff(sample);
        case Method::LinfHausdorff: return center_linf_hausdorff(sample);
        case Method::L2Bounds: return center_l2_bounds(sample);
        case Method::L2MidLen: return center_l2_midlen(sample);
        case Method::L2Hausdorff: return center_l2_hausdorff(sample);
    }
    throw std::invalid_argument("unknown method");
}

}  // namespace interval_centers

#endif  // INTERVAL_CENTERS_L2_HAUSDORFF_HPP
