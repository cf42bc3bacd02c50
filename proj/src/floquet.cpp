#include "pendulum/floquet.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>

namespace pendulum {

PeriodGrid::PeriodGrid(int steps) : steps_(steps), h_(2.0 * std::numbers::pi / steps) {
    if (steps < 100) throw std::invalid_argument("PeriodGrid: at least 100 steps per period required");
    cos_.resize(static_cast<std::size_t>(2 * steps + 1));
    for (int k = 0; k <= 2 * steps; ++k) cos_[static_cast<std::size_t>(k)] = std::cos(0.5 * h_ * k);
}

Monodromy2x2 monodromy(Equilibrium e, const ModelParams& p, const PeriodGrid& grid) {
    // c(tau) = base + drive*cos(tau), same operation order as linearized_coefficient.
    const bool p1 = e == Equilibrium::P1;
    const double base = p1 ? p.alpha + p.mu / 4.0 : p.mu / 4.0 - p.alpha;
    const double h = grid.step();

    double a = 1.0, b = 0.0;  // column 1: (xi, eta)
    double c = 0.0, d = 1.0;  // column 2
    const auto coeff = [&](int k) {
        const double drive = p.eps * grid.cos_half_node(k);
        return p1 ? base + drive : base - drive;
    };

    for (int i = 0; i < grid.steps(); ++i) {
        const double c0 = coeff(2 * i);
        const double c1 = coeff(2 * i + 1);
        const double c2 = coeff(2 * i + 2);
        const auto step = [&](double& x, double& y) {
            const double k1x = y, k1y = -c0 * x;
            const double k2x = y + 0.5 * h * k1y, k2y = -c1 * (x + 0.5 * h * k1x);
            const double k3x = y + 0.5 * h * k2y, k3y = -c1 * (x + 0.5 * h * k2x);
            const double k4x = y + h * k3y, k4y = -c2 * (x + h * k3x);
            x += h / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
            y += h / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
        };
        step(a, b);
        step(c, d);
    }
    return {a, c, b, d, grid.steps()};
}

Monodromy2x2 monodromy(Equilibrium e, const ModelParams& p, int steps) {
    return monodromy(e, p, PeriodGrid(steps));
}

std::string to_string(Stability s) {
    switch (s) {
        case Stability::Stable: return "stable";
        case Stability::Unstable: return "unstable";
        case Stability::Boundary: return "boundary";
    }
    return "unknown";
}

StabilityVerdict classify(const Monodromy2x2& m, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("classify: tolerance must be positive");
    const double margin = std::abs(m.trace()) - 2.0;
    if (margin < -tol) return {Stability::Stable, margin};
    if (margin > tol) return {Stability::Unstable, margin};
    return {Stability::Boundary, margin};
}

namespace {

double trace_margin(Equilibrium e, double mu, double alpha, double eps, const PeriodGrid& grid) {
    return std::abs(monodromy(e, {mu, alpha, eps}, grid).trace()) - 2.0;
}

double bisect(Equilibrium e, double mu, double eps, double lo, double hi, double g_lo, const PeriodGrid& grid) {
    while (hi - lo > kBracketWidth) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double g_mid = trace_margin(e, mu, mid, eps, grid);
        if (g_mid == 0.0) return mid;
        if ((g_mid > 0.0) == (g_lo > 0.0)) {
            lo = mid;
            g_lo = g_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double find_boundary(Equilibrium e, double mu, double eps, double seed_alpha, double window, int steps) {
    if (eps < 0.0) throw std::invalid_argument("find_boundary: eps must be non-negative");
    if (!(window > 0.0)) throw std::invalid_argument("find_boundary: window must be positive");
    const PeriodGrid grid(steps);
    const double lo = seed_alpha - window;
    const double hi = seed_alpha + window;
    const double g_lo = trace_margin(e, mu, lo, eps, grid);
    const double g_hi = trace_margin(e, mu, hi, eps, grid);
    if (g_lo == 0.0) return lo;
    if (g_hi == 0.0) return hi;
    if ((g_lo > 0.0) != (g_hi > 0.0)) return bisect(e, mu, eps, lo, hi, g_lo, grid);

    const double g_seed = trace_margin(e, mu, seed_alpha, eps, grid);
    if (std::abs(g_seed) <= kClassifyTol) return seed_alpha;
    // Equal signs at both ends may hide an even number of crossings; scan
    // outward from the seed and take the nearest sign change.
    constexpr int kScan = 16;
    double inner[2] = {seed_alpha, seed_alpha};
    double g_inner[2] = {g_seed, g_seed};
    for (int k = 1; k <= kScan; ++k) {
        for (int side = 0; side < 2; ++side) {
            const double a = seed_alpha + (side == 0 ? -1.0 : 1.0) * window * k / kScan;
            const double g = k == kScan ? (side == 0 ? g_lo : g_hi) : trace_margin(e, mu, a, eps, grid);
            if ((g > 0.0) != (g_inner[side] > 0.0)) {
                return side == 0 ? bisect(e, mu, eps, a, inner[0], g, grid)
                                 : bisect(e, mu, eps, inner[1], a, g_inner[1], grid);
            }
            inner[side] = a;
            g_inner[side] = g;
        }
    }
    throw NoBracketError("find_boundary: no sign change of |trace|-2 in [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "] at eps=" + std::to_string(eps));
}

TongueEdges tongue_edges(Equilibrium e, double mu, int n, double eps, int steps) {
    if (n < 1) throw std::invalid_argument("tongue_edges: resonance order must be >= 1");
    if (!(eps > 0.0)) throw std::invalid_argument("tongue_edges: eps must be positive");
    const PeriodGrid grid(steps);
    const double alpha0 = ResonanceCurve{e, n}.alpha0(mu);
    // |trace| is unimodal in alpha while omega stays within N/2 +- 1/4.
    const double half = std::min(1.5 * eps, 0.8 * (n / 4.0 - 1.0 / 16.0));
    const double lo = alpha0 - half;
    const double hi = alpha0 + half;

    const auto g = [&](double alpha) { return trace_margin(e, mu, alpha, eps, grid); };

    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a), x2 = a + inv_phi * (b - a);
    double g1 = g(x1), g2 = g(x2);
    for (int it = 0; it < 200 && b - a > 1e-15 * std::max(1.0, std::abs(alpha0)); ++it) {
        if (g1 > 0.0 && g2 > 0.0) break;  // already inside the tongue
        if (g1 < g2) {
            a = x1;
            x1 = x2;
            g1 = g2;
            x2 = a + inv_phi * (b - a);
            g2 = g(x2);
        } else {
            b = x2;
            x2 = x1;
            g2 = g1;
            x1 = b - inv_phi * (b - a);
            g1 = g(x1);
        }
    }
    const double peak = g1 >= g2 ? x1 : x2;
    const double g_peak = std::max(g1, g2);
    if (!(g_peak > 0.0))
        throw NoBracketError("tongue_edges: no unstable interval near alpha0=" + std::to_string(alpha0) +
                             " at eps=" + std::to_string(eps));
    const double g_lo = g(lo);
    const double g_hi = g(hi);
    if (g_lo >= 0.0 || g_hi >= 0.0)
        throw NoBracketError("tongue_edges: search window does not contain the whole tongue at eps=" +
                             std::to_string(eps));
    return {bisect(e, mu, eps, lo, peak, g_lo, grid), bisect(e, mu, eps, peak, hi, g_peak, grid)};
}

std::vector<TongueEdges> sweep_tongue_edges_serial(Equilibrium e, double mu, int n,
                                                   const std::vector<double>& eps_grid, int steps) {
    std::vector<TongueEdges> out;
    out.reserve(eps_grid.size());
    for (double eps : eps_grid) out.push_back(tongue_edges(e, mu, n, eps, steps));
    return out;
}

std::vector<TongueEdges> sweep_tongue_edges(Equilibrium e, double mu, int n, const std::vector<double>& eps_grid,
                                            int steps) {
    std::vector<TongueEdges> out(eps_grid.size());
    std::exception_ptr error;
    const auto count = static_cast<long>(eps_grid.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
        try {
            out[static_cast<std::size_t>(i)] = tongue_edges(e, mu, n, eps_grid[static_cast<std::size_t>(i)], steps);
        } catch (...) {
#pragma omp critical(sweep_error)
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    return out;
}

std::vector<double> fit_series_coeffs(Equilibrium e, double mu, int n, const std::vector<double>& eps_grid,
                                      int max_order, Edge edge, int steps) {
    if (max_order < 1) throw std::invalid_argument("fit_series_coeffs: max_order must be >= 1");
    if (eps_grid.size() < static_cast<std::size_t>(max_order + 2))
        throw std::invalid_argument("fit_series_coeffs: need at least max_order + 2 grid points");
    for (std::size_t i = 0; i < eps_grid.size(); ++i) {
        if (!(eps_grid[i] > 0.0)) throw std::invalid_argument("fit_series_coeffs: eps grid must be positive");
        if (i > 0 && !(eps_grid[i] > eps_grid[i - 1]))
            throw std::invalid_argument("fit_series_coeffs: eps grid must be strictly increasing");
    }

    const std::vector<TongueEdges> edges = sweep_tongue_edges(e, mu, n, eps_grid, steps);
    const double alpha0 = ResonanceCurve{e, n}.alpha0(mu);

    // Columns are powers of eps/eps_max to keep the design matrix well scaled.
    const double scale = eps_grid.back();
    const auto rows = static_cast<Eigen::Index>(eps_grid.size());
    Eigen::MatrixXd design(rows, max_order);
    Eigen::VectorXd rhs(rows);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const double eps = eps_grid[static_cast<std::size_t>(i)] / scale;
        double power = 1.0;
        for (int j = 0; j < max_order; ++j) {
            power *= eps;
            design(i, j) = power;
        }
        const TongueEdges& te = edges[static_cast<std::size_t>(i)];
        rhs(i) = (edge == Edge::Lower ? te.lower : te.upper) - alpha0;
    }
    const Eigen::VectorXd scaled = design.colPivHouseholderQr().solve(rhs);
    std::vector<double> coeffs(static_cast<std::size_t>(max_order));
    double power = 1.0;
    for (int j = 0; j < max_order; ++j) {
        power *= scale;
        coeffs[static_cast<std::size_t>(j)] = scaled(j) / power;
    }
    return coeffs;
}

}  // namespace pendulum
