#ifndef PENDULUM_FLOQUET_HPP
#define PENDULUM_FLOQUET_HPP

#include "pendulum/model.hpp"

#include <stdexcept>
#include <vector>

namespace pendulum {

inline constexpr int kDefaultSteps = 4000;
inline constexpr double kClassifyTol = 1e-9;
inline constexpr double kBracketWidth = 1e-12;

class NoBracketError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Fixed RK4 step nodes over one period [0, 2 pi]; holds cos(tau) at every
/// half step so repeated monodromy evaluations skip the trig calls.
class PeriodGrid {
public:
    explicit PeriodGrid(int steps = kDefaultSteps);

    int steps() const { return steps_; }
    double step() const { return h_; }
    /// cos(tau) at tau = k*h/2, k = 0..2*steps.
    double cos_half_node(int k) const { return cos_[static_cast<std::size_t>(k)]; }

private:
    int steps_;
    double h_;
    std::vector<double> cos_;
};

/// Fundamental matrix of xi' = eta, eta' = -c(tau) xi after one period.
/// Columns are the images of (1,0) and (0,1).
struct Monodromy2x2 {
    double m11 = 1.0, m12 = 0.0, m21 = 0.0, m22 = 1.0;
    int step_count = 0;

    double trace() const { return m11 + m22; }
    double det() const { return m11 * m22 - m12 * m21; }
};

Monodromy2x2 monodromy(Equilibrium e, const ModelParams& p, const PeriodGrid& grid);
Monodromy2x2 monodromy(Equilibrium e, const ModelParams& p, int steps = kDefaultSteps);

enum class Stability { Stable, Unstable, Boundary };
std::string to_string(Stability s);

struct StabilityVerdict {
    Stability tag = Stability::Stable;
    double margin = 0.0;  ///< |trace| - 2
};

StabilityVerdict classify(const Monodromy2x2& m, double tol = kClassifyTol);

/// Bisection on |trace(alpha)| - 2 over [seed - window, seed + window] down
/// to a bracket of kBracketWidth. When both ends have the same sign the
/// window is scanned outward from the seed in 16 steps per side and the
/// nearest sign change is bisected. If there is none but the seed itself
/// classifies as Boundary (a closed tongue at eps = 0), the seed is returned.
double find_boundary(Equilibrium e, double mu, double eps, double seed_alpha, double window,
                     int steps = kDefaultSteps);

/// Both edges of the N-th instability tongue, located without any series
/// input: golden-section search for the peak of |trace| - 2 around
/// alpha0(mu), then bisection on either side.
struct TongueEdges {
    double lower = 0.0;
    double upper = 0.0;
};

TongueEdges tongue_edges(Equilibrium e, double mu, int n, double eps, int steps = kDefaultSteps);

/// Edges at every eps of the grid, in grid order. OpenMP-parallel over the grid.
std::vector<TongueEdges> sweep_tongue_edges(Equilibrium e, double mu, int n, const std::vector<double>& eps_grid,
                                            int steps = kDefaultSteps);
/// Serial reference for sweep_tongue_edges.
std::vector<TongueEdges> sweep_tongue_edges_serial(Equilibrium e, double mu, int n,
                                                   const std::vector<double>& eps_grid, int steps = kDefaultSteps);

enum class Edge { Lower, Upper };

/// Least-squares fit of alpha*(eps) - alpha0 = sum_{j=1..max_order} c_j eps^j
/// to the located edge; returns c_1..c_max_order.
std::vector<double> fit_series_coeffs(Equilibrium e, double mu, int n, const std::vector<double>& eps_grid,
                                      int max_order, Edge edge, int steps = kDefaultSteps);

}  // namespace pendulum

#endif  // PENDULUM_FLOQUET_HPP
