#ifndef PENDULUM_CHART_HPP
#define PENDULUM_CHART_HPP

#include "pendulum/floquet.hpp"
#include "pendulum/normal_form.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace pendulum {

/// Planar section mu = const of the (mu, alpha, eps) parameter space.
struct ChartSpec {
    Equilibrium equilibrium = Equilibrium::P1;
    double mu = 0.0;
    double alpha_min = 0.0, alpha_max = 1.0;
    double eps_min = 0.0, eps_max = 1.0;
    int n_alpha = 101, n_eps = 51;
    std::vector<int> overlay_orders;
    int steps = kDefaultSteps;           ///< RK4 steps per period for grid cells
    int boundary_steps = 16000;          ///< steps for Floquet-located boundaries
    int series_points = 101;             ///< eps samples per series overlay
    int boundary_points = 21;            ///< eps samples per Floquet boundary
    int series_order = kDefaultOrder;

    double alpha_at(int i) const;
    double eps_at(int j) const;
    /// Throws std::invalid_argument on empty ranges or resolution < 2.
    void validate() const;
};

/// Named presets "fig2".."fig5" matching the published planar sections.
ChartSpec chart_preset(std::string_view name);
std::vector<std::string> chart_preset_names();

/// Reads flat "key = value" lines over a base spec. Recognized keys:
/// equilibrium, mu, alpha_min, alpha_max, eps_min, eps_max, n_alpha, n_eps,
/// overlay_orders (comma separated), steps, boundary_steps.
ChartSpec load_chart_config(const std::string& path, ChartSpec base = {});

struct GridCell {
    double trace = 0.0;
    double det = 0.0;
    StabilityVerdict verdict;
};

/// Classifies every (eps_j, alpha_i) cell; row-major in (eps, alpha).
/// OpenMP-parallel over cells.
std::vector<GridCell> classify_grid(const ChartSpec& spec);
/// Serial reference for classify_grid; results are bit-identical.
std::vector<GridCell> classify_grid_serial(const ChartSpec& spec);

struct Polyline {
    std::string label;
    int n = 0;
    std::vector<double> alpha;
    std::vector<double> eps;
};

struct TongueChart {
    ChartSpec spec;
    std::vector<GridCell> cells;
    std::vector<Polyline> series_overlays;
    std::vector<Polyline> floquet_boundaries;
    std::vector<std::string> warnings;

    const GridCell& at(int i_eps, int i_alpha) const {
        return cells[static_cast<std::size_t>(i_eps) * static_cast<std::size_t>(spec.n_alpha) +
                     static_cast<std::size_t>(i_alpha)];
    }
};

TongueChart tongue_chart(const ChartSpec& spec);

/// alpha positions on the eps = eps_min row (which must be 0) where |trace|
/// has an interior local maximum near 2: the feet of the instability tongues.
std::vector<double> tongue_roots(const TongueChart& chart);

void emit_csv(const TongueChart& chart, std::ostream& out);
std::string emit_csv(const TongueChart& chart);
void emit_svg(const TongueChart& chart, std::ostream& out);

}  // namespace pendulum

#endif  // PENDULUM_CHART_HPP
