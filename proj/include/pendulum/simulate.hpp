#ifndef PENDULUM_SIMULATE_HPP
#define PENDULUM_SIMULATE_HPP

#include "pendulum/model.hpp"

#include <vector>

namespace pendulum {

enum class Integrator {
    RK4,        ///< classical fourth-order Runge-Kutta on eom_rhs
    Splitting,  ///< kick-drift-kick, potential frozen at the step midpoint
};

std::string to_string(Integrator m);
Integrator parse_integrator(std::string_view s);

struct Sample {
    double tau = 0.0;
    double x = 0.0;  ///< unwrapped angle
    double y = 0.0;
};

struct Trajectory {
    std::vector<Sample> samples;
    ModelParams params;
    double dt = 0.0;  ///< step actually used
    int stride = 1;   ///< steps between stored samples
    Integrator method = Integrator::RK4;
};

/// One step of the chosen method from (s, tau).
PhaseState integrator_step(const PhaseState& s, double tau, double dt, const ModelParams& p, Integrator method);

/// Integrates from tau = 0 to tau_end. dt is shrunk so an integer number of
/// steps lands exactly on tau_end; every stride-th state is stored, plus the
/// final one.
Trajectory integrate(const PhaseState& initial, const ModelParams& p, double tau_end, double dt,
                     Integrator method = Integrator::RK4, int stride = 1);

/// States at tau = 2 pi k, k = 0..n_periods. The step is snapped to
/// 2 pi / round(2 pi / dt) so strobe times are hit without interpolation.
std::vector<PhaseState> stroboscopic(const PhaseState& initial, const ModelParams& p, int n_periods, double dt,
                                     Integrator method = Integrator::RK4);

/// Wraps an angle into (-pi, pi] for display.
double wrap_angle(double x);

}  // namespace pendulum

#endif  // PENDULUM_SIMULATE_HPP
