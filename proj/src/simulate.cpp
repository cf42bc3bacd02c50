#include "pendulum/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pendulum {

std::string to_string(Integrator m) { return m == Integrator::RK4 ? "rk4" : "splitting"; }

Integrator parse_integrator(std::string_view s) {
    if (s == "rk4" || s == "RK4") return Integrator::RK4;
    if (s == "splitting" || s == "Splitting") return Integrator::Splitting;
    throw std::invalid_argument("unknown integrator '" + std::string(s) + "' (expected rk4 or splitting)");
}

PhaseState integrator_step(const PhaseState& s, double tau, double dt, const ModelParams& p, Integrator method) {
    if (method == Integrator::Splitting) {
        const double tmid = tau + 0.5 * dt;
        double y = s.y - 0.5 * dt * potential_gradient(s.x, tmid, p);
        const double x = s.x + dt * y;
        y -= 0.5 * dt * potential_gradient(x, tmid, p);
        return {x, y};
    }
    const PhaseState k1 = eom_rhs(s, tau, p);
    const PhaseState k2 = eom_rhs({s.x + 0.5 * dt * k1.x, s.y + 0.5 * dt * k1.y}, tau + 0.5 * dt, p);
    const PhaseState k3 = eom_rhs({s.x + 0.5 * dt * k2.x, s.y + 0.5 * dt * k2.y}, tau + 0.5 * dt, p);
    const PhaseState k4 = eom_rhs({s.x + dt * k3.x, s.y + dt * k3.y}, tau + dt, p);
    return {s.x + dt / 6.0 * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x),
            s.y + dt / 6.0 * (k1.y + 2.0 * k2.y + 2.0 * k3.y + k4.y)};
}

Trajectory integrate(const PhaseState& initial, const ModelParams& p, double tau_end, double dt, Integrator method,
                     int stride) {
    if (!(dt > 0.0)) throw std::invalid_argument("integrate: dt must be positive");
    if (!(tau_end > 0.0)) throw std::invalid_argument("integrate: tau_end must be positive");
    if (stride < 1) throw std::invalid_argument("integrate: stride must be >= 1");

    const auto steps = static_cast<long>(std::ceil(tau_end / dt - 1e-9));
    const double h = tau_end / static_cast<double>(steps);

    Trajectory traj;
    traj.params = p;
    traj.dt = h;
    traj.stride = stride;
    traj.method = method;
    traj.samples.reserve(static_cast<std::size_t>(steps / stride + 2));
    traj.samples.push_back({0.0, initial.x, initial.y});

    PhaseState s = initial;
    for (long i = 0; i < steps; ++i) {
        s = integrator_step(s, static_cast<double>(i) * h, h, p, method);
        const long done = i + 1;
        if (done % stride == 0 || done == steps) traj.samples.push_back({static_cast<double>(done) * h, s.x, s.y});
    }
    return traj;
}

std::vector<PhaseState> stroboscopic(const PhaseState& initial, const ModelParams& p, int n_periods, double dt,
                                     Integrator method) {
    if (n_periods < 1) throw std::invalid_argument("stroboscopic: n_periods must be >= 1");
    if (!(dt > 0.0)) throw std::invalid_argument("stroboscopic: dt must be positive");
    const double period = 2.0 * std::numbers::pi;
    const long per_period = std::max(1L, std::lround(period / dt));
    const double h = period / static_cast<double>(per_period);

    std::vector<PhaseState> out;
    out.reserve(static_cast<std::size_t>(n_periods) + 1);
    out.push_back(initial);
    PhaseState s = initial;
    for (int k = 0; k < n_periods; ++k) {
        // The drive is 2 pi periodic, so each period restarts its clock at 0.
        for (long i = 0; i < per_period; ++i) s = integrator_step(s, static_cast<double>(i) * h, h, p, method);
        out.push_back(s);
    }
    return out;
}

double wrap_angle(double x) {
    const double two_pi = 2.0 * std::numbers::pi;
    double w = std::fmod(x + std::numbers::pi, two_pi);
    if (w <= 0.0) w += two_pi;
    return w - std::numbers::pi;
}

}  // namespace pendulum
