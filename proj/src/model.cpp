#include "pendulum/model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pendulum {

double equilibrium_angle(Equilibrium e) { return e == Equilibrium::P1 ? 0.0 : std::numbers::pi; }

std::string to_string(Equilibrium e) { return e == Equilibrium::P1 ? "P1" : "P2"; }

Equilibrium parse_equilibrium(std::string_view s) {
    if (s == "p1" || s == "P1") return Equilibrium::P1;
    if (s == "p2" || s == "P2") return Equilibrium::P2;
    throw std::invalid_argument("unknown equilibrium '" + std::string(s) + "' (expected p1 or p2)");
}

int stiffness_sign(Equilibrium e) { return e == Equilibrium::P1 ? 1 : -1; }

double potential_gradient(double x, double tau, const ModelParams& p) {
    const double s = std::sin(x);
    return (p.alpha + p.eps * std::cos(tau)) * s + p.mu * std::sin(2.0 * x) / (7.0 + std::cos(2.0 * x));
}

PhaseState eom_rhs(const PhaseState& s, double tau, const ModelParams& p) {
    return {s.y, -potential_gradient(s.x, tau, p)};
}

double hamiltonian_value(const PhaseState& s, double tau, const ModelParams& p) {
    return 0.5 * s.y * s.y - (p.alpha + p.eps * std::cos(tau)) * std::cos(s.x) -
           0.5 * p.mu * std::log(7.0 + std::cos(2.0 * s.x));
}

double hxx(Equilibrium e, const ModelParams& p) {
    return e == Equilibrium::P1 ? p.mu / 4.0 + p.alpha : p.mu / 4.0 - p.alpha;
}

bool linearly_stable(Equilibrium e, const ModelParams& p) { return hxx(e, p) > 0.0; }

double linearized_coefficient(Equilibrium e, const ModelParams& p, double tau) {
    const double drive = p.eps * std::cos(tau);
    return e == Equilibrium::P1 ? p.alpha + p.mu / 4.0 + drive : p.mu / 4.0 - p.alpha - drive;
}

double ResonanceCurve::alpha0(double mu) const {
    const double n2 = static_cast<double>(n) * n;
    return equilibrium == Equilibrium::P1 ? (n2 - mu) / 4.0 : (mu - n2) / 4.0;
}

BigRational ResonanceCurve::alpha0(const BigRational& mu) const {
    const BigRational n2(static_cast<long>(n) * n);
    return equilibrium == Equilibrium::P1 ? (n2 - mu) / BigRational(4) : (mu - n2) / BigRational(4);
}

BigRational ResonanceCurve::omega0_squared(const BigRational& mu) const {
    const BigRational quarter_mu = mu / BigRational(4);
    return equilibrium == Equilibrium::P1 ? quarter_mu + alpha0(mu) : quarter_mu - alpha0(mu);
}

GradedHamiltonian::GradedHamiltonian(Equilibrium e, int n, std::vector<PeriodicQuadForm> orders)
    : equilibrium_(e), n_(n), orders_(std::move(orders)) {}

PeriodicQuadForm GradedHamiltonian::order(int m) const {
    if (m == 0) return {};
    if (m < 0 || m > max_order()) throw std::out_of_range("GradedHamiltonian::order: index out of range");
    return orders_[static_cast<std::size_t>(m - 1)];
}

GradedHamiltonian rotating_frame_hamiltonian(Equilibrium e, int n, int order) {
    if (n < 1) throw std::invalid_argument("rotating_frame_hamiltonian: resonance order must be >= 1");
    if (order < 1 || order > kMaxUnknowns)
        throw std::invalid_argument("rotating_frame_hamiltonian: order " + std::to_string(order) +
                                    " outside 1.." + std::to_string(kMaxUnknowns));

    // S^2 with S = X cos(N tau/2) + Y sin(N tau/2).
    const FourierSeries c = FourierSeries::cos_half(n);
    const FourierSeries s = FourierSeries::sin_half(n);
    PeriodicQuadForm s2;
    s2.qxx = fourier_mul(c, c);
    s2.qxy = fourier_mul(c, s) * AlphaPoly(2);
    s2.qyy = fourier_mul(s, s);

    const BigRational prefactor(stiffness_sign(e), n);

    std::vector<PeriodicQuadForm> orders;
    orders.reserve(static_cast<std::size_t>(order));
    for (int m = 1; m <= order; ++m) {
        FourierSeries factor(AlphaPoly::unknown(m));
        if (m == 1) factor += FourierSeries::cos(1);
        PeriodicQuadForm hm;
        hm.qxx = fourier_mul(factor, s2.qxx);
        hm.qxy = fourier_mul(factor, s2.qxy);
        hm.qyy = fourier_mul(factor, s2.qyy);
        hm *= AlphaPoly(prefactor * factorial(m));
        orders.push_back(std::move(hm));
    }
    return GradedHamiltonian(e, n, std::move(orders));
}

GradedHamiltonian rotating_frame_hamiltonian(const ResonanceCurve& curve, double mu, int order) {
    const BigRational w2 = curve.omega0_squared(BigRational::from_double(mu));
    const BigRational expected(static_cast<long>(curve.n) * curve.n, 4);
    if (w2 != expected) throw std::logic_error("rotating_frame_hamiltonian: resonance curve does not give 2 omega0 = N");
    return rotating_frame_hamiltonian(curve.equilibrium, curve.n, order);
}

}  // namespace pendulum
