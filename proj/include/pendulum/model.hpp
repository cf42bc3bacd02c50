#ifndef PENDULUM_MODEL_HPP
#define PENDULUM_MODEL_HPP

// Charged pendulum with vertically vibrating support, placed midway between
// two uniformly charged vertical wires (wire distance d = 2l). In scaled time
// tau the angle obeys
//
//     x'' + alpha sin x + eps cos(tau) sin x + mu sin(2x) / (7 + cos 2x) = 0
//
// with Hamiltonian
//
//     H = y^2/2 - alpha cos x - eps cos(tau) cos x - (mu/2) log(7 + cos 2x).

#include "pendulum/fourier.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace pendulum {

struct ModelParams {
    double mu = 0.0;     ///< charge ratio q/(l sigma)
    double alpha = 0.0;  ///< g/(l nu^2)
    double eps = 0.0;    ///< support amplitude a/l, >= 0
};

enum class Equilibrium { P1, P2 };

/// Angle of the equilibrium: 0 for P1, pi for P2.
double equilibrium_angle(Equilibrium e);
std::string to_string(Equilibrium e);
/// Accepts "p1"/"P1"/"p2"/"P2".
Equilibrium parse_equilibrium(std::string_view s);
/// +1 for P1, -1 for P2: sign with which alpha and the drive enter the
/// linearized stiffness.
int stiffness_sign(Equilibrium e);

struct PhaseState {
    double x = 0.0;
    double y = 0.0;
};

/// (x', y') of the full nonlinear equation.
PhaseState eom_rhs(const PhaseState& s, double tau, const ModelParams& p);
double hamiltonian_value(const PhaseState& s, double tau, const ModelParams& p);

/// d/dx of the potential part of the Hamiltonian.
double potential_gradient(double x, double tau, const ModelParams& p);

double hxx(Equilibrium e, const ModelParams& p);
bool linearly_stable(Equilibrium e, const ModelParams& p);

/// c(tau) in xi'' + c(tau) xi = 0 for the linearization at e.
double linearized_coefficient(Equilibrium e, const ModelParams& p, double tau);

/// The surface 2 omega(mu, alpha) = N at eps = 0.
struct ResonanceCurve {
    Equilibrium equilibrium = Equilibrium::P1;
    int n = 1;

    /// alpha0 = (N^2 - mu)/4 for P1, (mu - N^2)/4 for P2.
    double alpha0(double mu) const;
    BigRational alpha0(const BigRational& mu) const;
    /// omega^2 at (mu, alpha0(mu)), exact. Always N^2/4.
    BigRational omega0_squared(const BigRational& mu) const;
};

/// Epsilon-graded rotating-frame Hamiltonian
///     H = sum_{m=1..M} eps^m/m! H_m(X, Y, tau),
/// where order(m) returns H_m and order(0) is identically zero.
class GradedHamiltonian {
public:
    GradedHamiltonian(Equilibrium e, int n, std::vector<PeriodicQuadForm> orders);

    Equilibrium equilibrium() const { return equilibrium_; }
    int n() const { return n_; }
    int max_order() const { return static_cast<int>(orders_.size()); }
    PeriodicQuadForm order(int m) const;
    const std::vector<PeriodicQuadForm>& orders() const { return orders_; }

    friend bool operator==(const GradedHamiltonian&, const GradedHamiltonian&) = default;

private:
    Equilibrium equilibrium_;
    int n_;
    std::vector<PeriodicQuadForm> orders_;
};

/// Builds the linearized Hamiltonian on the resonance curve 2 omega0 = N,
/// with alpha = alpha0 + sum_j a_j eps^j, after the scaling
/// xi = omega0^(-1/2) X~, eta = omega0^(1/2) Y~ and the rotation at frequency
/// N/2 that removes the unperturbed part. With s = stiffness_sign(e),
///
///     H = (s/N) (eps cos tau + sum_j a_j eps^j) S^2,
///     S = X cos(N tau/2) + Y sin(N tau/2).
GradedHamiltonian rotating_frame_hamiltonian(Equilibrium e, int n, int order);

/// Same construction reached from a concrete mu. Every mu collapses to the
/// same omega0 = N/2, so the result does not depend on mu.
GradedHamiltonian rotating_frame_hamiltonian(const ResonanceCurve& curve, double mu, int order);

}  // namespace pendulum

#endif  // PENDULUM_MODEL_HPP
