#ifndef PENDULUM_NORMAL_FORM_HPP
#define PENDULUM_NORMAL_FORM_HPP

#include "pendulum/model.hpp"

#include <stdexcept>
#include <vector>

namespace pendulum {

/// Raised when the order-m boundary equation is not affine in a_m.
class NonAffineError : public std::runtime_error {
public:
    NonAffineError(const std::string& what, int order) : std::runtime_error(what), order_(order) {}
    /// Order at which solving stopped.
    int order() const { return order_; }

private:
    int order_;
};

/// Autonomous normal form K = k20 X^2 + k11 XY + k02 Y^2, each k a series
/// sum_m k^(m) eps^m in plain (not factorial) grading. Index m-1 holds k^(m).
struct NormalFormResult {
    Equilibrium equilibrium = Equilibrium::P1;
    int n = 1;
    std::vector<AlphaPoly> k20;
    std::vector<AlphaPoly> k11;
    std::vector<AlphaPoly> k02;
    /// Lie generators W_m (factorial grading, W = sum eps^(m-1)/(m-1)! W_m).
    std::vector<PeriodicQuadForm> generators;

    int order() const { return static_cast<int>(k20.size()); }
};

/// Lie-transform normalization of a rotating-frame Hamiltonian to the given
/// order. Time is handled in the extended phase space (tau, T) with
/// H~_0 = T, so the homological equation at order m reads
/// K_m = known_m - dW_m/dtau, solved by averaging and zero-mean integration.
NormalFormResult deprit_hori(const GradedHamiltonian& h, int order);

enum class Branch { K20, K02 };
std::string to_string(Branch b);

struct BoundarySeries {
    Equilibrium equilibrium = Equilibrium::P1;
    int n = 1;
    Branch branch = Branch::K20;
    /// coeffs[j-1] = alpha_j.
    std::vector<BigRational> coeffs;
    /// When set, alpha0 is frozen to this value instead of following mu.
    bool mu_fixed = false;
    double fixed_mu = 0.0;

    ResonanceCurve curve() const { return {equilibrium, n}; }
    int order() const { return static_cast<int>(coeffs.size()); }
};

/// Sets every eps^m coefficient of the chosen branch to zero in turn and
/// solves for a_m.
BoundarySeries solve_boundary(const NormalFormResult& nf, Branch branch, const ResonanceCurve& curve);

/// alpha0(mu) + sum_j alpha_j eps^j in double precision.
double boundary_alpha(const BoundarySeries& series, double mu, double eps);

/// The same branch pinned at mu = 0, where the linearization is the Mathieu
/// equation xi'' + (delta + eps cos tau) xi = 0 (with the sign of eps
/// reversed for P2).
BoundarySeries mathieu_specialization(const BoundarySeries& series);

/// Both branches for one resonance.
struct BranchPair {
    BoundarySeries first;
    BoundarySeries second;
};

/// Runs the full pipeline for one (equilibrium, N).
struct ResonanceAnalysis {
    NormalFormResult normal_form;
    BranchPair branches;
};

ResonanceAnalysis analyze_resonance(Equilibrium e, int n, int order = kDefaultOrder);

/// Substitutes alpha_1..alpha_m into k^(m) of the branch; zero through the
/// computed order when the series is correct.
std::vector<AlphaPoly> branch_residuals(const NormalFormResult& nf, const BoundarySeries& series);

}  // namespace pendulum

#endif  // PENDULUM_NORMAL_FORM_HPP
