#include "pendulum/normal_form.hpp"

#include <stdexcept>

namespace pendulum {

std::string to_string(Branch b) { return b == Branch::K20 ? "k20" : "k02"; }

NormalFormResult deprit_hori(const GradedHamiltonian& h, int order) {
    if (order < 1 || order > h.max_order())
        throw std::invalid_argument("deprit_hori: order " + std::to_string(order) + " exceeds the Hamiltonian's " +
                                    std::to_string(h.max_order()) + " graded pieces");

    const auto M = static_cast<std::size_t>(order);
    // table[i][j] is the Lie-triangle entry f_j^(i). Row 0 holds H_j; the
    // extended-phase-space term f_0^(0) = T is never stored, its brackets
    // {T, W_m} = -dW_m/dtau are added once W_m is known.
    std::vector<std::vector<PeriodicQuadForm>> table(M + 1, std::vector<PeriodicQuadForm>(M + 1));
    for (std::size_t j = 1; j <= M; ++j) table[0][j] = h.order(static_cast<int>(j));

    std::vector<PeriodicQuadForm> generators;  // generators[k] = W_{k+1}
    generators.reserve(M);

    NormalFormResult result;
    result.equilibrium = h.equilibrium();
    result.n = h.n();

    for (std::size_t n = 1; n <= M; ++n) {
        for (std::size_t i = 1; i <= n; ++i) {
            const std::size_t j = n - i;
            PeriodicQuadForm entry = table[i - 1][j + 1];
            for (std::size_t k = 0; k <= j; ++k) {
                if (i == 1 && k == j) continue;  // {T, W_n}: unknown yet
                const PeriodicQuadForm& src = table[i - 1][j - k];
                if (src.is_zero()) continue;
                PeriodicQuadForm term = poisson_bracket(src, generators[k]);
                term *= AlphaPoly(binomial(static_cast<int>(j), static_cast<int>(k)));
                entry += term;
            }
            table[i][j] = std::move(entry);
        }

        const PeriodicQuadForm known = table[n][0];
        const PeriodicQuadForm averaged = tau_average(known);
        generators.push_back(tau_antiderivative_zero_mean(known - averaged));

        const PeriodicQuadForm correction = averaged - known;  // = -dW_n/dtau
        for (std::size_t i = 1; i <= n; ++i) table[i][n - i] += correction;

        const BigRational inv_fact = BigRational(1) / factorial(static_cast<int>(n));
        result.k20.push_back(tau_average(averaged.qxx) * inv_fact);
        result.k11.push_back(tau_average(averaged.qxy) * inv_fact);
        result.k02.push_back(tau_average(averaged.qyy) * inv_fact);
    }
    result.generators = std::move(generators);
    return result;
}

namespace {

const std::vector<AlphaPoly>& branch_table(const NormalFormResult& nf, Branch branch) {
    return branch == Branch::K20 ? nf.k20 : nf.k02;
}

}  // namespace

BoundarySeries solve_boundary(const NormalFormResult& nf, Branch branch, const ResonanceCurve& curve) {
    if (curve.equilibrium != nf.equilibrium || curve.n != nf.n)
        throw std::invalid_argument("solve_boundary: resonance curve does not match the normal form");
    for (std::size_t m = 0; m < nf.k11.size(); ++m)
        if (!nf.k11[m].is_zero())
            throw std::logic_error("solve_boundary: k11 does not vanish at order " + std::to_string(m + 1) +
                                   " (" + nf.k11[m].str() + ")");

    BoundarySeries out;
    out.equilibrium = nf.equilibrium;
    out.n = nf.n;
    out.branch = branch;

    const auto& table = branch_table(nf, branch);
    for (int m = 1; m <= nf.order(); ++m) {
        AlphaPoly eq = table[static_cast<std::size_t>(m - 1)];
        for (int j = 1; j < m; ++j) eq = eq.substitute(j, out.coeffs[static_cast<std::size_t>(j - 1)]);
        if (eq.highest_unknown() > m)
            throw NonAffineError("solve_boundary: order " + std::to_string(m) + " equation involves unknowns beyond a" +
                                     std::to_string(m),
                                 m);
        if (eq.degree_in(m) != 1)
            throw NonAffineError("solve_boundary: order " + std::to_string(m) + " equation " + eq.str() +
                                     " is not affine in a" + std::to_string(m),
                                 m);
        const auto [c0, c1] = eq.affine_parts(m);
        if (c1.total_degree() != 0 || c1.is_zero())
            throw NonAffineError("solve_boundary: degenerate leading coefficient at order " + std::to_string(m), m);
        out.coeffs.push_back(-c0.constant_term() / c1.constant_term());
    }
    return out;
}

double boundary_alpha(const BoundarySeries& series, double mu, double eps) {
    const double m = series.mu_fixed ? series.fixed_mu : mu;
    double sum = 0.0;
    // Horner in eps over alpha_M..alpha_1.
    for (auto it = series.coeffs.rbegin(); it != series.coeffs.rend(); ++it) sum = (sum + it->to_double()) * eps;
    return series.curve().alpha0(m) + sum;
}

BoundarySeries mathieu_specialization(const BoundarySeries& series) {
    if (series.equilibrium != Equilibrium::P1)
        throw std::invalid_argument("mathieu_specialization: only P1 reduces to the Mathieu equation");
    BoundarySeries out = series;
    out.mu_fixed = true;
    out.fixed_mu = 0.0;
    return out;
}

ResonanceAnalysis analyze_resonance(Equilibrium e, int n, int order) {
    const GradedHamiltonian h = rotating_frame_hamiltonian(e, n, order);
    ResonanceAnalysis a;
    a.normal_form = deprit_hori(h, order);
    const ResonanceCurve curve{e, n};
    a.branches.first = solve_boundary(a.normal_form, Branch::K20, curve);
    a.branches.second = solve_boundary(a.normal_form, Branch::K02, curve);
    return a;
}

std::vector<AlphaPoly> branch_residuals(const NormalFormResult& nf, const BoundarySeries& series) {
    const auto& table = branch_table(nf, series.branch);
    std::vector<AlphaPoly> out;
    for (std::size_t m = 0; m < table.size() && m < series.coeffs.size(); ++m) {
        AlphaPoly eq = table[m];
        for (std::size_t j = 0; j < series.coeffs.size(); ++j) eq = eq.substitute(static_cast<int>(j + 1), series.coeffs[j]);
        out.push_back(std::move(eq));
    }
    return out;
}

}  // namespace pendulum
