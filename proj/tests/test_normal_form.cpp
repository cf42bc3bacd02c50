#include "pendulum/normal_form.hpp"

#include <doctest.h>

#include <cmath>

using namespace pendulum;

namespace {

AlphaPoly P(const char* s) { return AlphaPoly::parse(s); }
BigRational R(const char* s) { return BigRational::parse(s); }

std::vector<BigRational> coeffs(std::initializer_list<const char*> list) {
    std::vector<BigRational> out;
    for (const char* s : list) out.push_back(R(s));
    return out;
}

std::vector<BigRational> head(const std::vector<BigRational>& v, std::size_t n) { return {v.begin(), v.begin() + n}; }

bool unordered_equal(const BranchPair& bp, const std::vector<BigRational>& a, const std::vector<BigRational>& b) {
    const auto f = head(bp.first.coeffs, a.size());
    const auto s = head(bp.second.coeffs, b.size());
    return (f == a && s == b) || (f == b && s == a);
}

// Oracle: direct power sum, independent of boundary_alpha's Horner loop.
double power_sum(double a0, const std::vector<BigRational>& c, double eps) {
    double sum = a0;
    for (std::size_t j = 0; j < c.size(); ++j) sum += c[j].to_double() * std::pow(eps, static_cast<double>(j + 1));
    return sum;
}

}  // namespace

TEST_CASE("first-order k coefficients") {
    const NormalFormResult n1 = analyze_resonance(Equilibrium::P1, 1, 3).normal_form;
    CHECK(n1.k20[0] == P("1/4 +1/2*a1"));
    CHECK(n1.k02[0] - n1.k20[0] == P("-1/2"));

    const NormalFormResult n2 = analyze_resonance(Equilibrium::P1, 2, 3).normal_form;
    CHECK(n2.k20[0] == P("1/4*a1"));
    CHECK(n2.k02[0] == n2.k20[0]);
    CHECK(n2.k02[1] - n2.k20[1] == P("1/8"));

    const NormalFormResult n3 = analyze_resonance(Equilibrium::P1, 3, 3).normal_form;
    CHECK(n3.k20[0] == P("1/6*a1"));
}

TEST_CASE("k11 vanishes and the tables are triangular") {
    for (Equilibrium e : {Equilibrium::P1, Equilibrium::P2}) {
        for (int n = 1; n <= 4; ++n) {
            const NormalFormResult nf = analyze_resonance(e, n, 6).normal_form;
            CHECK(nf.order() == 6);
            CHECK(nf.generators.size() == 6);
            for (int m = 1; m <= 6; ++m) {
                const auto i = static_cast<std::size_t>(m - 1);
                CHECK(nf.k11[i].is_zero());
                CHECK(nf.k20[i].highest_unknown() <= m);
                CHECK(nf.k02[i].highest_unknown() <= m);
                CHECK(nf.k20[i].degree_in(m) == 1);
                CHECK(nf.k20[i].valid());
            }
        }
    }
}

TEST_CASE("normal form at order 1 is the average of H_1 (first-order averaging)") {
    for (int n = 1; n <= 4; ++n) {
        const GradedHamiltonian h = rotating_frame_hamiltonian(Equilibrium::P1, n, 1);
        const NormalFormResult nf = deprit_hori(h, 1);
        CHECK(nf.k20[0] == tau_average(h.order(1).qxx));
        CHECK(nf.k02[0] == tau_average(h.order(1).qyy));
        // Generator solves dW/dtau = H_1 - <H_1>.
        CHECK(tau_derivative(nf.generators[0]) == h.order(1) - tau_average(h.order(1)));
    }
}

TEST_CASE("deprit_hori rejects orders beyond the Hamiltonian") {
    const GradedHamiltonian h = rotating_frame_hamiltonian(Equilibrium::P1, 1, 2);
    CHECK_THROWS_AS(deprit_hori(h, 3), std::invalid_argument);
    CHECK_THROWS_AS(deprit_hori(h, 0), std::invalid_argument);
}

TEST_CASE("boundary series for P1") {
    CHECK(unordered_equal(analyze_resonance(Equilibrium::P1, 1).branches,
                          coeffs({"-1/2", "-1/8", "1/32", "-1/384", "-11/4608"}),
                          coeffs({"1/2", "-1/8", "-1/32", "-1/384", "11/4608"})));
    const BranchPair n3 = analyze_resonance(Equilibrium::P1, 3).branches;
    CHECK(unordered_equal(n3, coeffs({"0", "1/16", "-1/32", "13/5120", "5/2048"}),
                          coeffs({"0", "1/16", "1/32", "13/5120", "-5/2048"})));
    // The K20 branch is the one whose first coefficient is -1/2 for N = 1.
    const BranchPair n1 = analyze_resonance(Equilibrium::P1, 1).branches;
    CHECK(n1.first.branch == Branch::K20);
    CHECK(n1.first.coeffs[0] == R("-1/2"));
}

TEST_CASE("P1 N=2: first branch and the classical Mathieu b2 expansion") {
    const BranchPair bp = analyze_resonance(Equilibrium::P1, 2).branches;
    CHECK(unordered_equal(bp, coeffs({"0", "5/12", "0", "-763/3456", "0", "1002401/4976640"}),
                          coeffs({"0", "-1/12", "0", "5/3456", "0", "-289/4976640"})));
}

TEST_CASE("boundary series for P2") {
    CHECK(unordered_equal(analyze_resonance(Equilibrium::P2, 1).branches,
                          coeffs({"-1/2", "1/8", "1/32", "1/384", "-11/4608"}),
                          coeffs({"1/2", "1/8", "-1/32", "1/384", "11/4608"})));
    CHECK(unordered_equal(analyze_resonance(Equilibrium::P2, 3).branches,
                          coeffs({"0", "-1/16", "-1/32", "-13/5120", "5/2048"}),
                          coeffs({"0", "-1/16", "1/32", "-13/5120", "-5/2048"})));
}

TEST_CASE("P2 branch set is the negated P1 set") {
    for (int n = 1; n <= 4; ++n) {
        const BranchPair p1 = analyze_resonance(Equilibrium::P1, n).branches;
        const BranchPair p2 = analyze_resonance(Equilibrium::P2, n).branches;
        auto neg = [](std::vector<BigRational> v) {
            for (auto& c : v) c = -c;
            return v;
        };
        CHECK(unordered_equal(p2, neg(p1.first.coeffs), neg(p1.second.coeffs)));
    }
}

TEST_CASE("branch set is invariant under eps -> -eps") {
    for (Equilibrium e : {Equilibrium::P1, Equilibrium::P2}) {
        for (int n = 1; n <= 4; ++n) {
            const BranchPair bp = analyze_resonance(e, n).branches;
            auto flip = [](std::vector<BigRational> v) {
                for (std::size_t j = 0; j < v.size(); j += 2) v[j] = -v[j];  // odd powers
                return v;
            };
            CHECK(unordered_equal(bp, flip(bp.first.coeffs), flip(bp.second.coeffs)));
            if (n % 2 == 0) {
                for (std::size_t j = 0; j < bp.first.coeffs.size(); j += 2) {
                    CHECK(bp.first.coeffs[j].is_zero());
                    CHECK(bp.second.coeffs[j].is_zero());
                }
            }
        }
    }
}

TEST_CASE("re-substituting the series annihilates the branch through order M") {
    for (Equilibrium e : {Equilibrium::P1, Equilibrium::P2}) {
        for (int n = 1; n <= 4; ++n) {
            const ResonanceAnalysis a = analyze_resonance(e, n);
            for (const BoundarySeries* s : {&a.branches.first, &a.branches.second}) {
                const auto res = branch_residuals(a.normal_form, *s);
                CHECK(res.size() == 6);
                for (const auto& r : res) CHECK(r.is_zero());
            }
        }
    }
}

TEST_CASE("solve_boundary error paths") {
    NormalFormResult nf;
    nf.equilibrium = Equilibrium::P1;
    nf.n = 1;
    nf.k20 = {P("1 +a1^2")};
    nf.k02 = {P("1")};
    nf.k11 = {P("0")};
    try {
        solve_boundary(nf, Branch::K20, {Equilibrium::P1, 1});
        FAIL("expected NonAffineError");
    } catch (const NonAffineError& e) {
        CHECK(e.order() == 1);
    }
    CHECK_THROWS_AS(solve_boundary(nf, Branch::K02, {Equilibrium::P1, 1}), NonAffineError);
    CHECK_THROWS_AS(solve_boundary(nf, Branch::K20, {Equilibrium::P1, 2}), std::invalid_argument);

    nf.k20 = {P("a1"), P("a1*a2 +1")};
    nf.k02 = nf.k20;
    nf.k11 = {P("0"), P("0")};
    try {
        solve_boundary(nf, Branch::K20, {Equilibrium::P1, 1});
        FAIL("expected NonAffineError");
    } catch (const NonAffineError& e) {
        CHECK(e.order() == 2);  // a1 = 0 kills the a2 coefficient
    }
    nf.k11 = {P("a1"), P("0")};
    CHECK_THROWS_AS(solve_boundary(nf, Branch::K20, {Equilibrium::P1, 1}), std::logic_error);
}

TEST_CASE("boundary_alpha") {
    const BranchPair n1 = analyze_resonance(Equilibrium::P1, 1).branches;
    CHECK(boundary_alpha(n1.first, -0.5, 0.0) == 0.375);
    const BranchPair p2n3 = analyze_resonance(Equilibrium::P2, 3).branches;
    CHECK(boundary_alpha(p2n3.first, 20.0, 0.0) == 2.75);
    for (double eps : {0.05, 0.1, 0.3}) {
        CHECK(boundary_alpha(n1.first, 0.0, eps) == doctest::Approx(power_sum(0.25, n1.first.coeffs, eps)).epsilon(1e-15));
    }
    CHECK(boundary_alpha(n1.first, 0.0, 0.1) == doctest::Approx(0.25 - 0.05 - 0.00125 + 0.1 * 0.1 * 0.1 / 32).epsilon(1e-6));
}

TEST_CASE("Mathieu specialization") {
    const BranchPair n1 = analyze_resonance(Equilibrium::P1, 1).branches;
    const BoundarySeries m = mathieu_specialization(n1.first);
    CHECK(m.mu_fixed);
    CHECK(m.coeffs == n1.first.coeffs);
    CHECK(boundary_alpha(m, 123.0, 0.0) == 0.25);  // mu is frozen at 0
    CHECK(boundary_alpha(m, -5.0, 0.2) == boundary_alpha(n1.first, 0.0, 0.2));

    const BranchPair n2 = analyze_resonance(Equilibrium::P1, 2).branches;
    CHECK(boundary_alpha(mathieu_specialization(n2.first), 9.0, 0.0) == 1.0);
    const BranchPair n3 = analyze_resonance(Equilibrium::P1, 3).branches;
    CHECK(boundary_alpha(mathieu_specialization(n3.second), 9.0, 0.0) == 2.25);

    CHECK_THROWS_AS(mathieu_specialization(analyze_resonance(Equilibrium::P2, 1).branches.first),
                    std::invalid_argument);
}
