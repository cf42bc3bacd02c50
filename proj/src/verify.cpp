#include "pendulum/verify.hpp"

#include "pendulum/chart.hpp"
#include "pendulum/floquet.hpp"
#include "pendulum/simulate.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <random>

#ifndef PENDULUM_GOLDEN_PATH
#define PENDULUM_GOLDEN_PATH "data/published_tables.json"
#endif

namespace pendulum {

namespace {

std::string strf(const char* f, ...) __attribute__((format(printf, 1, 2)));

std::string strf(const char* f, ...) {
    va_list ap;
    va_start(ap, f);
    char buf[1024];
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string label(Equilibrium e, int n) { return to_string(e) + " N=" + std::to_string(n); }

std::string series_str(const std::vector<BigRational>& c) {
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? ", " : "") + c[i].str();
    return s + ")";
}

std::vector<BigRational> truncated(const std::vector<BigRational>& c, std::size_t n) {
    return {c.begin(), c.begin() + static_cast<std::ptrdiff_t>(std::min(n, c.size()))};
}

bool same_pair(const std::vector<BigRational>& a1, const std::vector<BigRational>& a2,
               const std::vector<BigRational>& b1, const std::vector<BigRational>& b2) {
    return (a1 == b1 && a2 == b2) || (a1 == b2 && a2 == b1);
}

BoundarySeries truncated_series(const BoundarySeries& s, std::size_t n) {
    BoundarySeries out = s;
    out.coeffs = truncated(s.coeffs, n);
    return out;
}

std::vector<BigRational> parse_coeffs(const nlohmann::json& arr) {
    std::vector<BigRational> out;
    for (const auto& v : arr) out.push_back(BigRational::parse(v.get<std::string>()));
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------

GoldenTables GoldenTables::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GoldenError("cannot open golden file '" + path + "'");
    GoldenTables g;
    try {
        const nlohmann::json doc = nlohmann::json::parse(in);
        if (doc.at("format").get<int>() != 1) throw GoldenError("unsupported golden format");
        for (const auto& k : doc.at("k_tables")) {
            g.k_tables.push_back({parse_equilibrium(k.at("equilibrium").get<std::string>()), k.at("n").get<int>(),
                                  k.at("order").get<int>(), AlphaPoly::parse(k.at("k20").get<std::string>()),
                                  AlphaPoly::parse(k.at("k02_minus_k20").get<std::string>())});
        }
        for (const auto& s : doc.at("series")) {
            const auto& br = s.at("branches");
            if (br.size() != 2) throw GoldenError("series entry needs exactly two branches");
            g.series.push_back({parse_equilibrium(s.at("equilibrium").get<std::string>()), s.at("n").get<int>(),
                                parse_coeffs(br[0]), parse_coeffs(br[1])});
        }
        for (const auto& b : doc.at("flat_planes").at("branches")) g.flat_planes.push_back(parse_coeffs(b));
    } catch (const GoldenError&) {
        throw;
    } catch (const std::exception& e) {
        throw GoldenError("malformed golden file '" + path + "': " + e.what());
    }
    if (g.k_tables.empty() || g.series.empty()) throw GoldenError("golden file '" + path + "' has no tables");
    return g;
}

std::string default_golden_path() { return PENDULUM_GOLDEN_PATH; }

VerifyDepth parse_verify_depth(std::string_view s) {
    if (s == "quick") return VerifyDepth::Quick;
    if (s == "full") return VerifyDepth::Full;
    throw std::invalid_argument("unknown verify depth '" + std::string(s) + "' (expected quick or full)");
}

VerifyContext::VerifyContext(std::string golden_path) : golden_path_(std::move(golden_path)) {}

const GoldenTables& VerifyContext::golden() {
    if (!golden_) golden_ = GoldenTables::load(golden_path_);
    return *golden_;
}

const ResonanceAnalysis& VerifyContext::analysis(Equilibrium e, int n) {
    const auto key = std::make_pair(static_cast<int>(e), n);
    auto it = analyses_.find(key);
    if (it == analyses_.end()) it = analyses_.emplace(key, analyze_resonance(e, n, kDefaultOrder)).first;
    return it->second;
}

bool VerifyReport::all_pass() const {
    return std::all_of(criteria.begin(), criteria.end(), [](const CriterionResult& r) { return r.pass; });
}

// ---------------------------------------------------------------------------
// A1

CriterionResult check_a1(VerifyContext& ctx) {
    CriterionResult r{"A1", "exact k-table reproduction", false, {}, {}, 0.0};
    Stopwatch clock;
    try {
        const GoldenTables& g = ctx.golden();
        int matched = 0, total = 0;
        std::map<std::pair<int, int>, std::vector<const GoldenTables::KEntry*>> by_case;
        for (const auto& k : g.k_tables) {
            const NormalFormResult& nf = ctx.analysis(k.equilibrium, k.n).normal_form;
            const auto m = static_cast<std::size_t>(k.order - 1);
            const AlphaPoly k20 = nf.k20.at(m);
            const AlphaPoly diff = nf.k02.at(m) - nf.k20.at(m);
            const std::string where = label(k.equilibrium, k.n);
            total += 2;
            if (k20 == k.k20) ++matched;
            else
                r.details.push_back(strf("%s k20^(%d): computed %s | printed %s", where.c_str(), k.order,
                                         k20.str().c_str(), k.k20.str().c_str()));
            if (diff == k.k02_minus_k20) ++matched;
            else
                r.details.push_back(strf("%s k02^(%d)-k20^(%d): computed %s | printed %s", where.c_str(), k.order,
                                         k.order, diff.str().c_str(), k.k02_minus_k20.str().c_str()));
            by_case[{static_cast<int>(k.equilibrium), k.n}].push_back(&k);
        }

        // Solving the printed tables themselves shows whether they are
        // consistent with the printed series.
        for (const auto& [key, entries] : by_case) {
            const auto e = static_cast<Equilibrium>(key.first);
            const int n = key.second;
            NormalFormResult printed;
            printed.equilibrium = e;
            printed.n = n;
            for (const auto* k : entries) {
                if (k->order != printed.order() + 1) break;
                printed.k20.push_back(k->k20);
                printed.k02.push_back(k->k20 + k->k02_minus_k20);
                printed.k11.emplace_back();
            }
            const auto it = std::find_if(g.series.begin(), g.series.end(), [&](const auto& s) {
                return s.equilibrium == e && s.n == n;
            });
            if (it == g.series.end() || printed.order() == 0) continue;
            std::vector<BigRational> sols[2];
            std::string failure;
            for (int b = 0; b < 2; ++b) {
                try {
                    sols[b] = solve_boundary(printed, b == 0 ? Branch::K20 : Branch::K02, {e, n}).coeffs;
                } catch (const NonAffineError& err) {
                    failure = err.what();
                }
            }
            const auto len = static_cast<std::size_t>(printed.order());
            if (!failure.empty()) {
                r.details.push_back(strf("printed %s table cannot be solved: %s", label(e, n).c_str(), failure.c_str()));
            } else {
                const bool consistent =
                    same_pair(sols[0], sols[1], truncated(it->first, len), truncated(it->second, len));
                r.details.push_back(strf("printed %s table solves to %s / %s; printed series %s / %s: %s",
                                         label(e, n).c_str(), series_str(sols[0]).c_str(),
                                         series_str(sols[1]).c_str(), series_str(truncated(it->first, len)).c_str(),
                                         series_str(truncated(it->second, len)).c_str(),
                                         consistent ? "consistent" : "INCONSISTENT"));
            }
        }
        r.seconds = clock.seconds();
        r.pass = matched == total && r.seconds < 10.0;
        r.summary = strf("%d/%d printed polynomials identical, %.2f s (limit 10 s)", matched, total, r.seconds);
    } catch (const GoldenError& e) {
        r.summary = std::string("golden data unusable: ") + e.what();
    }
    r.seconds = clock.seconds();
    return r;
}

// ---------------------------------------------------------------------------
// A2

CriterionResult check_a2(VerifyContext& ctx) {
    CriterionResult r{"A2", "exact boundary-series reproduction", false, {}, {}, 0.0};
    Stopwatch clock;
    try {
        const GoldenTables& g = ctx.golden();
        int matched = 0;
        for (const auto& s : g.series) {
            const BranchPair& bp = ctx.analysis(s.equilibrium, s.n).branches;
            const std::size_t len = std::max(s.first.size(), s.second.size());
            const auto c1 = truncated(bp.first.coeffs, len);
            const auto c2 = truncated(bp.second.coeffs, len);
            const bool ok = same_pair(c1, c2, s.first, s.second);
            if (ok) {
                ++matched;
                r.details.push_back(strf("%s: identical %s / %s", label(s.equilibrium, s.n).c_str(),
                                         series_str(c1).c_str(), series_str(c2).c_str()));
                continue;
            }
            r.details.push_back(strf("%s: computed %s / %s", label(s.equilibrium, s.n).c_str(), series_str(c1).c_str(),
                                     series_str(c2).c_str()));
            r.details.push_back(strf("%*s printed  %s / %s", static_cast<int>(label(s.equilibrium, s.n).size()), "",
                                     series_str(s.first).c_str(), series_str(s.second).c_str()));
            // Name the differing coefficients under the closer pairing.
            const auto& p1 = (c1.size() && s.first.size() && c1[0] == s.first[0]) ? s.first : s.second;
            const auto& p2 = &p1 == &s.first ? s.second : s.first;
            for (std::size_t j = 0; j < len; ++j) {
                if (j < c1.size() && j < p1.size() && !(c1[j] == p1[j]))
                    r.details.push_back(strf("    eps^%zu: computed %s vs printed %s", j + 1, c1[j].str().c_str(),
                                             p1[j].str().c_str()));
                if (j < c2.size() && j < p2.size() && !(c2[j] == p2[j]))
                    r.details.push_back(strf("    eps^%zu: computed %s vs printed %s", j + 1, c2[j].str().c_str(),
                                             p2[j].str().c_str()));
            }
        }
        r.seconds = clock.seconds();
        const int total = static_cast<int>(g.series.size());
        r.pass = matched == total && r.seconds < 10.0;
        r.summary = strf("%d/%d printed branch pairs identical, %.2f s (limit 10 s)", matched, total, r.seconds);
    } catch (const GoldenError& e) {
        r.summary = std::string("golden data unusable: ") + e.what();
    }
    r.seconds = clock.seconds();
    return r;
}

// ---------------------------------------------------------------------------
// A3

namespace {

// Classical characteristic-value expansions a_N(q), b_N(q) of
// y'' + (a - 2q cos 2t) y = 0, coefficients of q^0..q^6.
struct MathieuExpansion {
    int n;
    const char* a[7];
    const char* b[7];
};

constexpr MathieuExpansion kMathieu[] = {
    {1,
     {"1", "1", "-1/8", "-1/64", "-1/1536", "11/36864", "49/589824"},
     {"1", "-1", "-1/8", "1/64", "-1/1536", "-11/36864", "49/589824"}},
    {2,
     {"4", "0", "5/12", "0", "-763/13824", "0", "1002401/79626240"},
     {"4", "0", "-1/12", "0", "5/13824", "0", "-289/79626240"}},
    {3,
     {"9", "0", "1/16", "1/64", "13/20480", "-5/16384", "-1961/23592960"},
     {"9", "0", "1/16", "-1/64", "13/20480", "5/16384", "-1961/23592960"}},
};

// With t = tau/2 the linearization xi'' + (delta + eps cos tau) xi = 0 maps to
// a = 4 delta, q = -2 eps, so the eps^j coefficient of delta is c_j (-2)^j / 4.
std::vector<BigRational> mathieu_in_eps(const char* const (&c)[7]) {
    std::vector<BigRational> out;
    BigRational scale(1, 4);
    for (int j = 1; j < 7; ++j) {
        scale *= BigRational(-2);
        out.push_back(BigRational::parse(c[j]) * scale);
    }
    return out;
}

}  // namespace

CriterionResult check_a3(VerifyContext& ctx) {
    CriterionResult r{"A3", "Mathieu specialization", false, {}, {}, 0.0};
    Stopwatch clock;
    try {
        const GoldenTables& g = ctx.golden();
        int printed_ok = 0, printed_total = 0, classical_ok = 0;
        for (const auto& m : kMathieu) {
            const BranchPair& bp = ctx.analysis(Equilibrium::P1, m.n).branches;
            const BoundarySeries s1 = mathieu_specialization(bp.first);
            const BoundarySeries s2 = mathieu_specialization(bp.second);
            const BigRational delta0 = s1.curve().alpha0(BigRational(0));
            const bool base_ok = delta0 == BigRational(m.n * m.n, 4) && s1.mu_fixed && s1.fixed_mu == 0.0;

            const auto classical_a = mathieu_in_eps(m.a);
            const auto classical_b = mathieu_in_eps(m.b);
            const bool classical = base_ok && same_pair(s1.coeffs, s2.coeffs, classical_a, classical_b);
            if (classical) ++classical_ok;
            r.details.push_back(strf("P1 N=%d mu=0: delta0 = %s, eps^1..6 %s / %s; classical Mathieu expansion %s",
                                     m.n, delta0.str().c_str(), series_str(s1.coeffs).c_str(),
                                     series_str(s2.coeffs).c_str(), classical ? "identical" : "DIFFERS"));

            const auto it = std::find_if(g.series.begin(), g.series.end(), [&](const auto& s) {
                return s.equilibrium == Equilibrium::P1 && s.n == m.n;
            });
            if (it == g.series.end()) continue;
            ++printed_total;
            const std::size_t len = it->first.size();
            if (base_ok && same_pair(truncated(s1.coeffs, len), truncated(s2.coeffs, len), it->first, it->second)) {
                ++printed_ok;
            } else {
                r.details.push_back(strf("P1 N=%d mu=0: printed %s / %s differs", m.n, series_str(it->first).c_str(),
                                         series_str(it->second).c_str()));
                const bool printed_classical =
                    same_pair(it->first, it->second, truncated(classical_a, len), truncated(classical_b, len));
                r.details.push_back(strf("P1 N=%d mu=0: printed series vs classical Mathieu expansion: %s", m.n,
                                         printed_classical ? "identical" : "differs"));
            }
        }
        r.pass = printed_ok == printed_total;
        r.summary = strf("%d/%d printed series reproduced at mu=0; %d/3 match the classical Mathieu expansions",
                         printed_ok, printed_total, classical_ok);
    } catch (const GoldenError& e) {
        r.summary = std::string("golden data unusable: ") + e.what();
    }
    r.seconds = clock.seconds();
    return r;
}

// ---------------------------------------------------------------------------
// A4

namespace {

// Published series lengths; N = 2 goes one order deeper.
std::size_t published_order(int n) { return n == 2 ? 6 : 5; }

struct LocatedBoundary {
    double series = 0.0;
    double floquet = 0.0;
    bool ok = false;
    std::string error;
};

LocatedBoundary locate(const BoundarySeries& branch, const BoundarySeries& other, double mu, double eps, int steps) {
    LocatedBoundary out;
    out.series = boundary_alpha(branch, mu, eps);
    const double gap = std::abs(out.series - boundary_alpha(other, mu, eps));
    const double window = gap > 1e-12 ? 0.45 * gap : 1e-3;
    try {
        out.floquet = find_boundary(branch.equilibrium, mu, eps, out.series, window, steps);
        out.ok = true;
    } catch (const NoBracketError& e) {
        out.error = e.what();
    }
    return out;
}

}  // namespace

CriterionResult check_a4(VerifyContext& ctx) {
    CriterionResult r{"A4", "Floquet cross-validation of the series", false, {}, {}, 0.0};
    Stopwatch clock;
    struct Case {
        Equilibrium e;
        int n;
        double mu;
    };
    std::vector<Case> cases;
    for (int n : {1, 2, 3})
        for (double mu : {-0.5, 0.0}) cases.push_back({Equilibrium::P1, n, mu});
    for (int n : {1, 3})
        for (double mu : {-0.5, 0.0, 20.0}) cases.push_back({Equilibrium::P2, n, mu});
    const double eps_list[] = {0.05, 0.1, 0.2};
    constexpr int steps = 16000;

    int failures = 0, checked = 0;
    double worst_ratio = 0.0;
    for (const Case& c : cases) {
        const BranchPair& bp = ctx.analysis(c.e, c.n).branches;
        const std::size_t m = published_order(c.n);
        const BoundarySeries b[2] = {truncated_series(bp.first, m), truncated_series(bp.second, m)};
        const long jobs = 2 * 3;
        LocatedBoundary found[jobs];
#pragma omp parallel for schedule(dynamic)
        for (long job = 0; job < jobs; ++job) {
            const int side = static_cast<int>(job % 2);
            found[job] = locate(b[side], b[1 - side], c.mu, eps_list[job / 2], steps);
        }
        double worst = 0.0;
        for (long job = 0; job < jobs; ++job) {
            const double eps = eps_list[job / 2];
            const double tol = std::max(1e-6, 2.0 * std::pow(eps, static_cast<double>(m + 1)));
            ++checked;
            if (!found[job].ok) {
                ++failures;
                r.details.push_back(strf("%s mu=%g eps=%g: %s", label(c.e, c.n).c_str(), c.mu, eps,
                                         found[job].error.c_str()));
                continue;
            }
            const double err = std::abs(found[job].series - found[job].floquet);
            worst = std::max(worst, err);
            worst_ratio = std::max(worst_ratio, err / tol);
            if (err > tol) {
                ++failures;
                r.details.push_back(strf("%s %s mu=%g eps=%g: series %.12f floquet %.12f |diff| %.3e > %.3e",
                                         label(c.e, c.n).c_str(), to_string(b[job % 2].branch).c_str(), c.mu, eps,
                                         found[job].series, found[job].floquet, err, tol));
            }
        }
        r.details.push_back(strf("%s mu=%g: max |series - floquet| = %.3e over eps in {0.05, 0.1, 0.2}",
                                 label(c.e, c.n).c_str(), c.mu, worst));
    }
    r.seconds = clock.seconds();
    r.pass = failures == 0 && r.seconds < 120.0;
    r.summary = strf("%d/%d boundaries within max(1e-6, 2 eps^(M+1)); worst err/tol = %.3g; %.1f s", checked - failures,
                     checked, worst_ratio, r.seconds);
    return r;
}

// ---------------------------------------------------------------------------
// A5 and the P2/N=2 report

namespace {

constexpr double kP2N2Mu = 20.0;

std::vector<double> a5_eps_grid() {
    std::vector<double> grid;
    for (int k = 1; k <= 10; ++k) grid.push_back(0.02 * k);
    return grid;
}

}  // namespace

CriterionResult check_a5(VerifyContext& ctx) {
    CriterionResult r{"A5", "P2/N=2 adjudication", false, {}, {}, 0.0};
    Stopwatch clock;
    const BranchPair& bp = ctx.analysis(Equilibrium::P2, 2).branches;
    const double c_first = bp.first.coeffs.at(1).to_double();
    const double c_second = bp.second.coeffs.at(1).to_double();
    const double series_lower = std::min(c_first, c_second);
    const double series_upper = std::max(c_first, c_second);
    try {
        const auto grid = a5_eps_grid();
        const auto lower = fit_series_coeffs(Equilibrium::P2, kP2N2Mu, 2, grid, 6, Edge::Lower, 16000);
        const auto upper = fit_series_coeffs(Equilibrium::P2, kP2N2Mu, 2, grid, 6, Edge::Upper, 16000);
        const double d_lower = std::abs(lower[1] - series_lower);
        const double d_upper = std::abs(upper[1] - series_upper);
        r.details.push_back(strf("computed eps^2 coefficients: %s (%s), %s (%s)", bp.first.coeffs[1].str().c_str(),
                                 to_string(bp.first.branch).c_str(), bp.second.coeffs[1].str().c_str(),
                                 to_string(bp.second.branch).c_str()));
        r.details.push_back(strf("fitted eps^2 coefficients at mu=20: lower edge %.9f, upper edge %.9f", lower[1],
                                 upper[1]));
        r.details.push_back(strf("fitted eps^1 coefficients (expected 0): %.3e, %.3e", lower[0], upper[0]));
        r.details.push_back(strf("|fit - series|: lower %.3e, upper %.3e (tolerance 1e-3)", d_lower, d_upper));
        bool flat = true;
        try {
            for (const auto& b : ctx.golden().flat_planes)
                for (const auto& c : b) flat = flat && c.is_zero();
            r.details.push_back(flat ? std::string("printed branches: both alpha = (mu - 4)/4, eps^2 coefficient 0; "
                                                   "the computed and fitted tongue disagree with them")
                                     : std::string("printed branches carry eps terms"));
        } catch (const GoldenError& e) {
            r.details.push_back(std::string("printed branches unavailable: ") + e.what());
        }
        r.pass = d_lower <= 1e-3 && d_upper <= 1e-3;
        r.summary = strf("eps^2: series {%.6f, %.6f} vs fit {%.6f, %.6f}, max diff %.2e (tolerance 1e-3)",
                         series_lower, series_upper, lower[1], upper[1], std::max(d_lower, d_upper));
    } catch (const std::exception& e) {
        r.summary = std::string("fit failed: ") + e.what();
    }
    r.seconds = clock.seconds();
    return r;
}

std::vector<std::string> p2n2_discrepancy_section(VerifyContext& ctx) {
    std::vector<std::string> lines;
    const ResonanceAnalysis& a = ctx.analysis(Equilibrium::P2, 2);
    lines.push_back("printed: alpha = (mu - 4)/4 for both branches, no eps corrections (not used as ground truth)");
    for (const BoundarySeries* b : {&a.branches.first, &a.branches.second})
        lines.push_back(strf("computed %s branch: alpha = (mu - 4)/4 + eps^1..6 %s", to_string(b->branch).c_str(),
                             series_str(b->coeffs).c_str()));
    for (double eps : {0.1, 0.2}) {
        try {
            const TongueEdges te = tongue_edges(Equilibrium::P2, kP2N2Mu, 2, eps, 16000);
            const double plane = ResonanceCurve{Equilibrium::P2, 2}.alpha0(kP2N2Mu);
            const double s1 = boundary_alpha(a.branches.first, kP2N2Mu, eps);
            const double s2 = boundary_alpha(a.branches.second, kP2N2Mu, eps);
            lines.push_back(strf("mu=20 eps=%.1f: Floquet edges %.10f, %.10f (width %.3e); series %.10f, %.10f; "
                                 "printed plane %.10f misses the edges by %.3e, %.3e",
                                 eps, te.lower, te.upper, te.upper - te.lower, std::min(s1, s2), std::max(s1, s2),
                                 plane, std::abs(te.lower - plane), std::abs(te.upper - plane)));
        } catch (const NoBracketError& e) {
            lines.push_back(strf("mu=20 eps=%.1f: %s", eps, e.what()));
        }
    }
    bool flat_printed = true;
    try {
        for (const auto& b : ctx.golden().flat_planes)
            for (const auto& c : b) flat_printed = flat_printed && c.is_zero();
    } catch (const GoldenError&) {
    }
    const bool computed_flat = std::all_of(a.branches.first.coeffs.begin(), a.branches.first.coeffs.end(),
                                           [](const BigRational& c) { return c.is_zero(); });
    lines.push_back(flat_printed && !computed_flat
                        ? "verdict: DISAGREE. The tongue opens at order eps^2; its edges are the P1/N=2 edges mirrored "
                          "(alpha - alpha0 -> -(alpha - alpha0))."
                        : "verdict: agree");
    return lines;
}

// ---------------------------------------------------------------------------
// A6

CriterionResult check_a6(VerifyContext&) {
    CriterionResult r{"A6", "symplecticity and step-halving convergence", false, {}, {}, 0.0};
    Stopwatch clock;
    std::mt19937_64 rng(20240611);
    struct Section {
        Equilibrium e;
        double mu, alpha_lo, alpha_hi;
    };
    const Section sections[] = {{Equilibrium::P1, -0.5, 0.2, 2.5}, {Equilibrium::P2, 20.0, 2.0, 5.0}};
    const PeriodGrid grid(kDefaultSteps);
    double worst_det = 0.0;
    int det_bad = 0;
    for (const Section& s : sections) {
        std::uniform_real_distribution<double> ua(s.alpha_lo, s.alpha_hi), ue(0.0, 1.0);
        std::vector<double> alphas(10), epss(10);
        for (auto& v : alphas) v = ua(rng);
        for (auto& v : epss) v = ue(rng);
        double worst = 0.0;
        for (double alpha : alphas)
            for (double eps : epss) {
                const double dev = std::abs(monodromy(s.e, {s.mu, alpha, eps}, grid).det() - 1.0);
                worst = std::max(worst, dev);
                if (dev > 1e-9) ++det_bad;
            }
        worst_det = std::max(worst_det, worst);
        r.details.push_back(strf("%s mu=%g: 10x10 random (alpha, eps) grid, max |det - 1| = %.3e", to_string(s.e).c_str(),
                                 s.mu, worst));
    }

    struct Point {
        Equilibrium e;
        ModelParams p;
    };
    const Point points[] = {{Equilibrium::P1, {-0.5, 0.6, 0.3}},
                            {Equilibrium::P1, {0.0, 1.7, 0.5}},
                            {Equilibrium::P1, {-0.5, 2.0, 0.8}},
                            {Equilibrium::P2, {20.0, 3.5, 0.4}},
                            {Equilibrium::P2, {20.0, 4.4, 0.2}}};
    double worst_ratio = 1e300;
    for (const Point& pt : points) {
        const double ref = monodromy(pt.e, pt.p, 25600).trace();
        const double e100 = std::abs(monodromy(pt.e, pt.p, 100).trace() - ref);
        const double e200 = std::abs(monodromy(pt.e, pt.p, 200).trace() - ref);
        const double e400 = std::abs(monodromy(pt.e, pt.p, 400).trace() - ref);
        const double ratio = std::min(e100 / e200, e200 / e400);
        worst_ratio = std::min(worst_ratio, ratio);
        r.details.push_back(strf("%s (mu, alpha, eps) = (%g, %g, %g): trace errors %.3e, %.3e, %.3e at 100/200/400 "
                                 "steps, ratios %.2f, %.2f",
                                 to_string(pt.e).c_str(), pt.p.mu, pt.p.alpha, pt.p.eps, e100, e200, e400,
                                 e100 / e200, e200 / e400));
    }
    r.pass = det_bad == 0 && worst_ratio >= 12.0;
    r.summary = strf("max |det - 1| = %.2e (limit 1e-9); min step-halving ratio %.2f (limit 12)", worst_det,
                     worst_ratio);
    r.seconds = clock.seconds();
    return r;
}

// ---------------------------------------------------------------------------
// A7

CriterionResult check_a7(VerifyContext& ctx) {
    CriterionResult r{"A7", "mu-translation of the boundaries", false, {}, {}, 0.0};
    Stopwatch clock;
    constexpr double eps = 0.1;
    const std::pair<double, double> mu_pairs[] = {{-0.5, 0.0}, {0.0, 20.0}};
    double worst = 0.0;
    int failures = 0;
    for (Equilibrium e : {Equilibrium::P1, Equilibrium::P2}) {
        const double slope = e == Equilibrium::P1 ? -0.25 : 0.25;
        for (int n : {1, 2, 3}) {
            const BranchPair& bp = ctx.analysis(e, n).branches;
            for (const auto& [mu1, mu2] : mu_pairs) {
                for (int side = 0; side < 2; ++side) {
                    const BoundarySeries& b = side == 0 ? bp.first : bp.second;
                    const BoundarySeries& o = side == 0 ? bp.second : bp.first;
                    const LocatedBoundary l1 = locate(b, o, mu1, eps, kDefaultSteps);
                    const LocatedBoundary l2 = locate(b, o, mu2, eps, kDefaultSteps);
                    if (!l1.ok || !l2.ok) {
                        ++failures;
                        r.details.push_back(strf("%s %s: %s", label(e, n).c_str(), to_string(b.branch).c_str(),
                                                 (l1.ok ? l2.error : l1.error).c_str()));
                        continue;
                    }
                    const double res = std::abs((l2.floquet - l1.floquet) - slope * (mu2 - mu1));
                    worst = std::max(worst, res);
                    if (res > 1e-8) ++failures;
                }
            }
            r.details.push_back(strf("%s eps=%g: both branches, mu pairs (-1/2, 0) and (0, 20)", label(e, n).c_str(),
                                     eps));
        }
    }
    r.pass = failures == 0;
    r.summary = strf("max |d alpha* - slope * d mu| = %.2e (limit 1e-8), slopes -1/4 (P1) and +1/4 (P2)", worst);
    r.seconds = clock.seconds();
    return r;
}

// ---------------------------------------------------------------------------
// A8

CriterionResult check_a8(VerifyContext&) {
    CriterionResult r{"A8", "nonlinear spot-checks", false, {}, {}, 0.0};
    Stopwatch clock;

    // Energy of the splitting integrator at eps = 0.
    const ModelParams pe{0.0, 1.0, 0.0};
    const double dt = 1e-3;
    const long steps = 10'000'000;  // 1e4 time units
    PhaseState s{0.1, 0.0};
    const double h0 = hamiltonian_value(s, 0.0, pe);
    double drift = 0.0;
    for (long i = 0; i < steps; ++i) {
        s = integrator_step(s, static_cast<double>(i) * dt, dt, pe, Integrator::Splitting);
        drift = std::max(drift, std::abs(hamiltonian_value(s, 0.0, pe) - h0));
    }
    const bool energy_ok = drift <= 1e-8;
    r.details.push_back(strf("splitting, (mu, alpha) = (0, 1), x0 = 0.1, dt = 1e-3, 1e4 time units: max |H - H0| = "
                             "%.3e (limit 1e-8)",
                             drift));

    // Small-oscillation frequency by zero crossings over 100 periods.
    const ModelParams pf{-0.5, 1.0, 0.0};
    const double omega = std::sqrt(hxx(Equilibrium::P1, pf));
    const double span = 100.0 * 2.0 * std::numbers::pi / omega;
    const Trajectory tr = integrate({1e-4, 0.0}, pf, span, 1e-3, Integrator::RK4, 1);
    std::vector<double> crossings;
    for (std::size_t k = 1; k < tr.samples.size(); ++k) {
        const Sample& a = tr.samples[k - 1];
        const Sample& b = tr.samples[k];
        if ((a.x < 0.0) != (b.x < 0.0)) crossings.push_back(a.tau + (b.tau - a.tau) * a.x / (a.x - b.x));
    }
    double measured = 0.0;
    if (crossings.size() >= 2)
        measured = std::numbers::pi * static_cast<double>(crossings.size() - 1) / (crossings.back() - crossings.front());
    const bool freq_ok = std::abs(measured - omega) <= 1e-3;
    r.details.push_back(strf("P1 (mu, alpha) = (-1/2, 1): zero-crossing frequency %.8f vs sqrt(hxx) %.8f, |diff| %.2e "
                             "(limit 1e-3)",
                             measured, omega, std::abs(measured - omega)));

    // Stroboscopic growth inside the N=1 tongue, boundedness outside.
    const ModelParams inside{-0.5, 0.37, 0.2};
    const auto strobe_in = stroboscopic({1e-6, 0.0}, inside, 200, 2.0 * std::numbers::pi / 2000.0);
    int first_exceed = -1;
    for (std::size_t k = 0; k < strobe_in.size(); ++k)
        if (std::hypot(strobe_in[k].x, strobe_in[k].y) > 1e-3) {
            first_exceed = static_cast<int>(k);
            break;
        }
    const bool growth_ok = first_exceed >= 0;
    r.details.push_back(first_exceed >= 0
                            ? strf("(mu, alpha, eps) = (-1/2, 0.37, 0.2): radius passes 1e-3 after %d periods",
                                   first_exceed)
                            : strf("(mu, alpha, eps) = (-1/2, 0.37, 0.2): radius %.3e after 200 periods",
                                   std::hypot(strobe_in.back().x, strobe_in.back().y)));
    const ModelParams outside{-0.5, 0.75, 0.2};
    const auto strobe_out = stroboscopic({1e-6, 0.0}, outside, 1000, 2.0 * std::numbers::pi / 2000.0);
    double max_r = 0.0;
    for (const auto& p : strobe_out) max_r = std::max(max_r, std::hypot(p.x, p.y));
    const bool bounded_ok = max_r <= 1e-5;
    r.details.push_back(strf("(mu, alpha, eps) = (-1/2, 0.75, 0.2): max radius over 1000 periods %.3e (limit 1e-5)",
                             max_r));

    r.pass = energy_ok && freq_ok && growth_ok && bounded_ok;
    r.summary = strf("energy %s, frequency %s, growth %s, stable point %s", energy_ok ? "ok" : "FAIL",
                     freq_ok ? "ok" : "FAIL", growth_ok ? "ok" : "FAIL", bounded_ok ? "ok" : "FAIL");
    r.seconds = clock.seconds();
    return r;
}

// ---------------------------------------------------------------------------
// A9

CriterionResult check_a9(VerifyContext&) {
    CriterionResult r{"A9", "planar-section tongue roots", false, {}, {}, 0.0};
    Stopwatch clock;
    bool ok = true;
    for (const char* name : {"fig4", "fig5"}) {
        const ChartSpec spec = chart_preset(name);
        const TongueChart chart = tongue_chart(spec);
        std::vector<double> expected;
        for (int n = 1; n <= 3; ++n)
            expected.push_back(spec.equilibrium == Equilibrium::P1 ? (n * n - spec.mu) / 4.0 : (spec.mu - n * n) / 4.0);
        std::sort(expected.begin(), expected.end());
        const double cell = (spec.alpha_max - spec.alpha_min) / (spec.n_alpha - 1);
        const std::vector<double> roots = tongue_roots(chart);
        bool roots_ok = roots.size() == expected.size();
        std::string listing;
        for (std::size_t k = 0; k < roots.size(); ++k) {
            listing += strf("%s%.4f", k ? ", " : "", roots[k]);
            if (k < expected.size() && std::abs(roots[k] - expected[k]) > cell) roots_ok = false;
        }
        r.details.push_back(strf("%s: roots on eps=0 at {%s}, expected {%.4f, %.4f, %.4f}, cell %.4f: %s", name,
                                 listing.c_str(), expected[0], expected[1], expected[2], cell,
                                 roots_ok ? "ok" : "MISMATCH"));

        TongueChart again = chart;
        again.cells = classify_grid(spec);
        const bool deterministic = emit_csv(chart) == emit_csv(again);
        r.details.push_back(strf("%s: CSV byte-identical across runs: %s", name, deterministic ? "yes" : "NO"));

        double worst_overlay = 0.0;
        for (const auto& fb : chart.floquet_boundaries) {
            for (const auto& so : chart.series_overlays) {
                if (so.n != fb.n || fb.label.rfind(so.label, 0) != 0) continue;
                for (std::size_t k = 0; k < fb.alpha.size(); ++k) {
                    if (fb.eps[k] > 0.2) continue;
                    const auto it = std::find_if(so.eps.begin(), so.eps.end(),
                                                 [&](double e) { return std::abs(e - fb.eps[k]) < 1e-12; });
                    if (it != so.eps.end())
                        worst_overlay = std::max(
                            worst_overlay, std::abs(so.alpha[static_cast<std::size_t>(it - so.eps.begin())] - fb.alpha[k]));
                }
            }
        }
        r.details.push_back(strf("%s: max |series overlay - Floquet boundary| for eps <= 0.2: %.2e; %zu warnings", name,
                                 worst_overlay, chart.warnings.size()));
        ok = ok && roots_ok && deterministic;
    }
    r.pass = ok;
    r.summary = ok ? "fig4 and fig5 roots within one grid cell; CSV deterministic" : "see details";
    r.seconds = clock.seconds();
    return r;
}

// ---------------------------------------------------------------------------

VerifyReport run_verify(VerifyDepth depth, const std::string& golden_path) {
    VerifyContext ctx(golden_path);
    VerifyReport report;
    report.depth = depth;
    report.criteria.push_back(check_a1(ctx));
    report.criteria.push_back(check_a2(ctx));
    report.criteria.push_back(check_a3(ctx));
    if (depth == VerifyDepth::Full) {
        report.criteria.push_back(check_a4(ctx));
        report.criteria.push_back(check_a5(ctx));
        report.criteria.push_back(check_a6(ctx));
        report.criteria.push_back(check_a7(ctx));
        report.criteria.push_back(check_a8(ctx));
        report.criteria.push_back(check_a9(ctx));
        report.p2n2_section = p2n2_discrepancy_section(ctx);
    }
    return report;
}

void print_criterion(const CriterionResult& r, std::ostream& out, bool with_details) {
    out << r.id << ' ' << (r.pass ? "PASS" : "FAIL") << "  " << r.title << ": " << r.summary << '\n';
    if (!with_details) return;
    for (const auto& d : r.details) out << "    " << d << '\n';
}

void print_report(const VerifyReport& report, std::ostream& out) {
    out << "verify (" << (report.depth == VerifyDepth::Quick ? "quick" : "full") << ")\n";
    for (const auto& r : report.criteria) print_criterion(r, out);
    if (!report.p2n2_section.empty()) {
        out << "\nP2/N=2 discrepancy report\n";
        for (const auto& l : report.p2n2_section) out << "    " << l << '\n';
    }
    int failed = 0;
    for (const auto& r : report.criteria) failed += r.pass ? 0 : 1;
    out << '\n' << report.criteria.size() - static_cast<std::size_t>(failed) << '/' << report.criteria.size()
        << " criteria passed";
    if (failed) {
        out << "; failing:";
        for (const auto& r : report.criteria)
            if (!r.pass) out << ' ' << r.id;
    }
    out << '\n';
}

}  // namespace pendulum
