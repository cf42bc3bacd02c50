#include "pendulum/chart.hpp"
#include "pendulum/floquet.hpp"
#include "pendulum/normal_form.hpp"
#include "pendulum/simulate.hpp"
#include "pendulum/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

using namespace pendulum;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

std::string fmt15(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    return out;
}

nlohmann::json poly_list(const std::vector<AlphaPoly>& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& p : v) arr.push_back(p.str());
    return arr;
}

nlohmann::json series_json(const BoundarySeries& s) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : s.coeffs) coeffs.push_back(c.str());
    return {{"branch", to_string(s.branch)}, {"alpha0", s.equilibrium == Equilibrium::P1 ? "(N^2 - mu)/4" : "(mu - N^2)/4"},
            {"coeffs", coeffs}};
}

int run_normalize(const std::string& eq, int n, int order, const std::string& json_path) {
    const Equilibrium e = parse_equilibrium(eq);
    const ResonanceAnalysis a = analyze_resonance(e, n, order);
    const NormalFormResult& nf = a.normal_form;
    std::cout << to_string(e) << " N=" << n << " order " << order << '\n';
    for (int m = 1; m <= nf.order(); ++m) {
        const auto i = static_cast<std::size_t>(m - 1);
        std::cout << "k20^(" << m << ") = " << nf.k20[i].str() << '\n';
        std::cout << "k11^(" << m << ") = " << nf.k11[i].str() << '\n';
        std::cout << "k02^(" << m << ") = " << nf.k02[i].str() << '\n';
    }
    const std::string alpha0 = e == Equilibrium::P1 ? "(" + std::to_string(n * n) + " - mu)/4"
                                                    : "(mu - " + std::to_string(n * n) + ")/4";
    for (const BoundarySeries* s : {&a.branches.first, &a.branches.second}) {
        std::cout << to_string(s->branch) << ": alpha = " << alpha0;
        for (std::size_t j = 0; j < s->coeffs.size(); ++j) {
            const BigRational& c = s->coeffs[j];
            if (c.is_zero()) continue;
            std::cout << (c.sign() < 0 ? " - " : " + ") << (c.sign() < 0 ? -c : c).str() << "*eps^" << j + 1;
        }
        std::cout << '\n';
    }
    if (!json_path.empty()) {
        const nlohmann::json doc = {{"equilibrium", to_string(e)},
                                    {"n", n},
                                    {"order", order},
                                    {"k20", poly_list(nf.k20)},
                                    {"k11", poly_list(nf.k11)},
                                    {"k02", poly_list(nf.k02)},
                                    {"branches", {series_json(a.branches.first), series_json(a.branches.second)}}};
        if (json_path == "-") {
            std::cout << doc.dump(2) << '\n';
        } else {
            auto out = open_out(json_path);
            out << doc.dump(2) << '\n';
        }
    }
    return 0;
}

int run_floquet(const std::string& eq, double mu, double alpha, double eps, int steps) {
    const Equilibrium e = parse_equilibrium(eq);
    if (steps < 100) throw std::invalid_argument("--steps must be >= 100");
    const Monodromy2x2 m = monodromy(e, {mu, alpha, eps}, steps);
    const StabilityVerdict v = classify(m);
    std::cout << "trace " << fmt15(m.trace()) << '\n'
              << "det " << fmt15(m.det()) << '\n'
              << "verdict " << to_string(v.tag) << '\n'
              << "margin " << fmt15(v.margin) << '\n';
    return 0;
}

int run_boundary(const std::string& eq, int n, double mu, double eps, int order, int steps) {
    const Equilibrium e = parse_equilibrium(eq);
    if (eps < 0.0) throw std::invalid_argument("--eps must be non-negative");
    const ResonanceAnalysis a = analyze_resonance(e, n, order);
    std::cout << "alpha0 " << fmt15(ResonanceCurve{e, n}.alpha0(mu)) << '\n';
    const BoundarySeries* b[2] = {&a.branches.first, &a.branches.second};
    for (int side = 0; side < 2; ++side) {
        const double seed = boundary_alpha(*b[side], mu, eps);
        const double gap = std::abs(seed - boundary_alpha(*b[1 - side], mu, eps));
        std::cout << to_string(b[side]->branch) << " series " << fmt15(seed);
        try {
            const double located = find_boundary(e, mu, eps, seed, gap > 1e-12 ? 0.45 * gap : 1e-3, steps);
            std::cout << " floquet " << fmt15(located) << " diff " << fmt15(seed - located);
        } catch (const NoBracketError& err) {
            std::cout << " floquet unavailable (" << err.what() << ")";
        }
        std::cout << '\n';
    }
    return 0;
}

struct TongueOptions {
    std::string preset, config, out_csv, out_svg, equilibrium;
    double mu = 0, alpha_min = 0, alpha_max = 0, eps_min = 0, eps_max = 0;
    int n_alpha = 0, n_eps = 0, steps = 0;
    std::vector<int> overlay;
};

int run_tongues(const TongueOptions& o, const CLI::App& cmd) {
    if (o.preset.empty() == o.config.empty()) throw std::invalid_argument("give exactly one of --preset or --config");
    ChartSpec spec = o.preset.empty() ? load_chart_config(o.config) : chart_preset(o.preset);
    if (cmd.count("--equilibrium")) spec.equilibrium = parse_equilibrium(o.equilibrium);
    if (cmd.count("--mu")) spec.mu = o.mu;
    if (cmd.count("--alpha-min")) spec.alpha_min = o.alpha_min;
    if (cmd.count("--alpha-max")) spec.alpha_max = o.alpha_max;
    if (cmd.count("--eps-min")) spec.eps_min = o.eps_min;
    if (cmd.count("--eps-max")) spec.eps_max = o.eps_max;
    if (cmd.count("--n-alpha")) spec.n_alpha = o.n_alpha;
    if (cmd.count("--n-eps")) spec.n_eps = o.n_eps;
    if (cmd.count("--steps")) spec.steps = o.steps;
    if (cmd.count("--overlay")) spec.overlay_orders = o.overlay;
    spec.validate();

    const TongueChart chart = tongue_chart(spec);
    if (!o.out_csv.empty()) {
        auto out = open_out(o.out_csv);
        emit_csv(chart, out);
    }
    if (!o.out_svg.empty()) {
        auto out = open_out(o.out_svg);
        emit_svg(chart, out);
    }
    std::size_t unstable = 0;
    for (const auto& c : chart.cells) unstable += c.verdict.tag == Stability::Unstable ? 1 : 0;
    std::cout << to_string(spec.equilibrium) << " mu=" << fmt15(spec.mu) << " grid " << spec.n_alpha << "x"
              << spec.n_eps << ", unstable cells " << unstable << '\n';
    if (spec.eps_min == 0.0) {
        std::cout << "tongue roots on eps=0:";
        for (double r : tongue_roots(chart)) std::cout << ' ' << fmt15(r);
        std::cout << '\n';
    }
    for (const auto& w : chart.warnings) std::cerr << "warning: " << w << '\n';
    if (o.out_csv.empty() && o.out_svg.empty()) emit_csv(chart, std::cout);
    return 0;
}

struct SimOptions {
    double mu = 0, alpha = 1, eps = 0, x0 = 0.1, y0 = 0, tau_end = 20, dt = 1e-3;
    std::string method = "rk4", out;
    int stride = 100, strobe = 0;
};

int run_simulate(const SimOptions& o) {
    const Integrator method = parse_integrator(o.method);
    const ModelParams p{o.mu, o.alpha, o.eps};
    std::ofstream file;
    if (!o.out.empty()) file = open_out(o.out);
    std::ostream& out = o.out.empty() ? std::cout : file;
    out << "tau,x,y\n";
    if (o.strobe > 0) {
        const auto pts = stroboscopic({o.x0, o.y0}, p, o.strobe, o.dt, method);
        for (std::size_t k = 0; k < pts.size(); ++k)
            out << fmt15(2.0 * std::numbers::pi * static_cast<double>(k)) << ',' << fmt15(pts[k].x) << ','
                << fmt15(pts[k].y) << '\n';
        return 0;
    }
    const Trajectory tr = integrate({o.x0, o.y0}, p, o.tau_end, o.dt, method, o.stride);
    for (const auto& s : tr.samples) out << fmt15(s.tau) << ',' << fmt15(s.x) << ',' << fmt15(s.y) << '\n';
    return 0;
}

int run_verify_cmd(const std::string& depth, const std::string& golden) {
    const VerifyReport report = run_verify(parse_verify_depth(depth), golden.empty() ? default_golden_path() : golden);
    print_report(report, std::cout);
    return report.all_pass() ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stability boundaries of the parametrically driven charged pendulum"};
    app.require_subcommand(1);

    std::string eq = "p1", golden, depth = "quick", json_path;
    int n = 1, order = kDefaultOrder, steps = kDefaultSteps;
    double mu = 0.0, alpha = 0.0, eps = 0.0;

    auto* normalize = app.add_subcommand("normalize", "normal-form coefficients and boundary series");
    normalize->add_option("--equilibrium", eq, "p1 or p2")->required();
    normalize->add_option("--n", n, "resonance order N (2 omega = N)")->required()->check(CLI::PositiveNumber);
    normalize->add_option("--order", order, "normalization depth")->check(CLI::Range(1, 8));
    normalize->add_option("--json", json_path, "write a JSON dump to this path ('-' for stdout)");

    auto* floquet = app.add_subcommand("floquet", "monodromy trace, determinant and verdict");
    floquet->add_option("--equilibrium", eq, "p1 or p2")->required();
    floquet->add_option("--mu", mu)->required();
    floquet->add_option("--alpha", alpha)->required();
    floquet->add_option("--eps", eps)->required();
    floquet->add_option("--steps", steps, "RK4 steps per period");

    int boundary_steps = 16000;
    auto* boundary = app.add_subcommand("boundary", "series boundary values checked against Floquet");
    boundary->add_option("--equilibrium", eq, "p1 or p2")->required();
    boundary->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    boundary->add_option("--mu", mu)->required();
    boundary->add_option("--eps", eps)->required();
    boundary->add_option("--order", order)->check(CLI::Range(1, 8));
    boundary->add_option("--steps", boundary_steps, "RK4 steps per period for the Floquet check");

    TongueOptions topt;
    auto* tongues = app.add_subcommand("tongues", "stability chart of a planar section");
    tongues->add_option("--preset", topt.preset, "fig2, fig3, fig4 or fig5");
    tongues->add_option("--config", topt.config, "key = value chart file")->check(CLI::ExistingFile);
    tongues->add_option("--out-csv", topt.out_csv);
    tongues->add_option("--out-svg", topt.out_svg);
    tongues->add_option("--equilibrium", topt.equilibrium);
    tongues->add_option("--mu", topt.mu);
    tongues->add_option("--alpha-min", topt.alpha_min);
    tongues->add_option("--alpha-max", topt.alpha_max);
    tongues->add_option("--eps-min", topt.eps_min);
    tongues->add_option("--eps-max", topt.eps_max);
    tongues->add_option("--n-alpha", topt.n_alpha);
    tongues->add_option("--n-eps", topt.n_eps);
    tongues->add_option("--steps", topt.steps);
    tongues->add_option("--overlay", topt.overlay, "resonance orders to overlay")->delimiter(',');

    SimOptions sopt;
    auto* simulate = app.add_subcommand("simulate", "nonlinear trajectory as CSV tau,x,y");
    simulate->add_option("--mu", sopt.mu);
    simulate->add_option("--alpha", sopt.alpha);
    simulate->add_option("--eps", sopt.eps)->check(CLI::NonNegativeNumber);
    simulate->add_option("--x0", sopt.x0);
    simulate->add_option("--y0", sopt.y0);
    simulate->add_option("--tau-end", sopt.tau_end);
    simulate->add_option("--dt", sopt.dt);
    simulate->add_option("--method", sopt.method, "rk4 or splitting");
    simulate->add_option("--stride", sopt.stride, "steps between rows");
    simulate->add_option("--strobe", sopt.strobe, "emit the state at tau = 2 pi k for k = 0..STROBE instead");
    simulate->add_option("--out", sopt.out, "output path (default stdout)");

    auto* verify = app.add_subcommand("verify", "run the acceptance criteria");
    verify->add_option("--depth", depth, "quick or full")->check(CLI::IsMember({"quick", "full"}));
    verify->add_option("--golden", golden, "published tables JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*normalize) return run_normalize(eq, n, order, json_path);
        if (*floquet) return run_floquet(eq, mu, alpha, eps, steps);
        if (*boundary) return run_boundary(eq, n, mu, eps, order, boundary_steps);
        if (*tongues) return run_tongues(topt, *tongues);
        if (*simulate) return run_simulate(sopt);
        if (*verify) return run_verify_cmd(depth, golden);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}
