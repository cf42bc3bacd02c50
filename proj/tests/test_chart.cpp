#include "pendulum/chart.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

using namespace pendulum;

namespace {

ChartSpec small_spec() {
    ChartSpec s;
    s.equilibrium = Equilibrium::P1;
    s.mu = 0.0;
    s.alpha_min = -0.5;
    s.alpha_max = 1.5;
    s.n_alpha = 9;
    s.eps_min = 0.0;
    s.eps_max = 0.4;
    s.n_eps = 5;
    s.steps = 1000;
    return s;
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

}  // namespace

TEST_CASE("ChartSpec validation") {
    ChartSpec s = small_spec();
    CHECK_NOTHROW(s.validate());
    s.alpha_max = s.alpha_min;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    s = small_spec();
    s.n_eps = 1;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    s = small_spec();
    s.eps_min = -0.1;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    s = small_spec();
    s.overlay_orders = {0};
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    CHECK(small_spec().alpha_at(0) == -0.5);
    CHECK(small_spec().alpha_at(8) == 1.5);
    CHECK(small_spec().eps_at(4) == doctest::Approx(0.4));
}

TEST_CASE("presets") {
    for (const auto& name : chart_preset_names()) CHECK_NOTHROW(chart_preset(name).validate());
    CHECK(chart_preset("fig4").mu == -0.5);
    CHECK(chart_preset("fig4").overlay_orders == std::vector<int>{1, 2, 3});
    CHECK(chart_preset("fig5").equilibrium == Equilibrium::P2);
    CHECK(chart_preset("fig5").mu == 20.0);
    CHECK_THROWS_AS(chart_preset("fig9"), std::invalid_argument);
}

TEST_CASE("config file overrides a base chart") {
    const std::string path = "chart_config_test.ini";
    {
        std::ofstream f(path);
        f << "# tongue chart\nequilibrium = p2\nmu = 20\nalpha_min = 3.5\nalpha_max = 5.5\nn_alpha = 11\n"
             "overlay_orders = 1, 2\n";
    }
    const ChartSpec s = load_chart_config(path, small_spec());
    CHECK(s.equilibrium == Equilibrium::P2);
    CHECK(s.mu == 20.0);
    CHECK(s.alpha_max == 5.5);
    CHECK(s.n_alpha == 11);
    CHECK(s.n_eps == 5);  // kept from the base
    CHECK(s.overlay_orders == std::vector<int>{1, 2});
    {
        std::ofstream f(path);
        f << "colour = red\n";
    }
    CHECK_THROWS_AS(load_chart_config(path), std::runtime_error);
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_chart_config("does_not_exist.ini"), std::runtime_error);
}

TEST_CASE("parallel classification equals the serial reference") {
    ChartSpec s = small_spec();
    s.n_alpha = 23;
    s.n_eps = 7;
    const auto par = classify_grid(s);
    const auto ser = classify_grid_serial(s);
    REQUIRE(par.size() == ser.size());
    for (std::size_t i = 0; i < par.size(); ++i) {
        CHECK(par[i].trace == ser[i].trace);
        CHECK(par[i].det == ser[i].det);
        CHECK(par[i].verdict.tag == ser[i].verdict.tag);
    }
}

TEST_CASE("eps = 0 row: unstable iff hxx < 0, boundary iff 2 omega is an integer") {
    const ChartSpec s = small_spec();
    const TongueChart c = tongue_chart(s);
    REQUIRE(c.cells.size() == 45);
    for (int i = 0; i < s.n_alpha; ++i) {
        const double alpha = s.alpha_at(i);
        const double h = hxx(s.equilibrium, {s.mu, alpha, 0.0});
        const Stability tag = c.at(0, i).verdict.tag;
        const double two_omega = h >= 0 ? 2 * std::sqrt(h) : -1.0;
        const bool resonant = h >= 0 && std::abs(two_omega - std::round(two_omega)) < 1e-12;
        if (h < 0) CHECK(tag == Stability::Unstable);
        else if (resonant) CHECK(tag == Stability::Boundary);
        else CHECK(tag == Stability::Stable);
    }
}

TEST_CASE("CSV emission") {
    ChartSpec s = small_spec();
    s.n_alpha = 2;
    s.n_eps = 2;
    const TongueChart c = tongue_chart(s);
    const auto l = lines(emit_csv(c));
    REQUIRE(l.size() == 5);
    CHECK(l[0] == "mu,alpha,eps,trace,det,verdict");
    CHECK(l[1].rfind("0,-0.5,0,", 0) == 0);
    CHECK(l[2].rfind("0,1.5,0,", 0) == 0);
    CHECK(l[3].rfind("0,-0.5,0.4,", 0) == 0);
    const std::set<std::string> vocab{"stable", "unstable", "boundary"};
    for (std::size_t k = 1; k < l.size(); ++k) CHECK(vocab.count(l[k].substr(l[k].rfind(',') + 1)) == 1);
    CHECK(emit_csv(c) == emit_csv(tongue_chart(s)));
}

TEST_CASE("overlays are clipped to the chart and follow the Floquet boundaries") {
    ChartSpec s = chart_preset("fig4");
    s.n_alpha = 41;
    s.n_eps = 11;
    s.steps = 1000;
    s.boundary_points = 11;
    s.boundary_steps = 8000;
    const TongueChart c = tongue_chart(s);
    CHECK_FALSE(c.series_overlays.empty());
    CHECK(c.floquet_boundaries.size() >= 6);
    for (const auto* group : {&c.series_overlays, &c.floquet_boundaries}) {
        for (const auto& p : *group) {
            REQUIRE(p.alpha.size() == p.eps.size());
            for (std::size_t k = 0; k < p.alpha.size(); ++k) {
                CHECK(p.alpha[k] >= s.alpha_min);
                CHECK(p.alpha[k] <= s.alpha_max);
                CHECK(p.eps[k] >= s.eps_min);
                CHECK(p.eps[k] <= s.eps_max);
            }
        }
    }
    for (const auto& fb : c.floquet_boundaries) {
        const std::string series_label = fb.label.substr(0, fb.label.rfind(" floquet"));
        for (std::size_t k = 0; k < fb.alpha.size(); ++k) {
            if (fb.eps[k] > 0.2 + 1e-12) continue;
            for (const auto& so : c.series_overlays) {
                if (so.label != series_label) continue;
                for (std::size_t j = 0; j < so.eps.size(); ++j)
                    if (std::abs(so.eps[j] - fb.eps[k]) < 1e-12) CHECK(std::abs(so.alpha[j] - fb.alpha[k]) <= 1e-3);
            }
        }
    }
    CHECK(c.warnings.empty());
}

TEST_CASE("tongue roots") {
    ChartSpec s = chart_preset("fig4");
    s.n_eps = 2;
    s.steps = 1000;
    s.overlay_orders.clear();
    const auto roots = tongue_roots(tongue_chart(s));
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == doctest::Approx(0.375));
    CHECK(roots[1] == doctest::Approx(1.125));
    CHECK(roots[2] == doctest::Approx(2.375));

    s.eps_min = 0.1;
    CHECK_THROWS_AS(tongue_roots(tongue_chart(s)), std::invalid_argument);
}

TEST_CASE("SVG emission") {
    ChartSpec s = small_spec();
    s.overlay_orders = {1};
    s.boundary_points = 3;
    const TongueChart c = tongue_chart(s);
    std::ostringstream out;
    emit_svg(c, out);
    const std::string svg = out.str();
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("<path") != std::string::npos);
    CHECK(svg.find("<title>N=1 k20</title>") != std::string::npos);
    CHECK(svg.find("#3a3a3a") != std::string::npos);
}
