#include "pendulum/chart.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <sstream>

namespace pendulum {

double ChartSpec::alpha_at(int i) const {
    return alpha_min + (alpha_max - alpha_min) * static_cast<double>(i) / static_cast<double>(n_alpha - 1);
}

double ChartSpec::eps_at(int j) const {
    return eps_min + (eps_max - eps_min) * static_cast<double>(j) / static_cast<double>(n_eps - 1);
}

void ChartSpec::validate() const {
    if (!(alpha_max > alpha_min)) throw std::invalid_argument("chart: alpha range is empty");
    if (!(eps_max > eps_min)) throw std::invalid_argument("chart: eps range is empty");
    if (eps_min < 0.0) throw std::invalid_argument("chart: eps must be non-negative");
    if (n_alpha < 2 || n_eps < 2) throw std::invalid_argument("chart: resolution must be >= 2 in each axis");
    if (steps < 100 || boundary_steps < 100) throw std::invalid_argument("chart: at least 100 steps per period");
    for (int n : overlay_orders)
        if (n < 1) throw std::invalid_argument("chart: overlay orders must be >= 1");
}

ChartSpec chart_preset(std::string_view name) {
    ChartSpec s;
    s.eps_min = 0.0;
    s.eps_max = 1.0;
    s.n_eps = 101;
    if (name == "fig2") {
        s.equilibrium = Equilibrium::P1;
        s.mu = -0.5;
        s.alpha_min = 0.0;
        s.alpha_max = 1.0;
        s.n_alpha = 201;
        s.overlay_orders = {1};
    } else if (name == "fig3") {
        s.equilibrium = Equilibrium::P1;
        s.mu = -0.5;
        s.alpha_min = 0.0;
        s.alpha_max = 1.5;
        s.n_alpha = 241;
        s.overlay_orders = {1, 2};
    } else if (name == "fig4") {
        s.equilibrium = Equilibrium::P1;
        s.mu = -0.5;
        s.alpha_min = 0.0;
        s.alpha_max = 2.5;
        s.n_alpha = 201;
        s.overlay_orders = {1, 2, 3};
    } else if (name == "fig5") {
        s.equilibrium = Equilibrium::P2;
        s.mu = 20.0;
        s.alpha_min = 2.0;
        s.alpha_max = 5.5;
        s.n_alpha = 281;
        s.overlay_orders = {1, 2, 3};
    } else {
        throw std::invalid_argument("unknown chart preset '" + std::string(name) + "'");
    }
    return s;
}

std::vector<std::string> chart_preset_names() { return {"fig2", "fig3", "fig4", "fig5"}; }

ChartSpec load_chart_config(const std::string& path, ChartSpec base) {
    boost::property_tree::ptree tree;
    try {
        boost::property_tree::ini_parser::read_ini(path, tree);
    } catch (const boost::property_tree::ini_parser_error& e) {
        throw std::runtime_error("chart config: " + std::string(e.what()));
    }
    for (const auto& [key, node] : tree) {
        if (!node.empty()) throw std::runtime_error("chart config: sections are not supported ('" + key + "')");
        const std::string value = node.get_value<std::string>();
        if (key == "equilibrium") base.equilibrium = parse_equilibrium(value);
        else if (key == "mu") base.mu = node.get_value<double>();
        else if (key == "alpha_min") base.alpha_min = node.get_value<double>();
        else if (key == "alpha_max") base.alpha_max = node.get_value<double>();
        else if (key == "eps_min") base.eps_min = node.get_value<double>();
        else if (key == "eps_max") base.eps_max = node.get_value<double>();
        else if (key == "n_alpha") base.n_alpha = node.get_value<int>();
        else if (key == "n_eps") base.n_eps = node.get_value<int>();
        else if (key == "steps") base.steps = node.get_value<int>();
        else if (key == "boundary_steps") base.boundary_steps = node.get_value<int>();
        else if (key == "overlay_orders") {
            base.overlay_orders.clear();
            std::stringstream ss(value);
            std::string item;
            while (std::getline(ss, item, ','))
                if (item.find_first_not_of(" \t") != std::string::npos) base.overlay_orders.push_back(std::stoi(item));
        } else {
            throw std::runtime_error("chart config: unknown key '" + key + "'");
        }
    }
    return base;
}

namespace {

GridCell evaluate_cell(const ChartSpec& spec, const PeriodGrid& grid, std::size_t index) {
    const auto n_alpha = static_cast<std::size_t>(spec.n_alpha);
    const int i_eps = static_cast<int>(index / n_alpha);
    const int i_alpha = static_cast<int>(index % n_alpha);
    const Monodromy2x2 m = monodromy(spec.equilibrium, {spec.mu, spec.alpha_at(i_alpha), spec.eps_at(i_eps)}, grid);
    return {m.trace(), m.det(), classify(m)};
}

}  // namespace

std::vector<GridCell> classify_grid_serial(const ChartSpec& spec) {
    spec.validate();
    const PeriodGrid grid(spec.steps);
    const std::size_t count = static_cast<std::size_t>(spec.n_alpha) * static_cast<std::size_t>(spec.n_eps);
    std::vector<GridCell> cells(count);
    for (std::size_t k = 0; k < count; ++k) cells[k] = evaluate_cell(spec, grid, k);
    return cells;
}

std::vector<GridCell> classify_grid(const ChartSpec& spec) {
    spec.validate();
    const PeriodGrid grid(spec.steps);
    const long count = static_cast<long>(spec.n_alpha) * spec.n_eps;
    std::vector<GridCell> cells(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(static)
    for (long k = 0; k < count; ++k) cells[static_cast<std::size_t>(k)] = evaluate_cell(spec, grid, static_cast<std::size_t>(k));
    return cells;
}

namespace {

// Splits a polyline wherever it leaves the chart's alpha range.
void append_clipped(std::vector<Polyline>& out, const std::string& label, int n, const std::vector<double>& alpha,
                    const std::vector<double>& eps, const ChartSpec& spec) {
    Polyline current{label, n, {}, {}};
    for (std::size_t k = 0; k < alpha.size(); ++k) {
        const bool inside = std::isfinite(alpha[k]) && alpha[k] >= spec.alpha_min && alpha[k] <= spec.alpha_max;
        if (inside) {
            current.alpha.push_back(alpha[k]);
            current.eps.push_back(eps[k]);
        } else if (!current.alpha.empty()) {
            out.push_back(current);
            current.alpha.clear();
            current.eps.clear();
        }
    }
    if (!current.alpha.empty()) out.push_back(std::move(current));
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

}  // namespace

TongueChart tongue_chart(const ChartSpec& spec) {
    spec.validate();
    TongueChart chart;
    chart.spec = spec;
    chart.cells = classify_grid(spec);

    for (int n : spec.overlay_orders) {
        const ResonanceAnalysis analysis = analyze_resonance(spec.equilibrium, n, spec.series_order);
        const BoundarySeries* branches[2] = {&analysis.branches.first, &analysis.branches.second};

        for (const BoundarySeries* b : branches) {
            std::vector<double> alpha, eps;
            for (int k = 0; k < spec.series_points; ++k) {
                const double e = spec.eps_min + (spec.eps_max - spec.eps_min) * k / (spec.series_points - 1);
                eps.push_back(e);
                alpha.push_back(boundary_alpha(*b, spec.mu, e));
            }
            append_clipped(chart.series_overlays, "N=" + std::to_string(n) + " " + to_string(b->branch), n, alpha,
                           eps, spec);
        }

        // Floquet-located boundaries on an eps sub-grid, seeded from the series.
        std::vector<double> sub_eps(static_cast<std::size_t>(spec.boundary_points));
        for (int k = 0; k < spec.boundary_points; ++k)
            sub_eps[static_cast<std::size_t>(k)] =
                spec.eps_min + (spec.eps_max - spec.eps_min) * k / (spec.boundary_points - 1);
        std::vector<double> located[2];
        located[0].assign(sub_eps.size(), std::nan(""));
        located[1].assign(sub_eps.size(), std::nan(""));
        std::vector<std::string> notes(sub_eps.size() * 2);
        const long jobs = static_cast<long>(sub_eps.size()) * 2;
#pragma omp parallel for schedule(dynamic)
        for (long job = 0; job < jobs; ++job) {
            const auto k = static_cast<std::size_t>(job / 2);
            const auto side = static_cast<std::size_t>(job % 2);
            const double e = sub_eps[k];
            const double seed = boundary_alpha(*branches[side], spec.mu, e);
            const double other = boundary_alpha(*branches[1 - side], spec.mu, e);
            const double gap = std::abs(seed - other);
            const double window = gap > 1e-12 ? 0.45 * gap : 1e-3;
            try {
                located[side][k] = find_boundary(spec.equilibrium, spec.mu, e, seed, window, spec.boundary_steps);
            } catch (const NoBracketError&) {
                notes[static_cast<std::size_t>(job)] = "N=" + std::to_string(n) + " " +
                                                       to_string(branches[side]->branch) +
                                                       ": no Floquet bracket at eps=" + format_double(e);
            }
        }
        for (const auto& note : notes)
            if (!note.empty()) chart.warnings.push_back(note);
        for (std::size_t side = 0; side < 2; ++side) {
            std::vector<double> alpha, eps;
            for (std::size_t k = 0; k < sub_eps.size(); ++k) {
                if (std::isnan(located[side][k])) {
                    append_clipped(chart.floquet_boundaries,
                                   "N=" + std::to_string(n) + " " + to_string(branches[side]->branch) + " floquet", n,
                                   alpha, eps, spec);
                    alpha.clear();
                    eps.clear();
                    continue;
                }
                alpha.push_back(located[side][k]);
                eps.push_back(sub_eps[k]);
            }
            append_clipped(chart.floquet_boundaries,
                           "N=" + std::to_string(n) + " " + to_string(branches[side]->branch) + " floquet", n, alpha,
                           eps, spec);
        }
    }
    return chart;
}

std::vector<double> tongue_roots(const TongueChart& chart) {
    const ChartSpec& spec = chart.spec;
    if (spec.eps_min != 0.0) throw std::invalid_argument("tongue_roots: chart must include the eps = 0 row");
    std::vector<double> roots;
    for (int i = 1; i + 1 < spec.n_alpha; ++i) {
        const double left = std::abs(chart.at(0, i - 1).trace);
        const double mid = std::abs(chart.at(0, i).trace);
        const double right = std::abs(chart.at(0, i + 1).trace);
        if (mid >= left && mid > right && mid > 1.0 && mid <= 2.0 + kClassifyTol) roots.push_back(spec.alpha_at(i));
    }
    return roots;
}

void emit_csv(const TongueChart& chart, std::ostream& out) {
    const ChartSpec& spec = chart.spec;
    out << "mu,alpha,eps,trace,det,verdict\n";
    for (int j = 0; j < spec.n_eps; ++j) {
        for (int i = 0; i < spec.n_alpha; ++i) {
            const GridCell& c = chart.at(j, i);
            out << format_double(spec.mu) << ',' << format_double(spec.alpha_at(i)) << ','
                << format_double(spec.eps_at(j)) << ',' << format_double(c.trace) << ',' << format_double(c.det) << ','
                << to_string(c.verdict.tag) << '\n';
        }
    }
}

std::string emit_csv(const TongueChart& chart) {
    std::ostringstream ss;
    emit_csv(chart, ss);
    return ss.str();
}

void emit_svg(const TongueChart& chart, std::ostream& out) {
    const ChartSpec& spec = chart.spec;
    constexpr double width = 720.0, height = 480.0, left = 70.0, top = 30.0, right = 150.0, bottom = 60.0;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;
    const double cell_w = plot_w / spec.n_alpha;
    const double cell_h = plot_h / spec.n_eps;
    const auto px = [&](double alpha) { return left + (alpha - spec.alpha_min) / (spec.alpha_max - spec.alpha_min) * plot_w; };
    const auto py = [&](double eps) { return top + plot_h - (eps - spec.eps_min) / (spec.eps_max - spec.eps_min) * plot_h; };
    const auto fmt = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2f", v);
        return std::string(buf);
    };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    out << "<g shape-rendering=\"crispEdges\">\n";
    for (int j = 0; j < spec.n_eps; ++j) {
        // Grid cell centers sit on the sample points; merge equal runs per row.
        int i = 0;
        while (i < spec.n_alpha) {
            const Stability tag = chart.at(j, i).verdict.tag;
            int run = i + 1;
            while (run < spec.n_alpha && chart.at(j, run).verdict.tag == tag) ++run;
            const char* fill = tag == Stability::Stable ? "#eeeeee" : tag == Stability::Unstable ? "#3a3a3a" : "#c0392b";
            out << "<rect x=\"" << fmt(left + i * cell_w) << "\" y=\"" << fmt(top + plot_h - (j + 1) * cell_h)
                << "\" width=\"" << fmt((run - i) * cell_w) << "\" height=\"" << fmt(cell_h) << "\" fill=\"" << fill
                << "\"/>\n";
            i = run;
        }
    }
    out << "</g>\n";

    const auto path = [&](const Polyline& p, const char* stroke, const char* dash) {
        if (p.alpha.size() < 2) return;
        out << "<path d=\"";
        for (std::size_t k = 0; k < p.alpha.size(); ++k)
            out << (k == 0 ? "M" : " L") << fmt(px(p.alpha[k])) << ',' << fmt(py(p.eps[k]));
        out << "\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"1.5\"";
        if (dash) out << " stroke-dasharray=\"" << dash << "\"";
        out << "><title>" << p.label << "</title></path>\n";
    };
    for (const auto& p : chart.series_overlays) path(p, "#1f77b4", nullptr);
    for (const auto& p : chart.floquet_boundaries) path(p, "#ff7f0e", "4 3");

    std::map<int, double> label_pos;
    for (const auto& p : chart.series_overlays)
        if (!p.alpha.empty()) label_pos.try_emplace(p.n, p.alpha.front());
    for (const auto& [n, alpha] : label_pos)
        out << "<text x=\"" << fmt(px(alpha)) << "\" y=\"" << fmt(top + plot_h + 14) << "\" font-size=\"11\" text-anchor=\"middle\">N="
            << n << "</text>\n";

    out << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << plot_w << "\" height=\"" << plot_h
        << "\" fill=\"none\" stroke=\"black\"/>\n";
    out << "<text x=\"" << left << "\" y=\"" << fmt(top + plot_h + 32) << "\" font-size=\"12\">" << fmt(spec.alpha_min) << "</text>\n";
    out << "<text x=\"" << fmt(left + plot_w) << "\" y=\"" << fmt(top + plot_h + 32) << "\" font-size=\"12\" text-anchor=\"end\">"
        << fmt(spec.alpha_max) << "</text>\n";
    out << "<text x=\"" << fmt(left + plot_w / 2) << "\" y=\"" << fmt(height - 10) << "\" font-size=\"13\" text-anchor=\"middle\">alpha</text>\n";
    out << "<text x=\"" << fmt(left - 8) << "\" y=\"" << fmt(top + plot_h) << "\" font-size=\"12\" text-anchor=\"end\">" << fmt(spec.eps_min) << "</text>\n";
    out << "<text x=\"" << fmt(left - 8) << "\" y=\"" << fmt(top + 10) << "\" font-size=\"12\" text-anchor=\"end\">" << fmt(spec.eps_max) << "</text>\n";
    out << "<text x=\"20\" y=\"" << fmt(top + plot_h / 2) << "\" font-size=\"13\">eps</text>\n";
    out << "<text x=\"" << left << "\" y=\"18\" font-size=\"13\">" << to_string(spec.equilibrium) << ", mu = " << fmt(spec.mu)
        << "</text>\n";

    const double lx = left + plot_w + 15;
    const auto legend = [&](double y, const char* color, const char* text, bool line, const char* dash = nullptr) {
        if (line) {
            out << "<line x1=\"" << lx << "\" y1=\"" << y << "\" x2=\"" << lx + 20 << "\" y2=\"" << y << "\" stroke=\"" << color
                << "\" stroke-width=\"1.5\"";
            if (dash) out << " stroke-dasharray=\"" << dash << "\"";
            out << "/>\n";
        } else {
            out << "<rect x=\"" << lx << "\" y=\"" << y - 6 << "\" width=\"20\" height=\"12\" fill=\"" << color
                << "\" stroke=\"black\" stroke-width=\"0.5\"/>\n";
        }
        out << "<text x=\"" << lx + 26 << "\" y=\"" << y + 4 << "\" font-size=\"11\">" << text << "</text>\n";
    };
    legend(top + 10, "#eeeeee", "stable", false);
    legend(top + 30, "#3a3a3a", "unstable", false);
    legend(top + 50, "#1f77b4", "series", true);
    legend(top + 70, "#ff7f0e", "Floquet", true, "4 3");
    out << "</svg>\n";
}

}  // namespace pendulum
