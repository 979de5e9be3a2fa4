#include "ratsq/figures.hpp"

#include "ratsq/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ratsq {

namespace {

constexpr double kCell = 4.0;
constexpr double kLeft = 70, kTop = 40, kRight = 30, kBottom = 60;
constexpr long kGreyClamp = 10;

struct Series {
    std::string color;
    std::vector<std::pair<double, double>> points;
    bool line = false;
    std::string label;
};

double to_double(const Natural& x) { return x.convert_to<double>(); }

std::string plot_svg(const std::string& title, const std::string& x_label,
                     const std::string& y_label, double x_min, double x_max, double y_min,
                     double y_max, const std::vector<Series>& series) {
    const double width = 900, height = 540;
    svg::Frame f{x_min, x_max, y_min, y_max, kLeft, kTop, width - kLeft - kRight,
                 height - kTop - kBottom};
    svg::Document doc(width, height);
    doc.clip_rect("plot", f.left, f.top, f.width, f.height);
    for (const auto& s : series) {
        if (s.line) {
            std::vector<std::pair<double, double>> px;
            px.reserve(s.points.size());
            for (const auto& [x, y] : s.points) px.emplace_back(f.px(x), f.py(y));
            doc.polyline(px, s.color, 1.0, "plot");
        }
    }
    for (const auto& s : series) {
        if (s.line) continue;
        for (const auto& [x, y] : s.points)
            if (y >= y_min && y <= y_max) doc.circle(f.px(x), f.py(y), 1.8, s.color);
    }
    svg::draw_axes(doc, f, title, x_label, y_label);
    double ly = f.top + 8;
    for (const auto& s : series) {
        if (s.label.empty()) continue;
        doc.rect(f.left + f.width - 150, ly - 8, 10, 10, s.color);
        doc.text(f.left + f.width - 135, ly + 1, s.label, 11, "start");
        ly += 16;
    }
    return doc.str();
}

// ceil to a multiple of step, for axis headroom
double round_up(double v, double step) { return std::ceil(v / step) * step; }

std::string csv_sigma(const std::vector<SweepRecord>& records, bool bounds) {
    std::ostringstream out;
    out << (bounds ? "a,sigma,sigma1,upper\n" : "a,sigma\n");
    for (const auto& r : records) {
        out << r.a << ',' << r.sigma;
        if (bounds) out << ',' << r.sigma1 << ',' << r.upper;
        out << '\n';
    }
    return out.str();
}

std::vector<std::pair<double, double>> sigma_points(const std::vector<SweepRecord>& records) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& r : records) pts.emplace_back(to_double(r.a), to_double(r.sigma));
    return pts;
}

}  // namespace

HeatmapData heatmap_data(const Natural& a_min, const Natural& a_max, const Natural& s_min,
                         const Natural& s_max, HeatmapMode mode, int jobs) {
    HeatmapData out{mode, a_min, a_max, s_min, s_max, {}};
    if (mode == HeatmapMode::tau) {
        const TauGrid g = tau_grid(a_min, a_max, s_min, s_max, jobs);
        out.values.assign(g.values.begin(), g.values.end());
        return out;
    }
    // One extra leading column holds tau_{s_min - 1}; tau_0 is 0.
    const bool has_prev = s_min > 1;
    const TauGrid g = tau_grid(a_min, a_max, has_prev ? Natural(s_min - 1) : s_min, s_max, jobs);
    const std::size_t cols = out.width();
    const std::size_t gcols = g.width();
    const std::size_t shift = has_prev ? 1 : 0;
    out.values.resize(out.height() * cols);
    for (std::size_t row = 0; row < out.height(); ++row) {
        for (std::size_t col = 0; col < cols; ++col) {
            const long cur = g.values[row * gcols + col + shift];
            long prev = 0;
            if (col + shift > 0) prev = g.values[row * gcols + col + shift - 1];
            out.values[row * cols + col] = cur - prev;
        }
    }
    return out;
}

std::string heatmap_color(HeatmapMode mode, long value) {
    if (mode == HeatmapMode::delta) {
        if (value == 1) return "#000000";
        if (value == -1) return "#ff0000";
        if (value == 0) return "#ffffff";
        throw std::logic_error("tau changed by " + std::to_string(value) + " between adjacent s");
    }
    if (value < 0) throw std::logic_error("negative tau in heatmap");
    const long level = std::min(value, kGreyClamp);
    const long grey = 255 - (255 * level) / kGreyClamp;
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02lx%02lx%02lx", grey, grey, grey);
    return buf;
}

std::string heatmap_svg(const HeatmapData& data, const std::string& title) {
    const std::size_t cols = data.width();   // s values, drawn vertically
    const std::size_t rows = data.height();  // a values, drawn horizontally
    const double plot_w = static_cast<double>(rows) * kCell;
    const double plot_h = static_cast<double>(cols) * kCell;
    svg::Document doc(kLeft + plot_w + kRight, kTop + plot_h + kBottom);
    // Frame over cell edges: column a spans [a - 0.5, a + 0.5].
    svg::Frame f{to_double(data.a_min) - 0.5, to_double(data.a_max) + 0.5,
                 to_double(data.s_min) - 0.5, to_double(data.s_max) + 0.5,
                 kLeft, kTop, plot_w, plot_h};
    for (std::size_t row = 0; row < rows; ++row) {
        const double x = kLeft + static_cast<double>(row) * kCell;
        std::size_t run_start = 0;
        for (std::size_t col = 1; col <= cols; ++col) {
            const std::string color = heatmap_color(data.mode, data.values[row * cols + run_start]);
            if (col < cols && heatmap_color(data.mode, data.values[row * cols + col]) == color)
                continue;
            if (color != "#ffffff") {
                // s grows upward, so the run's top edge belongs to its last column
                const double y = kTop + static_cast<double>(cols - col) * kCell;
                doc.rect(x, y, kCell, static_cast<double>(col - run_start) * kCell, color);
            }
            run_start = col;
        }
    }
    svg::draw_axes(doc, f, title, "a", "s");
    return doc.str();
}

std::string heatmap_csv(const HeatmapData& data) {
    std::ostringstream out;
    out << "a,s," << (data.mode == HeatmapMode::tau ? "tau" : "delta") << '\n';
    const std::size_t cols = data.width();
    for (std::size_t row = 0; row < data.height(); ++row) {
        const Natural a = data.a_min + row;
        for (std::size_t col = 0; col < cols; ++col)
            out << a << ',' << (data.s_min + col) << ',' << data.values[row * cols + col] << '\n';
    }
    return out.str();
}

const std::vector<unsigned>& figure5_curve_ks() {
    static const std::vector<unsigned> ks{1,  2,  3,  4,  5,  6,  7,  8,  9,  10,
                                          11, 12, 13, 14, 15, 18, 19, 22, 29, 40};
    return ks;
}

std::vector<GeneratedFile> build_figures(int jobs) {
    std::vector<GeneratedFile> files;

    // sigma(a), 1 <= a <= 500, with and without bounds
    const auto records = sweep(1, 500, jobs);
    double y_top = 0;
    for (const auto& r : records) y_top = std::max(y_top, to_double(r.upper));
    y_top = round_up(y_top + 1, 10);
    files.push_back({"fig1.svg", plot_svg("sigma(a), 1 <= a <= 500", "a", "sigma(a)", 0, 500, 0,
                                          y_top, {{"#000000", sigma_points(records), false, ""}})});
    files.push_back({"fig1.csv", csv_sigma(records, false)});

    Series lower{"#0000ff", {}, true, "sigma_1(a)"};
    Series upper{"#ff0000", {}, true, "upper bound"};
    for (const auto& r : records) {
        lower.points.emplace_back(to_double(r.a), to_double(r.sigma1));
        upper.points.emplace_back(to_double(r.a), to_double(r.upper));
    }
    files.push_back({"fig2.svg",
                     plot_svg("sigma(a), 1 <= a <= 500, with upper and lower bounds", "a",
                              "sigma(a)", 0, 500, 0, y_top,
                              {lower, upper, {"#000000", sigma_points(records), false, "sigma(a)"}})});
    files.push_back({"fig2.csv", csv_sigma(records, true)});

    // tau density and tau changes
    const auto density = heatmap_data(8, 256, 2, 100, HeatmapMode::tau, jobs);
    files.push_back({"fig3.svg", heatmap_svg(density, "Density of tau_s(a), 8 <= a <= 256")});
    files.push_back({"fig3.csv", heatmap_csv(density)});
    const auto changes = heatmap_data(1, 256, 2, 100, HeatmapMode::delta, jobs);
    files.push_back({"fig4.svg", heatmap_svg(changes, "Changes in tau_s(a), 1 <= a <= 256")});
    files.push_back({"fig4.csv", heatmap_csv(changes)});

    // sigma(a) with sigma_k curves on 100^2 <= a <= 101^2
    const Natural lo = 100 * 100, hi = 101 * 101;
    const auto window = sweep(lo, hi, jobs);
    std::vector<Series> curves;
    std::ostringstream curve_csv;
    curve_csv << "k,a,sigma_k\n";
    for (unsigned k : figure5_curve_ks()) {
        Series c{"#8080c0", {}, true, ""};
        for (Natural a = lo; a <= hi; ++a) {
            const Natural v = sigma_k(a, k);
            c.points.emplace_back(to_double(a), to_double(v));
            curve_csv << k << ',' << a << ',' << v << '\n';
        }
        curves.push_back(std::move(c));
    }
    curves.push_back({"#000000", sigma_points(window), false, "sigma(a)"});
    double w_top = 0;
    for (const auto& r : window) w_top = std::max(w_top, to_double(r.sigma));
    std::ostringstream window_csv;
    window_csv << "a,sigma,min_k\n";
    for (const auto& r : window) window_csv << r.a << ',' << r.sigma << ',' << r.min_k << '\n';
    files.push_back({"fig5.svg", plot_svg("sigma(a) for 100^2 <= a <= 101^2 with sigma_k(a)", "a",
                                          "sigma(a)", to_double(lo), to_double(hi), 0,
                                          round_up(w_top + 1, 10), curves)});
    files.push_back({"fig5.csv", window_csv.str()});
    files.push_back({"fig5_curves.csv", curve_csv.str()});

    // off-bound points, a <= 2000
    const auto off = off_bound_points(1, 2000, jobs);
    Series dots{"#000000", {}, false, ""};
    std::ostringstream off_csv;
    off_csv << "a,sigma\n";
    double o_top = 0;
    for (const auto& p : off) {
        dots.points.emplace_back(to_double(p.a), to_double(p.sigma));
        off_csv << p.a << ',' << p.sigma << '\n';
        o_top = std::max(o_top, to_double(p.sigma));
    }
    files.push_back({"fig6.svg", plot_svg("Off-bound points for sigma(a), 0 <= a <= 2000", "a",
                                          "sigma(a)", 0, 2000, 0, round_up(o_top + 1, 10), {dots})});
    files.push_back({"fig6.csv", off_csv.str()});
    return files;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

void write_files(const std::filesystem::path& dir, const std::vector<GeneratedFile>& files) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());
    for (const auto& f : files) write_text_file(dir / f.name, f.content);
}

}  // namespace ratsq
