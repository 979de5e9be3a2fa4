// ratsq: command-line front end.
//
// Exit codes: 0 success, 1 internal inconsistency, 2 usage error, 3 I/O error.
#include "ratsq/analysis.hpp"
#include "ratsq/confrac.hpp"
#include "ratsq/figures.hpp"
#include "ratsq/reports.hpp"
#include "ratsq/sigmacore.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace {

using ratsq::Natural;

constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Natural parse_natural(const std::string& text, const char* what, long min_value) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
        throw UsageError(std::string(what) + ": expected a non-negative integer, got '" + text + "'");
    Natural v(text);
    if (v < min_value)
        throw UsageError(std::string(what) + " must be >= " + std::to_string(min_value));
    return v;
}

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << content;
        std::cout.flush();
        if (!std::cout) throw IoError("failed writing to stdout");
        return;
    }
    try {
        ratsq::write_text_file(out_path, content);
    } catch (const std::runtime_error& e) {
        throw IoError(e.what());
    }
}

ratsq::SigmaStrategy parse_strategy(const std::string& s) {
    return s == "cf" ? ratsq::SigmaStrategy::cf : ratsq::SigmaStrategy::scan;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rational squares in (a, a+1) under the denominator-first ordering"};
    app.require_subcommand(1);

    std::string a_text, s_text, d_text;
    std::string strategy = "scan";
    std::string from_text = "1", to_text = "500";
    std::string format = "csv";
    std::string out_path;
    std::string out_dir = "figures";
    int jobs = 0;
    std::string a_min_text = "8", a_max_text = "256", s_min_text = "2", s_max_text = "100";
    std::string mode = "tau";

    auto* sigma_cmd = app.add_subcommand("sigma", "least s with a square in (s^2 a, s^2 (a+1))");
    sigma_cmd->add_option("a", a_text, "a >= 1")->required();
    sigma_cmd->add_option("--strategy", strategy, "scan or cf")
        ->check(CLI::IsMember({"scan", "cf"}));

    auto* tau_cmd = app.add_subcommand("tau", "number of t with s^2 a < t^2 < s^2 (a+1)");
    tau_cmd->add_option("a", a_text)->required();
    tau_cmd->add_option("s", s_text)->required();

    auto* tset_cmd = app.add_subcommand("tset", "the t with s^2 a < t^2 < s^2 (a+1)");
    tset_cmd->add_option("a", a_text)->required();
    tset_cmd->add_option("s", s_text)->required();

    auto* first_cmd = app.add_subcommand("first-square", "first rational square in (a, a+1)");
    first_cmd->add_option("a", a_text)->required();

    auto* cf_cmd = app.add_subcommand("cf", "continued fraction of sqrt(d)");
    cf_cmd->add_option("d", d_text)->required();

    auto* sweep_cmd = app.add_subcommand("sweep", "per-a records over a range");
    sweep_cmd->add_option("--from", from_text);
    sweep_cmd->add_option("--to", to_text);
    sweep_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    sweep_cmd->add_option("--out", out_path, "output file (default stdout)");
    sweep_cmd->add_option("--jobs", jobs, "worker threads (0 = all cores)");

    std::string heat_format = "svg";
    auto* heat_cmd = app.add_subcommand("heatmap", "tau_s(a) grid as SVG or CSV");
    heat_cmd->add_option("--a-min", a_min_text);
    heat_cmd->add_option("--a-max", a_max_text);
    heat_cmd->add_option("--s-min", s_min_text);
    heat_cmd->add_option("--s-max", s_max_text);
    heat_cmd->add_option("--mode", mode)->check(CLI::IsMember({"tau", "delta"}));
    heat_cmd->add_option("--format", heat_format)->check(CLI::IsMember({"svg", "csv"}));
    heat_cmd->add_option("--out", out_path);
    heat_cmd->add_option("--jobs", jobs);

    auto* fig_cmd = app.add_subcommand("figures", "write fig1..fig6 SVG and CSV files");
    fig_cmd->add_option("--out-dir", out_dir);
    fig_cmd->add_option("--jobs", jobs);

    auto* analyze_cmd = app.add_subcommand("analyze", "JSON reports on the empirical observations");
    analyze_cmd->require_subcommand(1);
    analyze_cmd->add_option("--out", out_path);

    std::string limit_text = "2000";
    bool full_range = false;
    auto* sym_cmd = analyze_cmd->add_subcommand("symmetry", "sigma(n(n+1) - d) vs sigma(n(n+1) + d)");
    sym_cmd->add_option("--a-max", limit_text, "largest trough centre n(n+1)");
    sym_cmd->add_flag("--full-range", full_range, "use 1 <= d < n(n+1) instead of d <= n");
    sym_cmd->add_option("--jobs", jobs);

    std::string n_text = "100";
    auto* kset_cmd = analyze_cmd->add_subcommand("kset", "k with sigma(a) = sigma_k(a)");
    kset_cmd->add_option("--n", n_text);

    std::string n_from_text = "11", n_to_text = "20", min_from_text = "7", min_to_text = "30";
    auto* off_cmd = analyze_cmd->add_subcommand("offbound", "off-bound peaks and minima");
    off_cmd->add_option("--n-from", n_from_text);
    off_cmd->add_option("--n-to", n_to_text);
    off_cmd->add_option("--min-from", min_from_text);
    off_cmd->add_option("--min-to", min_to_text);

    std::string conj_a_max = "300", k_max_text = "4", conj_s_max = "10000";
    auto* conj_cmd = analyze_cmd->add_subcommand("conjecture1", "search for tau_s = k, tau_{s+1} = k-1");
    conj_cmd->add_option("--a-max", conj_a_max);
    conj_cmd->add_option("--k-max", k_max_text);
    conj_cmd->add_option("--s-max", conj_s_max);

    std::string closure_a = "12", closure_s_max = "100", odd_k_max = "9", n_max_text = "200";
    auto* closure_cmd = analyze_cmd->add_subcommand("closure", "upward closure of S(a)");
    closure_cmd->add_option("--a", closure_a);
    closure_cmd->add_option("--s-max", closure_s_max);
    closure_cmd->add_option("--odd-k-max", odd_k_max, "odd k threshold search up to this k");
    closure_cmd->add_option("--n-max", n_max_text);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*sigma_cmd) {
            const Natural a = parse_natural(a_text, "a", 1);
            const Natural by_scan = ratsq::sigma(a, ratsq::SigmaStrategy::scan);
            const Natural by_cf = ratsq::sigma(a, ratsq::SigmaStrategy::cf);
            if (by_scan != by_cf) {
                std::cerr << "strategies disagree: scan " << by_scan << ", cf " << by_cf << "\n";
                return kExitInternal;
            }
            std::cout << ratsq::sigma(a, parse_strategy(strategy)) << "\n";
        } else if (*tau_cmd) {
            std::cout << ratsq::tau(parse_natural(a_text, "a", 1), parse_natural(s_text, "s", 1))
                      << "\n";
        } else if (*tset_cmd) {
            const auto ts = ratsq::t_set(parse_natural(a_text, "a", 1), parse_natural(s_text, "s", 1));
            for (std::size_t i = 0; i < ts.size(); ++i) std::cout << (i ? " " : "") << ts[i];
            std::cout << "\n";
        } else if (*first_cmd) {
            const Natural a = parse_natural(a_text, "a", 1);
            const Natural s = ratsq::sigma(a);
            const Natural t = ratsq::t_set(a, s).front();
            std::cout << t * t << "/" << s * s << " (t=" << t << ", s=" << s << ")\n";
        } else if (*cf_cmd) {
            std::cout << ratsq::sqrt_cf(parse_natural(d_text, "d", 1)).to_string() << "\n";
        } else if (*sweep_cmd) {
            const Natural from = parse_natural(from_text, "--from", 1);
            const Natural to = parse_natural(to_text, "--to", 1);
            if (from > to) throw UsageError("empty range: --from exceeds --to");
            const auto records = ratsq::sweep(from, to, jobs);
            emit(format == "json" ? ratsq::sweep_json(records) : ratsq::sweep_csv(records), out_path);
        } else if (*heat_cmd) {
            const Natural a_min = parse_natural(a_min_text, "--a-min", 1);
            const Natural a_max = parse_natural(a_max_text, "--a-max", 1);
            const Natural s_min = parse_natural(s_min_text, "--s-min", 1);
            const Natural s_max = parse_natural(s_max_text, "--s-max", 1);
            if (a_min > a_max || s_min > s_max) throw UsageError("empty heatmap range");
            const auto m = mode == "delta" ? ratsq::HeatmapMode::delta : ratsq::HeatmapMode::tau;
            const auto data = ratsq::heatmap_data(a_min, a_max, s_min, s_max, m, jobs);
            const std::string title = (mode == "delta" ? "Changes in tau_s(a), " : "tau_s(a), ") +
                                      a_min.str() + " <= a <= " + a_max.str();
            emit(heat_format == "csv" ? ratsq::heatmap_csv(data) : ratsq::heatmap_svg(data, title),
                 out_path);
        } else if (*fig_cmd) {
            const auto files = ratsq::build_figures(jobs);
            try {
                ratsq::write_files(out_dir, files);
            } catch (const std::runtime_error& e) {
                throw IoError(e.what());
            }
            for (const auto& f : files) std::cout << out_dir << "/" << f.name << "\n";
        } else if (*analyze_cmd) {
            nlohmann::json report;
            if (*sym_cmd) {
                report = ratsq::symmetry_report(parse_natural(limit_text, "--a-max", 6), full_range, jobs);
            } else if (*kset_cmd) {
                report = ratsq::kset_report(parse_natural(n_text, "--n", 2));
            } else if (*off_cmd) {
                const Natural n_from = parse_natural(n_from_text, "--n-from", 2);
                const Natural n_to = parse_natural(n_to_text, "--n-to", 2);
                const Natural min_from = parse_natural(min_from_text, "--min-from", 7);
                const Natural min_to = parse_natural(min_to_text, "--min-to", 7);
                if (n_from > n_to || min_from > min_to) throw UsageError("empty range");
                report = ratsq::offbound_report(n_from, n_to, min_from, min_to);
            } else if (*conj_cmd) {
                report = ratsq::conjecture1_report(parse_natural(conj_a_max, "--a-max", 1),
                                                   parse_natural(k_max_text, "--k-max", 1),
                                                   parse_natural(conj_s_max, "--s-max", 1));
            } else if (*closure_cmd) {
                report = ratsq::closure_report(parse_natural(closure_a, "--a", 1),
                                               parse_natural(closure_s_max, "--s-max", 1),
                                               parse_natural(odd_k_max, "--odd-k-max", 0),
                                               parse_natural(n_max_text, "--n-max", 2));
            }
            emit(report.dump(2) + "\n", out_path);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IoError& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return 0;
}
