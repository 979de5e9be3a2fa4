// Heatmaps and the six figure files (SVG plus CSV companions).
#ifndef RATSQ_FIGURES_HPP
#define RATSQ_FIGURES_HPP

#include "ratsq/analysis.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace ratsq {

enum class HeatmapMode { tau, delta };

/// Cell values over a closed (a, s) rectangle: tau_s(a), or
/// tau_s(a) - tau_{s-1}(a) with tau_0 = 0.
struct HeatmapData {
    HeatmapMode mode = HeatmapMode::tau;
    Natural a_min, a_max, s_min, s_max;
    std::vector<long> values;  ///< row-major by a, then s

    std::size_t width() const { return static_cast<std::size_t>(s_max - s_min + 1); }
    std::size_t height() const { return static_cast<std::size_t>(a_max - a_min + 1); }
};

HeatmapData heatmap_data(const Natural& a_min, const Natural& a_max, const Natural& s_min,
                         const Natural& s_max, HeatmapMode mode, int jobs = 0);

/// Tau mode: grey level linear in min(tau, 10), white at 0, black at 10.
/// Delta mode: +1 black, -1 red, 0 white; any other value throws.
std::string heatmap_color(HeatmapMode mode, long value);

std::string heatmap_svg(const HeatmapData& data, const std::string& title);
/// "a,s,tau" or "a,s,delta" rows, ascending by a then s.
std::string heatmap_csv(const HeatmapData& data);

/// k values drawn as sigma_k curves on the 100^2..101^2 figure.
const std::vector<unsigned>& figure5_curve_ks();

struct GeneratedFile {
    std::string name;
    std::string content;
};

/// fig1..fig6 SVGs and their CSVs, in a fixed order.
std::vector<GeneratedFile> build_figures(int jobs = 0);

/// Writes each file under `dir` (created if missing). Throws
/// std::runtime_error naming the file on any I/O failure.
void write_files(const std::filesystem::path& dir, const std::vector<GeneratedFile>& files);

/// Writes `content` to `path`, or throws std::runtime_error.
void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace ratsq

#endif  // RATSQ_FIGURES_HPP
