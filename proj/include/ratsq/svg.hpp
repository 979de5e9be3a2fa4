// Minimal SVG document builder. Coordinates are written with two decimals so
// identical inputs give identical bytes.
#ifndef RATSQ_SVG_HPP
#define RATSQ_SVG_HPP

#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace ratsq::svg {

std::string num(double v);

class Document {
  public:
    Document(double width, double height);

    void rect(double x, double y, double w, double h, const std::string& fill);
    void circle(double cx, double cy, double r, const std::string& fill);
    void line(double x1, double y1, double x2, double y2, const std::string& stroke,
              double width = 1.0);
    void polyline(const std::vector<std::pair<double, double>>& points, const std::string& stroke,
                  double width = 1.0, const std::string& clip_id = "");
    void text(double x, double y, const std::string& content, double size = 12,
              const std::string& anchor = "middle", double rotate = 0);
    /// Rectangular clip path usable from polyline().
    void clip_rect(const std::string& id, double x, double y, double w, double h);
    void comment(const std::string& content);

    std::string str() const;

  private:
    double width_;
    double height_;
    std::ostringstream defs_;
    std::ostringstream body_;
};

/// Maps data coordinates onto a pixel rectangle (y grows upward in data
/// space, downward in SVG space).
struct Frame {
    double x_min, x_max, y_min, y_max;
    double left, top, width, height;

    double px(double x) const;
    double py(double y) const;
};

/// Tick positions at 1, 2 or 5 times a power of ten, about `target` of them.
std::vector<double> nice_ticks(double lo, double hi, int target = 8);

/// Axis box, ticks, tick labels, axis titles and a plot title.
void draw_axes(Document& doc, const Frame& frame, const std::string& title,
               const std::string& x_label, const std::string& y_label);

std::string escape(const std::string& s);

}  // namespace ratsq::svg

#endif  // RATSQ_SVG_HPP
