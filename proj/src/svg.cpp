#include "ratsq/svg.hpp"

#include <cmath>
#include <cstdio>

namespace ratsq::svg {

std::string num(double v) {
    if (std::fabs(v) < 0.005) v = 0.0;  // no "-0.00"
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    std::string s(buf);
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
    return s;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

Document::Document(double width, double height) : width_(width), height_(height) {}

void Document::rect(double x, double y, double w, double h, const std::string& fill) {
    body_ << "<rect x=\"" << num(x) << "\" y=\"" << num(y) << "\" width=\"" << num(w)
          << "\" height=\"" << num(h) << "\" fill=\"" << fill << "\"/>\n";
}

void Document::circle(double cx, double cy, double r, const std::string& fill) {
    body_ << "<circle cx=\"" << num(cx) << "\" cy=\"" << num(cy) << "\" r=\"" << num(r)
          << "\" fill=\"" << fill << "\"/>\n";
}

void Document::line(double x1, double y1, double x2, double y2, const std::string& stroke,
                    double width) {
    body_ << "<line x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\"" << num(x2)
          << "\" y2=\"" << num(y2) << "\" stroke=\"" << stroke << "\" stroke-width=\"" << num(width)
          << "\"/>\n";
}

void Document::polyline(const std::vector<std::pair<double, double>>& points,
                        const std::string& stroke, double width, const std::string& clip_id) {
    if (points.empty()) return;
    body_ << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"" << num(width)
          << "\"";
    if (!clip_id.empty()) body_ << " clip-path=\"url(#" << clip_id << ")\"";
    body_ << " points=\"";
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (i) body_ << ' ';
        body_ << num(points[i].first) << ',' << num(points[i].second);
    }
    body_ << "\"/>\n";
}

void Document::text(double x, double y, const std::string& content, double size,
                    const std::string& anchor, double rotate) {
    body_ << "<text x=\"" << num(x) << "\" y=\"" << num(y) << "\" font-size=\"" << num(size)
          << "\" text-anchor=\"" << anchor << "\"";
    if (rotate != 0)
        body_ << " transform=\"rotate(" << num(rotate) << ' ' << num(x) << ' ' << num(y) << ")\"";
    body_ << ">" << escape(content) << "</text>\n";
}

void Document::clip_rect(const std::string& id, double x, double y, double w, double h) {
    defs_ << "<clipPath id=\"" << id << "\"><rect x=\"" << num(x) << "\" y=\"" << num(y)
          << "\" width=\"" << num(w) << "\" height=\"" << num(h) << "\"/></clipPath>\n";
}

void Document::comment(const std::string& content) { body_ << "<!-- " << content << " -->\n"; }

std::string Document::str() const {
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width_) << "\" height=\""
        << num(height_) << "\" viewBox=\"0 0 " << num(width_) << ' ' << num(height_)
        << "\" font-family=\"sans-serif\">\n";
    const std::string defs = defs_.str();
    if (!defs.empty()) out << "<defs>\n" << defs << "</defs>\n";
    out << "<rect x=\"0\" y=\"0\" width=\"" << num(width_) << "\" height=\"" << num(height_)
        << "\" fill=\"#ffffff\"/>\n";
    out << body_.str() << "</svg>\n";
    return out.str();
}

double Frame::px(double x) const {
    if (x_max == x_min) return left;
    return left + (x - x_min) / (x_max - x_min) * width;
}

double Frame::py(double y) const {
    if (y_max == y_min) return top + height;
    return top + height - (y - y_min) / (y_max - y_min) * height;
}

std::vector<double> nice_ticks(double lo, double hi, int target) {
    std::vector<double> ticks;
    if (!(hi > lo) || target < 1) return ticks;
    const double raw = (hi - lo) / target;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double m : {1.0, 2.0, 5.0, 10.0}) {
        step = m * mag;
        if (step >= raw) break;
    }
    const long first = static_cast<long>(std::ceil(lo / step - 1e-9));
    const long last = static_cast<long>(std::floor(hi / step + 1e-9));
    for (long i = first; i <= last; ++i) ticks.push_back(static_cast<double>(i) * step);
    return ticks;
}

void draw_axes(Document& doc, const Frame& f, const std::string& title, const std::string& x_label,
               const std::string& y_label) {
    const std::string ink = "#000000";
    const double bottom = f.top + f.height;
    const double right = f.left + f.width;
    doc.line(f.left, bottom, right, bottom, ink);
    doc.line(f.left, f.top, f.left, bottom, ink);
    for (double t : nice_ticks(f.x_min, f.x_max)) {
        const double x = f.px(t);
        doc.line(x, bottom, x, bottom + 5, ink);
        doc.text(x, bottom + 18, num(t), 11);
    }
    for (double t : nice_ticks(f.y_min, f.y_max)) {
        const double y = f.py(t);
        doc.line(f.left - 5, y, f.left, y, ink);
        doc.text(f.left - 8, y + 4, num(t), 11, "end");
    }
    doc.text(f.left + f.width / 2, f.top - 12, title, 14);
    doc.text(f.left + f.width / 2, bottom + 38, x_label, 12);
    doc.text(f.left - 42, f.top + f.height / 2, y_label, 12, "middle", -90);
}

}  // namespace ratsq::svg
